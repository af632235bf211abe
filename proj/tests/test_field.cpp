#include <doctest.h>

#include "symspec/field.hpp"
#include "symspec/rng.hpp"

using namespace symspec;

namespace {
Scalar random_scalar(const FieldSpec& f, Rng& rng) {
  if (f.is_prime_field()) return Scalar::of_int(f, rng.range(0, 200));
  long num = rng.range(-50, 50);
  long den = rng.range(1, 20);
  return Scalar(f, mpq_class(num, den));
}
}  // namespace

TEST_CASE("field spec guards") {
  CHECK_THROWS(FieldSpec::prime(2));
  CHECK_THROWS(FieldSpec::prime(9));
  CHECK(FieldSpec::prime(101).modulus == 101);
  CHECK(FieldSpec::parse("fp:1009") == FieldSpec::prime(1009));
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
  CHECK_THROWS(FieldSpec::parse("r64"));
}

TEST_CASE("canonical forms") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(Scalar(q, mpq_class(2, 4)) == Scalar(q, mpq_class(1, 2)));
  CHECK(Scalar(q, mpq_class(-3, -6)) == Scalar(q, mpq_class(1, 2)));
  CHECK(Scalar(q, mpq_class(3, -6)).to_string() == "-1/2");
  CHECK(Scalar(q, 7).to_string() == "7");

  FieldSpec fp = FieldSpec::prime(7);
  CHECK(Scalar::of_int(fp, -1) == Scalar::of_int(fp, 6));
  CHECK(Scalar::of_int(fp, 15).to_string() == "1 mod 7");
}

TEST_CASE("serialization round trip") {
  FieldSpec q = FieldSpec::rationals();
  FieldSpec fp = FieldSpec::prime(101);
  Rng rng(42);
  for (int i = 0; i < 50; ++i) {
    Scalar a = random_scalar(q, rng);
    CHECK(Scalar::parse(q, a.to_string()) == a);
    Scalar b = random_scalar(fp, rng);
    CHECK(Scalar::parse(fp, b.to_string()) == b);
  }
  CHECK_THROWS(Scalar::parse(fp, "3 mod 7"));
}

TEST_CASE("ring axioms on random triples") {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
      Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + (-a) == Scalar::zero(f));
      if (!a.is_zero() && !b.is_zero()) CHECK((a / b) * (b / a) == Scalar::one(f));
    }
  }
}

TEST_CASE("fermat little theorem") {
  FieldSpec fp = FieldSpec::prime(101);
  for (long a = 1; a < 101; ++a)
    CHECK(Scalar::of_int(fp, a).pow(100) == Scalar::one(fp));
}

TEST_CASE("field mismatch is an error") {
  Scalar a = Scalar::of_int(FieldSpec::rationals(), 1);
  Scalar b = Scalar::of_int(FieldSpec::prime(101), 1);
  CHECK_THROWS(a + b);
  CHECK_THROWS(a * b);
}

TEST_CASE("division by zero") {
  FieldSpec q = FieldSpec::rationals();
  CHECK_THROWS(Scalar::one(q) / Scalar::zero(q));
  CHECK_THROWS(Scalar::zero(q).inverse());
}
