#include <doctest.h>

#include "symspec/poly.hpp"
#include "symspec/rng.hpp"

using namespace symspec;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

MultiPoly random_poly(const FieldSpec& f, const std::vector<std::string>& vars, Rng& rng) {
  MultiPoly p(f);
  long nterms = rng.range(1, 5);
  for (long t = 0; t < nterms; ++t) {
    std::vector<unsigned> e;
    for (std::size_t i = 0; i < vars.size(); ++i)
      e.push_back(static_cast<unsigned>(rng.range(0, 3)));
    p += MultiPoly::monomial(Scalar::of_int(f, rng.range(-5, 5)), vars, e);
  }
  return p;
}

std::map<std::string, Scalar> random_assignment(const FieldSpec& f,
                                                const std::vector<std::string>& vars,
                                                Rng& rng) {
  std::map<std::string, Scalar> a;
  for (const auto& v : vars) a.emplace(v, Scalar::of_int(f, rng.range(-6, 6)));
  return a;
}

}  // namespace

TEST_CASE("make_variable basics") {
  PolyRing ring(kQ);
  MultiPoly x1 = ring.make_variable("X1");
  CHECK(x1.total_degree() == 1);
  CHECK(x1.coeff({{"X1", 1}}) == Scalar::one(kQ));
  CHECK_THROWS(ring.make_variable("X1"));  // duplicate name

  MultiPoly t = ring.make_variable("t");
  CHECK((t * t).coeff({{"t", 2}}) == Scalar::one(kQ));

  MultiPoly a = ring.make_variable("alpha"), b = ring.make_variable("beta");
  CHECK(a * b == b * a);
}

TEST_CASE("poly_eval examples") {
  PolyRing ring(kQ);
  MultiPoly x1 = ring.make_variable("X1"), x2 = ring.make_variable("X2");
  MultiPoly p = x1 * x1 + MultiPoly::constant(Scalar::one(kQ));
  CHECK(p.eval({{"X1", Scalar::of_int(kQ, 3)}}) == Scalar::of_int(kQ, 10));

  Scalar half(kQ, mpq_class(1, 2));
  CHECK((x1 * x2).eval({{"X1", Scalar::of_int(kQ, 2)}, {"X2", half}}) == Scalar::one(kQ));

  // X^{p-1} = 1 at nonzero points over F_p
  FieldSpec fp = FieldSpec::prime(11);
  MultiPoly xp = MultiPoly::variable(fp, "X1").pow(10);
  for (long v = 1; v < 11; ++v)
    CHECK(xp.eval({{"X1", Scalar::of_int(fp, v)}}) == Scalar::one(fp));

  CHECK_THROWS((x1 * x2).eval({{"X1", Scalar::of_int(kQ, 1)}}));  // unbound X2
}

TEST_CASE("poly_coeff examples") {
  PolyRing ring(kQ);
  MultiPoly t = ring.make_variable("t");
  MultiPoly p = t * t - t * Scalar::of_int(kQ, 5) + MultiPoly::constant(Scalar::of_int(kQ, 6));
  CHECK(p.coeff({{"t", 1}}) == Scalar::of_int(kQ, -5));

  MultiPoly a = ring.make_variable("alpha"), b = ring.make_variable("beta");
  MultiPoly one = MultiPoly::constant(Scalar::one(kQ));
  CHECK(((one + a) * (one + b)).coeff({{"alpha", 1}, {"beta", 1}}) == Scalar::one(kQ));

  MultiPoly zero(kQ);
  CHECK(zero.coeff({{"t", 3}}) == Scalar::zero(kQ));
}

TEST_CASE("canonical form: unused variables are pruned") {
  MultiPoly x = MultiPoly::variable(kQ, "x"), y = MultiPoly::variable(kQ, "y");
  MultiPoly p = (x + y) - y;
  CHECK(p == x);
  CHECK(p.variables() == std::vector<std::string>{"x"});
  // normalizing is idempotent: rebuild from the terms
  MultiPoly q = p + MultiPoly(kQ);
  CHECK(q == p);
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::vector<std::string> vars{"X1", "X2", "X3"};
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
      MultiPoly p = random_poly(f, vars, rng), q = random_poly(f, vars, rng);
      auto a = random_assignment(f, vars, rng);
      CHECK((p * q).eval(a) == p.eval(a) * q.eval(a));
      CHECK((p + q).eval(a) == p.eval(a) + q.eval(a));
    }
  }
}

TEST_CASE("ring axioms for polynomials") {
  std::vector<std::string> vars{"X1", "X2"};
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    MultiPoly p = random_poly(kQ, vars, rng), q = random_poly(kQ, vars, rng),
              r = random_poly(kQ, vars, rng);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK(p - p == MultiPoly(kQ));
  }
}
