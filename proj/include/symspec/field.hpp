#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symspec {

/// Base field descriptor: the rationals, or a prime field F_p with p an odd
/// prime. Characteristic 2 is rejected outright; contexts that carry a
/// dimension n impose the stronger guard p > 2n (see SymplecticSpace).
struct FieldSpec {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::rationals;
  unsigned long modulus = 0;  // only meaningful for prime_field

  static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }
  static FieldSpec prime(unsigned long p);

  bool is_prime_field() const { return kind == Kind::prime_field; }

  /// true if the characteristic is 0 or exceeds `bound`.
  bool char_exceeds(unsigned long bound) const {
    return kind == Kind::rationals || modulus > bound;
  }

  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && modulus == o.modulus;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  /// "q" or "fp:<p>", the CLI encoding.
  std::string to_string() const;
  static FieldSpec parse(const std::string& s);
};

/// An exact element of the base field. Rationals are kept fully reduced with
/// positive denominator (mpq canonical form); residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;  // zero over the rationals
  explicit Scalar(const FieldSpec& f) : field_(f), v_(0) {}
  Scalar(const FieldSpec& f, long n) : field_(f), v_(n) { reduce(); }
  Scalar(const FieldSpec& f, const mpz_class& n) : field_(f), v_(n) { reduce(); }
  Scalar(const FieldSpec& f, const mpq_class& q);

  static Scalar zero(const FieldSpec& f) { return Scalar(f); }
  static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
  static Scalar of_int(const FieldSpec& f, long n) { return Scalar(f, n); }

  const FieldSpec& field() const { return field_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const;
  Scalar pow(unsigned long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Rationals: "num/den" ("num" when den = 1). Residues: "r mod p".
  std::string to_string() const;
  static Scalar parse(const FieldSpec& f, const std::string& s);

  /// Exact rational value; only valid over the rationals.
  const mpq_class& rational() const;

 private:
  void reduce();
  void check_same(const Scalar& o) const;

  FieldSpec field_ = FieldSpec::rationals();
  mpq_class v_ = 0;  // prime field: integer residue in [0,p), denominator 1
};

}  // namespace symspec
