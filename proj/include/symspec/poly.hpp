#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "symspec/field.hpp"

namespace symspec {

/// Exponent vectors ordered by graded lexicographic order (total degree
/// first, then lex on the sorted variable list). Chosen for determinism of
/// serialized output.
struct GrlexLess {
  bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

/// Sparse multivariate polynomial over Scalar, always in canonical form:
/// no zero coefficients, variable list sorted and pruned to the variables
/// actually occurring. Equal polynomials have identical representations.
class MultiPoly {
 public:
  using Terms = std::map<std::vector<unsigned>, Scalar, GrlexLess>;

  explicit MultiPoly(const FieldSpec& f) : field_(f) {}  // zero polynomial

  static MultiPoly constant(const Scalar& c);
  static MultiPoly variable(const FieldSpec& f, const std::string& name);
  static MultiPoly monomial(const Scalar& c, const std::vector<std::string>& vars,
                            const std::vector<unsigned>& exps);

  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (the coefficient of the empty monomial).
  Scalar constant_term() const;
  unsigned total_degree() const;  // 0 for the zero polynomial
  unsigned degree_in(const std::string& var) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Scalar& c) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly pow(unsigned e) const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Exact substitution; every variable occurring in the polynomial must be
  /// bound or a std::invalid_argument is thrown.
  Scalar eval(const std::map<std::string, Scalar>& assignment) const;

  /// Coefficient of the monomial with the given exponents (variables not
  /// mentioned have exponent 0); zero when absent.
  Scalar coeff(const std::map<std::string, unsigned>& exps) const;

  /// For a polynomial univariate in `var` (no other variables): the
  /// coefficient of var^k as a Scalar.
  Scalar univariate_coeff(const std::string& var, unsigned k) const;

  std::string to_string() const;

 private:
  void normalize();
  static std::vector<unsigned> remap(const std::vector<unsigned>& e,
                                     const std::vector<std::string>& from,
                                     const std::vector<std::string>& to);

  FieldSpec field_;
  std::vector<std::string> vars_;  // sorted, only variables actually used
  Terms terms_;
};

/// A named polynomial-ring context; tracks bound variable names so duplicate
/// bindings are rejected.
class PolyRing {
 public:
  explicit PolyRing(const FieldSpec& f) : field_(f) {}

  const FieldSpec& field() const { return field_; }

  MultiPoly make_variable(const std::string& name);
  MultiPoly constant(long n) const { return MultiPoly::constant(Scalar::of_int(field_, n)); }

 private:
  FieldSpec field_;
  std::set<std::string> bound_;
};

}  // namespace symspec
