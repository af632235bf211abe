#pragma once

#include "symspec/matrix.hpp"

namespace symspec {

/// Division-free characteristic polynomial (Berkowitz). Valid over any
/// commutative ring, in particular polynomial rings, which is what the
/// charpoly of t*I - monomial(x) needs. Returns the coefficients of
/// det(t*I - A) from the leading term down: c[0] = 1, c[k] multiplies
/// t^{n-k}.
template <typename T>
std::vector<T> berkowitz_coeffs(const Matrix<T>& a) {
  const std::size_t n = a.dim();
  const T zero = ring_zero(a.proto());
  const T one = ring_one(a.proto());

  std::vector<T> p{one};
  for (std::size_t r = 1; r <= n; ++r) {
    // Toeplitz column for the r-th leading principal block:
    // q = (1, -a_rr, -R C, -R M C, -R M^2 C, ...)
    std::vector<T> q(r + 1, zero);
    q[0] = one;
    q[1] = zero - a(r - 1, r - 1);
    if (r >= 2) {
      std::vector<T> w(r - 1, zero);  // w = M^j C
      for (std::size_t i = 0; i < r - 1; ++i) w[i] = a(i, r - 1);
      for (std::size_t j = 2; j <= r; ++j) {
        T dot = zero;
        for (std::size_t i = 0; i < r - 1; ++i) dot = dot + a(r - 1, i) * w[i];
        q[j] = zero - dot;
        if (j < r) {
          std::vector<T> nw(r - 1, zero);
          for (std::size_t i = 0; i < r - 1; ++i)
            for (std::size_t k = 0; k < r - 1; ++k) nw[i] = nw[i] + a(i, k) * w[k];
          w = std::move(nw);
        }
      }
    }
    // p' = Toeplitz(q) * p, a truncated convolution
    std::vector<T> np(r + 1, zero);
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        if (i >= j && i - j <= r) np[i] = np[i] + q[i - j] * p[j];
    p = std::move(np);
  }
  return p;
}

/// det(t*I - m) as a polynomial in a fresh variable.
inline MultiPoly char_poly(const Matrix<Scalar>& m, const std::string& var = "t") {
  auto c = berkowitz_coeffs(m);
  const FieldSpec& f = m.proto().field();
  MultiPoly t = MultiPoly::variable(f, var);
  MultiPoly acc(f);
  const std::size_t n = m.dim();
  for (std::size_t k = 0; k <= n; ++k)
    acc += t.pow(static_cast<unsigned>(n - k)) * c[k];
  return acc;
}

inline MultiPoly char_poly(const Matrix<MultiPoly>& m, const std::string& var = "t") {
  auto c = berkowitz_coeffs(m);
  const FieldSpec& f = m.proto().field();
  MultiPoly t = MultiPoly::variable(f, var);
  MultiPoly acc(f);
  const std::size_t n = m.dim();
  for (std::size_t k = 0; k <= n; ++k) {
    if (c[k].degree_in(var) > 0)
      throw std::invalid_argument("char_poly: variable " + var + " occurs in matrix entries");
    acc += t.pow(static_cast<unsigned>(n - k)) * c[k];
  }
  return acc;
}

/// Determinant via the Berkowitz constant term; works over any commutative
/// ring. Over fields it is cross-checked in tests against elimination.
template <typename T>
T det(const Matrix<T>& m) {
  auto c = berkowitz_coeffs(m);
  T d = c.back();  // det(-A) = (-1)^n det(A)
  if (m.dim() % 2 == 1) d = ring_zero(d) - d;
  return d;
}

}  // namespace symspec
