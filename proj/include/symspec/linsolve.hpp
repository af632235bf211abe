#pragma once

#include <optional>

#include "symspec/matrix.hpp"

namespace symspec {

/// Determinant of a Scalar matrix by Gaussian elimination with exact pivot
/// search. Field entries only; the division-free route lives in charpoly.hpp.
inline Scalar det_eliminate(const Matrix<Scalar>& m) {
  const FieldSpec& f = m.proto().field();
  Matrix<Scalar> a(m);
  Scalar d = Scalar::one(f);
  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(f);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      d = -d;
    }
    d *= a(k, k);
    Scalar inv = a(k, k).inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Scalar factor = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return d;
}

/// Exact inverse over a field; std::nullopt when singular.
inline std::optional<Matrix<Scalar>> inverse(const Matrix<Scalar>& m) {
  const FieldSpec& f = m.proto().field();
  const std::size_t n = m.dim();
  Matrix<Scalar> a(m);
  Matrix<Scalar> inv = Matrix<Scalar>::identity(n, Scalar::zero(f));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    Scalar pinv = a(k, k).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= pinv;
      inv(k, j) *= pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      Scalar factor = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(k, j);
        inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

/// g x g^{-1}; throws when g is singular.
inline Matrix<Scalar> conjugate(const Matrix<Scalar>& g, const Matrix<Scalar>& x) {
  auto gi = inverse(g);
  if (!gi) throw std::invalid_argument("conjugate: matrix is not invertible");
  return g * x * *gi;
}

/// Solve A x = b over a field (A square); std::nullopt when singular.
inline std::optional<std::vector<Scalar>> solve_linear(const Matrix<Scalar>& m,
                                                       const std::vector<Scalar>& b) {
  if (b.size() != m.dim()) throw std::invalid_argument("solve_linear: size mismatch");
  auto gi = inverse(m);
  if (!gi) return std::nullopt;
  const FieldSpec& f = m.proto().field();
  std::vector<Scalar> x(m.dim(), Scalar::zero(f));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) x[i] += (*gi)(i, j) * b[j];
  return x;
}

}  // namespace symspec
