#pragma once

#include <omp.h>

#include "symspec/charpoly.hpp"
#include "symspec/linsolve.hpp"
#include "symspec/matrix.hpp"

namespace symspec {

namespace detail {

template <typename T>
void check_antisymmetric(const Matrix<T>& m) {
  if (m.dim() % 2 != 0)
    throw std::invalid_argument("pfaffian: dimension must be even");
  if (!is_antisymmetric(m))
    throw std::invalid_argument("pfaffian: matrix is not antisymmetric");
}

/// Matching-sum expansion on the submatrix indexed by `idx`:
/// pair idx[0] with idx[k], sign (-1)^{k-1}, recurse.
template <typename T>
T pf_matching_rec(const Matrix<T>& m, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return ring_one(m.proto());
  T acc = ring_zero(m.proto());
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const T& entry = m(idx[0], idx[k]);
    if (entry == ring_zero(entry)) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t j = 1; j < idx.size(); ++j)
      if (j != k) rest.push_back(idx[j]);
    T term = entry * pf_matching_rec(m, rest);
    if (k % 2 == 0) term = ring_zero(term) - term;
    acc = acc + term;
  }
  return acc;
}

}  // namespace detail

/// Pfaffian as the signed sum over perfect matchings. The oracle kernel:
/// works over any commutative ring (polynomial entries included), cost
/// O(n (2n-1)!!), intended for 2n <= 12.
template <typename T>
T pf_matching_serial(const Matrix<T>& m) {
  detail::check_antisymmetric(m);
  std::vector<std::size_t> idx(m.dim());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return detail::pf_matching_rec(m, idx);
}

/// Same sum, with the top-level branch over the partner of index 0 run in
/// parallel. Partial sums are combined in branch order, so the result is
/// identical to the serial kernel regardless of schedule (the arithmetic is
/// exact, but we keep the deterministic merge anyway).
template <typename T>
T pf_matching(const Matrix<T>& m) {
  detail::check_antisymmetric(m);
  const std::size_t n = m.dim();
  if (n < 6 || omp_get_max_threads() == 1) return pf_matching_serial(m);
  std::vector<T> partial(n - 1, ring_zero(m.proto()));
#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 1; k < n; ++k) {
    const T& entry = m(0, k);
    if (entry == ring_zero(entry)) continue;
    std::vector<std::size_t> rest;
    rest.reserve(n - 2);
    for (std::size_t j = 1; j < n; ++j)
      if (j != k) rest.push_back(j);
    T term = entry * detail::pf_matching_rec(m, rest);
    if (k % 2 == 0) term = ring_zero(term) - term;
    partial[k - 1] = term;
  }
  T acc = ring_zero(m.proto());
  for (const auto& t : partial) acc = acc + t;
  return acc;
}

/// Pfaffian by skew-symmetric Gaussian elimination (congruence by unit
/// determinant eliminations, sign tracked across swaps). Field entries only.
inline Scalar pf_eliminate(const Matrix<Scalar>& m) {
  detail::check_antisymmetric(m);
  const FieldSpec& f = m.proto().field();
  Matrix<Scalar> a(m);
  const std::size_t n = a.dim();
  Scalar pf = Scalar::one(f);
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    // pivot: bring a nonzero into position (k, k+1)
    std::size_t piv = k + 1;
    while (piv < n && a(k, piv).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(f);  // row k dead: degenerate form
    if (piv != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k + 1, j), a(piv, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k + 1), a(i, piv));
      pf = -pf;
    }
    pf *= a(k, k + 1);
    Scalar pinv = a(k, k + 1).inverse();
    // clear the rest of rows/columns k and k+1 by symmetric row+column ops
    for (std::size_t i = k + 2; i < n; ++i) {
      if (!a(k, i).is_zero()) {
        Scalar c = a(k, i) * pinv;  // subtract c * (row/col k+1)
        for (std::size_t j = 0; j < n; ++j) a(i, j) -= c * a(k + 1, j);
        for (std::size_t j = 0; j < n; ++j) a(j, i) -= c * a(j, k + 1);
      }
      if (!a(k + 1, i).is_zero()) {
        Scalar c = -(a(k + 1, i) * pinv);  // subtract c * (row/col k)
        for (std::size_t j = 0; j < n; ++j) a(i, j) -= c * a(k, j);
        for (std::size_t j = 0; j < n; ++j) a(j, i) -= c * a(j, k);
      }
    }
  }
  return pf;
}

/// Dispatching Pfaffian: elimination over fields, matching sum otherwise.
/// In verification mode (default) both field kernels run and must agree;
/// disagreement is an internal-consistency failure and aborts the run.
inline Scalar pfaffian(const Matrix<Scalar>& m, bool verify = true) {
  Scalar fast = pf_eliminate(m);
  if (verify) {
    Scalar ref = pf_matching(m);
    if (!(fast == ref))
      throw std::runtime_error("pfaffian: elimination and matching kernels disagree");
  }
  return fast;
}

inline MultiPoly pfaffian(const Matrix<MultiPoly>& m, bool = true) {
  return pf_matching(m);
}

}  // namespace symspec
