#pragma once

#include <stdexcept>
#include <vector>

#include "symspec/poly.hpp"

namespace symspec {

inline Scalar ring_zero(const Scalar& s) { return Scalar::zero(s.field()); }
inline Scalar ring_one(const Scalar& s) { return Scalar::one(s.field()); }
inline MultiPoly ring_zero(const MultiPoly& p) { return MultiPoly(p.field()); }
inline MultiPoly ring_one(const MultiPoly& p) {
  return MultiPoly::constant(Scalar::one(p.field()));
}

/// Dense square matrix over a commutative ring (Scalar or MultiPoly
/// entries). Immutable in spirit: every operation returns a fresh value.
template <typename T>
class Matrix {
 public:
  Matrix(std::size_t dim, const T& fill) : dim_(dim), e_(dim * dim, fill) {
    if (dim == 0) throw std::invalid_argument("matrix dimension must be positive");
  }

  static Matrix zero(std::size_t dim, const T& proto) {
    return Matrix(dim, ring_zero(proto));
  }
  static Matrix identity(std::size_t dim, const T& proto) {
    Matrix m = zero(dim, proto);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = ring_one(proto);
    return m;
  }

  std::size_t dim() const { return dim_; }
  T& operator()(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }

  /// Any entry works as a ring prototype.
  const T& proto() const { return e_[0]; }

  Matrix operator+(const Matrix& o) const {
    check(o);
    Matrix r(*this);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check(o);
    Matrix r(*this);
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    check(o);
    Matrix r = zero(dim_, proto());
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t k = 0; k < dim_; ++k) {
        const T& a = (*this)(i, k);
        for (std::size_t j = 0; j < dim_; ++j)
          r(i, j) = r(i, j) + a * o(k, j);
      }
    return r;
  }
  Matrix scale(const T& c) const {
    Matrix r(*this);
    for (auto& v : r.e_) v = v * c;
    return r;
  }
  Matrix operator-() const {
    Matrix r(*this);
    for (auto& v : r.e_) v = ring_zero(v) - v;
    return r;
  }

  Matrix transpose() const {
    Matrix r(*this);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  Matrix pow(unsigned e) const {
    Matrix acc = identity(dim_, proto());
    Matrix base(*this);
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  bool operator==(const Matrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& v : e_)
      if (!(v == ring_zero(v))) return false;
    return true;
  }

 private:
  void check(const Matrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
  }

  std::size_t dim_;
  std::vector<T> e_;
};

template <typename T>
T trace(const Matrix<T>& m) {
  T acc = ring_zero(m.proto());
  for (std::size_t i = 0; i < m.dim(); ++i) acc = acc + m(i, i);
  return acc;
}

template <typename T>
bool commutes(const Matrix<T>& x, const Matrix<T>& y) {
  return (x * y - y * x).is_zero();
}

template <typename T>
bool is_symmetric(const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i + 1; j < m.dim(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

template <typename T>
bool is_antisymmetric(const Matrix<T>& m) {
  const T z = ring_zero(m.proto());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (!(m(i, i) == z)) return false;
    for (std::size_t j = i + 1; j < m.dim(); ++j)
      if (!(m(i, j) + m(j, i) == z)) return false;
  }
  return true;
}

/// Entry-wise promotion of a Scalar matrix into a polynomial ring.
inline Matrix<MultiPoly> lift(const Matrix<Scalar>& m) {
  Matrix<MultiPoly> r(m.dim(), MultiPoly(m.proto().field()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      r(i, j) = MultiPoly::constant(m(i, j));
  return r;
}

}  // namespace symspec
