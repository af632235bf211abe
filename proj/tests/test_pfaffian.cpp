#include <doctest.h>

#include "oracles.hpp"
#include "symspec/pfaffian.hpp"
#include "symspec/symplectic.hpp"

using namespace symspec;

namespace {
const FieldSpec kQ = FieldSpec::rationals();

Matrix<Scalar> antisym_from_upper(const FieldSpec& f, std::size_t dim,
                                  const std::vector<long>& upper) {
  Matrix<Scalar> m = Matrix<Scalar>::zero(dim, Scalar::zero(f));
  std::size_t k = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = Scalar::of_int(f, upper[k]);
      m(j, i) = -m(i, j);
      ++k;
    }
  return m;
}

Matrix<Scalar> random_antisym(const FieldSpec& f, std::size_t dim, Rng& rng) {
  std::vector<long> u(dim * (dim - 1) / 2);
  for (auto& v : u) v = rng.range(-5, 5);
  return antisym_from_upper(f, dim, u);
}
}  // namespace

TEST_CASE("matching-sum base cases") {
  // n=1: Pf([[0,a],[-a,0]]) = a
  CHECK(pf_matching(antisym_from_upper(kQ, 2, {7})) == Scalar::of_int(kQ, 7));

  // 4x4 with upper entries (a,b,c,d,e,f): af - be + cd, the 3 matchings of
  // 4 points: {12,34}, {13,24}, {14,23}
  long a = 2, b = 3, c = 5, d = 7, e = 11, f = 13;
  CHECK(pf_matching(antisym_from_upper(kQ, 4, {a, b, c, d, e, f})) ==
        Scalar::of_int(kQ, a * f - b * e + c * d));

  // standard J for n=2 has Pfaffian 1
  SymplecticSpace sp(2, kQ);
  CHECK(pf_matching(sp.J()) == Scalar::one(kQ));
}

TEST_CASE("input validation") {
  Matrix<Scalar> odd = Matrix<Scalar>::zero(3, Scalar::zero(kQ));
  CHECK_THROWS(pf_matching(odd));
  Matrix<Scalar> notskew = Matrix<Scalar>::identity(4, Scalar::zero(kQ));
  CHECK_THROWS(pf_matching(notskew));
  CHECK_THROWS(pf_eliminate(notskew));
}

TEST_CASE("elimination agrees with matching") {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
    Rng rng(11);
    for (std::size_t dim : {2u, 4u, 6u, 8u}) {
      for (int i = 0; i < 25; ++i) {
        Matrix<Scalar> m = random_antisym(f, dim, rng);
        CHECK(pf_eliminate(m) == pf_matching_serial(m));
        CHECK(pf_matching(m) == pf_matching_serial(m));
      }
    }
  }
}

TEST_CASE("rank-deficient forms have Pfaffian zero") {
  // rank 2: only the (0,1) plane is nondegenerate
  Matrix<Scalar> m = Matrix<Scalar>::zero(4, Scalar::zero(kQ));
  m(0, 1) = Scalar::of_int(kQ, 3);
  m(1, 0) = Scalar::of_int(kQ, -3);
  CHECK(pf_eliminate(m) == Scalar::zero(kQ));
  CHECK(pf_matching(m) == Scalar::zero(kQ));
  // block diagonal of 2x2 blocks multiplies Pfaffians
  Matrix<Scalar> bd = Matrix<Scalar>::zero(4, Scalar::zero(kQ));
  bd(0, 1) = Scalar::of_int(kQ, 5);
  bd(1, 0) = Scalar::of_int(kQ, -5);
  bd(2, 3) = Scalar::of_int(kQ, 7);
  bd(3, 2) = Scalar::of_int(kQ, -7);
  CHECK(pfaffian(bd) == Scalar::of_int(kQ, 35));
}

TEST_CASE("pfaffian squares to the determinant") {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
    Rng rng(13);
    for (std::size_t dim : {2u, 4u, 6u, 8u}) {
      for (int i = 0; i < 20; ++i) {
        Matrix<Scalar> m = random_antisym(f, dim, rng);
        Scalar pf = pfaffian(m);
        CHECK(pf * pf == det_eliminate(m));
        CHECK(pf * pf == oracle::det_cofactor(m));
      }
    }
  }
}

TEST_CASE("congruence transformation law Pf(g^T m g) = det(g) Pf(m)") {
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    Matrix<Scalar> m = random_antisym(kQ, 6, rng);
    Matrix<Scalar> g = oracle::random_matrix(kQ, 6, rng, -2, 2);
    CHECK(pfaffian(g.transpose() * m * g) == det(g) * pfaffian(m));
  }
}

TEST_CASE("homogeneity Pf(c m) = c^n Pf(m)") {
  Rng rng(19);
  for (int i = 0; i < 20; ++i) {
    Matrix<Scalar> m = random_antisym(kQ, 6, rng);
    Scalar c = Scalar::of_int(kQ, rng.range(-4, 4));
    CHECK(pfaffian(m.scale(c)) == c.pow(3) * pfaffian(m));
  }
}

TEST_CASE("matching sum over polynomial entries") {
  // generic 4x4 with symbolic upper entries: af - be + cd
  std::vector<std::string> names{"a", "b", "c", "d", "e", "f"};
  Matrix<MultiPoly> m(4, MultiPoly(kQ));
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      m(i, j) = MultiPoly::variable(kQ, names[k]);
      m(j, i) = -m(i, j);
      ++k;
    }
  MultiPoly a = MultiPoly::variable(kQ, "a"), b = MultiPoly::variable(kQ, "b"),
            c = MultiPoly::variable(kQ, "c"), d = MultiPoly::variable(kQ, "d"),
            e = MultiPoly::variable(kQ, "e"), f = MultiPoly::variable(kQ, "f");
  CHECK(pf_matching(m) == a * f - b * e + c * d);
  // and its square is the symbolic determinant
  CHECK(pf_matching(m) * pf_matching(m) == oracle::det_cofactor(m));
}

TEST_CASE("frozen Pf(J) regression constants") {
  // computed once by the matching-sum oracle for the standard form
  for (std::size_t n = 1; n <= 5; ++n) {
    SymplecticSpace sp(n, kQ);
    CHECK(sp.pfJ() == Scalar::one(kQ));
  }
}

TEST_CASE("pf_char_poly examples") {
  SymplecticSpace sp(2, kQ);
  MultiPoly t = MultiPoly::variable(kQ, "t");

  // m = c I -> (t - c)^2
  Scalar c = Scalar::of_int(kQ, 5);
  Matrix<Scalar> ci = Matrix<Scalar>::identity(4, Scalar::zero(kQ)).scale(c);
  CHECK(pf_char_poly(sp, ci) == (t - MultiPoly::constant(c)).pow(2));

  // m = diag(4,9,9,4) = y^2 for the Cartan y = diag(2,3,-3,-2) -> (t-4)(t-9)
  Matrix<Scalar> m = Matrix<Scalar>::zero(4, Scalar::zero(kQ));
  m(0, 0) = Scalar::of_int(kQ, 4);
  m(1, 1) = Scalar::of_int(kQ, 9);
  m(2, 2) = Scalar::of_int(kQ, 9);
  m(3, 3) = Scalar::of_int(kQ, 4);
  MultiPoly q = pf_char_poly(sp, m);
  CHECK(q == (t - MultiPoly::constant(Scalar::of_int(kQ, 4))) *
                 (t - MultiPoly::constant(Scalar::of_int(kQ, 9))));
  CHECK(q == pf_char_poly_interpolated(sp, m));
  CHECK(q * q == char_poly(m));

  // not in g+ is rejected
  Matrix<Scalar> nil = Matrix<Scalar>::zero(4, Scalar::zero(kQ));
  nil(0, 1) = Scalar::one(kQ);
  CHECK_THROWS(pf_char_poly(sp, nil));
}

TEST_CASE("pf_char_poly squares to char_poly on random g+ samples") {
  for (std::size_t n : {1u, 2u, 3u}) {
    SymplecticSpace sp(n, kQ);
    Rng rng(23 + n);
    for (int i = 0; i < 15; ++i) {
      Matrix<Scalar> m = sample_gplus(sp, rng);
      MultiPoly q = pf_char_poly(sp, m);
      CHECK(q * q == char_poly(m));
      CHECK(q == pf_char_poly_interpolated(sp, m));
      // t^{n-1} coefficient is -trace/2
      Scalar half = Scalar::one(kQ) / Scalar::of_int(kQ, 2);
      CHECK(q.univariate_coeff("t", static_cast<unsigned>(n - 1)) == -(trace(m) * half));
    }
  }
}
