#include <doctest.h>

#include "oracles.hpp"
#include "symspec/charpoly.hpp"
#include "symspec/linsolve.hpp"

using namespace symspec;

namespace {
const FieldSpec kQ = FieldSpec::rationals();

Matrix<Scalar> from_ints(const FieldSpec& f, std::vector<std::vector<long>> rows) {
  Matrix<Scalar> m = Matrix<Scalar>::zero(rows.size(), Scalar::zero(f));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = Scalar::of_int(f, rows[i][j]);
  return m;
}
}  // namespace

TEST_CASE("matrix arithmetic basics") {
  Rng rng(1);
  Matrix<Scalar> m = oracle::random_matrix(kQ, 4, rng);
  Matrix<Scalar> id = Matrix<Scalar>::identity(4, Scalar::zero(kQ));
  CHECK(id * m == m);
  CHECK((m + m.scale(Scalar::of_int(kQ, -1))).is_zero());
  Matrix<Scalar> j = from_ints(kQ, {{0, 1}, {-1, 0}});
  CHECK(j * j == -Matrix<Scalar>::identity(2, Scalar::zero(kQ)));
  CHECK_THROWS(m + j);  // dimension mismatch
}

TEST_CASE("trace") {
  Matrix<Scalar> y = from_ints(kQ, {{2, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, -3, 0}, {0, 0, 0, -2}});
  CHECK(trace(y) == Scalar::zero(kQ));
  CHECK(trace(y * y) == Scalar::of_int(kQ, 26));
  Rng rng(2);
  for (int i = 0; i < 30; ++i) {
    Matrix<Scalar> a = oracle::random_matrix(kQ, 4, rng), b = oracle::random_matrix(kQ, 4, rng);
    CHECK(trace(a * b) == trace(b * a));
  }
}

TEST_CASE("char_poly examples against the cofactor oracle") {
  Matrix<Scalar> m = from_ints(kQ, {{1, 2}, {3, 4}});
  MultiPoly cp = char_poly(m);
  MultiPoly t = MultiPoly::variable(kQ, "t");
  CHECK(cp == t * t - t * Scalar::of_int(kQ, 5) - MultiPoly::constant(Scalar::of_int(kQ, 2)));
  CHECK(cp == oracle::char_poly_cofactor(m));

  // diagonal case diag(b1,b2,-b2,-b1) -> (t^2-b1^2)(t^2-b2^2)
  Matrix<Scalar> y = from_ints(kQ, {{2, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, -3, 0}, {0, 0, 0, -2}});
  MultiPoly t2 = t * t;
  CHECK(char_poly(y) == (t2 - MultiPoly::constant(Scalar::of_int(kQ, 4))) *
                            (t2 - MultiPoly::constant(Scalar::of_int(kQ, 9))));

  // nilpotent Jordan block -> t^dim
  Matrix<Scalar> nil = from_ints(kQ, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(char_poly(nil) == t.pow(3));

  // t^{dim-1} coefficient is -trace
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    Matrix<Scalar> a = oracle::random_matrix(kQ, 5, rng);
    MultiPoly p = char_poly(a);
    CHECK(p.coeff({{"t", 4}}) == -trace(a));
    CHECK(p == oracle::char_poly_cofactor(a));
  }
}

TEST_CASE("char_poly over prime fields matches oracle") {
  FieldSpec fp = FieldSpec::prime(101);
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    Matrix<Scalar> a = oracle::random_matrix(fp, 4, rng, 0, 100);
    CHECK(char_poly(a) == oracle::char_poly_cofactor(a));
  }
}

TEST_CASE("det: berkowitz route vs elimination vs cofactor") {
  CHECK(det(Matrix<Scalar>::identity(5, Scalar::zero(kQ))) == Scalar::one(kQ));
  CHECK(det(from_ints(kQ, {{1, 2}, {3, 4}})) == Scalar::of_int(kQ, -2));
  Rng rng(4);
  for (int i = 0; i < 40; ++i) {
    Matrix<Scalar> a = oracle::random_matrix(kQ, 4, rng);
    Scalar d = det(a);
    CHECK(d == det_eliminate(a));
    CHECK(d == oracle::det_cofactor(a));
  }
}

TEST_CASE("det multiplicativity over both fields") {
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
      Matrix<Scalar> a = oracle::random_matrix(f, 4, rng), b = oracle::random_matrix(f, 4, rng);
      CHECK(det(a * b) == det(a) * det(b));
    }
  }
}

TEST_CASE("commutes") {
  Rng rng(6);
  Matrix<Scalar> m = oracle::random_matrix(kQ, 4, rng);
  CHECK(commutes(m, m * m));
  Matrix<Scalar> d = from_ints(kQ, {{1, 0}, {0, 2}});
  Matrix<Scalar> e = from_ints(kQ, {{0, 1}, {0, 0}});
  CHECK_FALSE(commutes(d, e));
}

TEST_CASE("conjugate preserves trace, det, charpoly and commutation") {
  Rng rng(7);
  for (int i = 0; i < 30; ++i) {
    Matrix<Scalar> x = oracle::random_matrix(kQ, 4, rng);
    Matrix<Scalar> g = oracle::random_matrix(kQ, 4, rng);
    if (det(g).is_zero()) continue;
    CHECK(conjugate(Matrix<Scalar>::identity(4, Scalar::zero(kQ)), x) == x);
    Matrix<Scalar> y = conjugate(g, x);
    CHECK(trace(y) == trace(x));
    CHECK(det(y) == det(x));
    CHECK(char_poly(y) == char_poly(x));
    CHECK(commutes(conjugate(g, x), conjugate(g, x * x)));
  }
  Matrix<Scalar> singular = from_ints(kQ, {{1, 1}, {1, 1}});
  CHECK_THROWS(conjugate(singular, from_ints(kQ, {{1, 0}, {0, 2}})));
}

TEST_CASE("cayley-hamilton, scalar and polynomial entries") {
  Rng rng(8);
  for (std::size_t dim : {4u, 6u}) {
    Matrix<Scalar> a = oracle::random_matrix(kQ, dim, rng, -2, 2);
    auto coeffs = berkowitz_coeffs(a);
    Matrix<Scalar> acc = Matrix<Scalar>::zero(dim, Scalar::zero(kQ));
    for (std::size_t k = 0; k <= dim; ++k)
      acc = acc + a.pow(static_cast<unsigned>(dim - k)).scale(coeffs[k]);
    CHECK(acc.is_zero());
  }
  // a 2x2 with genuine polynomial entries
  MultiPoly x = MultiPoly::variable(kQ, "x"), y = MultiPoly::variable(kQ, "y");
  Matrix<MultiPoly> p(2, MultiPoly(kQ));
  p(0, 0) = x;
  p(0, 1) = y;
  p(1, 0) = x * y;
  p(1, 1) = x + y;
  auto coeffs = berkowitz_coeffs(p);
  Matrix<MultiPoly> acc = Matrix<MultiPoly>::zero(2, MultiPoly(kQ));
  for (std::size_t k = 0; k <= 2; ++k)
    acc = acc + p.pow(static_cast<unsigned>(2 - k)).scale(coeffs[k]);
  CHECK(acc.is_zero());
  // berkowitz det agrees with cofactor det over the polynomial ring
  CHECK(det(p) == oracle::det_cofactor(p));
}

TEST_CASE("solve_linear") {
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    Matrix<Scalar> a = oracle::random_matrix(kQ, 4, rng);
    if (det(a).is_zero()) continue;
    std::vector<Scalar> b;
    for (int k = 0; k < 4; ++k) b.push_back(Scalar::of_int(kQ, rng.range(-5, 5)));
    auto x = solve_linear(a, b);
    REQUIRE(x.has_value());
    for (std::size_t r = 0; r < 4; ++r) {
      Scalar acc = Scalar::zero(kQ);
      for (std::size_t c = 0; c < 4; ++c) acc += a(r, c) * (*x)[c];
      CHECK(acc == b[r]);
    }
  }
}
