#include "symspec/symplectic.hpp"

namespace symspec {

SymplecticSpace::SymplecticSpace(std::size_t n, const FieldSpec& field)
    : n_(n),
      field_(field),
      j_(Matrix<Scalar>::zero(2 * n, Scalar::zero(field))),
      pfj_(Scalar::zero(field)) {
  if (n == 0) throw std::invalid_argument("symplectic rank must be positive");
  if (!field.char_exceeds(2 * n))
    throw std::invalid_argument("field characteristic must be 0 or > 2n");
  const std::size_t m = 2 * n;
  for (std::size_t i = 1; i <= m; ++i) {
    std::size_t jcol = m + 1 - i;
    if (i <= n)
      j_(i - 1, jcol - 1) = Scalar::one(field);
    else
      j_(i - 1, jcol - 1) = -Scalar::one(field);
  }
  pfj_ = pf_matching(j_);
  if (pfj_.is_zero()) throw std::logic_error("standard form is degenerate");
}

std::pair<Matrix<Scalar>, Matrix<Scalar>> split(const SymplecticSpace& sp,
                                                const Matrix<Scalar>& x) {
  const FieldSpec& f = sp.field();
  Scalar half = Scalar::one(f) / Scalar::of_int(f, 2);
  Matrix<Scalar> jx = sp.J() * x;
  Matrix<Scalar> sym = (jx + jx.transpose()).scale(half);
  Matrix<Scalar> anti = (jx - jx.transpose()).scale(half);
  Matrix<Scalar> jinv = sp.J_inv();
  return {jinv * sym, jinv * anti};
}

Scalar pfaffian_norm(const SymplecticSpace& sp, const Matrix<Scalar>& x, bool verify) {
  if (!in_gplus(sp, x)) throw std::invalid_argument("pfaffian_norm: x is not in g+");
  return pfaffian(sp.J() * x, verify) / sp.pfJ();
}

MultiPoly pfaffian_norm(const SymplecticSpace& sp, const Matrix<MultiPoly>& x) {
  if (!in_gplus(sp, x)) throw std::invalid_argument("pfaffian_norm: x is not in g+");
  return pf_matching(lift(sp.J()) * x) * sp.pfJ().inverse();
}

MultiPoly pf_char_poly(const SymplecticSpace& sp, const Matrix<Scalar>& m,
                       const std::string& var) {
  if (!in_gplus(sp, m)) throw std::invalid_argument("pf_char_poly: m is not in g+");
  const FieldSpec& f = sp.field();
  MultiPoly t = MultiPoly::variable(f, var);
  Matrix<MultiPoly> tid = Matrix<MultiPoly>::identity(m.dim(), MultiPoly(f));
  for (std::size_t i = 0; i < m.dim(); ++i) tid(i, i) = t;
  Matrix<MultiPoly> arg = tid - lift(m);
  return pfaffian_norm(sp, arg);
}

MultiPoly pf_char_poly_interpolated(const SymplecticSpace& sp, const Matrix<Scalar>& m,
                                    const std::string& var) {
  if (!in_gplus(sp, m)) throw std::invalid_argument("pf_char_poly: m is not in g+");
  const FieldSpec& f = sp.field();
  const std::size_t n = sp.n();
  // n+1 evaluation points 0..n are distinct: char(k) = 0 or > 2n.
  std::vector<Scalar> pts, vals;
  for (std::size_t k = 0; k <= n; ++k) {
    Scalar tk = Scalar::of_int(f, static_cast<long>(k));
    Matrix<Scalar> arg = Matrix<Scalar>::identity(m.dim(), tk).scale(tk) - m;
    pts.push_back(tk);
    vals.push_back(pfaffian_norm(sp, arg));
  }
  MultiPoly t = MultiPoly::variable(f, var);
  MultiPoly acc(f);
  for (std::size_t k = 0; k <= n; ++k) {
    MultiPoly basis = MultiPoly::constant(Scalar::one(f));
    Scalar denom = Scalar::one(f);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == k) continue;
      basis *= t - MultiPoly::constant(pts[j]);
      denom *= pts[k] - pts[j];
    }
    acc += basis * (vals[k] / denom);
  }
  return acc;
}

std::vector<Matrix<Scalar>> cartan_embed(const SymplecticSpace& sp, const CartanPoint& pt) {
  if (pt.n() != sp.n()) throw std::invalid_argument("cartan_embed: rank mismatch");
  std::vector<Matrix<Scalar>> out;
  const std::size_t n = sp.n();
  for (const auto& row : pt.b) {
    Matrix<Scalar> m = Matrix<Scalar>::zero(2 * n, Scalar::zero(sp.field()));
    for (std::size_t j = 0; j < n; ++j) {
      m(j, j) = row[j];
      m(2 * n - 1 - j, 2 * n - 1 - j) = -row[j];
    }
    out.push_back(std::move(m));
  }
  return out;
}

WeylElement WeylElement::identity(std::size_t n) {
  WeylElement w;
  w.signs.assign(n, 1);
  w.perm.resize(n);
  for (std::size_t j = 0; j < n; ++j) w.perm[j] = j;
  return w;
}

WeylElement WeylElement::compose(const WeylElement& inner) const {
  const std::size_t n = perm.size();
  std::vector<std::size_t> pinv(n);
  for (std::size_t j = 0; j < n; ++j) pinv[perm[j]] = j;
  WeylElement r;
  r.perm.resize(n);
  r.signs.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    r.perm[j] = perm[inner.perm[j]];
    r.signs[j] = signs[j] * inner.signs[pinv[j]];
  }
  return r;
}

CartanPoint weyl_act(const WeylElement& w, const CartanPoint& pt) {
  const std::size_t n = pt.n();
  if (w.perm.size() != n) throw std::invalid_argument("weyl_act: rank mismatch");
  std::vector<std::size_t> pinv(n);
  for (std::size_t j = 0; j < n; ++j) pinv[w.perm[j]] = j;
  CartanPoint out = pt;
  for (std::size_t i = 0; i < pt.d(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar v = pt.b[i][pinv[j]];
      out.b[i][j] = w.signs[j] > 0 ? v : -v;
    }
  return out;
}

Matrix<Scalar> random_symplectic(const SymplecticSpace& sp, Rng& rng, unsigned steps) {
  const FieldSpec& f = sp.field();
  const std::size_t m = sp.dim();
  Matrix<Scalar> g = Matrix<Scalar>::identity(m, Scalar::zero(f));
  for (unsigned s = 0; s < steps; ++s) {
    // symplectic transvection I + c v (J v)^T
    std::vector<Scalar> v(m, Scalar::zero(f));
    bool nonzero = false;
    for (auto& e : v) {
      e = Scalar::of_int(f, rng.range(-2, 2));
      nonzero = nonzero || !e.is_zero();
    }
    if (!nonzero) v[rng.range(0, static_cast<long>(m) - 1)] = Scalar::one(f);
    long c = rng.range(1, 2) * (rng.range(0, 1) ? 1 : -1);
    std::vector<Scalar> jv(m, Scalar::zero(f));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) jv[i] += sp.J()(i, k) * v[k];
    Matrix<Scalar> t = Matrix<Scalar>::identity(m, Scalar::zero(f));
    Scalar cs = Scalar::of_int(f, c);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k) t(i, k) += cs * v[i] * jv[k];
    g = g * t;
  }
  if (!(g.transpose() * sp.J() * g == sp.J()))
    throw std::logic_error("random_symplectic: generator left Sp");
  return g;
}

CommutingTuple::CommutingTuple(const SymplecticSpace& sp, std::vector<Matrix<Scalar>> ms,
                               std::vector<Parity> tags)
    : space(&sp), xs(std::move(ms)), parity(std::move(tags)) {
  if (xs.size() != parity.size())
    throw std::invalid_argument("tuple: parity tag count mismatch");
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!commutes(xs[i], xs[j]))
        throw std::invalid_argument("tuple: matrices do not commute");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (parity[i] == Parity::in_g && !in_g(sp, xs[i]))
      throw std::invalid_argument("tuple: parity tag in_g violated");
    if (parity[i] == Parity::in_gplus && !in_gplus(sp, xs[i]))
      throw std::invalid_argument("tuple: parity tag in_gplus violated");
  }
}

bool CommutingTuple::all_in_g() const {
  for (auto p : parity)
    if (p != Parity::in_g) return false;
  return true;
}

SamplerKind parse_sampler_kind(const std::string& s) {
  if (s == "conjugated_cartan") return SamplerKind::conjugated_cartan;
  if (s == "single_generator") return SamplerKind::single_generator;
  if (s == "nilpotent") return SamplerKind::nilpotent;
  throw std::invalid_argument("unknown sampler kind: " + s);
}

std::string sampler_kind_name(SamplerKind k) {
  switch (k) {
    case SamplerKind::conjugated_cartan: return "conjugated_cartan";
    case SamplerKind::single_generator: return "single_generator";
    case SamplerKind::nilpotent: return "nilpotent";
  }
  return "?";
}

CartanPoint random_cartan_point(const SymplecticSpace& sp, std::size_t d, Rng& rng) {
  CartanPoint pt;
  pt.b.resize(d);
  for (auto& row : pt.b) {
    row.reserve(sp.n());
    for (std::size_t j = 0; j < sp.n(); ++j)
      row.push_back(Scalar::of_int(sp.field(), rng.range(-4, 4)));
  }
  return pt;
}

Matrix<Scalar> random_in_g(const SymplecticSpace& sp, Rng& rng) {
  const FieldSpec& f = sp.field();
  const std::size_t m = sp.dim();
  Matrix<Scalar> s = Matrix<Scalar>::zero(m, Scalar::zero(f));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Scalar e = Scalar::of_int(f, rng.range(-3, 3));
      s(i, j) = e;
      s(j, i) = e;
    }
  return sp.J_inv() * s;
}

Matrix<Scalar> regular_nilpotent(const SymplecticSpace& sp) {
  const FieldSpec& f = sp.field();
  const std::size_t m = sp.dim();
  Matrix<Scalar> x = Matrix<Scalar>::zero(m, Scalar::zero(f));
  for (std::size_t i = 0; i + 1 < m; ++i)
    x(i, i + 1) = (i + 1 <= sp.n()) ? Scalar::one(f) : -Scalar::one(f);
  return x;
}

CommutingTuple sample_commuting(const SymplecticSpace& sp, std::size_t d,
                                std::uint64_t seed, SamplerKind kind) {
  Rng rng(seed);
  std::vector<Matrix<Scalar>> xs;
  switch (kind) {
    case SamplerKind::conjugated_cartan: {
      CartanPoint pt = random_cartan_point(sp, d, rng);
      auto diag = cartan_embed(sp, pt);
      Matrix<Scalar> g = random_symplectic(sp, rng, 3);
      auto gi = inverse(g);
      for (auto& x : diag) xs.push_back(g * x * *gi);
      break;
    }
    case SamplerKind::single_generator: {
      Matrix<Scalar> x = random_in_g(sp, rng);
      for (std::size_t i = 0; i < d; ++i) {
        // odd-degree polynomial in x with zero constant term: stays in g
        Matrix<Scalar> acc = Matrix<Scalar>::zero(sp.dim(), Scalar::zero(sp.field()));
        for (unsigned k : {1u, 3u, 5u}) {
          long c = rng.range(-2, 2);
          if (c == 0 && k == 1) c = 1;
          if (c != 0) acc = acc + x.pow(k).scale(Scalar::of_int(sp.field(), c));
        }
        xs.push_back(std::move(acc));
      }
      break;
    }
    case SamplerKind::nilpotent: {
      Matrix<Scalar> nilp = regular_nilpotent(sp);
      for (std::size_t i = 0; i < d; ++i) {
        unsigned e = 2 * static_cast<unsigned>(rng.range(0, static_cast<long>(sp.n()) - 1)) + 1;
        xs.push_back(nilp.pow(e));
      }
      break;
    }
  }
  return CommutingTuple(sp, std::move(xs), std::vector<Parity>(d, Parity::in_g));
}

std::pair<Matrix<Scalar>, Matrix<Scalar>> sample_gplus_pair(const SymplecticSpace& sp,
                                                            std::uint64_t seed,
                                                            SamplerKind kind) {
  Rng rng(seed);
  long variant = rng.range(0, 2);
  CommutingTuple t = sample_commuting(sp, 2, rng.next(), kind);
  const Matrix<Scalar>&x = t.xs[0], &y = t.xs[1];
  switch (variant) {
    case 0: return {x * y, x * x};
    case 1: return {x * x, y * y};
    default: {
      Scalar c = Scalar::of_int(sp.field(), rng.range(-3, 3));
      return {Matrix<Scalar>::identity(sp.dim(), c).scale(c), x * y};
    }
  }
}

Matrix<Scalar> sample_gplus(const SymplecticSpace& sp, Rng& rng) {
  const FieldSpec& f = sp.field();
  Matrix<Scalar> m = Matrix<Scalar>::zero(sp.dim(), Scalar::zero(f));
  for (std::size_t i = 0; i < sp.dim(); ++i)
    for (std::size_t j = 0; j < sp.dim(); ++j)
      m(i, j) = Scalar::of_int(f, rng.range(-3, 3));
  return split(sp, m).second;
}

}  // namespace symspec
