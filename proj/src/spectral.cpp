#include "symspec/spectral.hpp"

#include <algorithm>
#include <numeric>

namespace symspec {

std::vector<MultiIndex> enumerate_multi_indices(std::size_t d, unsigned max_total,
                                                bool even_only) {
  std::vector<MultiIndex> out;
  std::vector<unsigned> cur(d, 0);
  // counts all a with a_1 + ... + a_d <= max_total
  auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos == d) {
      MultiIndex mi{cur};
      if (!even_only || mi.even()) out.push_back(mi);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, max_total);
  return out;
}

Matrix<Scalar> monomial_matrix(const std::vector<Matrix<Scalar>>& xs, const MultiIndex& a) {
  if (xs.empty()) throw std::invalid_argument("monomial_matrix: empty tuple");
  if (a.d() != xs.size()) throw std::invalid_argument("monomial_matrix: arity mismatch");
  Matrix<Scalar> m = Matrix<Scalar>::identity(xs[0].dim(), xs[0].proto());
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (a.a[i]) m = m * xs[i].pow(a.a[i]);
  return m;
}

Scalar phi(const MultiIndex& a, const CommutingTuple& tuple) {
  if (a.d() != tuple.d()) throw std::invalid_argument("phi: arity mismatch");
  if (!tuple.all_in_g()) throw std::invalid_argument("phi: tuple must lie in g");
  return trace(monomial_matrix(tuple.xs, a));
}

Scalar psi(const MultiIndex& a, const CartanPoint& pt) {
  if (a.d() != pt.d()) throw std::invalid_argument("psi: arity mismatch");
  if (pt.d() == 0) throw std::invalid_argument("psi: empty point");
  const FieldSpec& f = pt.b[0][0].field();
  if (!a.even()) return Scalar::zero(f);
  Scalar acc = Scalar::zero(f);
  for (std::size_t j = 0; j < pt.n(); ++j) {
    Scalar prod = Scalar::one(f);
    for (std::size_t i = 0; i < pt.d(); ++i) prod *= pt.b[i][j].pow(a.a[i]);
    acc += prod;
  }
  return acc * Scalar::of_int(f, 2);
}

Scalar chevalley_restrict(const SymplecticSpace& sp, const MultiIndex& a,
                          const CartanPoint& pt) {
  auto ys = cartan_embed(sp, pt);
  return trace(monomial_matrix(ys, a));
}

Matrix<Scalar> eval_poly_at_matrices(const MultiPoly& q,
                                     const std::vector<Matrix<Scalar>>& xs) {
  if (xs.empty()) throw std::invalid_argument("eval_poly_at_matrices: empty tuple");
  const std::size_t dim = xs[0].dim();
  const FieldSpec& f = q.field();
  // variable name "Xi" -> index i-1
  std::vector<std::size_t> slot;
  for (const auto& name : q.variables()) {
    if (name.size() < 2 || name[0] != 'X')
      throw std::invalid_argument("eval_poly_at_matrices: unexpected variable " + name);
    std::size_t i = std::stoul(name.substr(1));
    if (i == 0 || i > xs.size())
      throw std::invalid_argument("eval_poly_at_matrices: variable out of range " + name);
    slot.push_back(i - 1);
  }
  Matrix<Scalar> acc = Matrix<Scalar>::zero(dim, Scalar::zero(f));
  for (const auto& [e, c] : q.terms()) {
    Matrix<Scalar> term = Matrix<Scalar>::identity(dim, Scalar::zero(f)).scale(c);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k]) term = term * xs[slot[k]].pow(e[k]);
    acc = acc + term;
  }
  return acc;
}

bool is_tau_even(const MultiPoly& q) {
  for (const auto& [e, c] : q.terms()) {
    unsigned total = std::accumulate(e.begin(), e.end(), 0u);
    if (total % 2) return false;
  }
  return true;
}

Scalar spectral_eval_pure(const MultiPoly& q, const CommutingTuple& tuple) {
  if (!is_tau_even(q)) throw std::invalid_argument("spectral_eval_pure: q is not tau-even");
  if (!tuple.all_in_g())
    throw std::invalid_argument("spectral_eval_pure: tuple must lie in g");
  Matrix<Scalar> m = eval_poly_at_matrices(q, tuple.xs);
  if (!in_gplus(*tuple.space, m))
    throw std::logic_error("spectral_eval_pure: q(x) left g+ (parity failure)");
  return pfaffian_norm(*tuple.space, m);
}

void InvariantElement::add_term(const Scalar& coeff, BlockTuple blocks) {
  if (blocks.size() != n_) throw std::invalid_argument("invariant: wrong block count");
  for (const auto& b : blocks) {
    if (b.size() != d_) throw std::invalid_argument("invariant: wrong block arity");
    if (std::accumulate(b.begin(), b.end(), 0u) % 2)
      throw std::invalid_argument("invariant: block monomial has odd degree");
  }
  std::sort(blocks.begin(), blocks.end());
  auto it = terms_.find(blocks);
  if (it == terms_.end())
    terms_.emplace(std::move(blocks), coeff);
  else
    it->second += coeff;
  for (auto jt = terms_.begin(); jt != terms_.end();)
    jt = jt->second.is_zero() ? terms_.erase(jt) : std::next(jt);
}

InvariantElement InvariantElement::operator+(const InvariantElement& o) const {
  if (n_ != o.n_ || d_ != o.d_ || field_ != o.field_)
    throw std::invalid_argument("invariant: shape mismatch");
  InvariantElement r(*this);
  for (const auto& [b, c] : o.terms_) r.add_term(c, b);
  return r;
}

InvariantElement InvariantElement::operator*(const Scalar& c) const {
  InvariantElement r(n_, d_, field_);
  for (const auto& [b, v] : terms_) {
    Scalar w = v * c;
    if (!w.is_zero()) r.terms_.emplace(b, w);
  }
  return r;
}

bool InvariantElement::operator==(const InvariantElement& o) const {
  return n_ == o.n_ && d_ == o.d_ && field_ == o.field_ && terms_ == o.terms_;
}

Scalar InvariantElement::eval_at_cartan(const CartanPoint& pt) const {
  if (pt.n() != n_ || pt.d() != d_)
    throw std::invalid_argument("invariant: point shape mismatch");
  Scalar acc = Scalar::zero(field_);
  for (const auto& [blocks, c] : terms_) {
    // orbit-sum: distinct arrangements of the sorted block tuple
    BlockTuple arr = blocks;
    Scalar sum = Scalar::zero(field_);
    do {
      Scalar prod = Scalar::one(field_);
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < d_; ++i)
          if (arr[j][i]) prod *= pt.b[i][j].pow(arr[j][i]);
      sum += prod;
    } while (std::next_permutation(arr.begin(), arr.end()));
    acc += c * sum;
  }
  return acc;
}

InvariantElement InvariantElement::psi_generator(std::size_t n, const MultiIndex& a,
                                                 const FieldSpec& f) {
  if (!a.even()) throw std::invalid_argument("psi_generator: odd multi-index");
  InvariantElement inv(n, a.d(), f);
  BlockTuple blocks(n, BlockMonomial(a.d(), 0));
  blocks[0] = a.a;
  // The orbit-sum lists each distinct arrangement once, so when a = 0 all n
  // placements coincide and the multiplicity moves into the coefficient.
  long mult = (a.total() == 0) ? static_cast<long>(n) : 1;
  inv.add_term(Scalar::of_int(f, 2 * mult), std::move(blocks));
  return inv;
}

namespace {

MultiPoly block_to_poly(const std::vector<unsigned>& block, const FieldSpec& f) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < block.size(); ++i) names.push_back("X" + std::to_string(i + 1));
  return MultiPoly::monomial(Scalar::one(f), names, block);
}

Scalar factorial(const FieldSpec& f, std::size_t k) {
  Scalar r = Scalar::one(f);
  for (std::size_t i = 2; i <= k; ++i) r *= Scalar::of_int(f, static_cast<long>(i));
  return r;
}

}  // namespace

PurePowerCombo polarize(const InvariantElement& inv) {
  const FieldSpec& f = inv.field();
  const std::size_t n = inv.n();
  if (!f.char_exceeds(n))
    throw std::invalid_argument("polarize: characteristic must be 0 or > n");
  PurePowerCombo combo;
  for (const auto& [blocks, c] : inv.terms()) {
    // stabilizer order of the multiset: product of multiplicities!
    Scalar stab = Scalar::one(f);
    std::size_t run = 1;
    for (std::size_t j = 1; j <= n; ++j) {
      if (j < n && blocks[j] == blocks[j - 1]) {
        ++run;
      } else {
        stab *= factorial(f, run);
        run = 1;
      }
    }
    Scalar base = c / stab;
    // sum_{sigma} u_{sigma(1)} x ... x u_{sigma(n)}
    //   = sum_{0 != S subset [n]} (-1)^{n-|S|} (sum_{j in S} u_j)^{(x) n}
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
      MultiPoly qs(f);
      std::size_t popcount = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (1u << j)) {
          qs += block_to_poly(blocks[j], f);
          ++popcount;
        }
      Scalar coeff = base;
      if ((n - popcount) % 2) coeff = -coeff;
      combo.parts.emplace_back(coeff, std::move(qs));
    }
  }
  return combo;
}

InvariantElement expand_pure_powers(const PurePowerCombo& combo, std::size_t n,
                                    std::size_t d, const FieldSpec& f) {
  InvariantElement out(n, d, f);
  for (const auto& [c, q] : combo.parts) {
    if (q.is_zero()) continue;
    // monomials of q as (exponent block, coefficient)
    std::vector<std::pair<std::vector<unsigned>, Scalar>> mons;
    for (const auto& [e, cf] : q.terms()) {
      std::vector<unsigned> block(d, 0);
      const auto& vars = q.variables();
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (!e[k]) continue;
        std::size_t i = std::stoul(vars[k].substr(1));
        block[i - 1] = e[k];
      }
      mons.emplace_back(std::move(block), cf);
    }
    // q^{(x) n} = sum over multisets K of n monomials of (prod coeffs) orbitsum(K)
    std::vector<std::size_t> pick(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t lo) -> void {
      if (pos == n) {
        Scalar coeff = c;
        InvariantElement::BlockTuple blocks;
        for (std::size_t j = 0; j < n; ++j) {
          coeff *= mons[pick[j]].second;
          blocks.push_back(mons[pick[j]].first);
        }
        out.add_term(coeff, std::move(blocks));
        return;
      }
      for (std::size_t k = lo; k < mons.size(); ++k) {
        pick[pos] = k;
        self(self, pos + 1, k);
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

Scalar spectral_eval(const InvariantElement& inv, const CommutingTuple& tuple) {
  PurePowerCombo combo = polarize(inv);
  Scalar acc = Scalar::zero(inv.field());
  for (const auto& [c, q] : combo.parts) acc += c * spectral_eval_pure(q, tuple);
  return acc;
}

RoundTripReport round_trip_check(const MultiIndex& a, const CommutingTuple& tuple) {
  if (!a.even()) throw std::invalid_argument("round_trip_check: odd multi-index");
  if (!tuple.all_in_g())
    throw std::invalid_argument("round_trip_check: tuple must lie in g");
  const SymplecticSpace& sp = *tuple.space;
  Matrix<Scalar> m = monomial_matrix(tuple.xs, a);
  RoundTripReport rep{Scalar::zero(sp.field()), Scalar::zero(sp.field()),
                      Scalar::zero(sp.field()), false};
  rep.trace_value = trace(m);
  MultiPoly cp = char_poly(m, "t");
  rep.charpoly_route = -cp.univariate_coeff("t", static_cast<unsigned>(sp.dim() - 1));
  MultiPoly q = pf_char_poly(sp, m, "t");
  rep.pf_route = -(q.univariate_coeff("t", static_cast<unsigned>(sp.n() - 1)) *
                   Scalar::of_int(sp.field(), 2));
  rep.pass = rep.trace_value == rep.charpoly_route && rep.trace_value == rep.pf_route;
  return rep;
}

Scalar deligne_det_eval(const MultiPoly& q, const std::vector<Matrix<Scalar>>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!commutes(xs[i], xs[j]))
        throw std::invalid_argument("deligne_det_eval: matrices do not commute");
  return det(eval_poly_at_matrices(q, xs));
}

}  // namespace symspec
