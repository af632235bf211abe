#include "symspec/campaign.hpp"

#include <omp.h>

#include <functional>

namespace symspec {

void CampaignConfig::validate() const {
  if (n == 0 || n > 6)
    throw std::invalid_argument("config: n must be in [1,6] (matching-sum cost ceiling)");
  if (d == 0) throw std::invalid_argument("config: d must be positive");
  if (samples == 0) throw std::invalid_argument("config: samples must be positive");
  parse_sampler_kind(kind);
}

const std::vector<std::string>& check_family_names() {
  static const std::vector<std::string> names = {
      "pfaffian_square",   "norm_square",        "multiplicativity",
      "poly_multiplicativity", "parity_vanishing", "chevalley",
      "roundtrip",         "pf_charpoly_square", "polarization",
      "gl_crosscheck"};
  return names;
}

namespace {

Matrix<Scalar> random_antisymmetric(const FieldSpec& f, std::size_t dim, Rng& rng) {
  Matrix<Scalar> m = Matrix<Scalar>::zero(dim, Scalar::zero(f));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      Scalar e = Scalar::of_int(f, rng.range(-5, 5));
      m(i, j) = e;
      m(j, i) = -e;
    }
  return m;
}

MultiPoly random_tau_even_poly(const FieldSpec& f, std::size_t d, Rng& rng) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= d; ++i) names.push_back("X" + std::to_string(i));
  MultiPoly q = MultiPoly::constant(Scalar::of_int(f, rng.range(-2, 2)));
  auto indices = enumerate_multi_indices(d, 4, /*even_only=*/true);
  for (const auto& a : indices) {
    if (a.total() == 0) continue;
    long c = rng.range(-2, 2);
    if (c == 0) continue;
    q += MultiPoly::monomial(Scalar::of_int(f, c), names, a.a);
  }
  if (q.is_zero()) q = MultiPoly::constant(Scalar::one(f));
  return q;
}

using SampleFn = std::function<CheckResult(std::uint64_t sample_seed, std::size_t index)>;

std::vector<CheckResult> run_samples(const CampaignConfig& cfg, const std::string& family,
                                     const SampleFn& fn) {
  std::vector<CheckResult> out(cfg.samples);
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    try {
      Rng sub = Rng::substream(cfg.seed, i);
      std::uint64_t sample_seed = sub.next();
      CheckResult r = fn(sample_seed, i);
      r.check_id = family + "/" + std::to_string(i);
      r.n = cfg.n;
      r.d = cfg.d;
      r.field = cfg.field.to_string();
      r.kind = cfg.kind;
      r.seed = sample_seed;
      out[i] = std::move(r);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

CheckResult fail_with(const std::string& witness) {
  CheckResult r;
  r.pass = false;
  r.witness = witness;
  return r;
}

// --- the families -----------------------------------------------------

CheckResult check_pfaffian_square(const CampaignConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  Matrix<Scalar> m = random_antisymmetric(cfg.field, 2 * cfg.n, rng);
  Scalar pf_fast = pf_eliminate(m);
  Scalar pf_ref = pf_matching_serial(m);
  Scalar pf_par = pf_matching(m);
  CheckResult r;
  r.property = "Pf(m)^2 == det(m), cross-kernel agreement";
  if (!(pf_fast == pf_ref && pf_fast == pf_par))
    return fail_with("pfaffian kernels disagree: eliminate=" + pf_fast.to_string() +
                     " matching=" + pf_ref.to_string());
  Scalar d_elim = det_eliminate(m);
  Scalar d_bk = det(m);
  r.lhs = (pf_fast * pf_fast).to_string();
  r.rhs = d_elim.to_string();
  r.pass = pf_fast * pf_fast == d_elim && d_elim == d_bk;
  return r;
}

CheckResult check_norm_square(const CampaignConfig& cfg, std::uint64_t seed) {
  SymplecticSpace sp(cfg.n, cfg.field);
  Rng rng(seed);
  Matrix<Scalar> x = sample_gplus(sp, rng);
  Scalar nrm = pfaffian_norm(sp, x);  // verify mode: both kernels run
  CheckResult r;
  r.property = "N+(x)^2 == det(x) on g+";
  r.lhs = (nrm * nrm).to_string();
  r.rhs = det_eliminate(x).to_string();
  r.pass = nrm * nrm == det_eliminate(x);
  return r;
}

CheckResult check_multiplicativity(const CampaignConfig& cfg, std::uint64_t seed) {
  SymplecticSpace sp(cfg.n, cfg.field);
  auto [x, y] = sample_gplus_pair(sp, seed, parse_sampler_kind(cfg.kind));
  if (!in_gplus(sp, x) || !in_gplus(sp, y)) return fail_with("sampled pair not in g+");
  if (!commutes(x, y)) return fail_with("sampled pair does not commute");
  CheckResult r;
  r.property = "N+(xy) == N+(x) N+(y) for commuting x,y in g+";
  Scalar lhs = pfaffian_norm(sp, x * y);
  Scalar rhs = pfaffian_norm(sp, x) * pfaffian_norm(sp, y);
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.pass = lhs == rhs;
  return r;
}

CheckResult check_poly_multiplicativity(const CampaignConfig& cfg, std::uint64_t seed) {
  SymplecticSpace sp(cfg.n, cfg.field);
  auto [x, y] = sample_gplus_pair(sp, seed, parse_sampler_kind(cfg.kind));
  const FieldSpec& f = cfg.field;
  MultiPoly alpha = MultiPoly::variable(f, "alpha");
  MultiPoly beta = MultiPoly::variable(f, "beta");
  auto one_plus = [&](const Matrix<Scalar>& m, const MultiPoly& var) {
    Matrix<MultiPoly> lifted = lift(m);
    Matrix<MultiPoly> id = Matrix<MultiPoly>::identity(m.dim(), MultiPoly(f));
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) lifted(i, j) *= var;
    return id + lifted;
  };
  Matrix<MultiPoly> ax = one_plus(x, alpha);
  Matrix<MultiPoly> by = one_plus(y, beta);
  MultiPoly px = pfaffian_norm(sp, ax);
  MultiPoly py = pfaffian_norm(sp, by);
  MultiPoly pxy = pfaffian_norm(sp, ax * by);
  CheckResult r;
  r.property = "N+((1+ax)(1+by)) == N+(1+ax) N+(1+by) in k[a,b], with degree "
               "bounds and top coefficients";
  r.lhs = pxy.to_string();
  r.rhs = (px * py).to_string();
  const unsigned n = static_cast<unsigned>(cfg.n);
  bool identity_ok = pxy == px * py;
  bool degree_ok = px.degree_in("alpha") <= n && py.degree_in("beta") <= n &&
                   pxy.degree_in("alpha") <= n && pxy.degree_in("beta") <= n;
  bool top_ok = px.coeff({{"alpha", n}}) == pfaffian_norm(sp, x) &&
                py.coeff({{"beta", n}}) == pfaffian_norm(sp, y) &&
                pxy.coeff({{"alpha", n}, {"beta", n}}) == pfaffian_norm(sp, x * y);
  bool const_ok = px.constant_term().is_one() && py.constant_term().is_one();
  r.pass = identity_ok && degree_ok && top_ok && const_ok;
  if (!r.pass)
    r.witness = std::string(identity_ok ? "" : "identity ") +
                (degree_ok ? "" : "degree-bound ") + (top_ok ? "" : "top-coefficient ") +
                (const_ok ? "" : "free-coefficient ") + "failure";
  return r;
}

CheckResult check_parity_vanishing(const CampaignConfig& cfg, std::uint64_t seed) {
  SymplecticSpace sp(cfg.n, cfg.field);
  CommutingTuple t = sample_commuting(sp, cfg.d, seed, parse_sampler_kind(cfg.kind));
  CheckResult r;
  r.property = "phi_a == 0 for odd |a|";
  unsigned ceiling = std::min(cfg.max_total_degree, 5u);
  r.pass = true;
  std::size_t checked = 0;
  for (const auto& a : enumerate_multi_indices(cfg.d, ceiling, /*even_only=*/false)) {
    if (a.even()) continue;
    Scalar v = phi(a, t);
    ++checked;
    if (!v.is_zero()) {
      r.pass = false;
      r.lhs = v.to_string();
      r.rhs = "0";
      r.witness = "a with nonzero trace found";
      break;
    }
  }
  if (r.pass) {
    r.lhs = r.rhs = "0";
    r.witness = std::to_string(checked) + " odd multi-indices";
  }
  return r;
}

CheckResult check_chevalley(const CampaignConfig& cfg, std::uint64_t seed) {
  SymplecticSpace sp(cfg.n, cfg.field);
  Rng rng(seed);
  CartanPoint pt = random_cartan_point(sp, cfg.d, rng);
  CheckResult r;
  r.property = "c(phi_a) == psi_a on Cartan points, even |a|";
  r.pass = true;
  std::size_t checked = 0;
  for (const auto& a : enumerate_multi_indices(cfg.d, cfg.max_total_degree, true)) {
    Scalar lhs = chevalley_restrict(sp, a, pt);
    Scalar rhs = psi(a, pt);
    ++checked;
    if (!(lhs == rhs)) {
      r.pass = false;
      r.lhs = lhs.to_string();
      r.rhs = rhs.to_string();
      r.witness = "mismatch at a multi-index";
      return r;
    }
  }
  r.witness = std::to_string(checked) + " even multi-indices";
  return r;
}

CheckResult check_roundtrip(const CampaignConfig& cfg, std::uint64_t seed) {
  SymplecticSpace sp(cfg.n, cfg.field);
  CommutingTuple t = sample_commuting(sp, cfg.d, seed, parse_sampler_kind(cfg.kind));
  CheckResult r;
  r.property = "trace == -[t^{2n-1}]charpoly == -2[t^{n-1}]Pf-charpoly on x^a";
  r.pass = true;
  std::size_t checked = 0;
  for (const auto& a : enumerate_multi_indices(cfg.d, cfg.max_total_degree, true)) {
    RoundTripReport rep = round_trip_check(a, t);
    ++checked;
    if (!rep.pass) {
      r.pass = false;
      r.lhs = rep.trace_value.to_string();
      r.rhs = rep.charpoly_route.to_string() + " / " + rep.pf_route.to_string();
      r.witness = "route disagreement";
      return r;
    }
  }
  r.witness = std::to_string(checked) + " even multi-indices";
  return r;
}

CheckResult check_pf_charpoly_square(const CampaignConfig& cfg, std::uint64_t seed) {
  SymplecticSpace sp(cfg.n, cfg.field);
  Rng rng(seed);
  Matrix<Scalar> m = sample_gplus(sp, rng);
  MultiPoly q = pf_char_poly(sp, m);
  MultiPoly cp = char_poly(m);
  CheckResult r;
  r.property = "pf_char_poly(m)^2 == char_poly(m), matching vs interpolation";
  r.lhs = (q * q).to_string();
  r.rhs = cp.to_string();
  bool square_ok = q * q == cp;
  bool interp_ok = q == pf_char_poly_interpolated(sp, m);
  bool trace_ok =
      q.univariate_coeff("t", static_cast<unsigned>(sp.n() - 1)) *
          Scalar::of_int(sp.field(), -2) == trace(m);
  r.pass = square_ok && interp_ok && trace_ok;
  if (!r.pass)
    r.witness = std::string(square_ok ? "" : "square ") +
                (interp_ok ? "" : "interpolation ") + (trace_ok ? "" : "trace-coefficient ") +
                "failure";
  return r;
}

CheckResult check_polarization(const CampaignConfig& cfg, std::uint64_t seed) {
  SymplecticSpace sp(cfg.n, cfg.field);
  CommutingTuple t = sample_commuting(sp, cfg.d, seed, parse_sampler_kind(cfg.kind));
  CheckResult r;
  r.property = "spectral_eval(beta-image of psi_a) == -2[t^{n-1}]Pf-charpoly == phi_a";
  r.pass = true;
  std::size_t checked = 0;
  for (const auto& a : enumerate_multi_indices(cfg.d, cfg.max_total_degree, true)) {
    InvariantElement inv = InvariantElement::psi_generator(sp.n(), a, cfg.field);
    Scalar via_polarization = spectral_eval(inv, t);
    Matrix<Scalar> m = monomial_matrix(t.xs, a);
    MultiPoly q = pf_char_poly(sp, m);
    Scalar via_coeff = q.univariate_coeff("t", static_cast<unsigned>(sp.n() - 1)) *
                       Scalar::of_int(cfg.field, -2);
    Scalar via_trace = phi(a, t);
    ++checked;
    if (!(via_polarization == via_coeff && via_polarization == via_trace)) {
      r.pass = false;
      r.lhs = via_polarization.to_string();
      r.rhs = via_coeff.to_string() + " / " + via_trace.to_string();
      r.witness = "route disagreement";
      return r;
    }
  }
  r.witness = std::to_string(checked) + " even multi-indices";
  return r;
}

CheckResult check_gl_crosscheck(const CampaignConfig& cfg, std::uint64_t seed) {
  Rng rng(seed);
  const FieldSpec& f = cfg.field;
  CheckResult r;
  r.property = "det(q1 q2 (x)) == det(q1(x)) det(q2(x)); det == spectral_eval_pure^2";
  // GL side: a commuting pair (x, p(x)) of general square matrices
  std::size_t dim = static_cast<std::size_t>(rng.range(2, 4));
  Matrix<Scalar> x = Matrix<Scalar>::zero(dim, Scalar::zero(f));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) x(i, j) = Scalar::of_int(f, rng.range(-3, 3));
  Matrix<Scalar> y =
      x * x + x.scale(Scalar::of_int(f, rng.range(-2, 2))) +
      Matrix<Scalar>::identity(dim, Scalar::zero(f)).scale(Scalar::of_int(f, rng.range(-2, 2)));
  std::vector<Matrix<Scalar>> xs{x, y};
  std::vector<std::string> names{"X1", "X2"};
  auto random_q = [&]() {
    MultiPoly q = MultiPoly::constant(Scalar::of_int(f, rng.range(-2, 2)));
    for (const auto& a : enumerate_multi_indices(2, 2, false)) {
      long c = rng.range(-2, 2);
      if (c != 0 && a.total() > 0)
        q += MultiPoly::monomial(Scalar::of_int(f, c), names, a.a);
    }
    return q;
  };
  MultiPoly q1 = random_q(), q2 = random_q();
  Scalar lhs = deligne_det_eval(q1 * q2, xs);
  Scalar rhs = deligne_det_eval(q1, xs) * deligne_det_eval(q2, xs);
  bool mult_ok = lhs == rhs;
  // symplectic side: det through p+ equals the squared Pfaffian norm
  SymplecticSpace sp(cfg.n, cfg.field);
  CommutingTuple t = sample_commuting(sp, cfg.d, rng.next(), parse_sampler_kind(cfg.kind));
  MultiPoly q = random_tau_even_poly(f, cfg.d, rng);
  Scalar nrm = spectral_eval_pure(q, t);
  Scalar dq = deligne_det_eval(q, t.xs);
  bool square_ok = nrm * nrm == dq;
  r.lhs = lhs.to_string() + " ; " + (nrm * nrm).to_string();
  r.rhs = rhs.to_string() + " ; " + dq.to_string();
  r.pass = mult_ok && square_ok;
  if (!r.pass)
    r.witness = std::string(mult_ok ? "" : "multiplicativity ") +
                (square_ok ? "" : "norm-square ") + "failure";
  return r;
}

}  // namespace

std::vector<CheckResult> run_check_family(const std::string& family,
                                          const CampaignConfig& cfg) {
  cfg.validate();
  using Fn = CheckResult (*)(const CampaignConfig&, std::uint64_t);
  Fn fn = nullptr;
  if (family == "pfaffian_square") fn = check_pfaffian_square;
  else if (family == "norm_square") fn = check_norm_square;
  else if (family == "multiplicativity") fn = check_multiplicativity;
  else if (family == "poly_multiplicativity") fn = check_poly_multiplicativity;
  else if (family == "parity_vanishing") fn = check_parity_vanishing;
  else if (family == "chevalley") fn = check_chevalley;
  else if (family == "roundtrip") fn = check_roundtrip;
  else if (family == "pf_charpoly_square") fn = check_pf_charpoly_square;
  else if (family == "polarization") fn = check_polarization;
  else if (family == "gl_crosscheck") fn = check_gl_crosscheck;
  else throw std::invalid_argument("unknown check family: " + family);
  return run_samples(cfg, family,
                     [&](std::uint64_t s, std::size_t) { return fn(cfg, s); });
}

std::vector<CheckResult> run_checks_on_tuple(const std::vector<std::string>& families,
                                             const CommutingTuple& tuple,
                                             unsigned max_total_degree) {
  std::vector<CheckResult> out;
  const SymplecticSpace& sp = *tuple.space;
  for (const auto& family : families) {
    CheckResult r;
    r.check_id = family + "/input";
    r.n = sp.n();
    r.d = tuple.d();
    r.field = sp.field().to_string();
    r.kind = "input";
    r.pass = true;
    if (family == "parity_vanishing") {
      r.property = "phi_a == 0 for odd |a|";
      for (const auto& a : enumerate_multi_indices(tuple.d(), std::min(max_total_degree, 5u), false)) {
        if (a.even()) continue;
        if (!phi(a, tuple).is_zero()) { r.pass = false; break; }
      }
    } else if (family == "roundtrip") {
      r.property = "trace == -[t^{2n-1}]charpoly == -2[t^{n-1}]Pf-charpoly on x^a";
      for (const auto& a : enumerate_multi_indices(tuple.d(), max_total_degree, true))
        if (!round_trip_check(a, tuple).pass) { r.pass = false; break; }
    } else {
      throw std::invalid_argument("check family not applicable to --input: " + family);
    }
    out.push_back(std::move(r));
  }
  return out;
}

json result_to_json(const CheckResult& r) {
  return json{{"check_id", r.check_id}, {"property", r.property},
              {"n", r.n},               {"d", r.d},
              {"field", r.field},       {"seed", std::to_string(r.seed)},
              {"kind", r.kind},         {"pass", r.pass},
              {"lhs", r.lhs},           {"rhs", r.rhs},
              {"witness", r.witness}};
}

json report_to_json(const std::vector<CheckResult>& results) {
  json arr = json::array();
  std::size_t failures = 0;
  for (const auto& r : results) {
    arr.push_back(result_to_json(r));
    if (!r.pass) ++failures;
  }
  return json{{"rng", Rng::kAlgorithm},
              {"total", results.size()},
              {"failures", failures},
              {"results", arr}};
}

}  // namespace symspec
