#include "symspec/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symspec {

bool GrlexLess::operator()(const std::vector<unsigned>& a,
                           const std::vector<unsigned>& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly MultiPoly::constant(const Scalar& c) {
  MultiPoly p(c.field());
  if (!c.is_zero()) p.terms_.emplace(std::vector<unsigned>{}, c);
  return p;
}

MultiPoly MultiPoly::variable(const FieldSpec& f, const std::string& name) {
  MultiPoly p(f);
  p.vars_ = {name};
  p.terms_.emplace(std::vector<unsigned>{1}, Scalar::one(f));
  return p;
}

MultiPoly MultiPoly::monomial(const Scalar& c, const std::vector<std::string>& vars,
                              const std::vector<unsigned>& exps) {
  if (vars.size() != exps.size()) throw std::invalid_argument("monomial: size mismatch");
  MultiPoly p(c.field());
  if (c.is_zero()) return p;
  std::vector<std::string> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("monomial: repeated variable");
  p.vars_ = sorted;
  std::vector<unsigned> e(sorted.size(), 0);
  for (size_t i = 0; i < vars.size(); ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), vars[i]);
    e[static_cast<size_t>(it - sorted.begin())] = exps[i];
  }
  p.terms_.emplace(std::move(e), c);
  p.normalize();
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar MultiPoly::constant_term() const {
  std::vector<unsigned> zero(vars_.size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

unsigned MultiPoly::degree_in(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return 0;
  size_t idx = static_cast<size_t>(it - vars_.begin());
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

std::vector<unsigned> MultiPoly::remap(const std::vector<unsigned>& e,
                                       const std::vector<std::string>& from,
                                       const std::vector<std::string>& to) {
  std::vector<unsigned> r(to.size(), 0);
  for (size_t i = 0; i < from.size(); ++i) {
    if (e[i] == 0) continue;
    auto it = std::lower_bound(to.begin(), to.end(), from[i]);
    r[static_cast<size_t>(it - to.begin())] = e[i];
  }
  return r;
}

void MultiPoly::normalize() {
  // drop zero coefficients
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  // prune variables that no longer occur
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) used[i] = true;
  if (std::find(used.begin(), used.end(), false) == used.end()) return;
  std::vector<std::string> kept;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) kept.push_back(vars_[i]);
  Terms nt;
  for (const auto& [e, c] : terms_) {
    std::vector<unsigned> ne;
    for (size_t i = 0; i < e.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    nt.emplace(std::move(ne), c);
  }
  vars_ = std::move(kept);
  terms_ = std::move(nt);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("polynomial field mismatch");
  std::vector<std::string> merged;
  std::set_union(vars_.begin(), vars_.end(), o.vars_.begin(), o.vars_.end(),
                 std::back_inserter(merged));
  MultiPoly r(field_);
  r.vars_ = merged;
  for (const auto& [e, c] : terms_) r.terms_[remap(e, vars_, merged)] = c;
  for (const auto& [e, c] : o.terms_) {
    auto key = remap(e, o.vars_, merged);
    auto it = r.terms_.find(key);
    if (it == r.terms_.end())
      r.terms_.emplace(std::move(key), c);
    else
      it->second += c;
  }
  r.normalize();
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("polynomial field mismatch");
  std::vector<std::string> merged;
  std::set_union(vars_.begin(), vars_.end(), o.vars_.begin(), o.vars_.end(),
                 std::back_inserter(merged));
  MultiPoly r(field_);
  r.vars_ = merged;
  for (const auto& [ea, ca] : terms_) {
    auto ra = remap(ea, vars_, merged);
    for (const auto& [eb, cb] : o.terms_) {
      auto rb = remap(eb, o.vars_, merged);
      std::vector<unsigned> e(merged.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ra[i] + rb[i];
      Scalar prod = ca * cb;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end())
        r.terms_.emplace(std::move(e), prod);
      else
        it->second += prod;
    }
  }
  r.normalize();
  return r;
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
  MultiPoly r(*this);
  for (auto& [e, v] : r.terms_) v *= c;
  r.normalize();
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc = MultiPoly::constant(Scalar::one(field_));
  MultiPoly base(*this);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return field_ == o.field_ && vars_ == o.vars_ && terms_ == o.terms_;
}

Scalar MultiPoly::eval(const std::map<std::string, Scalar>& assignment) const {
  std::vector<Scalar> vals;
  vals.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = assignment.find(v);
    if (it == assignment.end())
      throw std::invalid_argument("eval: unbound variable " + v);
    if (it->second.field() != field_)
      throw std::invalid_argument("eval: assignment field mismatch for " + v);
    vals.push_back(it->second);
  }
  Scalar acc = Scalar::zero(field_);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= vals[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

Scalar MultiPoly::coeff(const std::map<std::string, unsigned>& exps) const {
  // every variable with nonzero requested exponent must occur, else coeff is 0
  std::vector<unsigned> key(vars_.size(), 0);
  for (const auto& [name, e] : exps) {
    if (e == 0) continue;
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return Scalar::zero(field_);
    key[static_cast<size_t>(it - vars_.begin())] = e;
  }
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

Scalar MultiPoly::univariate_coeff(const std::string& var, unsigned k) const {
  if (vars_.size() > 1 || (vars_.size() == 1 && vars_[0] != var))
    throw std::invalid_argument("univariate_coeff: polynomial not univariate in " + var);
  return coeff({{var, k}});
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print leading terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    for (size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      os << "*" << vars_[i];
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

MultiPoly PolyRing::make_variable(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  if (!bound_.insert(name).second)
    throw std::invalid_argument("variable already bound in ring: " + name);
  return MultiPoly::variable(field_, name);
}

}  // namespace symspec
