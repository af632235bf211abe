#include "symspec/json_io.hpp"

namespace symspec {

json field_to_json(const FieldSpec& f) { return json(f.to_string()); }

FieldSpec field_from_json(const json& j) { return FieldSpec::parse(j.get<std::string>()); }

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(json{{"exponents", e}, {"coeff", c.to_string()}});
  return json{{"variables", p.variables()}, {"terms", terms}};
}

MultiPoly poly_from_json(const FieldSpec& f, const json& j) {
  std::vector<std::string> vars = j.at("variables").get<std::vector<std::string>>();
  MultiPoly acc(f);
  for (const auto& t : j.at("terms")) {
    std::vector<unsigned> e = t.at("exponents").get<std::vector<unsigned>>();
    Scalar c = Scalar::parse(f, t.at("coeff").get<std::string>());
    acc += MultiPoly::monomial(c, vars, e);
  }
  return acc;
}

json matrix_to_json(const Matrix<Scalar>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(row);
  }
  return json{{"dim", m.dim()},
              {"ring", m.proto().field().to_string()},
              {"rows", rows}};
}

Matrix<Scalar> matrix_from_json(const json& j) {
  FieldSpec f = FieldSpec::parse(j.at("ring").get<std::string>());
  std::size_t dim = j.at("dim").get<std::size_t>();
  const json& rows = j.at("rows");
  if (rows.size() != dim) throw std::invalid_argument("matrix json: row count mismatch");
  Matrix<Scalar> m = Matrix<Scalar>::zero(dim, Scalar::zero(f));
  for (std::size_t i = 0; i < dim; ++i) {
    if (rows[i].size() != dim)
      throw std::invalid_argument("matrix json: column count mismatch");
    for (std::size_t k = 0; k < dim; ++k)
      m(i, k) = Scalar::parse(f, rows[i][k].get<std::string>());
  }
  return m;
}

std::string parity_name(Parity p) {
  switch (p) {
    case Parity::in_g: return "in_g";
    case Parity::in_gplus: return "in_gplus";
    case Parity::general: return "general";
  }
  return "?";
}

Parity parity_from_name(const std::string& s) {
  if (s == "in_g") return Parity::in_g;
  if (s == "in_gplus") return Parity::in_gplus;
  if (s == "general") return Parity::general;
  throw std::invalid_argument("unknown parity tag: " + s);
}

json tuple_to_json(const CommutingTuple& t, const std::string& kind, std::uint64_t seed) {
  json mats = json::array();
  json parity = json::array();
  for (std::size_t i = 0; i < t.d(); ++i) {
    mats.push_back(matrix_to_json(t.xs[i]));
    parity.push_back(parity_name(t.parity[i]));
  }
  return json{{"n", t.space->n()},        {"d", t.d()},
              {"field", t.space->field().to_string()},
              {"kind", kind},             {"seed", std::to_string(seed)},
              {"matrices", mats},         {"parity", parity}};
}

CommutingTuple tuple_from_json(const SymplecticSpace& sp, const json& j) {
  if (j.at("n").get<std::size_t>() != sp.n())
    throw std::invalid_argument("tuple json: rank mismatch with space");
  if (FieldSpec::parse(j.at("field").get<std::string>()) != sp.field())
    throw std::invalid_argument("tuple json: field mismatch with space");
  std::vector<Matrix<Scalar>> xs;
  std::vector<Parity> parity;
  for (const auto& mj : j.at("matrices")) xs.push_back(matrix_from_json(mj));
  for (const auto& pj : j.at("parity")) parity.push_back(parity_from_name(pj.get<std::string>()));
  return CommutingTuple(sp, std::move(xs), std::move(parity));
}

}  // namespace symspec
