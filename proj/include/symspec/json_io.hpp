#pragma once

#include <json.hpp>

#include "symspec/symplectic.hpp"

namespace symspec {

using json = nlohmann::json;

// All numeric values are encoded as strings: exact rationals do not fit
// IEEE doubles.

json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const json& j);

json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const FieldSpec& f, const json& j);

/// Matrix JSON: {dim, ring, rows: [[entry-string, ...], ...]}.
json matrix_to_json(const Matrix<Scalar>& m);
Matrix<Scalar> matrix_from_json(const json& j);

std::string parity_name(Parity p);
Parity parity_from_name(const std::string& s);

/// Tuple JSON: {n, d, field, kind, seed, matrices: [...], parity: [...]}.
json tuple_to_json(const CommutingTuple& t, const std::string& kind, std::uint64_t seed);
CommutingTuple tuple_from_json(const SymplecticSpace& sp, const json& j);

}  // namespace symspec
