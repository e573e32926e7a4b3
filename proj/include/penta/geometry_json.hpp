#pragma once

#include "penta/geometry.hpp"

#include "json.hpp"

namespace penta::geometry {

// [{"exponents": [e_0, ..., e_n], "coefficient": "p/q"}, ...]
template <typename Field>
nlohmann::json polynomial_to_json(const HomogeneousPolynomial<Field>& f);

// Coefficients may be strings or JSON integers.
template <typename Field>
HomogeneousPolynomial<Field> polynomial_from_json(const Field& field, const nlohmann::json& j);

// ["x_0", ..., "x_n"]
template <typename Field>
nlohmann::json point_to_json(const Vector<Field>& x, const Field& field);

// A JSON list, or plain text with coordinates separated by ':' or ','.
template <typename Field>
Vector<Field> point_from_text(const Field& field, const std::string& text);

}  // namespace penta::geometry
