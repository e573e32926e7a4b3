#include "penta/geometry_json.hpp"

#include "penta/errors.hpp"

namespace penta::geometry {

namespace {

template <typename Field>
typename Field::Element element_from_json(const Field& field, const nlohmann::json& j) {
  if (j.is_string()) return field.parse(j.get<std::string>());
  if (j.is_number_integer()) return field.parse(std::to_string(j.get<long long>()));
  throw ParseError("coefficient must be a string or an integer, got " + j.dump());
}

}  // namespace

template <typename Field>
nlohmann::json polynomial_to_json(const HomogeneousPolynomial<Field>& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) {
    out.push_back({{"exponents", e}, {"coefficient", f.field().format(c)}});
  }
  return out;
}

template <typename Field>
HomogeneousPolynomial<Field> polynomial_from_json(const Field& field, const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("a polynomial is a nonempty JSON list of terms");
  std::optional<HomogeneousPolynomial<Field>> f;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("exponents") || !term.contains("coefficient")) {
      throw ParseError("each term needs 'exponents' and 'coefficient': " + term.dump());
    }
    Exponents e;
    try {
      e = term.at("exponents").get<Exponents>();
    } catch (const nlohmann::json::exception&) {
      throw ParseError("exponents must be nonnegative integers: " + term.at("exponents").dump());
    }
    if (!f) {
      unsigned degree = 0;
      for (unsigned v : e) degree += v;
      f.emplace(field, static_cast<unsigned>(e.size()), degree);
    }
    f->add_term(e, element_from_json(field, term.at("coefficient")));
  }
  return *f;
}

template <typename Field>
nlohmann::json point_to_json(const Vector<Field>& x, const Field& field) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : x) out.push_back(field.format(v));
  return out;
}

template <typename Field>
Vector<Field> point_from_text(const Field& field, const std::string& text) {
  Vector<Field> out;
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("point is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError("a point is a JSON list of coordinates");
    for (const auto& c : j) out.push_back(element_from_json(field, c));
  } else {
    std::string item;
    for (char ch : text + ":") {
      if (ch == ':' || ch == ',') {
        if (item.empty()) throw ParseError("empty coordinate in '" + text + "'");
        out.push_back(field.parse(item));
        item.clear();
      } else if (ch != ' ' && ch != '(' && ch != ')') {
        item += ch;
      }
    }
  }
  if (out.empty()) throw ParseError("a point needs at least one coordinate");
  return out;
}

#define PENTA_GEOMETRY_JSON(F)                                                             \
  template nlohmann::json polynomial_to_json(const HomogeneousPolynomial<F>&);             \
  template HomogeneousPolynomial<F> polynomial_from_json(const F&, const nlohmann::json&); \
  template nlohmann::json point_to_json(const Vector<F>&, const F&);                       \
  template Vector<F> point_from_text(const F&, const std::string&);

PENTA_GEOMETRY_JSON(RationalField)
PENTA_GEOMETRY_JSON(PrimeField)

}  // namespace penta::geometry
