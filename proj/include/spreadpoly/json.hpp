#pragma once

// JSON form of a polynomial:
//   {"family": str, "n": int, "terms": [{"x": int, "s": int, "c": "decimal"}, ...]}
// Terms are in canonical order; coefficients are strings since they outgrow
// 64-bit integers quickly.

#include <spreadpoly/poly.hpp>

#include <json.hpp>

#include <string>
#include <string_view>

namespace spreadpoly {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(std::string_view family, unsigned n, const BiPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"x", m.x}, {"s", m.s}, {"c", to_string(c)}});
  return {{"family", std::string(family)}, {"n", n}, {"terms", std::move(terms)}};
}

inline ordered_json to_json(std::string_view family, unsigned n, const UniPoly& p) {
  return to_json(family, n, lift(p));
}

struct tagged_poly {
  std::string family;
  unsigned n = 0;
  BiPoly poly;
};

/// Inverse of to_json. Throws parse_error on schema violations.
inline tagged_poly poly_from_json(const nlohmann::json& j) {
  try {
    tagged_poly out;
    out.family = j.at("family").get<std::string>();
    out.n = j.at("n").get<unsigned>();
    for (const auto& t : j.at("terms")) {
      const BigRat c = parse_rational(t.at("c").get<std::string>());
      if (c == 0) throw parse_error("zero coefficient in polynomial JSON");
      out.poly.add_term({t.at("x").get<unsigned>(), t.at("s").get<unsigned>()}, c);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace spreadpoly
