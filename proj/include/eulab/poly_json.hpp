#pragma once

// Canonical JSON form of a Poly: an array of
//   {"exponents": {"x": 2, "y": 1}, "coeff": "3/2"}
// sorted ascending by grlex_less. Coefficients are decimal strings "p/q" in
// lowest terms, or plain integers "p".

#include <string>
#include <string_view>

#include <json.hpp>

#include "eulab/exactalg.hpp"

namespace eulab {

nlohmann::json poly_to_json(const Poly& p);

/// Throws ParseError on malformed input. Duplicate monomials are summed and
/// zero coefficients dropped, so the result is always normalized.
Poly poly_from_json(const nlohmann::json& j);

Rational parse_rational(std::string_view text);

std::string dump_poly(const Poly& p);
Poly parse_poly(std::string_view text);

}  // namespace eulab
