#pragma once

#include <string>

#include "json.hpp"

#include "eulerian/int_poly.hpp"
#include "eulerian/real_rooted.hpp"

namespace eulerian {

/// {"var": "z", "coeffs": [<decimal strings, low-to-high>]}. Coefficients are
/// rendered as strings so 64-bit consumers cannot truncate them.
nlohmann::ordered_json poly_to_json(const IntPoly& f);
IntPoly poly_from_json(const nlohmann::ordered_json& j);

/// {"holds": bool, "reason": string}
nlohmann::ordered_json verdict_to_json(const InterlacingVerdict& v);

/// Coefficients joined by sep, e.g. "1;7;7;1". Empty string for 0.
std::string coeffs_joined(const IntPoly& f, char sep);

/// Parses a separated list of decimal coefficients, low-to-high.
IntPoly poly_from_coeff_list(const std::string& text, char sep);

}  // namespace eulerian
