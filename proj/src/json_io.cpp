#include "eulerian/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace eulerian {

nlohmann::ordered_json poly_to_json(const IntPoly& f) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(c.get_str());
  return nlohmann::ordered_json{{"var", "z"}, {"coeffs", std::move(coeffs)}};
}

IntPoly poly_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw std::invalid_argument("poly_from_json: expected {var, coeffs}");
  std::vector<mpz_class> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string())
      throw std::invalid_argument("poly_from_json: coefficients must be strings");
    coeffs.emplace_back(c.get<std::string>());
  }
  return IntPoly{std::move(coeffs)};
}

nlohmann::ordered_json verdict_to_json(const InterlacingVerdict& v) {
  return nlohmann::ordered_json{{"holds", v.holds}, {"reason", std::string(to_string(v.reason))}};
}

std::string coeffs_joined(const IntPoly& f, char sep) {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : f.coeffs()) {
    if (!first) os << sep;
    os << c.get_str();
    first = false;
  }
  return os.str();
}

IntPoly poly_from_coeff_list(const std::string& text, char sep) {
  std::vector<mpz_class> coeffs;
  std::istringstream is(text);
  std::string token;
  while (std::getline(is, token, sep)) {
    if (token.empty())
      throw std::invalid_argument("poly_from_coeff_list: empty coefficient");
    try {
      coeffs.emplace_back(token);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("poly_from_coeff_list: bad integer '" + token + "'");
    }
  }
  return IntPoly{std::move(coeffs)};
}

}  // namespace eulerian
