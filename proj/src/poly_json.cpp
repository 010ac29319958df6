#include "eulab/poly_json.hpp"

#include <cctype>

#include "eulab/errors.hpp"

namespace eulab {

nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : p.sorted_terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (const auto& [v, e] : m.entries()) exps[v.name()] = e;
    out.push_back({{"exponents", std::move(exps)}, {"coeff", to_string(c)}});
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  BigInt d{std::string(den)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q{BigInt{std::string(num)}, d};
  q.canonicalize();
  return text.front() == '-' ? Rational(-q) : q;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  Poly out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("exponents") || !term.contains("coeff"))
      throw ParseError("each term needs \"exponents\" and \"coeff\"");
    const auto& exps = term.at("exponents");
    const auto& coeff = term.at("coeff");
    if (!exps.is_object()) throw ParseError("\"exponents\" must be an object");
    Monomial m;
    for (const auto& [name, e] : exps.items()) {
      if (name.empty()) throw ParseError("empty variable name");
      if (!e.is_number_integer() || e.get<long long>() < 0)
        throw ParseError("exponent of " + name + " must be a nonnegative integer");
      VarId v(name);
      m = m.with_exponent(v, m.exponent(v) + e.get<std::uint32_t>());
    }
    Rational c;
    if (coeff.is_string())
      c = parse_rational(coeff.get<std::string>());
    else if (coeff.is_number_integer())
      c = Rational(std::to_string(coeff.get<long long>()));
    else
      throw ParseError("\"coeff\" must be a string \"p/q\" or an integer");
    out.add_term(m, c);
  }
  return out;
}

std::string dump_poly(const Poly& p) { return poly_to_json(p).dump(); }

Poly parse_poly(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return poly_from_json(j);
}

}  // namespace eulab
