#pragma once

#include <random>
#include <string>
#include <vector>

#include "eulab/exactalg.hpp"

namespace eulab::testing {

inline Poly X() { return Poly::var("x"); }
inline Poly Y() { return Poly::var("y"); }
inline Poly Z() { return Poly::var("z"); }
inline Poly S() { return Poly::var("s"); }

// Univariate polynomial in x from ascending integer coefficients.
inline Poly ux(const std::vector<long>& coeffs, const char* var = "x") {
  Poly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    out.add_term(Monomial(VarId(var), static_cast<std::uint32_t>(i)), Rational(coeffs[i]));
  return out;
}

// Small random polynomial over the given variables with rational coefficients.
inline Poly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_terms = 5, int max_exp = 3) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> expo(0, max_exp);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  Poly out;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    Monomial m;
    for (const auto& v : vars) m = m * Monomial(VarId(v), static_cast<std::uint32_t>(expo(rng)));
    out.add_term(m, Rational(num(rng), den(rng)));
  }
  return out;
}

}  // namespace eulab::testing
