#pragma once

// Basis expansions by deterministic peeling (gamma, Frobenius, partial gamma)
// and by leading-term reduction (elementary symmetric functions), plus the
// recurrence-driven gamma tables.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "eulab/exactalg.hpp"

namespace eulab {

enum class Basis { gamma, frobenius, partial_gamma, esym };

Basis basis_from_string(std::string_view name);
std::string to_string(Basis b);

/// Coefficients of a polynomial in one of the four bases. Index tuples:
///  gamma          (k)      basis v^k (1+v)^{n-2k}
///  frobenius      (k)      basis v^k (1-v)^{n-k}
///  partial-gamma  (i, j)   basis (s+y)^i (2xy)^j (x+y)^{n-i-2j}
///  esym           (a_1, ..., a_m)  basis e_1^{a_1} ... e_m^{a_m} over vars
struct Expansion {
  Basis basis = Basis::gamma;
  int degree = 0;
  std::vector<VarId> vars;  // the expansion variable(s)
  std::map<std::vector<int>, Rational> coeffs;

  Rational at(const std::vector<int>& index) const;
  bool nonnegative() const;
};

/// f = sum_k gamma_k v^k (1+v)^{n-2k}. Throws NotPalindromicError.
Expansion gamma_expand(const Poly& f, VarId v, int n);

/// f = sum_{k=1}^{n} c_k v^k (1-v)^{n-k}. Throws NotExpandableError.
Expansion frobenius_expand(const Poly& f, VarId v, int n);

/// f(x,y,s) = sum_{i,j} gamma_{i,j} (s+y)^i (2xy)^j (x+y)^{n-i-2j}, solved
/// through s -> t - y. Throws NotExpandableError when a t-coefficient is not
/// symmetric in (x, y) or leaves a residual.
Expansion partial_gamma_expand(const Poly& f, int n);

/// f as a polynomial in e_1..e_m over `vars` (m = vars.size()). Throws
/// NotSymmetricError.
Expansion esym_expand(const Poly& f, std::span<const VarId> vars);

/// Substitutes the basis polynomials back; must reproduce the input.
Poly reexpand(const Expansion& e);

/// esym coefficients as a polynomial in the letters e_1..e_m.
Poly esym_to_e_poly(const Expansion& e);

// ---------------------------------------------------------------------------
// gamma tables

inline constexpr int kMaxGammaTableN = 12;

/// gamma_{n,i,j} from
///   g(n+1,i,j) = g(n,i-1,j) + (1+i) g(n,i+1,j-1) + j g(n,i,j) + (n-i-2j+2) g(n,i,j-1)
/// with g(0,0,0) = 1. Keys (n, i, j), nonzero entries only, n <= n_max.
std::map<std::vector<int>, BigInt> gamma_nij_table(int n_max);

/// gamma(n; i_1, ..., i_n) read off G10(k) iterates with k = n_max - 1,
/// for 1 <= n <= n_max. Keys (n, i_1, ..., i_n).
std::map<std::vector<int>, BigInt> gamma_histogram_table(int n_max);

/// gamma_n(x, y) from
///   g_{n+1} = (x + n y) g_n + y (1 - x) dg_n/dx + y (1 - 2y) dg_n/dy,  g_0 = 1.
std::vector<Poly> gamma_xy_table(int n_max);

/// Throws InvalidParamError describing the first violated constraint of a
/// gamma(n; ...) row: sum = n, 1 <= i_1 <= n-1, i_n in {0,1}, i_n = 1 forces
/// i_1 = n-1.
void check_histogram_row(const std::vector<int>& key);

}  // namespace eulab
