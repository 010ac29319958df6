#pragma once

// Context-free grammars in the sense of formal derivatives: each letter is
// replaced by a polynomial, and the induced derivation D_G is extended to
// all polynomials by linearity and the Leibniz rule.

#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "eulab/exactalg.hpp"

namespace eulab {

class Grammar {
 public:
  Grammar() = default;
  Grammar(std::initializer_list<std::pair<std::string_view, Poly>> rules);

  Grammar& rule(VarId v, Poly image);

  /// Letters without a rule are constants.
  const Poly* image(VarId v) const;
  const std::map<VarId, Poly>& rules() const { return rules_; }

  Poly derive(const Poly& p) const;
  /// n-fold derivative; n = 0 returns the seed.
  Poly iterate(const Poly& seed, int n) const;

 private:
  std::map<VarId, Poly> rules_;
};

/// Whether the new grammar is the change of variables of the old one under
/// `defs` (new letter -> polynomial in old letters): for every rule u -> f of
/// `neu`, subst(f, defs) == old.derive(defs[u]).
bool transform_check(const Grammar& old, const Substitution& defs, const Grammar& neu);

namespace grammars {

Grammar g1();  // x -> xy, y -> xy
Grammar g2();  // u -> uv, v -> 2u
Grammar g3();  // x -> x(u+x), u -> 0
Grammar g4();  // u -> uv, v -> u
Grammar g5();  // L -> Ly, M -> Ms, s -> xy, x -> xy, y -> xy
Grammar g6();  // I -> It, t -> u, u -> uv, v -> u
Grammar g7();  // x, y, z -> xyz
Grammar g8();  // u -> 3w, v -> 2uw, w -> vw

/// x_i -> x_1 x_2 ... x_{k+1} for 1 <= i <= k+1.
Grammar g9(int k);

/// x_1 -> e_{k+1}, e_i -> (k-i+2) e_{i-1} e_{k+1} for 1 <= i <= k+1, with the
/// letters e_1..e_{k+1} opaque and e_0 the constant 1.
Grammar g10(int k);

/// "G1".."G8", "G9:k", "G10:k".
Grammar by_name(std::string_view name);

}  // namespace grammars

/// The letters x_1..x_n and e_1..e_n.
std::vector<VarId> x_alphabet(int n);
VarId e_var(int i);

/// e_i -> elementary symmetric polynomial in x_1..x_{k+1} for 1 <= i <= k+1.
Substitution symmetric_expansion(int k);

}  // namespace eulab
