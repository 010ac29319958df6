#include "eulab/grammar.hpp"

#include <charconv>

#include "eulab/errors.hpp"

namespace eulab {

Grammar::Grammar(std::initializer_list<std::pair<std::string_view, Poly>> rules) {
  for (const auto& [name, image] : rules) rule(VarId(name), image);
}

Grammar& Grammar::rule(VarId v, Poly image) {
  rules_[v] = std::move(image);
  return *this;
}

const Poly* Grammar::image(VarId v) const {
  auto it = rules_.find(v);
  return it == rules_.end() ? nullptr : &it->second;
}

Poly Grammar::derive(const Poly& p) const {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.entries()) {
      const Poly* f = image(v);
      if (f == nullptr || f->is_zero()) continue;
      out.add_product(c * e, m.with_exponent(v, e - 1), *f);
    }
  }
  return out;
}

Poly Grammar::iterate(const Poly& seed, int n) const {
  if (n < 0) throw InvalidParamError("iteration count must be nonnegative");
  Poly p = seed;
  for (int i = 0; i < n; ++i) p = derive(p);
  return p;
}

bool transform_check(const Grammar& old, const Substitution& defs, const Grammar& neu) {
  for (const auto& [u, def] : defs) {
    const Poly* f = neu.image(u);
    Poly lhs = f == nullptr ? Poly{} : subst(*f, defs);
    if (lhs != old.derive(def)) return false;
  }
  return true;
}

std::vector<VarId> x_alphabet(int n) {
  std::vector<VarId> out;
  for (int i = 1; i <= n; ++i) out.push_back(indexed_var("x", i));
  return out;
}

VarId e_var(int i) { return indexed_var("e", i); }

Substitution symmetric_expansion(int k) {
  auto xs = x_alphabet(k + 1);
  Substitution out;
  for (int i = 1; i <= k + 1; ++i) out.emplace(e_var(i), elementary_symmetric(i, xs));
  return out;
}

namespace grammars {

namespace {

Poly v(std::string_view name) { return Poly::var(name); }

}  // namespace

Grammar g1() { return {{"x", v("x") * v("y")}, {"y", v("x") * v("y")}}; }

Grammar g2() { return {{"u", v("u") * v("v")}, {"v", Rational(2) * v("u")}}; }

Grammar g3() { return {{"x", v("x") * (v("u") + v("x"))}, {"u", Poly{}}}; }

Grammar g4() { return {{"u", v("u") * v("v")}, {"v", v("u")}}; }

Grammar g5() {
  const Poly xy = v("x") * v("y");
  return {{"L", v("L") * v("y")}, {"M", v("M") * v("s")}, {"s", xy}, {"x", xy}, {"y", xy}};
}

Grammar g6() {
  return {{"I", v("I") * v("t")}, {"t", v("u")}, {"u", v("u") * v("v")}, {"v", v("u")}};
}

Grammar g7() {
  const Poly xyz = v("x") * v("y") * v("z");
  return {{"x", xyz}, {"y", xyz}, {"z", xyz}};
}

Grammar g8() {
  return {{"u", Rational(3) * v("w")},
          {"v", Rational(2) * v("u") * v("w")},
          {"w", v("v") * v("w")}};
}

Grammar g9(int k) {
  if (k < 1) throw InvalidParamError("G9 needs k >= 1");
  auto xs = x_alphabet(k + 1);
  Poly product(1L);
  for (VarId x : xs) product *= Poly(x);
  Grammar g;
  for (VarId x : xs) g.rule(x, product);
  return g;
}

Grammar g10(int k) {
  if (k < 1) throw InvalidParamError("G10 needs k >= 1");
  const Poly top(e_var(k + 1));
  Grammar g;
  g.rule(indexed_var("x", 1), top);
  for (int i = 1; i <= k + 1; ++i) {
    Poly lower = i == 1 ? Poly(1L) : Poly(e_var(i - 1));
    g.rule(e_var(i), Rational(k - i + 2) * (lower * top));
  }
  return g;
}

Grammar by_name(std::string_view name) {
  auto parametric = [&](std::string_view prefix) -> std::optional<int> {
    if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
    auto rest = name.substr(prefix.size());
    int k = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec != std::errc{} || ptr != rest.data() + rest.size() || rest.empty())
      throw InvalidParamError("bad grammar parameter in '" + std::string(name) + "'");
    return k;
  };
  if (auto k = parametric("G10:")) return g10(*k);
  if (auto k = parametric("G9:")) return g9(*k);
  if (name == "G1") return g1();
  if (name == "G2") return g2();
  if (name == "G3") return g3();
  if (name == "G4") return g4();
  if (name == "G5") return g5();
  if (name == "G6") return g6();
  if (name == "G7") return g7();
  if (name == "G8") return g8();
  throw InvalidParamError("unknown grammar '" + std::string(name) + "'");
}

}  // namespace grammars

}  // namespace eulab
