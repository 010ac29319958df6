#include "eulab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "eulab/errors.hpp"
#include "eulab/grammar.hpp"
#include "eulab/permstats.hpp"
#include "eulab/poly_json.hpp"
#include "eulab/series.hpp"
#include "eulab/stirlingperm.hpp"
#include "eulab/trees.hpp"

namespace eulab {

namespace {

class Checker {
 public:
  explicit Checker(IdentityReport& report) : report_(report) {}

  bool equal(const std::string& where, const Poly& expected, const Poly& actual) {
    ++report_.checks;
    if (expected == actual) return true;
    record(where, expected, actual);
    return false;
  }

  bool holds(const std::string& where, bool condition) {
    ++report_.checks;
    if (condition) return true;
    record(where, Poly(1L), Poly(0L));
    return false;
  }

  bool failed() const { return report_.status == ReportStatus::fail; }

 private:
  void record(const std::string& where, const Poly& expected, const Poly& actual) {
    if (report_.counterexample) return;
    report_.status = ReportStatus::fail;
    report_.counterexample = Counterexample{where, expected, actual};
  }

  IdentityReport& report_;
};

struct Context {
  int max_n;
  std::optional<int> k;
};

using IdentityFn = std::function<void(Checker&, const Context&)>;

const Poly& X() {
  static const Poly p = Poly::var("x");
  return p;
}
const Poly& Y() {
  static const Poly p = Poly::var("y");
  return p;
}
const Poly& S() {
  static const Poly p = Poly::var("s");
  return p;
}
const Poly& Z() {
  static const Poly p = Poly::var("z");
  return p;
}

Poly monomial(VarId v, int e) { return Poly(Monomial(v, static_cast<std::uint32_t>(e)), 1); }
Poly xpow(int e) { return monomial(VarId("x"), e); }
Poly big(const BigInt& v) { return Poly(Rational(v)); }

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string at_n(int n) { return "n=" + std::to_string(n); }
std::string at_nk(int n, int k) { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); }

std::vector<int> k_values(const Context& c, int lo, int hi) {
  if (c.k) return {*c.k};
  std::vector<int> out;
  for (int k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

// C_n(x,y,z) with x = asc, y = des, z = plat, from the k = 2 Stirling oracle.
Poly second_order_trivariate(int n) {
  return subst(kth_order_poly(n, 2), {{indexed_var("x", 1), Z()}, {indexed_var("x", 2), Y()}, {indexed_var("x", 3), X()}});
}

// e_i as a letter, with e_0 = 1.
Poly e_letter(int i) { return i == 0 ? Poly(1L) : Poly(e_var(i)); }

// The printed A_n(x,y,s), n <= 5.
Poly printed_trivariate(int n) {
  const Poly& x = X();
  const Poly& y = Y();
  const Poly& s = S();
  const Poly t = s + y;
  const Poly xy = x * y;
  switch (n) {
    case 0:
    case 1: return Poly(1L);
    case 2: return t;
    case 3: return pow(t, 2) + Rational(2) * xy;
    case 4: return pow(t, 3) + Rational(6) * xy * t + Rational(2) * xy * (x + y);
    case 5:
      return pow(t, 4) + Rational(12) * xy * pow(t, 2) + Rational(8) * xy * t * (x + y) +
             Rational(2) * xy * pow(x + y, 2) + Rational(16) * pow(xy, 2);
  }
  throw OutOfRangeError("printed trivariate list stops at n = 5");
}

// The printed C_n(x), n <= 5.
Poly printed_second_order(int n) {
  static const std::vector<std::vector<long>> rows{
      {1}, {1, 2}, {1, 8, 6}, {1, 22, 58, 24}, {1, 52, 328, 444, 120}};
  Poly out;
  for (std::size_t j = 0; j < rows.at(n - 1).size(); ++j) out += Rational(rows[n - 1][j]) * xpow(static_cast<int>(j) + 1);
  return out;
}

// ---------------------------------------------------------------------------
// identities

void frobenius(Checker& c, const Context& ctx) {
  const Poly one(1L);
  const Grammar g3 = grammars::g3();
  const Poly u = Poly::var("u");
  Poly g3_iter = X();
  for (int n = 1; n <= ctx.max_n; ++n) {
    const Poly lhs = X() * perm_poly(n, PermFamily::eulerian);
    Poly rhs;
    for (int k = 1; k <= n; ++k) rhs += big(triangle_get(TriangleKind::surjection, n, k)) * xpow(k) * pow(one - X(), n - k);
    c.equal("x A_n(x) " + at_n(n), lhs, rhs);

    const Expansion e = frobenius_expand(lhs, VarId("x"), n);
    Poly coeffs, expected;
    for (int k = 1; k <= n; ++k) {
      coeffs += e.at({k}) * xpow(k);
      expected += big(factorial(k) * triangle_get(TriangleKind::stirling2, n, k)) * xpow(k);
    }
    c.equal("Frobenius coefficients k! S(n,k) " + at_n(n), expected, coeffs);
    c.equal("Frobenius round trip " + at_n(n), lhs, reexpand(e));

    g3_iter = g3.derive(g3_iter);
    Poly g3_expected;
    for (int k = 1; k <= n; ++k)
      g3_expected += big(triangle_get(TriangleKind::surjection, n, k)) * xpow(k) * pow(u, n - k);
    c.equal("D_G3^n(x) " + at_n(n), (u + X()) * g3_expected, g3_iter);
  }
}

void gamma_eulerian(Checker& c, const Context& ctx) {
  const VarId xv("x");
  const Grammar g1 = grammars::g1();
  Poly g1_iter = X();
  for (int n = 1; n <= ctx.max_n; ++n) {
    const Poly a = perm_poly(n, PermFamily::eulerian);
    const Expansion e = gamma_expand(a, xv, n - 1);
    Poly gamma;
    for (const auto& [idx, v] : e.coeffs) gamma += v * xpow(idx[0]);
    c.equal("gamma(A_n) vs no double descents " + at_n(n), perm_poly(n, PermFamily::gamma_eulerian_no_ddes), gamma);
    c.holds("gamma-positivity " + at_n(n), e.nonnegative());

    const Expansion shifted = gamma_expand(X() * a, xv, n + 1);
    Poly leaves;
    for (const auto& [idx, v] : shifted.coeffs) leaves += v * xpow(idx[0]);
    c.equal("0-1-2 plane trees by leaves " + at_n(n), tree_weight_poly(n, FamilySpec::plane(2), TreeWeighting::plane_leaf), leaves);

    g1_iter = g1.derive(g1_iter);
    Poly dumont;
    for (int k = 0; k < n; ++k)
      dumont += big(triangle_get(TriangleKind::eulerian, n, k)) * xpow(k + 1) * monomial(VarId("y"), n - k);
    c.equal("D_G1^n(x) " + at_n(n), dumont, g1_iter);
  }
}

void stembridge(Checker& c, const Context& ctx) {
  for (int n = 1; n <= ctx.max_n; ++n) {
    const Poly lhs = Rational(BigInt(1) << (n - 1)) * perm_poly(n, PermFamily::eulerian);
    const Poly peaks = perm_poly(n, PermFamily::peak);
    Poly rhs;
    for (int i = 0; 2 * i <= n - 1; ++i)
      rhs += Rational(BigInt(1) << (2 * i)) * peaks.coeff(Monomial(VarId("x"), i)) * xpow(i) * pow(Poly(1L) + X(), n - 1 - 2 * i);
    c.equal("2^(n-1) A_n(x) " + at_n(n), lhs, rhs);
  }
}

Substitution g6_to_g5() {
  return {{VarId("I"), Poly::var("L") * Poly::var("M")},
          {VarId("t"), S() + Y()},
          {VarId("u"), Rational(2) * X() * Y()},
          {VarId("v"), X() + Y()}};
}

void trivariate_grammar(Checker& c, const Context& ctx) {
  const Poly lm = Poly::var("L") * Poly::var("M");
  const Grammar g5 = grammars::g5();
  const Grammar g6 = grammars::g6();
  const Substitution back = g6_to_g5();
  Poly p5 = lm;
  Poly p6 = Poly::var("I");
  for (int n = 0; n <= ctx.max_n; ++n) {
    if (n > 0) {
      p5 = g5.derive(p5);
      p6 = g6.derive(p6);
    }
    const Poly a = perm_poly(n + 1, PermFamily::trivariate);
    c.equal("D_G5^n(LM) = LM A_{n+1} " + at_n(n), lm * a, p5);
    c.equal("D_G6^n(I) under I=LM,t=s+y,u=2xy,v=x+y " + at_n(n), p5, subst(p6, back));
    if (n + 1 <= 5) c.equal("printed A_{n+1}(x,y,s) " + at_n(n + 1), printed_trivariate(n + 1), a);
  }
}

void trivariate_egf(Checker& c, const Context& ctx) {
  const Series a = egf_build(EgfName::trivariate, ctx.max_n);
  for (int n = 0; n <= ctx.max_n; ++n)
    c.equal("n! [z^n] A(x,y,s;z) " + at_n(n), perm_poly(n + 1, PermFamily::trivariate), egf_coefficient(a, n));
}

Poly trivariate_operator(const Poly& p) {
  const VarId x("x"), y("y"), s("s");
  return (S() + Y()) * p + X() * Y() * (diff(p, x) + diff(p, y) + diff(p, s));
}

void trivariate_pde(Checker& c, const Context& ctx) {
  const int order = std::max(ctx.max_n, 1);
  const Series a = egf_build(EgfName::trivariate, order);
  const Series lhs = diff_z(a);
  const Series rhs = a.map(trivariate_operator).truncate(order - 1);
  for (int n = 0; n < order; ++n) c.equal("dA/dz coefficient " + at_n(n), rhs[n], lhs[n]);

  Poly prev = perm_poly(1, PermFamily::trivariate);
  for (int n = 2; n <= ctx.max_n; ++n) {
    Poly next = perm_poly(n, PermFamily::trivariate);
    c.equal("A_n = (s+y)A_{n-1} + xy(dx+dy+ds)A_{n-1} " + at_n(n), next, trivariate_operator(prev));
    prev = std::move(next);
  }
}

Poly table_row_tu(const std::map<std::vector<int>, BigInt>& table, int n) {
  Poly out;
  const VarId t("t"), u("u");
  for (const auto& [key, v] : table)
    if (key[0] == n) out.add_term(Monomial(t, key[1]) * Monomial(u, key[2]), Rational(v));
  return out;
}

void partial_gamma(Checker& c, const Context& ctx) {
  const auto table = gamma_nij_table(ctx.max_n);
  const Grammar g6 = grammars::g6();
  const VarId t("t"), u("u"), v("v");
  Poly p6 = Poly::var("I");
  for (int n = 0; n <= ctx.max_n; ++n) {
    if (n > 0) p6 = g6.derive(p6);
    const Poly a = perm_poly(n + 1, PermFamily::trivariate);
    const Expansion e = partial_gamma_expand(a, n);
    Poly solved;
    for (const auto& [idx, g] : e.coeffs) solved.add_term(Monomial(t, idx[0]) * Monomial(u, idx[1]), g);
    c.equal("partial gamma of A_{n+1}(x,y,s) vs recurrence " + at_n(n), table_row_tu(table, n), solved);
    c.equal("partial gamma round trip " + at_n(n), a, reexpand(e));

    Poly via_grammar;
    for (const auto& [key, g] : table)
      if (key[0] == n) via_grammar.add_term(Monomial(t, key[1]) * Monomial(u, key[2]) * Monomial(v, n - key[1] - 2 * key[2]), Rational(g));
    c.equal("D_G6^n(I) " + at_n(n), Poly::var("I") * via_grammar, p6);

    // y = 1 then s = x reduces to the gamma expansion of A_{n+1}(x)
    Poly reduced;
    const Poly one_x = Poly(1L) + X();
    for (const auto& [idx, g] : e.coeffs)
      reduced += g * pow(one_x, idx[0]) * pow(Rational(2) * X(), idx[1]) * pow(one_x, n - idx[0] - 2 * idx[1]);
    c.equal("specialization y=1, s=x " + at_n(n), perm_poly(n + 1, PermFamily::eulerian), reduced);
  }
}

void forest_gamma(Checker& c, const Context& ctx) {
  const auto table = gamma_nij_table(ctx.max_n);
  for (int n = 0; n <= ctx.max_n; ++n)
    c.equal("0-1-2 increasing rooted forests " + at_n(n), table_row_tu(table, n),
            tree_weight_poly(n, FamilySpec::forest(), TreeWeighting::forest_gamma));
}

void convolution(Checker& c, const Context& ctx) {
  const int order = ctx.max_n;
  const Series tri = egf_build(EgfName::trivariate, order);
  const Series biv = egf_build(EgfName::bivariate, order);
  const Series fix = egf_build(EgfName::fixpoint, order);
  const Series der = egf_build(EgfName::derangement, order);
  const Series nos = egf_build(EgfName::no_succession, order);
  const Series prod = biv * fix;
  for (int n = 0; n <= order; ++n) {
    c.equal("bivariate * fixpoint EGF " + at_n(n), tri[n], prod[n]);
    c.equal("A_n(x,y) EGF vs enumeration " + at_n(n), perm_poly(n, PermFamily::bivariate), egf_coefficient(biv, n));
    c.equal("C_n(x,y,s) EGF vs enumeration " + at_n(n), perm_poly(n, PermFamily::fixpoint), egf_coefficient(fix, n));
    c.equal("no-succession EGF vs derangement EGF " + at_n(n), der[n], nos[n]);
    c.equal("d_n(x) EGF vs enumeration " + at_n(n), perm_poly(n, PermFamily::derangement), egf_coefficient(der, n));
    c.equal("P*_n(x) enumeration vs d_n(x) " + at_n(n), perm_poly(n, PermFamily::derangement),
            perm_poly(n, PermFamily::no_succession_first_not_1));
  }
  for (int n = 0; n + 1 <= ctx.max_n; ++n) {
    Poly sum;
    for (int i = 0; i <= n; ++i)
      sum += big(binomial(n, i)) * perm_poly(i, PermFamily::bivariate) * perm_poly(n - i, PermFamily::fixpoint);
    c.equal("A_{n+1}(x,y,s) binomial convolution " + at_n(n), perm_poly(n + 1, PermFamily::trivariate), sum);
  }
}

Poly subset_poly(const SubsetCounts& counts) {
  Poly out;
  for (const auto& [mask, count] : counts) {
    Monomial m;
    for (int bit = 0; bit < 32; ++bit)
      if (mask & (1u << bit)) m = m * Monomial(indexed_var("q", bit + 1));
    out.add_term(m, Rational(std::to_string(count)));
  }
  return out;
}

void diaconis(Checker& c, const Context& ctx) {
  for (int n = 1; n <= ctx.max_n; ++n) {
    if (n > 9) throw SizeLimitError("diaconis profile guard: n <= 9");
    const DiaconisProfile p = diaconis_profile(n);
    c.equal("succession sets vs fixed-point sets " + at_n(n), subset_poly(p.by_succession_set), subset_poly(p.by_fixed_point_set));
  }
}

void roselle(Checker& c, const Context& ctx) {
  std::vector<std::map<std::pair<int, int>, std::uint64_t>> counts(ctx.max_n + 1);
  for (int n = 1; n <= ctx.max_n; ++n) counts[n] = ascent_succession_counts(n);
  auto lookup = [&](int n, int r, int s) -> BigInt {
    if (n < 1 || r < 0) return 0;
    auto it = counts[n].find({r, s});
    return it == counts[n].end() ? BigInt(0) : BigInt(std::to_string(it->second));
  };
  const VarId a("a"), b("b");
  for (int n = 1; n <= ctx.max_n; ++n) {
    Poly lhs, rhs;
    for (int r = 0; r < n; ++r) {
      for (int s = 0; s < n; ++s) {
        lhs.add_term(Monomial(a, r) * Monomial(b, s), Rational(lookup(n, r, s)));
        rhs.add_term(Monomial(a, r) * Monomial(b, s), Rational(binomial(n - 1, s) * lookup(n - s, r - s, 0)));
      }
    }
    c.equal("P(n,r,s) = C(n-1,s) P(n-s,r-s,0) " + at_n(n), lhs, rhs);
  }
}

void gamma_xy_closed_form(Checker& c, const Context& ctx) {
  const auto polys = gamma_xy_table(ctx.max_n);
  const auto nij = gamma_nij_table(ctx.max_n);
  const VarId xv("x"), yv("y");
  for (int n = 0; n <= ctx.max_n; ++n) {
    Poly from_nij;
    for (const auto& [key, v] : nij)
      if (key[0] == n) from_nij.add_term(Monomial(xv, key[1]) * Monomial(yv, key[2]), Rational(v));
    c.equal("gamma_n(x,y) recurrence vs gamma_{n,i,j} " + at_n(n), from_nij, polys[n]);
  }
  for (int x0 : {0, 1, 2}) {
    for (const Rational& y0 : {Rational(1), Rational(5, 2), Rational(13, 8)}) {
      const Series g = egf_build(EgfName::gamma_xy, ctx.max_n, {{"x", Rational(x0)}, {"y", y0}});
      const Substitution at{{xv, Poly(Rational(x0))}, {yv, Poly(y0)}};
      for (int n = 0; n <= ctx.max_n; ++n)
        c.equal("gamma(x,y;z) at x=" + std::to_string(x0) + ",y=" + to_string(y0) + " " + at_n(n), subst(polys[n], at),
                egf_coefficient(g, n));
    }
  }
}

void second_order_grammar(Checker& c, const Context& ctx) {
  const Grammar g7 = grammars::g7();
  const VarId xv("x"), yv("y"), zv("z");
  Poly iter = X();
  Poly prev;
  for (int n = 1; n <= ctx.max_n; ++n) {
    iter = g7.derive(iter);
    const Poly cn = second_order_trivariate(n);
    c.equal("D_G7^n(x) = C_n(x,y,z) " + at_n(n), cn, iter);
    if (n >= 2) {
      const Poly op = X() * Y() * Z() * (diff(prev, xv) + diff(prev, yv) + diff(prev, zv));
      c.equal("C_n = xyz(dx+dy+dz)C_{n-1} " + at_n(n), cn, op);
    }
    const Poly cx = subst(cn, {{xv, Poly(1L)}, {yv, X()}, {zv, Poly(1L)}});
    Poly tri;
    for (int j = 1; j <= n; ++j) tri += big(triangle_get(TriangleKind::second_order_eulerian, n, j)) * xpow(j);
    c.equal("C_n(x) vs second-order Eulerian triangle " + at_n(n), tri, cx);
    if (n <= 5) c.equal("printed C_n(x) " + at_n(n), printed_second_order(n), cx);
    prev = cn;
  }
}

void chenfu_esym(Checker& c, const Context& ctx) {
  const Grammar g8 = grammars::g8();
  const Poly e1 = X() + Y() + Z();
  const Poly e2 = X() * Y() + Y() * Z() + Z() * X();
  const Poly e3 = X() * Y() * Z();
  const Poly w = Poly::var("w");
  Poly g8_iter = w;
  const auto xs = x_alphabet(3);
  for (int n = 1; n <= ctx.max_n; ++n) {
    if (n > 1) g8_iter = g8.derive(g8_iter);
    const Poly trees = tree_weight_poly(n, FamilySpec::plane(3), TreeWeighting::chenfu3);
    Poly expansion, corollary;
    bool exponents_ok = true;
    for (const auto& [m, g] : trees.terms()) {
      const int leaves = static_cast<int>(m.exponent(degree_marker(1)));
      const int unary = static_cast<int>(m.exponent(degree_marker(2)));
      const int rest = 2 * n + 1 - 2 * unary - 3 * leaves;
      if (rest < 0) {
        exponents_ok = false;
        continue;
      }
      expansion += g * pow(e3, leaves) * pow(e2, unary) * pow(e1, rest);
      corollary += g * xpow(leaves) * pow(Poly(1L) + Rational(2) * X(), unary) * pow(Poly(2L) + X(), rest);
    }
    c.holds("nonnegative exponent 2n+1-2j-3k " + at_n(n), exponents_ok);
    const Poly cn = second_order_trivariate(n);
    c.equal("Chen-Fu expansion of C_n(x,y,z) " + at_n(n), cn, expansion);
    c.equal("Chen-Fu corollary for C_n(x) " + at_n(n), subst(cn, {{VarId("x"), Poly(1L)}, {VarId("y"), X()}, {VarId("z"), Poly(1L)}}),
            corollary);

    const Expansion e = esym_expand(kth_order_poly(n, 2), xs);
    const Poly in_uvw = subst(esym_to_e_poly(e), {{e_var(1), Poly::var("u")}, {e_var(2), Poly::var("v")}, {e_var(3), w}});
    c.equal("e-expansion of C_n vs D_G8^{n-1}(w) " + at_n(n), g8_iter, in_uvw);
    c.holds("e-positivity " + at_n(n), e.nonnegative());
  }
}

void kth_grammar(Checker& c, const Context& ctx) {
  for (int k : k_values(ctx, 1, 4)) {
    const Grammar g9 = grammars::g9(k);
    const auto xs = x_alphabet(k + 1);
    Poly iter(xs[0]);
    for (int n = 1; n <= ctx.max_n; ++n) {
      iter = g9.derive(iter);
      const Poly cn = kth_order_poly(n, k);
      c.equal("D_G9^n(x_1) = C_n(x_1..x_{k+1}) " + at_nk(n, k), cn, iter);
      c.holds("symmetry of C_n(x_1..x_{k+1}) " + at_nk(n, k), is_symmetric(cn, xs));
      if (k == 2) c.equal("k=2 reduces to C_n(x,y,z) " + at_n(n), second_order_trivariate(n), subst(iter, {{xs[0], Z()}, {xs[1], Y()}, {xs[2], X()}}));
      if (k == 1) {
        const Poly expected = X() * perm_poly(n, PermFamily::eulerian);
        c.equal("k=1, x_1=1, x_2=x gives x A_n(x) " + at_n(n), expected, subst(cn, {{xs[0], Poly(1L)}, {xs[1], X()}}));
        c.equal("k=1, x_1=x, x_2=1 gives x A_n(x) " + at_n(n), expected, subst(cn, {{xs[0], X()}, {xs[1], Poly(1L)}}));
      }
      if (k >= 3) {
        // the block n^k always contributes plateaux of every order j <= k-1
        Substitution zero{{xs[k - 1], Poly(1L)}, {xs[k], X()}};
        for (int j = 1; j < k - 1; ++j) zero.emplace(xs[j], Poly{});
        c.equal("x_2..x_{k-1}=0 specialization vanishes " + at_nk(n, k), Poly{}, subst(cn, zero));
      }
    }
  }
}

Poly printed_g10(int n, int k) {
  if (n == 4)
    return pow(e_letter(k), 3) * e_letter(k + 1) + Rational(8) * e_letter(k - 1) * e_letter(k) * pow(e_letter(k + 1), 2) +
           Rational(6) * e_letter(k - 2) * pow(e_letter(k + 1), 3);
  return pow(e_letter(k), 4) * e_letter(k + 1) + Rational(22) * pow(e_letter(k), 2) * e_letter(k - 1) * pow(e_letter(k + 1), 2) +
         Rational(16) * pow(e_letter(k - 1), 2) * pow(e_letter(k + 1), 3) +
         Rational(42) * e_letter(k - 2) * e_letter(k) * pow(e_letter(k + 1), 3) + Rational(24) * e_letter(k - 3) * pow(e_letter(k + 1), 4);
}

void mainthm_esym(Checker& c, const Context& ctx) {
  for (int k : k_values(ctx, 1, 5)) {
    const Grammar g9 = grammars::g9(k);
    const Grammar g10 = grammars::g10(k);
    const auto xs = x_alphabet(k + 1);
    const Substitution expand_e = symmetric_expansion(k);
    Poly it9(xs[0]), it10(xs[0]);
    for (int n = 1; n <= std::min(ctx.max_n, k + 2); ++n) {
      it9 = g9.derive(it9);
      it10 = g10.derive(it10);
      const Expansion e = esym_expand(kth_order_poly(n, k), xs);
      c.equal("e-expansion of C_n vs D_G10^n(x_1) " + at_nk(n, k), it10, esym_to_e_poly(e));
      c.holds("e-positivity " + at_nk(n, k), e.nonnegative());
      c.equal("G10 iterate under e_i -> elementary symmetric " + at_nk(n, k), it9, subst(it10, expand_e));
      if (n >= 2) {
        for (const auto& [m, coeff] : it10.terms()) {
          auto hist = e_monomial_to_histogram(m, n, k);
          std::vector<int> key{n};
          key.insert(key.end(), hist.begin(), hist.end());
          bool ok = true;
          try {
            check_histogram_row(key);
          } catch (const InvalidParamError&) {
            ok = false;
          }
          c.holds("histogram constraints " + at_nk(n, k) + " at " + to_string(m), ok);
        }
      }
      if ((n == 4 && k >= 2) || (n == 5 && k >= 3)) c.equal("printed G10^n(x_1) " + at_nk(n, k), printed_g10(n, k), it10);
    }
  }
}

Poly e_poly_to_markers(const Poly& p, int n, int k) {
  Poly out;
  for (const auto& [m, coeff] : p.terms()) {
    const auto hist = e_monomial_to_histogram(m, n, k);
    Monomial marker;
    for (int j = 1; j <= n; ++j) marker = marker * Monomial(degree_marker(j), hist[j - 1]);
    out.add_term(marker, coeff);
  }
  return out;
}

void histogram_independence(Checker& c, const Context& ctx) {
  for (int n = 2; n <= ctx.max_n; ++n) {
    std::optional<Poly> reference;
    for (int k : {n - 2, n - 1, n}) {
      if (k < 1) continue;
      const Poly trees = tree_weight_poly(n, FamilySpec::plane(k + 1), TreeWeighting::deghist);
      if (!reference)
        reference = trees;
      else
        c.equal("deghist independent of k " + at_nk(n, k), *reference, trees);
      const Poly g10 = grammars::g10(k).iterate(Poly(indexed_var("x", 1)), n);
      c.equal("deghist vs G10 e-coefficients " + at_nk(n, k), trees, e_poly_to_markers(g10, n, k));
    }
  }
}

std::vector<int> hist_key(int n, std::vector<int> prefix) {
  std::vector<int> key{n};
  prefix.resize(n, 0);
  key.insert(key.end(), prefix.begin(), prefix.end());
  return key;
}

BigInt table_at(const std::map<std::vector<int>, BigInt>& t, const std::vector<int>& key) {
  auto it = t.find(key);
  return it == t.end() ? BigInt(0) : it->second;
}

void gamma_2n_2n(Checker& c, const Context& ctx) {
  const auto table = gamma_histogram_table(std::min(ctx.max_n + 1, kMaxGammaTableN));
  for (int n = 3; n <= ctx.max_n; ++n) {
    const BigInt two_n = (BigInt(1) << n) - 2 * n;
    c.equal("gamma(n;2,n-3,1,0,...) = 2^n-2n " + at_n(n), big(two_n), big(table_at(table, hist_key(n, {2, n - 3, 1}))));
    std::vector<int> star(n + 1, 0);
    star[0] = n;
    star[n] = 1;
    c.equal("gamma(n+1;n,0,...,0,1) = n! " + at_n(n), big(factorial(n)), big(table_at(table, hist_key(n + 1, star))));
    if (n <= std::min(ctx.max_n, 7)) {
      const Poly trees = tree_weight_poly(n + 1, FamilySpec::plane(n + 1), TreeWeighting::deghist);
      const Monomial m = Monomial(degree_marker(1), n) * Monomial(degree_marker(n + 1), 1);
      c.equal("star trees on [n+1] " + at_n(n), big(factorial(n)), Poly(trees.coeff(m)));
    }
  }
}

void cn2_closed_form(Checker& c, const Context& ctx) {
  for (int n = 1; n <= ctx.max_n; ++n) {
    const BigInt closed = (BigInt(1) << (n + 1)) - 2 * (n + 1);
    const BigInt value = n >= 2 ? triangle_get(TriangleKind::second_order_eulerian, n, 2) : BigInt(0);
    c.equal("C_{n,2} = 2^{n+1}-2(n+1) " + at_n(n), big(closed), big(value));
    if (n <= std::min(ctx.max_n, 6)) {
      const Poly cx = subst(second_order_trivariate(n), {{VarId("x"), Poly(1L)}, {VarId("y"), X()}, {VarId("z"), Poly(1L)}});
      c.equal("C_{n,2} from Stirling permutations " + at_n(n), big(closed), Poly(cx.coeff(Monomial(VarId("x"), 2))));
    }
  }
}

void final_corollary(Checker& c, const Context& ctx) {
  const auto table = gamma_histogram_table(ctx.max_n);
  for (int n = 2; n <= ctx.max_n; ++n) {
    for (int j = 1; j <= n - 1; ++j) {
      BigInt sum = 0;
      for (const auto& [key, v] : table)
        if (key[0] == n && key[1] == j) sum += v;
      c.equal("C_{n-1,j} = sum gamma(n;j,...) " + at_nk(n, j), big(triangle_get(TriangleKind::second_order_eulerian, n - 1, j)), big(sum));
    }
  }
  for (int n = 1; n + 1 <= ctx.max_n + 1 && n <= ctx.max_n; ++n) {
    Poly tri;
    for (int j = 1; j <= n; ++j) tri += big(triangle_get(TriangleKind::second_order_eulerian, n, j)) * xpow(j);
    c.equal("plane trees on [n+1] by leaves " + at_n(n), tri, tree_weight_poly(n + 1, FamilySpec::plane(n + 1), TreeWeighting::plane_leaf));
  }
}

void andre(Checker& c, const Context& ctx) {
  const Grammar g4 = grammars::g4();
  const auto gammas = gamma_xy_table(std::min(ctx.max_n, kMaxGammaTableN));
  Poly iter = Poly::var("u");
  for (int n = 0; n <= ctx.max_n; ++n) {
    if (n > 0) iter = g4.derive(iter);
    c.equal("D_G4^n(u) = E_n(u,v) " + at_n(n), tree_weight_poly(n, FamilySpec::nonplane(2), TreeWeighting::andre), iter);
    if (n >= 1 && n < static_cast<int>(gammas.size())) {
      const Poly lhs = Y() * subst(gammas[n], {{VarId("x"), Poly(1L)}});
      const Poly rhs = subst(iter, {{VarId("u"), Y()}, {VarId("v"), Poly(1L)}});
      c.equal("y gamma_n(1,y) = E_n(y,1) " + at_n(n), rhs, lhs);
    }
  }
}

void transform_catalog(Checker& c, const Context& ctx) {
  const Poly x = X(), y = Y(), s = S();
  const Grammar g1 = grammars::g1();
  c.holds("G1 -> G2 under u=xy, v=x+y",
          transform_check(g1, {{VarId("u"), x * y}, {VarId("v"), x + y}}, grammars::g2()));
  c.holds("G1 -> G3 under u=y-x", transform_check(g1, {{VarId("x"), x}, {VarId("u"), y - x}}, grammars::g3()));
  c.holds("G1 -> G4 under u=2xy, v=x+y",
          transform_check(g1, {{VarId("u"), Rational(2) * x * y}, {VarId("v"), x + y}}, grammars::g4()));
  c.holds("G1 -> G4 rejected under u=xy",
          !transform_check(g1, {{VarId("u"), x * y}, {VarId("v"), x + y}}, grammars::g4()));
  c.holds("G5 -> G6 under I=LM, t=s+y, u=2xy, v=x+y", transform_check(grammars::g5(), g6_to_g5(), grammars::g6()));
  c.holds("G7 -> G8 under u=x+y+z, v=xy+yz+zx, w=xyz",
          transform_check(grammars::g7(),
                          {{VarId("u"), x + y + Z()}, {VarId("v"), x * y + y * Z() + Z() * x}, {VarId("w"), x * y * Z()}},
                          grammars::g8()));
  for (int k : k_values(ctx, 1, 4)) {
    Substitution defs = symmetric_expansion(k);
    defs.emplace(indexed_var("x", 1), Poly(indexed_var("x", 1)));
    c.holds("G9 -> G10 under e_i = elementary symmetric, k=" + std::to_string(k), transform_check(grammars::g9(k), defs, grammars::g10(k)));
  }
  const Grammar g2 = grammars::g2();
  Poly it1 = x, it2 = Poly::var("u");
  for (int n = 1; n <= ctx.max_n; ++n) {
    it1 = g1.derive(it1);
    if (n > 1) it2 = g2.derive(it2);
    c.equal("D_G1^n(x) = D_G2^{n-1}(u) " + at_n(n), it1, subst(it2, {{VarId("u"), x * y}, {VarId("v"), x + y}}));
  }
  (void)s;
}

struct Entry {
  IdentityInfo info;
  IdentityFn run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list{
      {{"andre", 7, "D_G4^n(u) equals the Andre polynomial over 0-1-2 increasing trees"}, andre},
      {{"chenfu-esym", 6, "Chen-Fu expansion of C_n(x,y,z) over 0-1-2-3 plane trees"}, chenfu_esym},
      {{"cn2-closed-form", 20, "C_{n,2} = 2^{n+1} - 2(n+1)"}, cn2_closed_form},
      {{"convolution", 7, "EGF convolution, enumeration routes and P*_n = d_n"}, convolution},
      {{"diaconis", 7, "succession-set and fixed-point-set profiles agree"}, diaconis},
      {{"final-corollary", 7, "C_{n-1,j} as a sum of gamma(n; j, ...)"}, final_corollary},
      {{"forest-gamma", 7, "gamma_{n,i,j} counts 0-1-2 increasing rooted forests"}, forest_gamma},
      {{"frobenius", 8, "x A_n(x) = sum k! S(n,k) x^k (1-x)^{n-k}"}, frobenius},
      {{"gamma-2n-2n", 8, "gamma(n;2,n-3,1,0,...) = 2^n-2n and gamma(n+1;n,0,...,1) = n!"}, gamma_2n_2n},
      {{"gamma-eulerian", 8, "gamma coefficients of A_n(x) count permutations without double descents"}, gamma_eulerian},
      {{"gamma-xy-closed-form", 7, "closed form of gamma(x,y;z) at rational sample points"}, gamma_xy_closed_form},
      {{"histogram-independence", 6, "degree histograms of plane trees match G10 and ignore k"}, histogram_independence},
      {{"kth-grammar", 6, "D_G9^n(x_1) = C_n(x_1..x_{k+1}), symmetric"}, kth_grammar},
      {{"mainthm-esym", 6, "e-expansion of C_n(x_1..x_{k+1}) equals D_G10^n(x_1)"}, mainthm_esym},
      {{"partial-gamma", 7, "partial gamma expansion of A_{n+1}(x,y,s)"}, partial_gamma},
      {{"roselle", 7, "P(n,r,s) = C(n-1,s) P(n-s,r-s,0)"}, roselle},
      {{"second-order-grammar", 6, "D_G7^n(x) = C_n(x,y,z) and its recursion"}, second_order_grammar},
      {{"stembridge", 8, "2^{n-1} A_n(x) = sum 4^i P(n,i) x^i (1+x)^{n-1-2i}"}, stembridge},
      {{"transform-catalog", 6, "changes of grammars G1->G2/G3/G4, G5->G6, G7->G8, G9->G10"}, transform_catalog},
      {{"trivariate-egf", 7, "EGF route for A_{n+1}(x,y,s)"}, trivariate_egf},
      {{"trivariate-grammar", 8, "D_G5^n(LM) = LM A_{n+1}(x,y,s)"}, trivariate_grammar},
      {{"trivariate-pde", 8, "dA/dz = (s+y)A + xy(dx+dy+ds)A"}, trivariate_pde},
  };
  return list;
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

IdentityReport verify_identity(std::string_view name, const VerifyOptions& options) {
  const auto& list = entries();
  auto it = std::find_if(list.begin(), list.end(), [&](const Entry& e) { return e.info.name == name; });
  if (it == list.end()) throw UnknownIdentityError("unknown identity '" + std::string(name) + "'");

  IdentityReport report;
  report.identity = it->info.name;
  const Context ctx{options.max_n.value_or(it->info.default_max_n), options.k};
  if (ctx.max_n < 0) throw InvalidParamError("--max-n must be nonnegative");
  if (ctx.k && *ctx.k < 1) throw InvalidParamError("--k must be positive");
  report.range = "n<=" + std::to_string(ctx.max_n) + (ctx.k ? ",k=" + std::to_string(*ctx.k) : "");

  const auto start = std::chrono::steady_clock::now();
  Checker checker(report);
  try {
    it->run(checker, ctx);
  } catch (const SizeLimitError& e) {
    report.status = ReportStatus::size_guard;
    report.message = e.what();
  } catch (const OutOfRangeError& e) {
    report.status = ReportStatus::size_guard;
    report.message = e.what();
  } catch (const Error& e) {
    report.status = ReportStatus::fail;
    report.message = e.what();
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<IdentityReport> verify_all(const VerifyOptions& options) {
  std::vector<IdentityReport> out;
  for (const auto& e : entries()) out.push_back(verify_identity(e.info.name, options));
  return out;
}

std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::pass: return "pass";
    case ReportStatus::fail: return "fail";
    case ReportStatus::size_guard: return "size-guard";
  }
  return {};
}

nlohmann::json report_to_json(const IdentityReport& r) {
  nlohmann::json j{{"identity", r.identity}, {"range", r.range}, {"status", to_string(r.status)}, {"checks", r.checks}};
  if (r.counterexample)
    j["counterexample"] = {{"where", r.counterexample->where},
                           {"expected", poly_to_json(r.counterexample->expected)},
                           {"actual", poly_to_json(r.counterexample->actual)}};
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

// ---------------------------------------------------------------------------
// tables

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string csv_rows(const std::string& header, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::ostringstream os;
  os << header << '\n';
  for (const auto& [index, value] : rows) os << index << ',' << quoted(value) << '\n';
  return os.str();
}

std::string poly_table(int n, const Poly& p, TableFormat format) {
  if (format == TableFormat::json) return poly_to_json(p).dump() + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [m, c] : p.sorted_terms()) rows.emplace_back(std::to_string(n) + "," + quoted(to_string(m)), to_string(c));
  return csv_rows("n,monomial,value", rows);
}

std::string univariate_table(int n, const Poly& p, TableFormat format) {
  if (format == TableFormat::json) return poly_to_json(p).dump() + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  const auto coeffs = univariate_coeffs(p, VarId("x"));
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    rows.emplace_back(std::to_string(n) + "," + std::to_string(k), to_string(coeffs[k]));
  }
  return csv_rows("n,k,value", rows);
}

}  // namespace

std::string render_table(std::string_view name, int n, std::optional<int> k, TableFormat format) {
  if (n < 0) throw InvalidParamError("--n must be nonnegative");
  if (name == "eulerian") {
    if (n > kMaxTriangleRow) throw SizeLimitError("triangle rows stop at " + std::to_string(kMaxTriangleRow));
    Poly p;
    if (n == 0) p = Poly(1L);
    for (int j = 0; j < n; ++j) p += big(triangle_get(TriangleKind::eulerian, n, j)) * xpow(j);
    return univariate_table(n, p, format);
  }
  if (name == "second-order") {
    if (n > kMaxTriangleRow) throw SizeLimitError("triangle rows stop at " + std::to_string(kMaxTriangleRow));
    Poly p;
    if (n == 0) p = Poly(1L);
    for (int j = 1; j <= n; ++j) p += big(triangle_get(TriangleKind::second_order_eulerian, n, j)) * xpow(j);
    return univariate_table(n, p, format);
  }
  if (name == "trivariate") return poly_table(n, perm_poly(n, PermFamily::trivariate), format);
  if (name == "kth-order") {
    if (!k) throw InvalidParamError("kth-order table needs --k");
    if (n < 1) throw InvalidParamError("kth-order table needs n >= 1");
    return poly_table(n, kth_order_poly(n, *k), format);
  }
  if (name == "andre") return poly_table(n, grammars::g4().iterate(Poly::var("u"), n), format);
  if (name == "gamma-nij") {
    const auto table = gamma_nij_table(n);
    if (format == TableFormat::json) return poly_to_json(gamma_xy_table(n).back()).dump() + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [key, v] : table)
      if (key[0] == n) rows.emplace_back(std::to_string(n) + "," + std::to_string(key[1]) + "," + std::to_string(key[2]), v.get_str());
    return csv_rows("n,i,j,value", rows);
  }
  if (name == "gamma-histogram") {
    if (n < 1) throw InvalidParamError("gamma-histogram table needs n >= 1");
    const auto table = gamma_histogram_table(n);
    Poly markers;
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [key, v] : table) {
      if (key[0] != n) continue;
      Monomial m;
      std::string index = std::to_string(n);
      for (int j = 1; j <= n; ++j) {
        m = m * Monomial(degree_marker(j), key[j]);
        index += "," + std::to_string(key[j]);
      }
      markers.add_term(m, Rational(v));
      rows.emplace_back(index, v.get_str());
    }
    if (format == TableFormat::json) return poly_to_json(markers).dump() + "\n";
    std::string header = "n";
    for (int j = 1; j <= n; ++j) header += ",i_" + std::to_string(j);
    return csv_rows(header + ",value", rows);
  }
  throw InvalidParamError("unknown table '" + std::string(name) + "'");
}

nlohmann::json expansion_to_json(const Expansion& e) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [index, c] : e.coeffs) coeffs.push_back({{"index", index}, {"coeff", to_string(c)}});
  return {{"basis", to_string(e.basis)}, {"coeffs", std::move(coeffs)}};
}

Expansion run_expand(const ExpandRequest& request, const Poly& input) {
  switch (request.basis) {
    case Basis::gamma: {
      const VarId v(request.var);
      return gamma_expand(input, v, request.n.value_or(static_cast<int>(input.degree_in(v))));
    }
    case Basis::frobenius: {
      const VarId v(request.var);
      return frobenius_expand(input, v, request.n.value_or(static_cast<int>(input.degree_in(v))));
    }
    case Basis::partial_gamma:
      return partial_gamma_expand(input, request.n.value_or(static_cast<int>(input.total_degree())));
    case Basis::esym: {
      std::vector<VarId> vars;
      if (request.vars.empty()) {
        for (VarId v : input.variables()) vars.push_back(v);
      } else {
        for (const auto& name : request.vars) vars.emplace_back(name);
      }
      return esym_expand(input, vars);
    }
  }
  throw InvalidParamError("unknown basis");
}

}  // namespace eulab
