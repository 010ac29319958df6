// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "eulab/expand.hpp"
#include "eulab/grammar.hpp"
#include "eulab/permstats.hpp"
#include "eulab/series.hpp"
#include "eulab/stirlingperm.hpp"
#include "eulab/trees.hpp"
#include "eulab/verify.hpp"
#include "test_util.hpp"

using namespace eulab;
using testing::S;
using testing::X;
using testing::Y;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) out.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  std::printf("%s criterion %2d: %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              out.ok ? "" : " -- ", out.detail.c_str());
  if (!out.ok) ++failures;
}

void identity(Outcome& out, const char* name, int max_n, std::optional<int> k = {}) {
  const IdentityReport r = verify_identity(name, {max_n, k});
  out.require(r.status == ReportStatus::pass, std::string(name) + ": " + report_to_json(r).dump());
}

Poly e_letter(int i) { return i == 0 ? Poly(1L) : Poly(e_var(i)); }

}  // namespace

int main() {
  criterion(1, "trivariate table A_n(x,y,s), n <= 5, matches the printed list", 1.0, [](Outcome& out) {
    const Poly t = S() + Y(), xy = X() * Y();
    const std::vector<Poly> printed{
        Poly(1L),
        t,
        pow(t, 2) + Rational(2) * xy,
        pow(t, 3) + Rational(6) * xy * t + Rational(2) * xy * (X() + Y()),
        pow(t, 4) + Rational(12) * xy * pow(t, 2) + Rational(8) * xy * t * (X() + Y()) + Rational(2) * xy * pow(X() + Y(), 2) +
            Rational(16) * xy * xy};
    for (int n = 1; n <= 5; ++n) out.require(perm_poly(n, PermFamily::trivariate) == printed[n - 1], "A_" + std::to_string(n));
  });

  criterion(2, "grammar, enumeration and EGF routes agree for n <= 7", 60.0, [](Outcome& out) {
    const Poly lm = Poly::var("L") * Poly::var("M");
    const Grammar g5 = grammars::g5();
    const Series egf = egf_build(EgfName::trivariate, 7);
    Poly iter = lm;
    for (int n = 0; n <= 7; ++n) {
      if (n > 0) iter = g5.derive(iter);
      const auto grammar_route = exact_divide(iter, lm);
      const Poly enumeration = perm_poly(n + 1, PermFamily::trivariate);
      out.require(grammar_route.has_value() && *grammar_route == enumeration, "grammar route n=" + std::to_string(n));
      out.require(egf_coefficient(egf, n) == enumeration, "EGF route n=" + std::to_string(n));
    }
  });

  criterion(3, "gamma_{n,i,j} table equals 0-1-2 increasing rooted forests, n <= 7", 60.0, [](Outcome& out) {
    const auto table = gamma_nij_table(7);
    for (int n = 0; n <= 7; ++n) {
      Poly expected;
      for (const auto& [key, v] : table)
        if (key[0] == n) expected.add_term(Monomial(VarId("t"), key[1]) * Monomial(VarId("u"), key[2]), Rational(v));
      out.require(tree_weight_poly(n, FamilySpec::forest(), TreeWeighting::forest_gamma) == expected, "n=" + std::to_string(n));
    }
  });

  criterion(4, "Frobenius formula x A_n(x) = sum k! S(n,k) x^k (1-x)^(n-k), n <= 8", 0, [](Outcome& out) {
    for (int n = 1; n <= 8; ++n) {
      Poly rhs;
      for (int k = 1; k <= n; ++k) {
        BigInt f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        rhs += Rational(f * triangle_get(TriangleKind::stirling2, n, k)) * pow(X(), k) * pow(Poly(1L) - X(), n - k);
      }
      out.require(X() * perm_poly(n, PermFamily::eulerian) == rhs, "n=" + std::to_string(n));
    }
  });

  criterion(5, "gamma coefficients count no-double-descent permutations; Stembridge identity, n <= 8", 0, [](Outcome& out) {
    const VarId x("x");
    for (int n = 1; n <= 8; ++n) {
      const Poly a = perm_poly(n, PermFamily::eulerian);
      const Expansion e = gamma_expand(a, x, n - 1);
      Poly gamma;
      for (const auto& [idx, g] : e.coeffs) gamma += g * pow(X(), idx[0]);
      out.require(gamma == perm_poly(n, PermFamily::gamma_eulerian_no_ddes), "gamma n=" + std::to_string(n));
      const Poly peaks = perm_poly(n, PermFamily::peak);
      Poly rhs;
      for (int i = 0; 2 * i <= n - 1; ++i)
        rhs += Rational(BigInt(1) << (2 * i)) * peaks.coeff(Monomial(x, i)) * pow(X(), i) * pow(Poly(1L) + X(), n - 1 - 2 * i);
      out.require(Rational(BigInt(1) << (n - 1)) * a == rhs, "Stembridge n=" + std::to_string(n));
    }
  });

  criterion(6, "Diaconis succession-set and fixed-point-set profiles agree, n <= 7", 30.0, [](Outcome& out) {
    for (int n = 1; n <= 7; ++n) {
      const auto p = diaconis_profile(n);
      out.require(p.by_succession_set == p.by_fixed_point_set, "n=" + std::to_string(n));
    }
  });

  criterion(7, "C_5(x) = x+52x^2+328x^3+444x^4+120x^5 and the Chen-Fu expansion, n <= 6", 0, [](Outcome& out) {
    const Poly c5 = subst(kth_order_poly(5, 2), {{indexed_var("x", 1), Poly(1L)}, {indexed_var("x", 2), X()}, {indexed_var("x", 3), Poly(1L)}});
    out.require(c5 == testing::ux({0, 1, 52, 328, 444, 120}), "C_5(x)");
    identity(out, "chenfu-esym", 6);
  });

  criterion(8, "k-th order grammars and e-expansions, k <= 4, n <= min(k+2,5); printed G10 iterates", 120.0, [](Outcome& out) {
    for (int k = 1; k <= 4; ++k) {
      const auto xs = x_alphabet(k + 1);
      const Poly x1(xs[0]);
      for (int n = 1; n <= std::min(k + 2, 5); ++n) {
        const std::string at = "k=" + std::to_string(k) + ",n=" + std::to_string(n);
        const Poly c = kth_order_poly(n, k);
        const Poly g10 = grammars::g10(k).iterate(x1, n);
        out.require(grammars::g9(k).iterate(x1, n) == c, "G9 " + at);
        out.require(esym_to_e_poly(esym_expand(c, xs)) == g10, "G10 " + at);
        if (n == 4 && k >= 2)
          out.require(g10 == pow(e_letter(k), 3) * e_letter(k + 1) + Rational(8) * e_letter(k - 1) * e_letter(k) * pow(e_letter(k + 1), 2) +
                                 Rational(6) * e_letter(k - 2) * pow(e_letter(k + 1), 3),
                      "printed G10^4 " + at);
        if (n == 5 && k >= 3)
          out.require(g10 == pow(e_letter(k), 4) * e_letter(k + 1) +
                                 Rational(22) * pow(e_letter(k), 2) * e_letter(k - 1) * pow(e_letter(k + 1), 2) +
                                 Rational(16) * pow(e_letter(k - 1), 2) * pow(e_letter(k + 1), 3) +
                                 Rational(42) * e_letter(k - 2) * e_letter(k) * pow(e_letter(k + 1), 3) +
                                 Rational(24) * e_letter(k - 3) * pow(e_letter(k + 1), 4),
                      "printed G10^5 " + at);
      }
    }
  });

  criterion(9, "closed-form gamma values, C_{n,2} for n <= 20, final corollary for n <= 7", 0, [](Outcome& out) {
    identity(out, "gamma-2n-2n", 8);
    identity(out, "cn2-closed-form", 20);
    identity(out, "final-corollary", 7);
  });

  criterion(10, "EGF suite: convolution, PDE, P* = d, gamma(x,y;z) at nine points, order 7", 30.0, [](Outcome& out) {
    identity(out, "convolution", 7);
    identity(out, "trivariate-pde", 7);
    identity(out, "gamma-xy-closed-form", 7);
    const Series p = egf_build(EgfName::no_succession, 8), d = egf_build(EgfName::derangement, 8);
    out.require(p == d, "no-succession EGF vs derangement EGF");
  });

  criterion(11, "property suites: ring laws, Leibniz, expansion round trips, tree dedup, statistic identities", 0, [](Outcome& out) {
    std::mt19937 rng(2024);
    const std::vector<std::string> vars{"x", "y", "z"};
    for (int trial = 0; trial < 100; ++trial) {
      const Poly a = testing::random_poly(rng, vars), b = testing::random_poly(rng, vars), c = testing::random_poly(rng, vars);
      out.require((a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c && a * b == b * a, "ring laws");
      for (const auto& v : vars) out.require(diff(a * b, VarId(v)) == diff(a, VarId(v)) * b + a * diff(b, VarId(v)), "Leibniz");
      out.require(grammars::g7().derive(a * b) == grammars::g7().derive(a) * b + a * grammars::g7().derive(b), "grammar Leibniz");
    }

    const VarId x("x");
    for (int n = 1; n <= 8; ++n) {
      const Poly a = perm_poly(n, PermFamily::eulerian);
      out.require(reexpand(gamma_expand(a, x, n - 1)) == a, "gamma round trip");
      out.require(reexpand(frobenius_expand(X() * a, x, n)) == X() * a, "Frobenius round trip");
    }
    for (int n = 0; n <= 7; ++n) {
      const Poly a = perm_poly(n + 1, PermFamily::trivariate);
      out.require(reexpand(partial_gamma_expand(a, n)) == a, "partial gamma round trip");
    }
    for (int k = 1; k <= 3; ++k)
      for (int n = 1; n <= 4; ++n) {
        const Poly c = kth_order_poly(n, k);
        out.require(reexpand(esym_expand(c, x_alphabet(k + 1))) == c, "esym round trip");
      }

    for (const auto& spec : {FamilySpec::nonplane(2), FamilySpec::plane(2), FamilySpec::plane(3), FamilySpec::plane(7), FamilySpec::forest()}) {
      std::set<std::string> seen;
      std::size_t total = 0;
      for_each_tree(7, spec, [&](const IncTree& t) {
        seen.insert(t.canonical());
        ++total;
      });
      out.require(seen.size() == total && tree_count(7, spec) == static_cast<unsigned long>(total), "tree dedup");
    }

    for (int n = 1; n <= 8; ++n)
      for_each_perm(n, [&](const Perm& p) {
        const StatRecord r = perm_stats(p);
        out.require(r.asc == r.suc + r.basc && r.asc + r.des == n - 1, "asc = suc + basc");
      });
    for (int k = 1; k <= 4; ++k)
      for (int n = 1; n <= 5; ++n)
        for_each_stirling(n, k, [&](const StirlingWord& w) {
          const auto s = stirling_stats(w);
          out.require(s.asc + s.des + s.plat == k * n + 1, "asc + des + plat = kn + 1");
        });
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
