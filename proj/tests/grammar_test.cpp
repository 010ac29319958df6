#include <gtest/gtest.h>

#include "eulab/errors.hpp"
#include "eulab/grammar.hpp"
#include "test_util.hpp"

namespace eulab {
namespace {

using testing::random_poly;
using testing::X;
using testing::Y;
using testing::Z;

Poly v(const char* name) { return Poly::var(name); }
Poly e(int i) { return i == 0 ? Poly(1L) : Poly(e_var(i)); }

TEST(Grammar, Derive) {
  EXPECT_EQ(grammars::g1().derive(X()), X() * Y());
  for (const auto& g : {grammars::g1(), grammars::g5(), grammars::g9(3)}) EXPECT_TRUE(g.derive(Poly(1L)).is_zero());
  const Poly lm = v("L") * v("M");
  EXPECT_EQ(grammars::g5().derive(lm), lm * (v("s") + Y()));
}

TEST(Grammar, UnlistedVariablesAreConstants) {
  EXPECT_TRUE(grammars::g1().derive(Z()).is_zero());
  EXPECT_EQ(grammars::g1().derive(X() * Z()), X() * Y() * Z());
}

TEST(Grammar, Iterate) {
  const Poly t = v("t"), u = v("u"), w = v("v");
  EXPECT_EQ(grammars::g6().iterate(v("I"), 3), v("I") * (pow(t, 3) + Rational(3) * t * u + u * w));
  EXPECT_EQ(grammars::g6().iterate(v("I"), 0), v("I"));
  EXPECT_EQ(grammars::g1().iterate(X(), 3), X() * (pow(Y(), 3) + Rational(4) * X() * Y() * Y() + X() * X() * Y()));
  for (int k = 3; k <= 5; ++k) {
    EXPECT_EQ(grammars::g10(k).iterate(Poly(indexed_var("x", 1)), 4),
              pow(e(k), 3) * e(k + 1) + Rational(8) * e(k - 1) * e(k) * pow(e(k + 1), 2) +
                  Rational(6) * e(k - 2) * pow(e(k + 1), 3))
        << k;
  }
  EXPECT_EQ(grammars::g10(2).iterate(Poly(indexed_var("x", 1)), 2), e(2) * e(3));
}

TEST(Grammar, G3Iterates) {
  const Poly u = v("u");
  EXPECT_EQ(grammars::g3().iterate(X(), 3),
            (u + X()) * (X() * u * u + Rational(6) * X() * X() * u + Rational(6) * pow(X(), 3)));
}

TEST(Grammar, G4Iterates) {
  const Poly u = v("u"), w = v("v");
  EXPECT_EQ(grammars::g4().iterate(u, 2), u * w * w + u * u);
}

TEST(Grammar, G9RuleIsProduct) {
  const Grammar g = grammars::g9(3);
  Poly prod(1L);
  for (int i = 1; i <= 4; ++i) prod *= Poly(indexed_var("x", i));
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(*g.image(indexed_var("x", i)), prod);
}

TEST(Grammar, TransformCheck) {
  const Grammar g1 = grammars::g1();
  EXPECT_TRUE(transform_check(g1, {{VarId("u"), X() * Y()}, {VarId("v"), X() + Y()}}, grammars::g2()));
  EXPECT_TRUE(transform_check(grammars::g7(),
                              {{VarId("u"), X() + Y() + Z()}, {VarId("v"), X() * Y() + Y() * Z() + Z() * X()},
                               {VarId("w"), X() * Y() * Z()}},
                              grammars::g8()));
  EXPECT_FALSE(transform_check(g1, {{VarId("u"), X() * Y()}, {VarId("v"), X() + Y()}}, grammars::g4()));
  EXPECT_TRUE(transform_check(g1, {{VarId("u"), Rational(2) * X() * Y()}, {VarId("v"), X() + Y()}}, grammars::g4()));
}

TEST(Grammar, G10FromG9) {
  for (int k = 1; k <= 4; ++k) {
    Substitution defs = symmetric_expansion(k);
    defs.emplace(indexed_var("x", 1), Poly(indexed_var("x", 1)));
    EXPECT_TRUE(transform_check(grammars::g9(k), defs, grammars::g10(k))) << k;
    for (int n = 1; n <= k + 2; ++n) {
      const Poly x1(indexed_var("x", 1));
      EXPECT_EQ(subst(grammars::g10(k).iterate(x1, n), symmetric_expansion(k)), grammars::g9(k).iterate(x1, n));
    }
  }
}

TEST(Grammar, ByName) {
  EXPECT_EQ(grammars::by_name("G1").rules(), grammars::g1().rules());
  EXPECT_EQ(grammars::by_name("G9:3").rules(), grammars::g9(3).rules());
  EXPECT_EQ(grammars::by_name("G10:2").rules(), grammars::g10(2).rules());
  EXPECT_THROW(grammars::by_name("G11"), InvalidParamError);
  EXPECT_THROW(grammars::by_name("G9"), InvalidParamError);
  EXPECT_THROW(grammars::by_name("G9:0"), InvalidParamError);
}

TEST(GrammarProperty, DeriveIsADerivation) {
  std::mt19937 rng(11);
  const std::vector<Grammar> gs{grammars::g1(), grammars::g5(), grammars::g7()};
  for (int trial = 0; trial < 60; ++trial) {
    const Poly p = random_poly(rng, {"x", "y", "z", "s"}, 4, 2);
    const Poly q = random_poly(rng, {"x", "y", "z", "L"}, 4, 2);
    for (const auto& g : gs) {
      EXPECT_EQ(g.derive(p * q), g.derive(p) * q + p * g.derive(q));
      EXPECT_EQ(g.derive(p + q), g.derive(p) + g.derive(q));
    }
  }
}

}  // namespace
}  // namespace eulab
