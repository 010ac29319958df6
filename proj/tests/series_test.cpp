#include <gtest/gtest.h>

#include "eulab/errors.hpp"
#include "eulab/expand.hpp"
#include "eulab/series.hpp"
#include "test_util.hpp"

namespace eulab {
namespace {

using testing::random_poly;
using testing::S;
using testing::ux;
using testing::X;
using testing::Y;

TEST(Series, ExpOfLinear) {
  const Series e = exp(Series::linear(S(), 2));
  EXPECT_EQ(e[0], Poly(1L));
  EXPECT_EQ(e[1], S());
  EXPECT_EQ(e[2], Rational(1, 2) * S() * S());
}

TEST(Series, DerangementQuotient) {
  const int order = 3;
  const Series num = Series::constant(Poly(1L) - X(), order);
  const Series den = exp(Series::linear(X(), order)) - X() * exp(Series::linear(Poly(1L), order));
  const Series d = divide(num, den);
  EXPECT_EQ(egf_coefficient(d, 3), X() + X() * X());
}

TEST(Series, PolynomialConstantTermDivision) {
  // e^{z(y+s)} ((y-x)/(y e^{xz} - x e^{yz}))^2, whose divisor starts with y - x
  const int order = 3;
  const Series base = divide(Series::constant(Y() - X(), order),
                             Y() * exp(Series::linear(X(), order)) - X() * exp(Series::linear(Y(), order)));
  const Series a = exp(Series::linear(Y() + S(), order)) * base * base;
  const Poly t = S() + Y();
  EXPECT_EQ(egf_coefficient(a, 3), pow(t, 3) + Rational(6) * X() * Y() * t + Rational(2) * X() * Y() * (X() + Y()));
}

TEST(Series, Errors) {
  const Series zero(3);
  EXPECT_THROW(divide(Series::constant(Poly(1L), 3), zero), NonInvertibleConstantTermError);
  EXPECT_THROW(divide(Series::constant(Poly(1L), 3), Series::constant(X(), 3)), NonInvertibleConstantTermError);
  EXPECT_THROW(exp(Series::constant(Poly(1L), 3)), NonzeroConstantTermError);
  EXPECT_THROW(compose(exp(Series::linear(Poly(1L), 3)), Series::constant(Poly(1L), 3)), NonzeroConstantTermError);
}

TEST(Series, MixedOrdersTruncate) {
  const Series a = exp(Series::linear(Poly(1L), 5));
  const Series b = exp(Series::linear(Poly(1L), 3));
  EXPECT_EQ((a * b).order(), 3);
  EXPECT_EQ((a + b).order(), 3);
  EXPECT_EQ(diff_z(a).order(), 4);
}

TEST(Series, SinCos) {
  const int order = 8;
  const Series s = sin_series(order), c = cos_series(order);
  const Series one = s * s + c * c;
  EXPECT_EQ(one[0], Poly(1L));
  for (int n = 1; n <= order; ++n) EXPECT_TRUE(one[n].is_zero()) << n;
  EXPECT_EQ(diff_z(s), c.truncate(order - 1));
}

TEST(Series, ComposeExpLog) {
  // exp(e^z - 1) gives the Bell numbers
  const int order = 6;
  const Series inner = exp(Series::linear(Poly(1L), order)) - Series::constant(Poly(1L), order);
  const Series bell = compose(exp(Series::linear(Poly(1L), order)), inner);
  const std::vector<long> expected{1, 1, 2, 5, 15, 52, 203};
  for (int n = 0; n <= order; ++n) EXPECT_EQ(egf_coefficient(bell, n), Poly(expected[n])) << n;
}

Series random_series(std::mt19937& rng, int order, bool zero_constant) {
  Series out(order);
  for (int n = zero_constant ? 1 : 0; n <= order; ++n) out[n] = random_poly(rng, {"x", "y"}, 3, 2);
  return out;
}

TEST(SeriesProperty, DivideThenMultiply) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(1, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const Series a = random_series(rng, 5, false);
    Series b = random_series(rng, 5, true);
    b[0] = Poly(Rational(c(rng), c(rng)));
    EXPECT_EQ(divide(a, b) * b, a);
  }
}

TEST(SeriesProperty, DivideByPolynomialConstant) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Series q = random_series(rng, 4, false);
    Series b = random_series(rng, 4, true);
    b[0] = Y() - X();
    EXPECT_EQ(divide(q * b, b), q);
  }
}

TEST(SeriesProperty, ExpOfSum) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Series a = random_series(rng, 5, true), b = random_series(rng, 5, true);
    EXPECT_EQ(exp(a + b), exp(a) * exp(b));
  }
}

TEST(Egf, DerangementAtOrderZero) {
  const Series d = egf_build(EgfName::derangement, 0);
  EXPECT_EQ(d.order(), 0);
  EXPECT_EQ(d[0], Poly(1L));
}

TEST(Egf, TrivariateFifthCoefficient) {
  const Series a = egf_build(EgfName::trivariate, 5);
  const Poly t = S() + Y(), xy = X() * Y();
  EXPECT_EQ(egf_coefficient(a, 4), pow(t, 4) + Rational(12) * xy * pow(t, 2) + Rational(8) * xy * t * (X() + Y()) +
                                       Rational(2) * xy * pow(X() + Y(), 2) + Rational(16) * xy * xy);
}

TEST(Egf, GammaXyAtOne) {
  const Series g = egf_build(EgfName::gamma_xy, 6, {{"x", Rational(1)}, {"y", Rational(1)}});
  const auto table = gamma_xy_table(6);
  for (int n = 0; n <= 6; ++n)
    EXPECT_EQ(egf_coefficient(g, n), subst(table[n], {{VarId("x"), Poly(1L)}, {VarId("y"), Poly(1L)}})) << n;
}

TEST(Egf, GammaXyNeedsRationalRoot) {
  EXPECT_THROW(egf_build(EgfName::gamma_xy, 4, {{"y", Rational(2)}}), InvalidParamError);
  EXPECT_THROW(egf_build(EgfName::gamma_xy, 4, {}), InvalidParamError);
  EXPECT_THROW(egf_build(EgfName::gamma_xy, 4, {{"y", Rational(1, 2)}}), InvalidParamError);
}

TEST(Egf, ParamsSubstitute) {
  const Series a = egf_build(EgfName::fixpoint, 4, {{"s", Rational(0)}, {"y", Rational(1)}});
  const Series d = egf_build(EgfName::derangement, 4);
  EXPECT_EQ(a, d);
}

TEST(Egf, Names) {
  for (auto name : {EgfName::trivariate, EgfName::derangement, EgfName::fixpoint, EgfName::bivariate,
                    EgfName::no_succession, EgfName::gamma_xy})
    EXPECT_EQ(egf_name_from_string(to_string(name)), name);
  EXPECT_THROW(egf_name_from_string("nope"), InvalidParamError);
}

TEST(RationalSqrt, Cases) {
  EXPECT_EQ(rational_sqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_EQ(rational_sqrt(Rational(0)), Rational(0));
  EXPECT_FALSE(rational_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(rational_sqrt(Rational(-1)).has_value());
}

}  // namespace
}  // namespace eulab
