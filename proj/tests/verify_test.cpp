#include <gtest/gtest.h>

#include <algorithm>

#include "eulab/errors.hpp"
#include "eulab/permstats.hpp"
#include "eulab/poly_json.hpp"
#include "eulab/verify.hpp"

namespace eulab {
namespace {

class CatalogIdentity : public ::testing::TestWithParam<std::string> {};

TEST_P(CatalogIdentity, PassesAtDefaultRange) {
  const IdentityReport r = verify_identity(GetParam());
  EXPECT_EQ(r.status, ReportStatus::pass) << report_to_json(r).dump(2);
  EXPECT_GT(r.checks, 0);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& info : identity_catalog()) out.push_back(info.name);
  return out;
}

INSTANTIATE_TEST_SUITE_P(All, CatalogIdentity, ::testing::ValuesIn(catalog_names()),
                         [](const auto& info) {
                           std::string name = info.param;
                           std::replace(name.begin(), name.end(), '-', '_');
                           return name;
                         });

TEST(Verify, CatalogIsComplete) {
  EXPECT_EQ(catalog_names(),
            (std::vector<std::string>{"andre", "chenfu-esym", "cn2-closed-form", "convolution", "diaconis",
                                      "final-corollary", "forest-gamma", "frobenius", "gamma-2n-2n", "gamma-eulerian",
                                      "gamma-xy-closed-form", "histogram-independence", "kth-grammar", "mainthm-esym",
                                      "partial-gamma", "roselle", "second-order-grammar", "stembridge",
                                      "transform-catalog", "trivariate-egf", "trivariate-grammar", "trivariate-pde"}));
}

TEST(Verify, SmallRanges) {
  EXPECT_EQ(verify_identity("diaconis", {6, {}}).status, ReportStatus::pass);
  EXPECT_EQ(verify_identity("frobenius", {1, {}}).status, ReportStatus::pass);
  EXPECT_EQ(verify_identity("mainthm-esym", {5, 3}).status, ReportStatus::pass);
}

TEST(Verify, UnknownIdentity) { EXPECT_THROW(verify_identity("no-such-identity"), UnknownIdentityError); }

TEST(Verify, SizeGuardIsReported) {
  const IdentityReport r = verify_identity("trivariate-grammar", {11, {}});
  EXPECT_EQ(r.status, ReportStatus::size_guard);
  EXPECT_NE(r.message.find("guard"), std::string::npos);
  EXPECT_EQ(report_to_json(r)["status"], "size-guard");
}

TEST(Verify, ReportJson) {
  const IdentityReport r = verify_identity("frobenius", {3, {}});
  const auto j = report_to_json(r);
  EXPECT_EQ(j["identity"], "frobenius");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["range"], "n<=3");
  EXPECT_FALSE(j.contains("counterexample"));
}

TEST(Table, SecondOrderCsv) {
  EXPECT_EQ(render_table("second-order", 5, {}, TableFormat::csv),
            "n,k,value\n5,1,\"1\"\n5,2,\"52\"\n5,3,\"328\"\n5,4,\"444\"\n5,5,\"120\"\n");
}

TEST(Table, EulerianFirstRow) {
  EXPECT_EQ(parse_poly(render_table("eulerian", 1, {}, TableFormat::json)), Poly(1L));
  EXPECT_EQ(render_table("eulerian", 1, {}, TableFormat::csv), "n,k,value\n1,0,\"1\"\n");
}

TEST(Table, GammaNij) {
  const std::string csv = render_table("gamma-nij", 4, {}, TableFormat::csv);
  EXPECT_NE(csv.find("4,0,2,\"4\"\n"), std::string::npos);
  EXPECT_EQ(csv.rfind("n,i,j,value\n", 0), 0u);
}

TEST(Table, BigValuesAreQuoted) {
  const std::string big = triangle_get(TriangleKind::eulerian, 30, 15).get_str();
  ASSERT_GT(big.size(), 20u);
  EXPECT_NE(render_table("eulerian", 30, {}, TableFormat::csv).find("30,15,\"" + big + "\"\n"), std::string::npos);
}

TEST(Table, Deterministic) {
  for (const char* name : {"eulerian", "trivariate", "second-order", "gamma-nij", "gamma-histogram", "andre"}) {
    for (auto f : {TableFormat::json, TableFormat::csv})
      EXPECT_EQ(render_table(name, 5, {}, f), render_table(name, 5, {}, f)) << name;
  }
  EXPECT_EQ(render_table("kth-order", 3, 3, TableFormat::json), render_table("kth-order", 3, 3, TableFormat::json));
}

TEST(Table, Errors) {
  EXPECT_THROW(render_table("nope", 3, {}, TableFormat::csv), InvalidParamError);
  EXPECT_THROW(render_table("kth-order", 3, {}, TableFormat::csv), InvalidParamError);
  EXPECT_THROW(render_table("trivariate", 11, {}, TableFormat::csv), SizeLimitError);
  EXPECT_THROW(render_table("gamma-nij", 13, {}, TableFormat::csv), OutOfRangeError);
  EXPECT_THROW(render_table("eulerian", 61, {}, TableFormat::csv), SizeLimitError);
}

TEST(Expand, RunExpandAndJson) {
  const Poly a4 = parse_poly(render_table("eulerian", 4, {}, TableFormat::json));
  const Expansion e = run_expand({Basis::gamma, {}, "x", {}}, a4);
  EXPECT_EQ(expansion_to_json(e).dump(),
            R"({"basis":"gamma","coeffs":[{"coeff":"1","index":[0]},{"coeff":"8","index":[1]}]})");
  const Poly tri = parse_poly(render_table("trivariate", 4, {}, TableFormat::json));
  EXPECT_EQ(expansion_to_json(run_expand({Basis::partial_gamma, {}, "x", {}}, tri)).dump(),
            R"({"basis":"partial-gamma","coeffs":[{"coeff":"1","index":[0,1]},{"coeff":"3","index":[1,1]},{"coeff":"1","index":[3,0]}]})");
}

}  // namespace
}  // namespace eulab
