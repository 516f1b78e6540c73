#include <gtest/gtest.h>

#include "gkspec/verify.hpp"

using gkspec::GroupSpec;

namespace {

bool has(const std::vector<GroupSpec>& family, const std::string& name) {
  return std::any_of(family.begin(), family.end(), [&](const GroupSpec& g) { return g.describe() == name; });
}

const gkspec::Check& find(const gkspec::SuiteReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::out_of_range(name);
}

}  // namespace

TEST(SolvableFamily, Examples) {
  const auto f25 = gkspec::solvable_family(25);
  EXPECT_TRUE(has(f25, "C24"));
  EXPECT_TRUE(has(f25, "F(5,2,4)"));
  EXPECT_TRUE(has(f25, "F(7,2,3)"));
  const auto f1 = gkspec::solvable_family(1);
  ASSERT_EQ(f1.size(), 1u);
  EXPECT_EQ(f1[0].describe(), "C1");
  // The product has order 21 * 39 = 819.
  EXPECT_FALSE(has(gkspec::solvable_family(818), "F(7,2,3) x F(13,3,3)"));
  EXPECT_TRUE(has(gkspec::solvable_family(819), "F(7,2,3) x F(13,3,3)"));
  EXPECT_THROW(gkspec::solvable_family(0), gkspec::RangeError);
  EXPECT_THROW(gkspec::solvable_family(10001), gkspec::RangeError);
}

TEST(SolvableFamily, DeterministicUniqueAndUnderCap) {
  const auto a = gkspec::solvable_family(400);
  const auto b = gkspec::solvable_family(400);
  ASSERT_EQ(a.size(), b.size());
  std::set<std::string> names;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ASSERT_EQ(a[i].describe(), b[i].describe());
    EXPECT_TRUE(names.insert(a[i].describe()).second) << a[i].describe();
    EXPECT_LE(gkspec::group_order(a[i]), 400u) << a[i].describe();
  }
  EXPECT_GE(a.size(), 400u);
}

TEST(SolvableFamily, FrobeniusOnePerSubgroupWithLeastGenerator) {
  // Units of Z_7 of order 3 are 2 and 4, generating the same subgroup.
  const auto f = gkspec::frobenius_family(100);
  EXPECT_TRUE(has(f, "F(7,2,3)"));
  EXPECT_FALSE(has(f, "F(7,4,3)"));
  EXPECT_TRUE(has(f, "F(7,6,2)"));
  EXPECT_TRUE(has(f, "F(7,3,6)"));
  EXPECT_FALSE(has(f, "F(7,5,6)"));
  // C_15 admits only the inversion: any t of order > 2 fixes a point.
  EXPECT_TRUE(has(f, "F(15,14,2)"));
  EXPECT_FALSE(has(f, "F(15,2,4)"));
}

TEST(SolvableFamily, EveryMemberIsSolvableWithSmallPrimeGraphCoclique) {
  for (const GroupSpec& g : gkspec::solvable_family(200)) {
    ASSERT_TRUE(gkspec::is_solvable(g)) << g.describe();
    const auto s = gkspec::spectrum_of(g);
    EXPECT_LE(gkspec::max_coclique(gkspec::prime_graph(s)).size, 2u) << g.describe();
    EXPECT_FALSE(gkspec::nonsolvability_criterion(s)) << g.describe();
  }
}

TEST(ThreePrimeInstance, SolvableWithAllPairwiseProducts) {
  const GroupSpec g = gkspec::three_prime_counterexample();
  const auto e = gkspec::enumerate(g);
  EXPECT_EQ(e.order(), 819u);
  EXPECT_TRUE(e.is_solvable());
  const auto s = e.spectrum();
  EXPECT_EQ(s.mu(), (std::vector<gkspec::u128>{21, 39, 91}));
  EXPECT_FALSE(s.contains(273));
}

TEST(Suites, NamesAndUnknown) {
  EXPECT_EQ(gkspec::suite_names().size(), 5u);
  EXPECT_THROW(gkspec::run_suite("nope"), gkspec::InvalidInput);
}

TEST(Suites, Sz8MasterPasses) {
  const auto r = gkspec::run_suite("sz8-master");
  EXPECT_TRUE(r.passed()) << r.table();
  EXPECT_EQ(find(r, "sz8-mu-enumerated").actual, "[4,5,7,13]");
  EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(),
                             [](const auto& a, const auto& b) { return a.name < b.name; }));
}

TEST(Suites, RecognitionPasses) {
  const auto r = gkspec::run_suite("recognition");
  EXPECT_TRUE(r.passed()) << r.table();
}

TEST(Suites, BoundsPasses) {
  const auto r = gkspec::run_suite("bounds");
  EXPECT_TRUE(r.passed()) << r.table();
}

TEST(Suites, SolvableSweepAtSmallCapPasses) {
  gkspec::SuiteOptions opts;
  opts.sweep_cap = 1000;
  const auto r = gkspec::run_suite("solvable-sweep", opts);
  EXPECT_TRUE(r.passed()) << r.table();
}

TEST(Suites, ZsigmondyReportsTheCompositeBaseFifteen) {
  const auto r = gkspec::run_suite("zsigmondy");
  const auto& c = find(r, "exceptions");
  EXPECT_EQ(c.expected, "(2,6)(3,2)(7,2)(31,2)");
  EXPECT_EQ(c.actual, "(2,6)(3,2)(7,2)(15,2)(31,2)");
  EXPECT_FALSE(c.pass);
  EXPECT_TRUE(find(r, "returned-primes-have-order-n").pass);
}

TEST(SuiteReport, TableAndJson) {
  gkspec::SuiteReport r{"demo", {{"a", "1", "1", true}, {"b", "2", "3", false}}, 0.5};
  EXPECT_FALSE(r.passed());
  const auto j = gkspec::to_json(r);
  EXPECT_EQ(j.at("suite"), "demo");
  EXPECT_EQ(j.at("passed"), false);
  EXPECT_EQ(j.at("checks").size(), 2u);
  EXPECT_NE(r.table().find("FAIL b"), std::string::npos);
}
