#include <gtest/gtest.h>

#include "climate_stress/analytics.hpp"
#include "climate_stress/error.hpp"
#include "test_support.hpp"

using namespace climate_stress;
namespace t = climate_stress::testing;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const StressError& e) {
    return e.code();
  }
  return ErrorCode::DomainError;
}

std::vector<CreditRow> rows_with(std::vector<std::pair<std::string, double>> els) {
  std::vector<CreditRow> out;
  for (auto& [id, el] : els) out.push_back({id, 0.0, 0.0, el, 0.0});
  return out;
}

Scenario identity_scenario() {
  Scenario s;
  s.id = "identity";
  return s;
}

}  // namespace

TEST(Hhi, Examples) {
  std::vector<double> equal{0.5, 0.5};
  EXPECT_EQ(hhi(equal), 0.5);
  std::vector<double> single{42.0};
  EXPECT_EQ(hhi(single), 1.0);
  std::vector<double> three{0.6, 0.3, 0.1};
  EXPECT_NEAR(hhi(three), 0.46, 1e-15);
}

TEST(Hhi, Errors) {
  std::vector<double> zeros{0.0, 0.0};
  EXPECT_EQ(code_of([&] { hhi(zeros); }), ErrorCode::AllZero);
  std::vector<double> none;
  EXPECT_EQ(code_of([&] { hhi(none); }), ErrorCode::AllZero);
  std::vector<double> neg{1.0, -0.5};
  EXPECT_EQ(code_of([&] { hhi(neg); }), ErrorCode::DomainError);
}

TEST(GroupEl, SingleGeoGivesOneEntry) {
  auto linked = t::load_linked(t::fixture_files("concentration/concentrated.csv", "concentration"));
  auto credit = portfolio_credit(linked, builtin_scenarios()[2]);
  auto g = group_el(credit.rows, linked, GroupKey::geo);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_NEAR(g.at("g1"), credit.total_el, 1e-9 * credit.total_el);
}

TEST(GroupEl, DistinctSectorsKeepRowValues) {
  auto linked = t::load_linked(t::fixture_files());
  linked.portfolio.instruments.resize(2);
  linked.context.resize(2);
  auto credit = portfolio_credit(linked, builtin_scenarios()[0]);
  auto g = group_el(credit.rows, linked, GroupKey::sector);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g.at("real_estate"), credit.rows[0].el_s);
  EXPECT_EQ(g.at("tourism"), credit.rows[1].el_s);
}

TEST(GroupEl, Misalignment) {
  auto linked = t::load_linked(t::fixture_files());
  auto rows = rows_with({{"L001", 1.0}});
  EXPECT_EQ(code_of([&] { group_el(rows, linked, GroupKey::geo); }), ErrorCode::Misalignment);
}

TEST(TopContributors, SortedDescending) {
  auto rows = rows_with({{"A", 5}, {"B", 9}, {"C", 1}});
  auto top = top_contributors(rows, 2);
  ASSERT_EQ(top.size(), 2u);
  EXPECT_EQ(top[0].id, "B");
  EXPECT_EQ(top[1].id, "A");
  EXPECT_DOUBLE_EQ(top[0].share, 9.0 / 15.0);
}

TEST(TopContributors, TiesBrokenById) {
  auto rows = rows_with({{"B", 5}, {"A", 5}});
  auto top = top_contributors(rows, 1);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top[0].id, "A");
}

TEST(TopContributors, KLargerThanN) {
  auto rows = rows_with({{"A", 1}, {"B", 2}});
  EXPECT_EQ(top_contributors(rows, 10).size(), 2u);
}

TEST(TopContributors, ZeroTotalGivesZeroShares) {
  auto rows = rows_with({{"A", 0}, {"B", 0}});
  for (const auto& c : top_contributors(rows, 2)) EXPECT_EQ(c.share, 0.0);
}

TEST(ConcentrationComparison, SelfComparisonIsOne) {
  auto linked = t::load_linked(t::fixture_files());
  auto r = run_scenario(linked, builtin_scenarios()[3]).result;
  EXPECT_EQ(concentration_comparison(r, r), 1.0);
}

TEST(ConcentrationComparison, Errors) {
  StressResult a{"s", {}, 1.0, 100.0, 0.0};
  StressResult b{"s", {}, 0.0, 100.0, 0.0};
  EXPECT_EQ(code_of([&] { concentration_comparison(a, b); }), ErrorCode::ZeroDenominator);
  StressResult c{"other", {}, 1.0, 100.0, 0.0};
  EXPECT_EQ(code_of([&] { concentration_comparison(a, c); }), ErrorCode::ScenarioMismatch);
  StressResult d{"s", {}, 1.0, 101.0, 0.0};
  EXPECT_EQ(code_of([&] { concentration_comparison(a, d); }), ErrorCode::Misalignment);
}

TEST(ExposureSummary, SingleInstrumentIsFullyConcentrated) {
  auto linked = t::load_linked(t::fixture_files());
  linked.portfolio.instruments.resize(1);
  linked.context.resize(1);
  linked.portfolio.weights = std::vector<double>{1.0};
  auto out = run_scenario(linked, builtin_scenarios()[2]);
  const auto& r = out.report;
  EXPECT_EQ(r.hhi_geo, 1.0);
  EXPECT_EQ(r.hhi_sector, 1.0);
  EXPECT_EQ(r.hhi_channel, 1.0);
  ASSERT_EQ(r.top_contributors.size(), 1u);
  EXPECT_EQ(r.top_contributors[0].share, 1.0);
}

TEST(ExposureSummary, IdentityScenarioGroupsBaselineEl) {
  auto linked = t::load_linked(t::fixture_files());
  auto r = run_scenario(linked, identity_scenario()).report;
  std::map<std::string, double> expected;
  for (std::size_t i = 0; i < linked.size(); ++i) {
    const auto& x = linked.instrument(i);
    expected[x.geo_id] += x.pd0 * x.lgd0 * x.ead;
  }
  ASSERT_EQ(r.el_by_geo.size(), expected.size());
  for (const auto& [g, v] : expected) EXPECT_NEAR(r.el_by_geo.at(g), v, 1e-9 * v) << g;
  EXPECT_EQ(r.collateral_uplift_el, 0.0);
  EXPECT_EQ(r.el_by_hazard_channel.size(), 4u);
}

TEST(ExposureSummary, ZeroLossLeavesHhiUnset) {
  auto linked = t::load_linked(t::fixture_files());
  for (auto& x : linked.portfolio.instruments) x.pd0 = 0.0;
  auto r = run_scenario(linked, builtin_scenarios()[3]).report;
  EXPECT_EQ(r.total_el, 0.0);
  EXPECT_FALSE(r.hhi_geo);
  EXPECT_TRUE(r.hhi_ead_geo);
}

TEST(ExposureSummary, CollateralUpliftUnderPhysicalShock) {
  auto linked = t::load_linked(t::fixture_files());
  auto out = run_scenario(linked, builtin_scenarios()[2]);
  double uplift = 0.0;
  for (std::size_t i = 0; i < linked.size(); ++i) {
    const auto& row = out.result.rows[i];
    uplift += row.pd_s * (row.lgd_s - linked.instrument(i).lgd0) * linked.instrument(i).ead;
  }
  EXPECT_GT(out.report.collateral_uplift_el, 0.0);
  EXPECT_NEAR(out.report.collateral_uplift_el, uplift, 1e-9 * uplift);
}
