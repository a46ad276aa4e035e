#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "sidon/campaign.hpp"
#include "sidon/core_sets.hpp"
#include "sidon/report.hpp"

namespace sidon {
namespace {

TEST(RunTrial, MatchesPipelinePieces) {
  const RandomModelParams p{0.6, 100000, 17};
  const auto row = run_trial(p);
  const auto g = realize(p);
  EXPECT_EQ(row.seed, 17u);
  EXPECT_EQ(row.size_s, g.s.size());
  EXPECT_EQ(row.s_count, counting_function(g.s, p.horizon));
  EXPECT_EQ(row.t_count, g.t.size());
  EXPECT_EQ(row.z, z_statistic(g.s, p.horizon));
  EXPECT_EQ(row.remainder_size, g.remainder.size());
  const auto sss = sumset({g.s, g.s, g.s}, p.horizon);
  EXPECT_DOUBLE_EQ(row.density3_s, static_cast<double>(sss.size()) / p.horizon);
  EXPECT_LE(row.density3_remainder, row.density3_s);
}

TEST(RunTrial, DensityChainHolds) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const RandomModelParams p{0.5, 20000, seed};
    const auto g = realize(p);
    const auto sss = sumset({g.s, g.s, g.s}, p.horizon);
    const auto rem3 = sumset({g.remainder, g.remainder, g.remainder}, p.horizon);
    const auto sst = sumset({g.s, g.s, g.t}, p.horizon);
    for (Int n : sss) EXPECT_TRUE(rem3.contains(n) || sst.contains(n)) << n;
  }
}

TEST(Campaign, SingleTrialReproducesRunTrial) {
  const RandomModelParams p{0.5, 50000, 5};
  const auto report = monte_carlo_campaign(p, 1);
  ASSERT_EQ(report.rows.size(), 1u);
  const auto row = run_trial(p);
  EXPECT_EQ(report.rows[0].z, row.z);
  EXPECT_EQ(report.rows[0].size_s, row.size_s);
  EXPECT_EQ(report.rows[0].density3_s, row.density3_s);
  EXPECT_EQ(report.summary.z.stddev, 0.0);
}

TEST(Campaign, ZeroCoefficientGivesZeros) {
  const auto report = monte_carlo_campaign({0.0, 10000, 1}, 4);
  for (const auto& r : report.rows) {
    EXPECT_EQ(r.size_s, 0u);
    EXPECT_EQ(r.z, 0u);
    EXPECT_EQ(r.density3_s, 0.0);
    EXPECT_EQ(r.density3_remainder, 0.0);
  }
  EXPECT_EQ(report.summary.size_s.mean, 0.0);
}

TEST(Campaign, MeanCountingFunctionNearThreeC) {
  const Int horizon = 1'000'000;
  const auto report = monte_carlo_campaign({0.5, horizon, 1}, 50);
  const double mean = report.summary.s_count.mean / std::cbrt(static_cast<double>(horizon));
  EXPECT_NEAR(mean, 1.5, 0.075);
}

TEST(Campaign, IndependentOfThreadCount) {
  const RandomModelParams p{0.7, 30000, 100};
  const auto a = monte_carlo_campaign(p, 6, {.threads = 1});
  const auto b = monte_carlo_campaign(p, 6, {.threads = 3});
  EXPECT_EQ(campaign_csv(a), campaign_csv(b));
  for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].seed, 100 + i);
}

TEST(Campaign, BudgetAndValidation) {
  EXPECT_THROW(monte_carlo_campaign({0.5, 1000, 1}, 0), std::invalid_argument);
  EXPECT_THROW(monte_carlo_campaign({0.5, 1000, 1}, 10, {.max_draws = 9999}), std::invalid_argument);
  EXPECT_THROW(monte_carlo_campaign({2.0, 1000, 1}, 1), std::invalid_argument);
}

TEST(ColumnStats, SampleStandardDeviation) {
  const auto s = column_stats({1.0, 2.0, 3.0, 4.0});
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_NEAR(s.stddev, std::sqrt(5.0 / 3.0), 1e-15);
  EXPECT_EQ(column_stats({7.0}).stddev, 0.0);
}

TEST(Report, CsvLayoutAndDeterminism) {
  const RandomModelParams p{0.5, 100000, 3};
  const auto csv = campaign_csv(monte_carlo_campaign(p, 3));
  EXPECT_EQ(csv, campaign_csv(monte_carlo_campaign(p, 3)));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "seed,size_S,S_N,size_T,Z_N,density3_S,density3_remainder");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 6);
  }
  EXPECT_EQ(rows, 3);
}

TEST(Report, JsonCarriesSchemaAndGenerator) {
  const auto j = campaign_json(monte_carlo_campaign({0.5, 10000, 3}, 2));
  EXPECT_EQ(j.at("schema_version"), kSchemaVersion);
  EXPECT_EQ(j.at("generator"), std::string(kGeneratorId));
  EXPECT_TRUE(j.at("summary").contains("Z_N"));
}

TEST(Report, RealFormattingIsShortestTwelveDigits) {
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(10.786025121405979), "10.7860251214");
  EXPECT_EQ(format_real(2.0), "2");
}

}  // namespace
}  // namespace sidon
