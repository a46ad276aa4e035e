#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sidon/brute_force.hpp"
#include "sidon/core_sets.hpp"
#include "sidon/quadrature.hpp"
#include "sidon/random_model.hpp"

namespace sidon {
namespace {

IntegerSet random_subset(std::mt19937_64& rng, Int limit, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Int> v;
  for (Int n = 1; n <= limit; ++n)
    if (keep(rng)) v.push_back(n);
  return IntegerSet(std::move(v));
}

TEST(Params, Validation) {
  EXPECT_THROW((RandomModelParams{-0.1, 10, 1}.validate()), std::invalid_argument);
  EXPECT_THROW((RandomModelParams{1.5, 10, 1}.validate()), std::invalid_argument);
  EXPECT_THROW((RandomModelParams{0.5, 0, 1}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((RandomModelParams{0.5, 10, 1}.validate()));
  EXPECT_THROW(generate({0.5, kMaxSamplingHorizon + 1, 1}), std::invalid_argument);
}

TEST(InclusionProbability, PowerLaw) {
  EXPECT_DOUBLE_EQ(inclusion_probability(1.0, 1), 1.0);
  EXPECT_NEAR(inclusion_probability(0.5, 8), 0.125, 1e-15);
  EXPECT_NEAR(inclusion_probability(0.5, 1000), 0.005, 1e-15);
}

TEST(Generate, ZeroAndFullCoefficient) {
  EXPECT_TRUE(generate({0.0, 100000, 3}).empty());
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    EXPECT_TRUE(generate({1.0, 50, seed}).contains(1));
}

TEST(Generate, DeterministicAndSeedSensitive) {
  const auto a = generate({0.5, 1'000'000, 42});
  EXPECT_EQ(a, generate({0.5, 1'000'000, 42}));
  EXPECT_NE(a, generate({0.5, 1'000'000, 43}));
}

TEST(Generate, PrefixConsistentAcrossHorizons) {
  const auto big = generate({0.7, 200000, 9});
  EXPECT_EQ(generate({0.7, 5000, 9}), big.truncated(5000));
}

TEST(Generate, GrowthOfCountingFunction) {
  const Int horizon = 1'000'000;
  int inside = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const double ratio = static_cast<double>(generate({0.5, horizon, seed}).size()) / 150.0;
    inside += (ratio >= 0.8 && ratio <= 1.2);
  }
  EXPECT_GE(inside, 95);
}

TEST(ExtractT, Examples) {
  EXPECT_EQ(extract_T({1, 2, 3, 4}), IntegerSet({3, 4}));
  EXPECT_EQ(extract_T({1, 2}), IntegerSet{});
  EXPECT_EQ(extract_T({1, 2, 4, 8, 13}), IntegerSet{});
}

TEST(ExtractT, MatchesBruteForceAndLeavesSidonRemainder) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto s = random_subset(rng, 300, 0.06 + 0.002 * trial);
    const auto t = extract_T(s);
    ASSERT_EQ(t, brute::extract_T(s));
    EXPECT_TRUE(t.is_subset_of(s));
    EXPECT_TRUE(is_sidon(s.without(t)));
    EXPECT_LE(t.size(), z_statistic(s, s.empty() ? 1 : s.max()));
  }
}

TEST(ExtractT, MembershipDependsOnlyOnSmallerElements) {
  std::mt19937_64 rng(22);
  const auto s = random_subset(rng, 2000, 0.05);
  const auto t = extract_T(s);
  for (Int cut : {100u, 500u, 1000u, 1500u})
    EXPECT_EQ(extract_T(s.truncated(cut)), t.truncated(cut));
}

TEST(Prune, Examples) {
  EXPECT_EQ(prune({1, 2, 3, 4}), IntegerSet({1, 2}));
  EXPECT_EQ(prune({}), IntegerSet{});
  EXPECT_EQ(prune(greedy_sidon(20)), greedy_sidon(20));
}

TEST(Prune, RandomSequencesBecomeSidon) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = realize({0.6, 200000, seed});
    EXPECT_TRUE(is_sidon(g.remainder));
    EXPECT_EQ(g.remainder, g.s.without(g.t));
    EXPECT_LE(g.t.size(), z_statistic(g.s, 200000));
  }
}

TEST(ZStatistic, Examples) {
  EXPECT_EQ(z_statistic({1, 2, 3, 4}, 4), 3u);
  EXPECT_EQ(z_statistic(greedy_sidon(30), 1000), 0u);
  EXPECT_EQ(z_statistic({1, 2, 3}, 3), 1u);
}

TEST(ZStatistic, MatchesBruteForce) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = random_subset(rng, 150, 0.08);
    for (Int horizon : {40u, 90u, 150u}) ASSERT_EQ(z_statistic(s, horizon), brute::z_statistic(s, horizon));
  }
}

TEST(ExpectedZ, Examples) {
  EXPECT_EQ(expected_z(0.0, 5000).value, 0.0);
  const double p = -2.0 / 3.0;
  const double three_terms = std::pow(4.0 * 1, p) * std::pow(2.0 * 3, p) +
                             std::pow(3.0 * 1, p) * std::pow(2.0, p) +
                             std::pow(4.0 * 2, p) * std::pow(3.0, p);
  EXPECT_NEAR(expected_z(1.0, 4).value, three_terms, 1e-14);
}

TEST(ExpectedZ, FrozenOracleValues) {
  // Independent O(N^4)-free summation in extended precision.
  const auto z = expected_z(0.5, 10'000);
  EXPECT_FALSE(z.approximate);
  EXPECT_NEAR(z.value, 12.105596271267695, 1e-9);
  EXPECT_NEAR(z.e1, 0.125 * 13.301162183707802, 1e-10);
}

TEST(ExpectedZ, SmallHorizonsMatchBruteForceEnumeration) {
  for (Int horizon : {5u, 12u, 30u}) {
    const double c = 0.8;
    // Enumerate every admissible configuration directly.
    double expect = 0.0;
    const auto prob = [&](Int n) { return inclusion_probability(c, n); };
    for (Int x1 = 1; x1 <= horizon; ++x1)
      for (Int x2 = 1; x2 < x1; ++x2)
        for (Int x3 = 1; x3 < x2; ++x3) {
          if (2 * x2 == x1 + x3) expect += prob(x1) * prob(x2) * prob(x3);
          for (Int x4 = 1; x4 < x3; ++x4)
            if (x1 + x4 == x2 + x3) expect += prob(x1) * prob(x2) * prob(x3) * prob(x4);
        }
    EXPECT_NEAR(expected_z(c, horizon).value, expect, 1e-12 * (1 + expect)) << horizon;
  }
}

TEST(ExpectedZ, ComparableToQuadratureScale) {
  const double c = 0.5;
  const Int horizon = 10'000;
  const double scale = std::pow(c, 4) * integrate_singular().value * std::cbrt(double(horizon));
  const double ratio = expected_z(c, horizon).value / scale;
  EXPECT_GT(ratio, 0.7);
  EXPECT_LT(ratio, 1.3);
}

TEST(ExpectedZ, BudgetAndApproximation) {
  EXPECT_THROW(expected_z(0.5, kExactExpectationLimit + 1), std::invalid_argument);
  const auto z = expected_z(0.5, 1'000'000, Estimation::AllowEstimate);
  EXPECT_TRUE(z.approximate);
  EXPECT_GT(z.value, expected_z(0.5, kExactExpectationLimit).value);
  EXPECT_THROW(expected_z(-1.0, 10), std::invalid_argument);
}

TEST(RiemannSum, Examples) {
  EXPECT_EQ(riemann_sum_e2(2), 0.0);
  EXPECT_THROW(riemann_sum_e2(1), std::invalid_argument);
  EXPECT_THROW(riemann_sum_e2(kRiemannLimit + 1), std::invalid_argument);
}

TEST(RiemannSum, FrozenOracleValues) {
  EXPECT_NEAR(riemann_sum_e2(250), 4.159435012438357, 1e-10);
  EXPECT_NEAR(riemann_sum_e2(500), 4.973972164615076, 1e-10);
  EXPECT_NEAR(riemann_sum_e2(1000), 5.732172093449951, 1e-10);
  EXPECT_NEAR(riemann_sum_e2(2000), 6.423488739444909, 1e-10);
}

TEST(RiemannSum, MatchesDirectEvaluationOfIntegrand) {
  for (Int n : {3u, 10u, 40u}) {
    const double nn = static_cast<double>(n);
    double sum = 0.0;
    for (Int x1 = 1; x1 <= n; ++x1)
      for (Int x4 = 1; x4 < x1; ++x4)
        for (Int x2 = x4 + 1; 2 * x2 < x1 + x4; ++x2) sum += evaluate_f(x1 / nn, x4 / nn, x2 / nn);
    const double expect = sum / (nn * nn * nn);
    EXPECT_NEAR(riemann_sum_e2(n), expect, 1e-12 * (1 + expect)) << n;
  }
}

TEST(RiemannSum, IncreasesTowardIntegral) {
  double prev = 0.0;
  for (Int n : {100u, 200u, 400u, 800u, 1600u}) {
    const double r = riemann_sum_e2(n);
    EXPECT_GT(r, prev);
    EXPECT_LT(r, 10.786025121406);
    prev = r;
  }
}

}  // namespace
}  // namespace sidon
