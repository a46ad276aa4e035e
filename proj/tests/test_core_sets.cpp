#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "sidon/brute_force.hpp"
#include "sidon/core_sets.hpp"

namespace sidon {
namespace {

IntegerSet random_subset(std::mt19937_64& rng, Int limit, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<Int> v;
  for (Int n = 1; n <= limit; ++n)
    if (keep(rng)) v.push_back(n);
  return IntegerSet(std::move(v));
}

TEST(RepCount, Examples) {
  EXPECT_EQ(rep_count({1, 2, 4, 8, 13}, 2, 9), 1u);
  EXPECT_EQ(rep_count({}, 2, 5), 0u);
  EXPECT_EQ(rep_count({1, 2, 3}, 2, 4), 2u);
  EXPECT_EQ(rep_count({1, 2, 3}, 3, 6), 2u);  // 1+2+3, 2+2+2
  EXPECT_EQ(rep_count({1, 2}, 4, 6), 1u);     // 1+1+2+2 only
}

TEST(RepCount, UnsupportedOrder) {
  EXPECT_THROW(rep_count({1}, 1, 1), std::invalid_argument);
  EXPECT_THROW(rep_count({1}, 5, 5), std::invalid_argument);
}

TEST(RepCount, MatchesBruteForceOnRandomSets) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_subset(rng, 60, 0.3);
    for (int h = 2; h <= 4; ++h)
      for (Int n = 0; n <= 4 * 60; n += (h == 4 ? 7 : 1))
        ASSERT_EQ(rep_count(a, h, n), brute::rep_count(a, h, n)) << "h=" << h << " n=" << n;
  }
}

TEST(RepProfile, AgreesWithPointQueries) {
  const IntegerSet a{1, 3, 4, 9, 10};
  const auto profile = rep_profile(a, 2, 25);
  for (Int n = 0; n <= 25; ++n) EXPECT_EQ(profile.at(n), rep_count(a, 2, n));
  EXPECT_EQ(profile.max_count(), 2u);  // 13 = 3+10 = 4+9
}

TEST(RepCountTwoSets, Examples) {
  EXPECT_EQ(rep_count_two_sets({1, 2}, {3}, 4), 1u);
  EXPECT_EQ(rep_count_two_sets({1}, {1}, 2), 1u);
  EXPECT_EQ(rep_count_two_sets({1, 2, 3}, {1, 2, 3}, 4), 3u);
}

TEST(RepCountTwoSets, MatchesBruteForce) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_subset(rng, 80, 0.4);
    const auto b = random_subset(rng, 80, 0.2);
    std::uint64_t total = 0;
    for (Int n = 0; n <= 170; ++n) {
      const auto r = brute::rep_count_two_sets(a, b, n);
      ASSERT_EQ(rep_count_two_sets(a, b, n), r);
      if (n <= 100) total += r;
    }
    EXPECT_EQ(rep_count_two_sets_cumulative(a, b, 100), total);
  }
}

TEST(IsSidon, Examples) {
  EXPECT_TRUE(is_sidon({1, 2, 4, 8, 13}));
  EXPECT_TRUE(is_sidon({}));
  EXPECT_FALSE(is_sidon({1, 2, 3}));
}

TEST(IsSidon, AgreesWithBruteForceAndB2g1) {
  std::mt19937_64 rng(13);
  int sidon_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_subset(rng, 200, 0.03);
    const bool s = is_sidon(a);
    sidon_count += s;
    ASSERT_EQ(s, brute::is_sidon(a));
    ASSERT_EQ(s, is_bhg(a, 2, 1));
  }
  EXPECT_GT(sidon_count, 0);
  EXPECT_LT(sidon_count, 300);
}

TEST(IsBhg, Examples) {
  EXPECT_TRUE(is_bhg({1, 2, 3}, 2, 2));
  EXPECT_FALSE(is_bhg({1, 2, 3}, 2, 1));
  EXPECT_TRUE(is_bhg({5}, 2, 1));
  EXPECT_THROW(is_bhg({5}, 2, 0), std::invalid_argument);
}

TEST(Sumset, Examples) {
  EXPECT_EQ(sumset({IntegerSet{1, 2}, IntegerSet{1, 2}}, 10), IntegerSet({2, 3, 4}));
  EXPECT_EQ(sumset({IntegerSet{1, 2}, IntegerSet{1, 2}, IntegerSet{1, 2}}, 4), IntegerSet({3, 4}));
  EXPECT_EQ(sumset({IntegerSet{}}, 10), IntegerSet{});
}

TEST(Sumset, MatchesBruteForceAndIsMonotone) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_subset(rng, 100, 0.1);
    const auto b = random_subset(rng, 100, 0.1);
    const Int horizon = 150;
    const auto abb = sumset({a, b, b}, horizon);
    ASSERT_EQ(abb, brute::sumset({a, b, b}, horizon));
    ASSERT_EQ(sumset({a, b}, horizon), brute::sumset({a, b}, horizon));

    std::vector<Int> merged(a.begin(), a.end());
    merged.insert(merged.end(), b.begin(), b.end());
    const auto bigger = IntegerSet::from_unsorted(merged);
    EXPECT_TRUE(abb.is_subset_of(sumset({bigger, bigger, bigger}, horizon)));

    const auto aaa = sumset({a, a, a}, horizon);
    const double cube = std::pow(static_cast<double>(a.size()), 3);
    EXPECT_LE(static_cast<double>(aaa.size()), std::min<double>(horizon, cube));
  }
}

TEST(CountingFunction, Examples) {
  EXPECT_EQ(counting_function({1, 5, 9}, 5), 2u);
  EXPECT_EQ(counting_function({1, 5, 9}, 0), 0u);
  EXPECT_EQ(counting_function({2, 4, 6, 8}, 7), 3u);
}

TEST(CountingFunction, MonotoneInX) {
  std::mt19937_64 rng(15);
  const auto a = random_subset(rng, 500, 0.2);
  std::size_t prev = 0;
  for (Int x = 0; x <= 510; ++x) {
    const auto v = counting_function(a, x);
    EXPECT_GE(v, prev);
    prev = v;
  }
  EXPECT_EQ(prev, a.size());
}

TEST(DensityReport, Examples) {
  std::vector<Int> all(100);
  for (Int i = 0; i < 100; ++i) all[i] = i + 1;
  const auto full = density_report(IntegerSet(all), 100, 7);
  for (double r : full.ratios) EXPECT_DOUBLE_EQ(r, 1.0);

  std::vector<Int> evens;
  for (Int i = 2; i <= 100; i += 2) evens.push_back(i);
  const auto even = density_report(IntegerSet(evens), 100, 2);
  ASSERT_EQ(even.checkpoints, (std::vector<Int>{50, 100}));
  EXPECT_DOUBLE_EQ(even.ratios[0], 0.5);
  EXPECT_DOUBLE_EQ(even.ratios[1], 0.5);

  const auto one = density_report({1, 2, 4, 8, 13}, 13, 1);
  ASSERT_EQ(one.ratios.size(), 1u);
  EXPECT_DOUBLE_EQ(one.ratios[0], 5.0 / 13.0);
}

TEST(GreedySidon, Examples) {
  EXPECT_EQ(greedy_sidon(1), IntegerSet({1}));
  const auto g = greedy_sidon(10);
  EXPECT_EQ(g, IntegerSet({1, 2, 4, 8, 13, 21, 31, 45, 66, 81}));
  EXPECT_TRUE(is_sidon(g));
}

TEST(GreedySidon, PrefixStableAndCubicallyBounded) {
  const auto g50 = greedy_sidon(50);
  ASSERT_EQ(g50.size(), 50u);
  EXPECT_TRUE(is_sidon(g50));
  EXPECT_EQ(greedy_sidon(25), brute::greedy_sidon(25));
  for (std::size_t k = 1; k <= 50; ++k) {
    EXPECT_EQ(greedy_sidon(k), g50.truncated(g50[k - 1]));
    EXPECT_LE(g50[k - 1], static_cast<Int>(k * k * k));
  }
}

}  // namespace
}  // namespace sidon
