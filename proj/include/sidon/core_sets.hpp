#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "sidon/integer_set.hpp"

namespace sidon {

/// R_{h,A}(n) for every n <= n_max. Absent keys mean zero representations.
struct RepProfile {
  Int n_max = 0;
  std::map<Int, std::uint64_t> counts;

  std::uint64_t at(Int n) const;
  std::uint64_t max_count() const;
};

/// Number of multisets {a_1 <= ... <= a_h} drawn from A with sum n.
/// Only h in {2, 3, 4} is supported; anything else throws std::invalid_argument.
std::uint64_t rep_count(const IntegerSet& a, int h, Int n);

RepProfile rep_profile(const IntegerSet& a, int h, Int n_max);

/// Number of ordered pairs (a, b), a in A, b in B, with a + b = n.
std::uint64_t rep_count_two_sets(const IntegerSet& a, const IntegerSet& b, Int n);

/// Sum over n <= limit of rep_count_two_sets(A, B, n), i.e. #{(a, b) : a + b <= limit}.
std::uint64_t rep_count_two_sets_cumulative(const IntegerSet& a, const IntegerSet& b, Int limit);

bool is_sidon(const IntegerSet& a);
bool is_bhg(const IntegerSet& a, int h, std::uint64_t g);

/// Elements of S_1 + ... + S_k that do not exceed `horizon`, for 1 <= k <= 3.
IntegerSet sumset(std::span<const IntegerSet> sets, Int horizon);
IntegerSet sumset(std::initializer_list<IntegerSet> sets, Int horizon);

/// A(x) = |{a in A : a <= x}|.
std::size_t counting_function(const IntegerSet& a, Int x);

/// Finite-horizon density proxies: A(n_i)/n_i at equally spaced checkpoints
/// n_i = i * N / windows (integer division), i = 1..windows. `min_ratio` stands in
/// for the lower density, `max_ratio` for the upper density.
struct DensityReport {
  Int horizon = 0;
  std::vector<Int> checkpoints;
  std::vector<double> ratios;
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

DensityReport density_report(const IntegerSet& a, Int horizon, std::size_t window_count);

/// First k terms of the Mian-Chowla sequence 1, 2, 4, 8, 13, ...
IntegerSet greedy_sidon(std::size_t k);

}  // namespace sidon
