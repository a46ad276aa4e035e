#include "sidon/core_sets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bitset.hpp"

namespace sidon {

namespace {

void check_order(int h) {
  if (h < 2 || h > 4) {
    throw std::invalid_argument("unsupported summand count h=" + std::to_string(h) +
                                " (supported: 2, 3, 4)");
  }
}

// Pairs j <= k inside v with v[j] + v[k] == target. v is strictly increasing.
std::uint64_t count_pairs(std::span<const Int> v, Int target) {
  std::uint64_t count = 0;
  std::size_t lo = 0;
  std::size_t hi = v.size();  // exclusive
  while (lo < hi) {
    const Int top = v[hi - 1];
    if (top > target) {
      --hi;
      continue;
    }
    const Int need = target - top;
    if (v[lo] < need) {
      ++lo;
    } else if (v[lo] > need) {
      --hi;
    } else {
      ++count;
      ++lo;
      --hi;
    }
  }
  return count;
}

}  // namespace

std::uint64_t RepProfile::at(Int n) const {
  auto it = counts.find(n);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t RepProfile::max_count() const {
  std::uint64_t m = 0;
  for (const auto& [n, c] : counts) m = std::max(m, c);
  return m;
}

std::uint64_t rep_count(const IntegerSet& a, int h, Int n) {
  check_order(h);
  const auto v = a.elements();
  if (h == 2) return count_pairs(v, n);

  std::uint64_t total = 0;
  if (h == 3) {
    for (std::size_t i = 0; i < v.size() && v[i] <= n; ++i) {
      total += count_pairs(v.subspan(i), n - v[i]);
    }
    return total;
  }
  for (std::size_t i = 0; i < v.size() && v[i] <= n; ++i) {
    for (std::size_t j = i; j < v.size() && v[i] + v[j] <= n; ++j) {
      total += count_pairs(v.subspan(j), n - v[i] - v[j]);
    }
  }
  return total;
}

RepProfile rep_profile(const IntegerSet& a, int h, Int n_max) {
  check_order(h);
  RepProfile profile;
  profile.n_max = n_max;
  const auto v = a.elements();
  const std::size_t k = v.size();
  // Enumerate non-decreasing index tuples; each loop stops once the partial sum
  // passes n_max since elements are increasing.
  for (std::size_t i = 0; i < k && v[i] <= n_max; ++i) {
    for (std::size_t j = i; j < k && v[i] + v[j] <= n_max; ++j) {
      const Int s2 = v[i] + v[j];
      if (h == 2) {
        ++profile.counts[s2];
        continue;
      }
      for (std::size_t l = j; l < k && s2 + v[l] <= n_max; ++l) {
        const Int s3 = s2 + v[l];
        if (h == 3) {
          ++profile.counts[s3];
          continue;
        }
        for (std::size_t m = l; m < k && s3 + v[m] <= n_max; ++m) ++profile.counts[s3 + v[m]];
      }
    }
  }
  return profile;
}

std::uint64_t rep_count_two_sets(const IntegerSet& a, const IntegerSet& b, Int n) {
  std::uint64_t count = 0;
  for (Int x : a) {
    if (x >= n) break;
    count += b.contains(n - x);
  }
  return count;
}

std::uint64_t rep_count_two_sets_cumulative(const IntegerSet& a, const IntegerSet& b, Int limit) {
  std::uint64_t total = 0;
  for (Int x : a) {
    if (x >= limit) break;
    total += counting_function(b, limit - x);
  }
  return total;
}

bool is_sidon(const IntegerSet& a) {
  const auto v = a.elements();
  std::vector<Int> sums;
  sums.reserve(v.size() * (v.size() + 1) / 2);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i; j < v.size(); ++j) sums.push_back(v[i] + v[j]);
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

bool is_bhg(const IntegerSet& a, int h, std::uint64_t g) {
  check_order(h);
  if (g < 1) throw std::invalid_argument("is_bhg: g must be >= 1");
  if (a.empty()) return true;
  if (h == 2 && g == 1) return is_sidon(a);
  return rep_profile(a, h, static_cast<Int>(h) * a.max()).max_count() <= g;
}

IntegerSet sumset(std::span<const IntegerSet> sets, Int horizon) {
  if (sets.empty() || sets.size() > 3) {
    throw std::invalid_argument("sumset: between 1 and 3 summand sets are supported");
  }
  if (horizon < 1) throw std::invalid_argument("sumset: horizon must be >= 1");
  if (sets.size() == 1) return sets[0].truncated(horizon);

  const std::size_t bits = static_cast<std::size_t>(horizon) + 1;
  detail::Bitset acc(bits);
  for (Int x : sets[0]) {
    if (x > horizon) break;
    acc.set(static_cast<std::size_t>(x));
  }
  for (std::size_t k = 1; k < sets.size(); ++k) {
    detail::Bitset next(bits);
    for (Int x : sets[k]) {
      if (x > horizon) break;
      next.or_shifted(acc, static_cast<std::size_t>(x));
    }
    acc = std::move(next);
  }
  return IntegerSet(acc.indices());
}

IntegerSet sumset(std::initializer_list<IntegerSet> sets, Int horizon) {
  return sumset(std::span<const IntegerSet>(sets.begin(), sets.size()), horizon);
}

std::size_t counting_function(const IntegerSet& a, Int x) {
  return static_cast<std::size_t>(std::upper_bound(a.begin(), a.end(), x) - a.begin());
}

DensityReport density_report(const IntegerSet& a, Int horizon, std::size_t window_count) {
  if (window_count < 1 || horizon < window_count) {
    throw std::invalid_argument("density_report: need horizon >= window_count >= 1");
  }
  DensityReport report;
  report.horizon = horizon;
  for (std::size_t i = 1; i <= window_count; ++i) {
    const Int n = static_cast<Int>(i) * horizon / window_count;
    report.checkpoints.push_back(n);
    report.ratios.push_back(static_cast<double>(counting_function(a, n)) / static_cast<double>(n));
  }
  report.min_ratio = *std::min_element(report.ratios.begin(), report.ratios.end());
  report.max_ratio = *std::max_element(report.ratios.begin(), report.ratios.end());
  return report;
}

IntegerSet greedy_sidon(std::size_t k) {
  if (k < 1) throw std::invalid_argument("greedy_sidon: k must be >= 1");
  // A set is Sidon iff its positive differences are pairwise distinct.
  std::vector<Int> terms{1};
  std::vector<bool> used_diff(2, false);
  Int candidate = 1;
  while (terms.size() < k) {
    ++candidate;
    if (used_diff.size() <= candidate) used_diff.resize(2 * candidate + 1, false);
    bool ok = true;
    for (Int t : terms) {
      if (used_diff[candidate - t]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (Int t : terms) used_diff[candidate - t] = true;
    terms.push_back(candidate);
  }
  return IntegerSet(std::move(terms));
}

}  // namespace sidon
