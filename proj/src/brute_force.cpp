#include "sidon/brute_force.hpp"

#include <set>
#include <stdexcept>

namespace sidon::brute {

std::uint64_t rep_count(const IntegerSet& a, int h, Int n) {
  if (h < 2 || h > 4) throw std::invalid_argument("brute::rep_count: h must be 2, 3 or 4");
  const std::size_t k = a.size();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      if (h == 2) {
        count += a[i] + a[j] == n;
        continue;
      }
      for (std::size_t l = j; l < k; ++l) {
        if (h == 3) {
          count += a[i] + a[j] + a[l] == n;
          continue;
        }
        for (std::size_t m = l; m < k; ++m) count += a[i] + a[j] + a[l] + a[m] == n;
      }
    }
  }
  return count;
}

std::uint64_t rep_count_two_sets(const IntegerSet& a, const IntegerSet& b, Int n) {
  std::uint64_t count = 0;
  for (Int x : a) {
    for (Int y : b) count += x + y == n;
  }
  return count;
}

bool is_sidon(const IntegerSet& a) {
  const std::size_t k = a.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        for (std::size_t m = l; m < k; ++m) {
          if ((i != l || j != m) && a[i] + a[j] == a[l] + a[m]) return false;
        }
      }
    }
  }
  return true;
}

IntegerSet sumset(const std::vector<IntegerSet>& sets, Int horizon) {
  std::set<Int> acc{0};
  for (const auto& s : sets) {
    std::set<Int> next;
    for (Int partial : acc) {
      for (Int x : s) {
        if (partial + x <= horizon) next.insert(partial + x);
      }
    }
    acc = std::move(next);
  }
  return IntegerSet(std::vector<Int>(acc.begin(), acc.end()));
}

IntegerSet extract_T(const IntegerSet& s) {
  std::vector<Int> t;
  for (Int x : s) {
    bool hit = false;
    for (Int a : s) {
      if (a >= x) break;
      for (Int b : s) {
        if (b >= x) break;
        for (Int c : s) {
          if (c >= x) break;
          if (x + a == b + c) {
            hit = true;
            break;
          }
        }
        if (hit) break;
      }
      if (hit) break;
    }
    if (hit) t.push_back(x);
  }
  return IntegerSet(std::move(t));
}

std::uint64_t z_statistic(const IntegerSet& s, Int horizon) {
  std::uint64_t z = 0;
  for (Int x1 : s) {
    if (x1 > horizon) break;
    for (Int x2 : s) {
      if (x2 >= x1) break;
      for (Int x4 : s) {
        if (x4 >= x2) break;
        if (x1 + x4 == 2 * x2) ++z;
        for (Int x3 : s) {
          if (x3 >= x2) break;
          if (x3 > x4 && x1 + x4 == x2 + x3) ++z;
        }
      }
    }
  }
  return z;
}

IntegerSet greedy_sidon(std::size_t k) {
  std::vector<Int> terms;
  for (Int candidate = 1; terms.size() < k; ++candidate) {
    auto trial = terms;
    trial.push_back(candidate);
    if (is_sidon(IntegerSet(trial))) terms = std::move(trial);
  }
  return IntegerSet(std::move(terms));
}

}  // namespace sidon::brute
