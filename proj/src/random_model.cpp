#include "sidon/random_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/math/special_functions/beta.hpp>

#include "sidon/core_sets.hpp"
#include "sidon/quadrature.hpp"

namespace sidon {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t splitmix64(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// n^{-2/3} for n = 0..limit (entry 0 unused).
std::vector<double> inverse_two_thirds_table(Int limit) {
  std::vector<double> p(static_cast<std::size_t>(limit) + 1, 0.0);
  for (Int n = 1; n <= limit; ++n) p[n] = std::exp((-2.0 / 3.0) * std::log(static_cast<double>(n)));
  return p;
}

// Sum over 1 <= x4 < x2 < x1 <= N, x1 + x4 = 2 x2 of p(x1) p(x2) p(x4).
long double e1_lattice_sum(Int n) {
  const auto p = inverse_two_thirds_table(n);
  long double total = 0.0L;
  for (Int mid = 2; mid < n; ++mid) {
    long double inner = 0.0L;
    for (Int d = 1; d < mid && mid + d <= n; ++d) inner += p[mid - d] * p[mid + d];
    total += p[mid] * inner;
  }
  return total;
}

// Sum over 1 <= x4 < x1 <= N, x4 < x2 < (x1 + x4)/2 of p(x1) p(x4) p(x2) p(x1 + x4 - x2).
// Grouping by s = x1 + x4 lets the x2-sum be carried as a running suffix sum while x4
// descends, which makes the whole evaluation O(N^2).
long double e2_lattice_sum(Int n) {
  const auto p = inverse_two_thirds_table(2 * n);
  long double total = 0.0L;
  for (Int s = 3; s <= 2 * n - 1; ++s) {
    const Int top = (s - 1) / 2;  // largest x with 2x < s
    const Int low = s > n ? s - n : 1;
    long double suffix = 0.0L;  // sum over x4 < x2 <= top of p(x2) p(s - x2)
    for (Int x4 = top; x4 >= low; --x4) {
      const double pair = p[x4] * p[s - x4];
      total += pair * suffix;
      suffix += pair;
      if (x4 == 1) break;
    }
  }
  return total;
}

double singular_integral_value() {
  static const double value = integrate_singular().value;
  return value;
}

}  // namespace

void RandomModelParams::validate() const {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::invalid_argument("random model: c must lie in [0, 1], got " + std::to_string(c));
  }
  if (horizon < 1) throw std::invalid_argument("random model: horizon N must be >= 1");
}

double inclusion_probability(double c, Int n) {
  return c * std::exp((-2.0 / 3.0) * std::log(static_cast<double>(n)));
}

double inclusion_uniform(std::uint64_t seed, Int n) {
  const std::uint64_t key = splitmix64(seed);
  return static_cast<double>(splitmix64(key + n * kGolden) >> 11) * 0x1.0p-53;
}

IntegerSet generate(const RandomModelParams& params) {
  params.validate();
  if (params.horizon > kMaxSamplingHorizon) {
    throw std::invalid_argument("generate: horizon exceeds the per-integer sampling limit of " +
                                std::to_string(kMaxSamplingHorizon));
  }
  std::vector<Int> elements;
  if (params.c == 0.0) return IntegerSet{};
  const std::uint64_t key = splitmix64(params.seed);
  for (Int n = 1; n <= params.horizon; ++n) {
    const double u = static_cast<double>(splitmix64(key + n * kGolden) >> 11) * 0x1.0p-53;
    if (u < inclusion_probability(params.c, n)) elements.push_back(n);
  }
  return IntegerSet(std::move(elements));
}

IntegerSet extract_T(const IntegerSet& s) {
  const auto v = s.elements();
  std::unordered_set<Int> pair_sums;  // s'' + s''' over earlier elements, s'' <= s'''
  pair_sums.reserve(v.size() * (v.size() + 1) / 2);
  std::vector<Int> t;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (pair_sums.contains(v[i] + v[j])) {
        t.push_back(v[i]);
        break;
      }
    }
    for (std::size_t j = 0; j <= i; ++j) pair_sums.insert(v[i] + v[j]);
  }
  return IntegerSet(std::move(t));
}

IntegerSet prune(const IntegerSet& s) {
  IntegerSet remainder = s.without(extract_T(s));
  if (!is_sidon(remainder)) throw std::logic_error("prune: S \\ T is not a Sidon set");
  return remainder;
}

GeneratedSequence realize(const RandomModelParams& params) {
  GeneratedSequence g;
  g.params = params;
  g.s = generate(params);
  g.t = extract_T(g.s);
  g.remainder = g.s.without(g.t);
  if (!is_sidon(g.remainder)) throw std::logic_error("realize: S \\ T is not a Sidon set");
  return g;
}

std::uint64_t z_statistic(const IntegerSet& s, Int horizon) {
  const IntegerSet v = s.truncated(horizon);
  std::vector<Int> sums;
  sums.reserve(v.size() * v.size() / 2);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) sums.push_back(v[i] + v[j]);
  }
  std::sort(sums.begin(), sums.end());
  std::uint64_t z = 0;
  for (std::size_t i = 0; i < sums.size();) {
    std::size_t j = i;
    while (j < sums.size() && sums[j] == sums[i]) ++j;
    const std::uint64_t pairs = j - i;  // pairs a < b with a + b = sums[i]
    // Two distinct such pairs form exactly one size-ordered quadruple.
    z += pairs * (pairs - 1) / 2;
    if (sums[i] % 2 == 0 && v.contains(sums[i] / 2)) z += pairs;
    i = j;
  }
  return z;
}

ZExpectation expected_z(double c, Int horizon, Estimation mode) {
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("expected_z: c must lie in [0, 1]");
  if (horizon < 2) throw std::invalid_argument("expected_z: horizon must be >= 2");
  ZExpectation out;
  const double c3 = c * c * c;
  const double c4 = c3 * c;
  if (horizon <= kExactExpectationLimit) {
    out.e1 = c3 * static_cast<double>(e1_lattice_sum(horizon));
    out.e2 = c4 * static_cast<double>(e2_lattice_sum(horizon));
    out.value = out.e1 + out.e2;
    return out;
  }
  if (mode != Estimation::AllowEstimate) {
    throw std::invalid_argument("expected_z: horizon " + std::to_string(horizon) +
                                " exceeds the exact-summation limit " +
                                std::to_string(kExactExpectationLimit) +
                                "; request an estimate explicitly");
  }
  // E1 grows like J log N with J = int_0^1 (1 - t^2)^{-2/3} dt = B(1/2, 1/3) / 2;
  // E2 grows like I N^{1/3} with I the singular triple integral.
  const Int base = kExactExpectationLimit;
  const double growth_j = 0.5 * boost::math::beta(0.5, 1.0 / 3.0);
  const double e1_base = static_cast<double>(e1_lattice_sum(base));
  const double e2_base = static_cast<double>(e2_lattice_sum(base));
  const double nb = static_cast<double>(base);
  const double nh = static_cast<double>(horizon);
  out.e1 = c3 * (e1_base + growth_j * std::log(nh / nb));
  out.e2 = c4 * (e2_base + singular_integral_value() * (std::cbrt(nh) - std::cbrt(nb)));
  out.value = out.e1 + out.e2;
  out.approximate = true;
  return out;
}

double riemann_sum_e2(Int horizon) {
  if (horizon < 2 || horizon > kRiemannLimit) {
    throw std::invalid_argument("riemann_sum_e2: N must lie in [2, " +
                                std::to_string(kRiemannLimit) + "]");
  }
  return static_cast<double>(e2_lattice_sum(horizon)) / std::cbrt(static_cast<double>(horizon));
}

}  // namespace sidon
