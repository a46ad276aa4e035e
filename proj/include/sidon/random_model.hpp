#pragma once

#include <cstdint>
#include <string_view>

#include "sidon/integer_set.hpp"

namespace sidon {

/// Parameters of the random model P(n in S) = c / n^{2/3}, n = 1..N.
struct RandomModelParams {
  double c = 0.0;
  Int horizon = 1;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless 0 <= c <= 1 and horizon >= 1.
  void validate() const;
};

/// Identifier of the inclusion-decision generator. Output n of a SplitMix64 stream
/// keyed by splitmix64(seed) decides membership of n, so a decision depends only
/// on (seed, n). Bump the suffix whenever the mapping changes.
inline constexpr std::string_view kGeneratorId = "splitmix64-stream/1";

/// Largest horizon accepted by the per-integer sampler.
inline constexpr Int kMaxSamplingHorizon = 100'000'000;

double inclusion_probability(double c, Int n);
/// Uniform variate in [0, 1) attached to integer n under `seed`.
double inclusion_uniform(std::uint64_t seed, Int n);

/// Draws S. Deterministic in (c, horizon, seed).
IntegerSet generate(const RandomModelParams& params);

/// {s in S : s + s' = s'' + s''' for some s', s'', s''' in S, all < s}. s'' = s''' is allowed.
IntegerSet extract_T(const IntegerSet& s);

/// S \ extract_T(S). Throws std::logic_error if the result is not Sidon.
IntegerSet prune(const IntegerSet& s);

struct GeneratedSequence {
  RandomModelParams params;
  IntegerSet s;
  IntegerSet t;
  IntegerSet remainder;
};

GeneratedSequence realize(const RandomModelParams& params);

/// Quadruples x4 < x3 < x2 < x1 <= N in S with x1 + x4 = x2 + x3, plus triples
/// x4 < x2 < x1 <= N in S with x1 + x4 = 2 x2.
std::uint64_t z_statistic(const IntegerSet& s, Int horizon);

enum class Estimation { ExactOnly, AllowEstimate };

/// E(Z(N)) split into its triple part (e1) and quadruple part (e2).
struct ZExpectation {
  double value = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
  bool approximate = false;
};

/// Exact summation is used up to this horizon.
inline constexpr Int kExactExpectationLimit = 10'000;

/// Exact E(Z(N)) for N <= kExactExpectationLimit. Larger N throws unless
/// `mode == AllowEstimate`, in which case the exact value at the limit is extended
/// with the leading-order growth of each part and the result is flagged approximate.
ZExpectation expected_z(double c, Int horizon, Estimation mode = Estimation::ExactOnly);

inline constexpr Int kRiemannLimit = 3'000;

/// (1/N^3) * sum over 1 <= x4 < x1 <= N, x4 < x2 < (x1 + x4)/2 of f(x1/N, x4/N, x2/N).
/// Requires 2 <= N <= kRiemannLimit.
double riemann_sum_e2(Int horizon);

}  // namespace sidon
