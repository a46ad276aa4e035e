#pragma once

#include <cstdint>
#include <vector>

#include "sidon/random_model.hpp"

namespace sidon {

/// Outputs of the single-seed pipeline generate -> extract_T -> prune -> Z -> sumsets.
struct TrialRow {
  std::uint64_t seed = 0;
  std::uint64_t size_s = 0;
  std::uint64_t s_count = 0;  // S(N)
  std::uint64_t t_count = 0;  // T(N)
  std::uint64_t z = 0;        // Z(N)
  std::uint64_t remainder_size = 0;
  double density3_s = 0.0;          // |(S+S+S) cap [1, N]| / N
  double density3_remainder = 0.0;  // same for (S\T)+(S\T)+(S\T)
  double upper_half_coverage = 0.0; // fraction of [N/2, N] covered by S+S+S
};

struct ColumnStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single trial
};

struct CampaignSummary {
  ColumnStats size_s, s_count, t_count, z, remainder_size;
  ColumnStats density3_s, density3_remainder, upper_half_coverage;
};

struct CampaignReport {
  RandomModelParams params;
  std::uint64_t trials = 0;
  std::vector<TrialRow> rows;
  CampaignSummary summary;
};

struct CampaignOptions {
  /// 0 means: read SIDON_THREADS, falling back to the hardware concurrency.
  unsigned threads = 0;
  /// Upper bound on N * trials, the number of Bernoulli draws.
  std::uint64_t max_draws = 2'000'000'000;
};

/// Runs one trial and checks T(N) <= Z(N), the Sidon property of S \ T and the
/// pointwise inclusion S+S+S within ((S\T)+(S\T)+(S\T)) + (S+S+T); violations throw
/// std::logic_error.
TrialRow run_trial(const RandomModelParams& params);

/// Trials use seeds seed, seed + 1, ..., seed + trials - 1. Rows come back in seed order
/// regardless of how many threads ran them.
CampaignReport monte_carlo_campaign(const RandomModelParams& params, std::uint64_t trials,
                                    const CampaignOptions& options = {});

ColumnStats column_stats(const std::vector<double>& values);

unsigned resolve_thread_count(unsigned requested);

}  // namespace sidon
