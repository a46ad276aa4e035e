#include "sidon/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "sidon/core_sets.hpp"

namespace sidon {

TrialRow run_trial(const RandomModelParams& params) {
  const GeneratedSequence g = realize(params);
  const Int n = params.horizon;

  TrialRow row;
  row.seed = params.seed;
  row.size_s = g.s.size();
  row.s_count = counting_function(g.s, n);
  row.t_count = counting_function(g.t, n);
  row.z = z_statistic(g.s, n);
  row.remainder_size = g.remainder.size();
  if (row.t_count > row.z) {
    throw std::logic_error("trial " + std::to_string(params.seed) + ": T(N) exceeds Z(N)");
  }

  const IntegerSet sss = sumset({g.s, g.s, g.s}, n);
  const IntegerSet rrr = sumset({g.remainder, g.remainder, g.remainder}, n);
  const IntegerSet sst = sumset({g.s, g.s, g.t}, n);
  // Every element of S+S+S either avoids T or lies in S+S+T.
  std::vector<Int> covered;
  std::set_union(rrr.begin(), rrr.end(), sst.begin(), sst.end(), std::back_inserter(covered));
  if (!sss.is_subset_of(IntegerSet(std::move(covered)))) {
    throw std::logic_error("trial " + std::to_string(params.seed) + ": density chain violated");
  }

  const double nd = static_cast<double>(n);
  row.density3_s = static_cast<double>(sss.size()) / nd;
  row.density3_remainder = static_cast<double>(rrr.size()) / nd;
  const Int half = n / 2;
  const auto in_upper = counting_function(sss, n) - (half == 0 ? 0 : counting_function(sss, half - 1));
  row.upper_half_coverage = static_cast<double>(in_upper) / static_cast<double>(n - half + 1);
  return row;
}

ColumnStats column_stats(const std::vector<double>& values) {
  ColumnStats s;
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SIDON_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

CampaignReport monte_carlo_campaign(const RandomModelParams& params, std::uint64_t trials,
                                    const CampaignOptions& options) {
  params.validate();
  if (trials < 1) throw std::invalid_argument("campaign: trials must be >= 1");
  if (params.horizon > kMaxSamplingHorizon) {
    throw std::invalid_argument("campaign: N = " + std::to_string(params.horizon) +
                                " exceeds the per-integer sampling limit " +
                                std::to_string(kMaxSamplingHorizon));
  }
  if (params.horizon > options.max_draws / trials) {
    throw std::invalid_argument("campaign: resource budget exceeded, N * trials = " +
                                std::to_string(params.horizon) + " * " + std::to_string(trials) +
                                " is above the limit of " + std::to_string(options.max_draws) +
                                " Bernoulli draws");
  }

  CampaignReport report;
  report.params = params;
  report.trials = trials;
  report.rows.resize(trials);

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::uint64_t i = next++; i < trials; i = next++) {
      try {
        RandomModelParams p = params;
        p.seed = params.seed + i;
        report.rows[i] = run_trial(p);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = trials;
      }
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_thread_count(options.threads), trials));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  auto stats = [&](auto field) {
    std::vector<double> v;
    v.reserve(report.rows.size());
    for (const auto& r : report.rows) v.push_back(static_cast<double>(field(r)));
    return column_stats(v);
  };
  auto& s = report.summary;
  s.size_s = stats([](const TrialRow& r) { return r.size_s; });
  s.s_count = stats([](const TrialRow& r) { return r.s_count; });
  s.t_count = stats([](const TrialRow& r) { return r.t_count; });
  s.z = stats([](const TrialRow& r) { return r.z; });
  s.remainder_size = stats([](const TrialRow& r) { return r.remainder_size; });
  s.density3_s = stats([](const TrialRow& r) { return r.density3_s; });
  s.density3_remainder = stats([](const TrialRow& r) { return r.density3_remainder; });
  s.upper_half_coverage = stats([](const TrialRow& r) { return r.upper_half_coverage; });
  return report;
}

}  // namespace sidon
