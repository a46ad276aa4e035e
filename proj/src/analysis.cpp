#include "sidon/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "sidon/core_sets.hpp"

namespace sidon {

namespace {

void check_unit(double c, const char* what) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": c must lie in [0, 1]");
  }
}

double gamma_third_cubed() {
  const double g = gamma_fn(1.0 / 3.0);
  return g * g * g;
}

}  // namespace

GrowthProfile::GrowthProfile(double coefficient, double exponent) : a(coefficient), alpha(exponent) {
  if (!(a > 0.0)) throw std::invalid_argument("GrowthProfile: coefficient must be positive");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("GrowthProfile: exponent must lie in (0, 1]");
  }
}

std::string_view to_string(ConstantKind kind) {
  switch (kind) {
    case ConstantKind::Convolution: return "convolution";
    case ConstantKind::PairSumset: return "pair_sumset";
    case ConstantKind::ViolationCount: return "violation_count";
    case ConstantKind::TripleWithT: return "triple_with_t";
  }
  return "unknown";
}

double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_fn: argument must be positive");
  return std::tgamma(x);
}

double beta_integral(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha <= 1.0) || !(beta > 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("beta_integral: parameters must lie in (0, 1]");
  }
  return alpha * beta * gamma_fn(alpha) * gamma_fn(beta) /
         ((alpha + beta) * gamma_fn(alpha + beta));
}

BoundConstant lemma4_constant(const GrowthProfile& a, const GrowthProfile& b) {
  return {a.a * b.a * beta_integral(a.alpha, b.alpha), ConstantKind::Convolution};
}

BoundConstant pair_sumset_constant(double c) {
  check_unit(c, "pair_sumset_constant");
  const double g13 = gamma_fn(1.0 / 3.0);
  return {0.75 * g13 * g13 / gamma_fn(2.0 / 3.0) * c * c, ConstantKind::PairSumset};
}

BoundConstant violation_constant(double c) {
  check_unit(c, "violation_constant");
  return {10.8 * c * c * c * c, ConstantKind::ViolationCount};
}

double sss_density(double c) {
  check_unit(c, "sss_density");
  return -std::expm1(-c * c * c * gamma_third_cubed() / 6.0);
}

double sst_bound(double c) {
  check_unit(c, "sst_bound");
  const double c2 = c * c;
  return 1.8 * gamma_third_cubed() * c2 * c2 * c2;
}

double density_lower_bound(double c) { return sss_density(c) - sst_bound(c); }

OptimizationResult optimize_bound() {
  return maximize_unimodal([](double c) { return density_lower_bound(c); }, 0.0, 1.0);
}

ConvolutionCheck lemma4_empirical(const IntegerSet& a, const GrowthProfile& a_profile,
                                  const IntegerSet& b, const GrowthProfile& b_profile, Int horizon) {
  if (horizon < 1) throw std::invalid_argument("lemma4_empirical: horizon must be >= 1");
  ConvolutionCheck r;
  r.pair_count = rep_count_two_sets_cumulative(a, b, horizon);
  r.normalized = static_cast<double>(r.pair_count) /
                 std::pow(static_cast<double>(horizon), a_profile.alpha + b_profile.alpha);
  r.constant = lemma4_constant(a_profile, b_profile).value;
  r.ratio = r.normalized / r.constant;
  return r;
}

IntegerSet perfect_powers(int k, Int limit) {
  if (k < 1) throw std::invalid_argument("perfect_powers: k must be >= 1");
  std::vector<Int> out;
  for (Int base = 1;; ++base) {
    Int v = 1;
    bool over = false;
    for (int i = 0; i < k && !over; ++i) {
      if (v > limit / base) over = true;
      else v *= base;
    }
    if (over || v > limit) break;
    out.push_back(v);
  }
  return IntegerSet(std::move(out));
}

double expected_count_S(double c, Int horizon) {
  check_unit(c, "expected_count_S");
  if (horizon < 1) throw std::invalid_argument("expected_count_S: horizon must be >= 1");
  // Summed from the small terms up.
  long double total = 0.0L;
  for (Int n = horizon; n >= 1; --n) {
    total += std::exp((-2.0L / 3.0L) * std::log(static_cast<long double>(n)));
  }
  return c * static_cast<double>(total);
}

}  // namespace sidon
