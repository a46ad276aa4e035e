#pragma once

#include <cstdint>
#include <string_view>

#include "sidon/integer_set.hpp"

namespace sidon {

/// Counting-function envelope A(N) <= (a + o(1)) N^alpha.
struct GrowthProfile {
  double a = 1.0;
  double alpha = 1.0;

  GrowthProfile(double coefficient, double exponent);
};

enum class ConstantKind {
  Convolution,      // a b alpha beta G(alpha) G(beta) / ((alpha + beta) G(alpha + beta))
  PairSumset,       // (3/4) G(1/3)^2 / G(2/3) c^2, the (S+S)(N) / N^{2/3} bound
  ViolationCount,   // 10.8 c^4, the T(N) / N^{1/3} bound
  TripleWithT,      // 1.8 G(1/3)^3 c^6, the upper density of S+S+T
};

std::string_view to_string(ConstantKind kind);

struct BoundConstant {
  double value = 0.0;
  ConstantKind kind = ConstantKind::Convolution;
};

/// Gamma function; throws std::domain_error for x <= 0.
double gamma_fn(double x);

/// int_0^1 (1 - x^{1/alpha})^beta dx in closed form, alpha, beta in (0, 1].
double beta_integral(double alpha, double beta);

/// Leading constant of sum_{n <= N} R_{A+B}(n) <= (K + o(1)) N^{alpha + beta}.
BoundConstant lemma4_constant(const GrowthProfile& a, const GrowthProfile& b);

BoundConstant pair_sumset_constant(double c);
BoundConstant violation_constant(double c);

/// Almost-sure density of S+S+S, 1 - exp(-c^3 G(1/3)^3 / 6).
double sss_density(double c);

/// Upper-density bound for S+S+T, 1.8 G(1/3)^3 c^6.
double sst_bound(double c);

/// sss_density(c) - sst_bound(c), the lower density guaranteed for the pruned set.
double density_lower_bound(double c);

struct OptimizationResult {
  double c_star = 0.0;
  double f_star = 0.0;
  double c_golden = 0.0;  // golden-section argmax
  double c_grid = 0.0;    // grid argmax
};

/// Maximizes density_lower_bound over [0, 1].
OptimizationResult optimize_bound();

/// Golden-section maximization of a unimodal g on [lo, hi], cross-checked against a
/// `grid_points` scan; the better of the two is returned.
template <class F>
OptimizationResult maximize_unimodal(F&& g, double lo, double hi, int grid_points = 10'000,
                                     double tolerance = 1e-10);

/// Finite-set check of the convolution bound: sum_{n <= N} R_{A+B}(n) / N^{alpha + beta}
/// against lemma4_constant(A, B).
struct ConvolutionCheck {
  std::uint64_t pair_count = 0;  // sum_{n <= N} R_{A+B}(n)
  double normalized = 0.0;       // pair_count / N^{alpha + beta}
  double constant = 0.0;
  double ratio = 0.0;            // normalized / constant
};

ConvolutionCheck lemma4_empirical(const IntegerSet& a, const GrowthProfile& a_profile,
                                  const IntegerSet& b, const GrowthProfile& b_profile, Int horizon);

/// {1^k, 2^k, ...} up to `limit`; counting function at most x^{1/k}.
IntegerSet perfect_powers(int k, Int limit);

/// Exact E S(N) = sum_{n <= N} c n^{-2/3}; asymptotically 3 c N^{1/3}.
double expected_count_S(double c, Int horizon);

// -- implementation ---------------------------------------------------------

template <class F>
OptimizationResult maximize_unimodal(F&& g, double lo, double hi, int grid_points,
                                     double tolerance) {
  const double inv_phi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double g1 = g(x1);
  double g2 = g(x2);
  while (b - a > tolerance) {
    if (g1 < g2) {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + inv_phi * (b - a);
      g2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - inv_phi * (b - a);
      g1 = g(x1);
    }
  }
  OptimizationResult r;
  r.c_golden = 0.5 * (a + b);
  const double golden_value = g(r.c_golden);

  double best_x = lo;
  double best_value = g(lo);
  for (int i = 1; i <= grid_points; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / grid_points;
    const double v = g(x);
    if (v > best_value) {
      best_value = v;
      best_x = x;
    }
  }
  r.c_grid = best_x;
  if (golden_value >= best_value) {
    r.c_star = r.c_golden;
    r.f_star = golden_value;
  } else {
    r.c_star = best_x;
    r.f_star = best_value;
  }
  return r;
}

}  // namespace sidon
