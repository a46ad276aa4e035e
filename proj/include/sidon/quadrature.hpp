#pragma once

#include <cstdint>
#include <vector>

#include "sidon/cubature.hpp"

namespace sidon {

// The region D = {0 < x < 1, 0 < y < x, y < z < (x + y)/2} and the integrand
// f(x, y, z) = (x y z (x + y - z))^{-2/3}, whose integral over D is the leading
// coefficient of E(Z(N)) / (c^4 N^{1/3}).

/// Vol(D).
inline constexpr double kDomainVolume = 1.0 / 12.0;

/// 27 * 2^{2/3}, an analytic upper bound for every truncated integral I(M).
double truncation_cap();

bool in_domain(double x, double y, double z);

/// Throws std::domain_error naming the first violated constraint of D. The face x = 1
/// is accepted.
double evaluate_f(double x, double y, double z);
double evaluate_f_truncated(double x, double y, double z, double cap);

/// Method tags carried in QuadratureResult::method.
inline constexpr const char* kReducedMethod = "reduced-ibeta/gauss-kronrod-2d";
inline constexpr const char* kCubeMethod = "cube-substitution/genz-malik-3d";

/// Default for the singular integral; the error target of the acceptance gate is 5e-3.
QuadratureOptions singular_defaults();

/// Integral of f over D. Uses the analytic inner-z reduction.
QuadratureResult integrate_singular(const QuadratureOptions& options = singular_defaults());

/// Inner z-integral in closed form through the regularized incomplete Beta function,
/// then x = u^3, y = v^3 and nested adaptive Gauss-Kronrod over 0 < v < u < 1.
QuadratureResult integrate_singular_reduced(const QuadratureOptions& options = singular_defaults());

/// Full 3-D route: x = u^3, y = v^3, z = w^3 followed by adaptive Genz-Malik
/// cubature over the unit cube.
QuadratureResult integrate_singular_cubature(const QuadratureOptions& options = singular_defaults());

/// min(f, M) has a kink on the surface f = M, so the default tolerance is looser.
QuadratureOptions truncated_defaults();

/// I(M) = integral of min(f, M) over D. M <= 1 is answered exactly as M * Vol(D).
QuadratureResult integrate_truncated(double cap, const QuadratureOptions& options = truncated_defaults());

/// Regularized incomplete Beta I_x(p, q).
double incomplete_beta(double x, double p, double q);

struct ConvergenceRow {
  int level = 0;
  double value = 0.0;
  double error_estimate = 0.0;
  std::uint64_t evaluations = 0;
};

/// Cubature route at relative tolerances 10^-1 .. 10^-levels.
std::vector<ConvergenceRow> convergence_table(int levels);

}  // namespace sidon
