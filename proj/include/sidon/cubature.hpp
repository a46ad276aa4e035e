#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace sidon {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::uint64_t evaluations = 0;
  std::string method;
};

/// Thrown when an adaptive rule exhausts its evaluation budget before meeting the
/// requested tolerance. `partial` holds the estimate reached so far.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial(std::move(partial)) {}

  QuadratureResult partial;
};

struct QuadratureOptions {
  double abs_tol = 1e-9;
  double rel_tol = 1e-10;
  std::uint64_t max_evaluations = 100'000'000;
};

/// A sample that carries its own error, e.g. the result of an inner quadrature.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
  std::uint64_t evaluations = 1;
};

/// Globally adaptive 15-point Gauss-Kronrod on [a, b]. The error of each sample is
/// integrated with the Kronrod weights and added to the reported error estimate;
/// it does not drive subdivision.
QuadratureResult integrate_gauss_kronrod(const std::function<Estimate(double)>& f, double a,
                                         double b, const QuadratureOptions& options = {});
QuadratureResult integrate_gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                                         const QuadratureOptions& options = {});

using Point3 = std::array<double, 3>;

/// Globally adaptive degree-7/5 Genz-Malik cubature over an axis-aligned box.
/// Cells are bisected along the axis with the largest fourth divided difference.
QuadratureResult integrate_box(const std::function<double(const Point3&)>& f, const Point3& lower,
                               const Point3& upper, const QuadratureOptions& options = {});

}  // namespace sidon
