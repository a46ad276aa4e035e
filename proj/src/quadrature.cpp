#include "sidon/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

namespace sidon {

namespace {

constexpr double kThird = 1.0 / 3.0;

double neg_two_thirds_power(double t) { return 1.0 / std::cbrt(t * t); }

// Upper limit of w / u for given p = v / u on the cube-substituted region.
double q_upper(double p) { return std::cbrt(0.5 * (1.0 + p * p * p)); }

// Integrand on the unit cube (t1, t2, t3) -> (u, p, q) with v = u p, w = u q and
// q = p + (q_upper(p) - p) t3. With the full Jacobian 27 u^8 p^2 q^2 (q_upper - p) the
// untruncated integrand reduces to 27 (q_upper - p) (1 + p^3 - q^3)^{-2/3}, which is
// bounded by 27 * 2^{2/3}; truncation compares against M u^8 p^2 q^2.
double cube_integrand(const Point3& t, double cap) {
  const double u = t[0];
  const double p = t[1];
  const double qu = q_upper(p);
  const double q = p + (qu - p) * t[2];
  const double residual = neg_two_thirds_power(1.0 + p * p * p - q * q * q);
  double core = residual;
  if (std::isfinite(cap)) {
    const double u2 = u * u;
    const double u8 = u2 * u2 * u2 * u2;
    core = std::min(residual, cap * u8 * p * p * q * q);
  }
  return 27.0 * (qu - p) * core;
}

}  // namespace

double truncation_cap() { return 27.0 * std::cbrt(4.0); }

bool in_domain(double x, double y, double z) {
  return x > 0.0 && x < 1.0 && y > 0.0 && y < x && z > y && z < 0.5 * (x + y);
}

double evaluate_f(double x, double y, double z) {
  // x = 1 lies on the closure of D but f is finite there; Riemann sums sample it.
  if (!(x > 0.0 && x <= 1.0)) throw std::domain_error("evaluate_f: requires 0 < x <= 1");
  if (!(y > 0.0)) throw std::domain_error("evaluate_f: requires y > 0");
  if (!(y < x)) throw std::domain_error("evaluate_f: requires y < x");
  if (!(z > y)) throw std::domain_error("evaluate_f: requires z > y");
  if (!(z < 0.5 * (x + y))) throw std::domain_error("evaluate_f: requires z < (x + y)/2");
  return neg_two_thirds_power(x * y * z * (x + y - z));
}

double evaluate_f_truncated(double x, double y, double z, double cap) {
  if (!(cap > 0.0)) throw std::invalid_argument("evaluate_f_truncated: M must be positive");
  return std::min(evaluate_f(x, y, z), cap);
}

QuadratureOptions singular_defaults() {
  QuadratureOptions o;
  o.abs_tol = 1e-7;
  o.rel_tol = 1e-9;
  o.max_evaluations = 100'000'000;
  return o;
}

QuadratureOptions truncated_defaults() {
  QuadratureOptions o;
  o.abs_tol = 1e-5;
  o.rel_tol = 0.0;
  o.max_evaluations = 100'000'000;
  return o;
}

double incomplete_beta(double x, double p, double q) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("incomplete_beta: x must lie in [0, 1]");
  if (!(p > 0.0) || !(q > 0.0)) throw std::invalid_argument("incomplete_beta: p, q must be positive");
  return boost::math::ibeta(p, q, x);
}

QuadratureResult integrate_singular(const QuadratureOptions& options) {
  return integrate_singular_reduced(options);
}

QuadratureResult integrate_singular_reduced(const QuadratureOptions& options) {
  // For s = x + y:  int_y^{s/2} z^{-2/3} (s - z)^{-2/3} dz
  //               = s^{-1/3} B(1/3, 1/3) [1/2 - I_{y/s}(1/3, 1/3)].
  // With x = u^3, y = v^3 the factors x^{-2/3} dx and y^{-2/3} dy become 3 du and 3 dv.
  const double beta_third = boost::math::beta(kThird, kThird);
  auto inner_integrand = [beta_third](double u, double v) {
    const double x = u * u * u;
    const double y = v * v * v;
    const double s = x + y;
    return 9.0 * beta_third * (0.5 - incomplete_beta(y / s, kThird, kThird)) / std::cbrt(s);
  };

  QuadratureOptions inner = options;
  inner.abs_tol = options.abs_tol * 0.1;
  inner.rel_tol = options.rel_tol * 0.1;
  auto outer = [&](double u) -> Estimate {
    if (u <= 0.0) return {0.0, 0.0, 1};
    const auto r = integrate_gauss_kronrod(
        std::function<double(double)>([&](double v) { return inner_integrand(u, v); }), 0.0, u,
        inner);
    return {r.value, r.error_estimate, r.evaluations};
  };
  auto result = integrate_gauss_kronrod(std::function<Estimate(double)>(outer), 0.0, 1.0, options);
  result.method = kReducedMethod;
  return result;
}

QuadratureResult integrate_singular_cubature(const QuadratureOptions& options) {
  auto result = integrate_box(
      [](const Point3& t) { return cube_integrand(t, std::numeric_limits<double>::infinity()); },
      {0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}, options);
  result.method = kCubeMethod;
  return result;
}

QuadratureResult integrate_truncated(double cap, const QuadratureOptions& options) {
  if (!(cap > 0.0)) throw std::invalid_argument("integrate_truncated: M must be positive");
  if (cap <= 1.0) {
    // f > 1 everywhere on D, so min(f, M) = M.
    return {cap * kDomainVolume, 0.0, 1, "closed-form"};
  }
  auto result = integrate_box([cap](const Point3& t) { return cube_integrand(t, cap); },
                              {0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}, options);
  result.method = kCubeMethod;
  return result;
}

std::vector<ConvergenceRow> convergence_table(int levels) {
  if (levels < 1) throw std::invalid_argument("convergence_table: levels must be >= 1");
  std::vector<ConvergenceRow> rows;
  for (int level = 1; level <= levels; ++level) {
    QuadratureOptions o;
    o.abs_tol = 0.0;
    o.rel_tol = std::pow(10.0, -level);
    o.max_evaluations = 10'000'000;
    const auto r = integrate_singular_cubature(o);
    rows.push_back({level, r.value, r.error_estimate, r.evaluations});
  }
  return rows;
}

}  // namespace sidon
