#include "sidon/cubature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace sidon {

namespace {

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the nodes kKronrodNodes[1], [3], [5], [7].
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Interval {
  double a;
  double b;
  double value;
  double error;
  double sample_error;
  bool operator<(const Interval& other) const { return error < other.error; }
};

Interval gk15(const std::function<Estimate(double)>& f, double a, double b,
              std::uint64_t& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kronrod = 0.0;
  double gauss = 0.0;
  double carried = 0.0;
  auto accumulate = [&](int i, const Estimate& e) {
    kronrod += kKronrodWeights[i] * e.value;
    carried += kKronrodWeights[i] * e.error;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * e.value;
    evaluations += e.evaluations;
  };
  accumulate(7, f(center));
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    accumulate(i, f(center - dx));
    accumulate(i, f(center + dx));
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half), std::abs(carried * half)};
}

double tolerance(const QuadratureOptions& o, double value) {
  return std::max(o.abs_tol, o.rel_tol * std::abs(value));
}

}  // namespace

QuadratureResult integrate_gauss_kronrod(const std::function<Estimate(double)>& f, double a,
                                         double b, const QuadratureOptions& options) {
  std::uint64_t evaluations = 0;
  std::vector<Interval> heap;     // refinable intervals, max-heap on error
  std::vector<Interval> settled;  // too narrow to split further
  heap.push_back(gk15(f, a, b, evaluations));

  auto sum = [&](auto field) {
    double total = 0.0;
    for (const auto& s : settled) total += field(s);
    for (const auto& s : heap) total += field(s);
    return total;
  };
  auto value = [&] { return sum([](const Interval& i) { return i.value; }); };
  auto refinable = [&] {
    double e = 0.0;
    for (const auto& s : heap) e += s.error;
    return e;
  };
  auto report = [&] {
    const double err = sum([](const Interval& i) { return i.error + i.sample_error; });
    return QuadratureResult{value(), err, evaluations, "gauss-kronrod-15"};
  };

  while (!heap.empty() && refinable() > tolerance(options, value())) {
    if (evaluations >= options.max_evaluations) {
      throw NonConvergence("Gauss-Kronrod: evaluation budget exhausted", report());
    }
    std::pop_heap(heap.begin(), heap.end());
    const Interval worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      settled.push_back(worst);
      continue;
    }
    for (const Interval& part : {gk15(f, worst.a, mid, evaluations), gk15(f, mid, worst.b, evaluations)}) {
      heap.push_back(part);
      std::push_heap(heap.begin(), heap.end());
    }
  }
  return report();
}

QuadratureResult integrate_gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                                         const QuadratureOptions& options) {
  return integrate_gauss_kronrod(
      std::function<Estimate(double)>([&f](double x) { return Estimate{f(x), 0.0, 1}; }), a, b,
      options);
}

namespace {

// Genz-Malik degree-7 rule with embedded degree-5 rule, dimension 3.
constexpr int kDim = 3;
const double kLambda2 = std::sqrt(9.0 / 70.0);
const double kLambda3 = std::sqrt(9.0 / 10.0);
const double kLambda4 = std::sqrt(9.0 / 10.0);
const double kLambda5 = std::sqrt(9.0 / 19.0);
constexpr double kW1 = (12824.0 - 9120.0 * kDim + 400.0 * kDim * kDim) / 19683.0;
constexpr double kW2 = 980.0 / 6561.0;
constexpr double kW3 = (1820.0 - 400.0 * kDim) / 19683.0;
constexpr double kW4 = 200.0 / 19683.0;
constexpr double kW5 = 6859.0 / 19683.0 / 8.0;
constexpr double kE1 = (729.0 - 950.0 * kDim + 50.0 * kDim * kDim) / 729.0;
constexpr double kE2 = 245.0 / 486.0;
constexpr double kE3 = (265.0 - 100.0 * kDim) / 1458.0;
constexpr double kE4 = 25.0 / 729.0;

struct Cell {
  Point3 center;
  Point3 half;
  double value;
  double error;
  int split_axis;
  bool operator<(const Cell& other) const { return error < other.error; }
};

Cell genz_malik(const std::function<double(const Point3&)>& f, const Point3& center,
                const Point3& half, std::uint64_t& evaluations) {
  auto at = [&](const Point3& offset) {
    Point3 p;
    for (int i = 0; i < kDim; ++i) p[i] = center[i] + offset[i] * half[i];
    ++evaluations;
    return f(p);
  };
  const double f0 = at({0, 0, 0});
  double sum2 = 0, sum3 = 0, sum4 = 0, sum5 = 0;
  double best_diff = -1.0;
  int axis = 0;
  for (int i = 0; i < kDim; ++i) {
    Point3 o{0, 0, 0};
    o[i] = kLambda2;
    const double a = at(o);
    o[i] = -kLambda2;
    const double b = at(o);
    o[i] = kLambda3;
    const double c = at(o);
    o[i] = -kLambda3;
    const double d = at(o);
    sum2 += a + b;
    sum3 += c + d;
    const double ratio = (kLambda2 / kLambda3) * (kLambda2 / kLambda3);
    const double diff = std::abs(a + b - 2 * f0 - ratio * (c + d - 2 * f0));
    // Near-ties (e.g. an axis the integrand ignores) go to the widest side.
    const bool tie = std::abs(diff - best_diff) <= 1e-12 * std::max(diff, best_diff);
    if ((!tie && diff > best_diff) || (tie && half[i] > half[axis])) {
      best_diff = diff;
      axis = i;
    }
  }
  for (int i = 0; i < kDim; ++i) {
    for (int j = i + 1; j < kDim; ++j) {
      for (double si : {-1.0, 1.0}) {
        for (double sj : {-1.0, 1.0}) {
          Point3 o{0, 0, 0};
          o[i] = si * kLambda4;
          o[j] = sj * kLambda4;
          sum4 += at(o);
        }
      }
    }
  }
  for (double s0 : {-1.0, 1.0}) {
    for (double s1 : {-1.0, 1.0}) {
      for (double s2 : {-1.0, 1.0}) sum5 += at({s0 * kLambda5, s1 * kLambda5, s2 * kLambda5});
    }
  }
  const double volume = 8.0 * half[0] * half[1] * half[2];
  const double seventh = volume * (kW1 * f0 + kW2 * sum2 + kW3 * sum3 + kW4 * sum4 + kW5 * sum5);
  const double fifth = volume * (kE1 * f0 + kE2 * sum2 + kE3 * sum3 + kE4 * sum4);
  return {center, half, seventh, std::abs(seventh - fifth), axis};
}

}  // namespace

QuadratureResult integrate_box(const std::function<double(const Point3&)>& f, const Point3& lower,
                               const Point3& upper, const QuadratureOptions& options) {
  std::uint64_t evaluations = 0;
  Point3 center, half;
  for (int i = 0; i < kDim; ++i) {
    center[i] = 0.5 * (lower[i] + upper[i]);
    half[i] = 0.5 * (upper[i] - lower[i]);
  }
  std::vector<Cell> heap;
  heap.push_back(genz_malik(f, center, half, evaluations));
  double value = heap.front().value;
  double error = heap.front().error;

  while (error > tolerance(options, value)) {
    if (evaluations >= options.max_evaluations) {
      throw NonConvergence("Genz-Malik: evaluation budget exhausted",
                           {value, error, evaluations, "genz-malik-7"});
    }
    std::pop_heap(heap.begin(), heap.end());
    const Cell worst = heap.back();
    heap.pop_back();
    Point3 h = worst.half;
    h[worst.split_axis] *= 0.5;
    Point3 lo = worst.center, hi = worst.center;
    lo[worst.split_axis] -= h[worst.split_axis];
    hi[worst.split_axis] += h[worst.split_axis];
    const Cell left = genz_malik(f, lo, h, evaluations);
    const Cell right = genz_malik(f, hi, h, evaluations);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    for (const Cell& c : {left, right}) {
      heap.push_back(c);
      std::push_heap(heap.begin(), heap.end());
    }
    // Running sums drift; recompute exactly every so often.
    if (heap.size() % 4096 == 0) {
      value = error = 0.0;
      for (const auto& cell : heap) value += cell.value, error += cell.error;
    }
  }
  value = error = 0.0;
  for (const auto& cell : heap) value += cell.value, error += cell.error;
  return {value, error, evaluations, "genz-malik-7"};
}

}  // namespace sidon
