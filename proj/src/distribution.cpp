#include "qrv/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qrv {

namespace {

constexpr double kNegativeWeightFloor = -1e-12;
constexpr double kWeightDropThreshold = 1e-12;

struct Point {
  double value;
  double weight_a;
  double weight_b;
};

// Single-linkage grouping of sorted points: a gap > tol starts a new group.
// Representative value is the mass-weighted mean (plain mean if massless),
// which keeps representatives separated by more than tol.
template <typename Emit>
void group_sorted(const std::vector<Point>& points, double tol, Emit&& emit) {
  std::size_t start = 0;
  while (start < points.size()) {
    std::size_t end = start + 1;
    while (end < points.size() && points[end].value - points[end - 1].value <= tol) ++end;
    double mass = 0.0, weighted = 0.0, plain = 0.0, wa = 0.0, wb = 0.0;
    for (std::size_t i = start; i < end; ++i) {
      const double w = points[i].weight_a + points[i].weight_b;
      mass += w;
      weighted += w * points[i].value;
      plain += points[i].value;
      wa += points[i].weight_a;
      wb += points[i].weight_b;
    }
    const double value = mass > 0.0 ? weighted / mass : plain / double(end - start);
    emit(value, wa, wb);
    start = end;
  }
}

std::vector<Point> sorted_points(const std::vector<double>& values,
                                 const std::vector<double>& weights, bool as_b = false) {
  std::vector<Point> points(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    points[i] = as_b ? Point{values[i], 0.0, weights[i]} : Point{values[i], weights[i], 0.0};
  }
  std::sort(points.begin(), points.end(),
            [](const Point& x, const Point& y) { return x.value < y.value; });
  return points;
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> values, std::vector<double> weights)
    : values_(std::move(values)), weights_(std::move(weights)) {}

DiscreteDistribution DiscreteDistribution::from_points(std::vector<double> values,
                                                       std::vector<double> weights,
                                                       double merge_tol) {
  if (values.size() != weights.size()) {
    throw std::invalid_argument("DiscreteDistribution: values/weights length mismatch");
  }
  if (values.empty()) throw std::invalid_argument("DiscreteDistribution: empty support");
  for (double& w : weights) {
    if (w < kNegativeWeightFloor) {
      throw std::invalid_argument("DiscreteDistribution: negative weight " + std::to_string(w));
    }
    if (w < 0.0) w = 0.0;
    if (!std::isfinite(w)) throw std::invalid_argument("DiscreteDistribution: non-finite weight");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("DiscreteDistribution: non-finite value");
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("DiscreteDistribution: weights must sum to 1, got " +
                                std::to_string(total));
  }

  auto points = sorted_points(values, weights);
  std::vector<double> out_values, out_weights;
  out_values.reserve(points.size());
  out_weights.reserve(points.size());
  group_sorted(points, merge_tol, [&](double value, double wa, double) {
    if (wa >= kWeightDropThreshold) {
      out_values.push_back(value);
      out_weights.push_back(wa);
    }
  });
  if (out_values.empty()) {
    throw std::invalid_argument("DiscreteDistribution: all weights below the drop threshold");
  }
  return DiscreteDistribution(std::move(out_values), std::move(out_weights));
}

DiscreteDistribution DiscreteDistribution::point_mass(double value) {
  return from_points({value}, {1.0});
}

double DiscreteDistribution::total_mass() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

double DiscreteDistribution::moment(int n) const {
  if (n < 0 || n > 8) {
    throw std::invalid_argument("DiscreteDistribution::moment: order must be in [0, 8]");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) p *= values_[i];
    sum += weights_[i] * p;
  }
  return sum;
}

double DiscreteDistribution::variance() const {
  const double m1 = moment(1);
  const double var = moment(2) - m1 * m1;
  if (var < kNegativeWeightFloor) {
    throw std::logic_error("DiscreteDistribution::variance: negative beyond rounding");
  }
  return std::max(var, 0.0);
}

double resolve_bin_tol(const std::vector<double>& values, double requested) {
  if (requested >= 0.0) return requested;
  if (values.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double range = *hi - *lo;
  const double floor = 1e-12 * std::max({1.0, std::abs(*lo), std::abs(*hi)});
  return std::max(1e-9 * range, floor);
}

AlignedSupport align_supports(const DiscreteDistribution& a, const DiscreteDistribution& b,
                              double snap_tol) {
  std::vector<Point> points;
  points.reserve(a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) points.push_back({a.values()[i], a.weights()[i], 0.0});
  for (std::size_t i = 0; i < b.size(); ++i) points.push_back({b.values()[i], 0.0, b.weights()[i]});
  std::sort(points.begin(), points.end(), [](const Point& x, const Point& y) {
    if (x.value != y.value) return x.value < y.value;
    return x.weight_b < y.weight_b;  // deterministic tie order: side a first
  });

  std::vector<double> all_values;
  all_values.reserve(points.size());
  for (const Point& p : points) all_values.push_back(p.value);
  const double tol = resolve_bin_tol(all_values, snap_tol);

  AlignedSupport out;
  group_sorted(points, tol, [&](double value, double wa, double wb) {
    out.values.push_back(value);
    out.weights_a.push_back(wa);
    out.weights_b.push_back(wb);
  });
  return out;
}

double total_variation(const DiscreteDistribution& a, const DiscreteDistribution& b,
                       double snap_tol) {
  const AlignedSupport grid = align_supports(a, b, snap_tol);
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    sum += std::abs(grid.weights_a[i] - grid.weights_b[i]);
  }
  return 0.5 * sum;
}

double wasserstein1(const DiscreteDistribution& a, const DiscreteDistribution& b) {
  const auto& av = a.values();
  const auto& bv = b.values();
  std::size_t i = 0, j = 0;
  double cdf_a = 0.0, cdf_b = 0.0, result = 0.0;
  double prev = 0.0;
  bool first = true;
  while (i < av.size() || j < bv.size()) {
    double v;
    if (j >= bv.size() || (i < av.size() && av[i] <= bv[j])) {
      v = av[i];
    } else {
      v = bv[j];
    }
    if (!first) result += std::abs(cdf_a - cdf_b) * (v - prev);
    while (i < av.size() && av[i] == v) cdf_a += a.weights()[i++];
    while (j < bv.size() && bv[j] == v) cdf_b += b.weights()[j++];
    prev = v;
    first = false;
  }
  return result;
}

}  // namespace qrv
