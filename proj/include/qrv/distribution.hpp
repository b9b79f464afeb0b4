#pragma once

#include <cstddef>
#include <vector>

namespace qrv {

/// Finite weighted support on the real line: strictly ascending values with
/// nonnegative weights. Shared representation for all the laws handled here
/// (rho, pi, sigma_qm, sigma_rv, eta).
///
/// Construction requires weights summing to one within 1e-9, merges values
/// within `merge_tol` (single linkage, summed weights, mass-weighted
/// representative value), clamps rounding-dust negatives in [-1e-12, 0) to
/// zero and drops weights below 1e-12.
class DiscreteDistribution {
 public:
  static DiscreteDistribution from_points(std::vector<double> values,
                                          std::vector<double> weights,
                                          double merge_tol = 0.0);
  static DiscreteDistribution point_mass(double value);

  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return values_.size(); }

  double total_mass() const;
  /// Sum of w * v^n for 0 <= n <= 8.
  double moment(int n) const;
  double mean() const { return moment(1); }
  /// Second central moment, clamped at zero.
  double variance() const;

 private:
  DiscreteDistribution(std::vector<double> values, std::vector<double> weights);

  std::vector<double> values_;
  std::vector<double> weights_;
};

/// Default value-binning tolerance: 1e-9 of the value range, floored so that
/// exactly coincident supports still group.
double resolve_bin_tol(const std::vector<double>& values, double requested);

/// Both laws mapped onto one snapped grid (absent side weighted 0); the grid
/// value of each group is the mass-weighted mean over both sides.
struct AlignedSupport {
  std::vector<double> values;
  std::vector<double> weights_a;
  std::vector<double> weights_b;
};

AlignedSupport align_supports(const DiscreteDistribution& a, const DiscreteDistribution& b,
                              double snap_tol = -1.0);

/// Half the absolute weight difference on the snapped shared grid.
double total_variation(const DiscreteDistribution& a, const DiscreteDistribution& b,
                       double snap_tol = -1.0);

/// Integral of the absolute CDF difference; no snapping needed.
double wasserstein1(const DiscreteDistribution& a, const DiscreteDistribution& b);

}  // namespace qrv
