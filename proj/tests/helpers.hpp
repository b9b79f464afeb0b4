#pragma once

#include "qrv/classifier.hpp"
#include "qrv/distribution.hpp"
#include "qrv/linalg.hpp"

#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrv::testing {

/// Seeded generator with stdlib-independent uniforms (raw 53-bit mantissas),
/// so frozen-seed tests do not depend on distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }  // [0, 1)
  double symmetric() { return 2.0 * uniform() - 1.0; }              // [-1, 1)
  Complex complex_box() { return Complex(symmetric(), symmetric()); }

 private:
  std::mt19937_64 engine_;
};

inline Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.complex_box();
  }
  return m;
}

inline Operator random_hermitian(Eigen::Index dim, Rng& rng) {
  const Matrix g = random_matrix(dim, dim, rng);
  return Operator((g + g.adjoint()) / 2.0);
}

inline State random_state(Eigen::Index dim, Rng& rng) {
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = rng.complex_box();
  if (v.norm() < 1e-6) v(0) += 1.0;  // astronomically unlikely, but total
  return State::normalized(std::move(v));
}

inline State random_state(Eigen::Index dim, Rng& rng, FactorDims dims) {
  return random_state(dim, rng).with_factor_dims(dims.d1, dims.d2);
}

inline State random_product_state(Eigen::Index d1, Eigen::Index d2, Rng& rng) {
  return tensor_product(random_state(d1, rng), random_state(d2, rng));
}

/// Random law with support points spread over [lo, hi] at guaranteed mutual
/// separation >= 0.4 (hi-lo)/size and weights bounded away from zero.
inline DiscreteDistribution random_distribution(std::size_t size, double lo, double hi, Rng& rng) {
  std::vector<double> values(size), weights(size);
  double mass = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    values[i] = lo + (hi - lo) * (double(i) + 0.2 + 0.6 * rng.uniform()) / double(size);
    weights[i] = 0.05 + rng.uniform();
    mass += weights[i];
  }
  for (double& w : weights) w /= mass;
  return DiscreteDistribution::from_points(std::move(values), std::move(weights));
}

inline Operator pauli_x() {
  Matrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return Operator(m);
}

inline Operator pauli_y() {
  Matrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return Operator(m);
}

inline Operator pauli_z() {
  Matrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return Operator(m);
}

inline State bell_state() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::numbers::sqrt2;
  return State(std::move(v), FactorDims{2, 2});
}

inline State plus_state() {
  Vector v(2);
  v << 1.0, 1.0;
  return State::normalized(std::move(v));
}

/// Named number from a report's details list; throws when absent.
inline double detail_of(const ComparisonReport& report, const std::string& name) {
  for (const auto& [key, value] : report.details) {
    if (key == name) return value;
  }
  throw std::runtime_error("missing report detail: " + name);
}

}  // namespace qrv::testing
