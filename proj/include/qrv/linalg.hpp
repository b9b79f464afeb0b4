#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <stdexcept>

namespace qrv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Dense operator on a finite-dimensional Hilbert space. Observables are
/// Hermitian; projectors are additionally idempotent. Immutable after
/// construction.
class Operator {
 public:
  explicit Operator(Matrix entries);

  static Operator identity(Eigen::Index dim);
  static Operator zero(Eigen::Index dim);
  /// Diagonal operator from real entries.
  static Operator diagonal(const RealVector& diag);

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }

  Operator adjoint() const { return Operator(entries_.adjoint()); }
  Complex trace() const { return entries_.trace(); }
  double frobenius_norm() const { return entries_.norm(); }
  double max_abs() const { return entries_.cwiseAbs().maxCoeff(); }

  /// max_ij |M[i][j] - conj(M[j][i])|
  double hermiticity_defect() const;
  bool is_hermitian(double tol = 1e-12) const;
  bool is_projector(double tol = 1e-10) const;

  Operator operator+(const Operator& other) const;
  Operator operator-(const Operator& other) const;
  Operator operator*(const Operator& other) const;
  friend Operator operator*(Complex scalar, const Operator& op) {
    return Operator(scalar * op.entries_);
  }

 private:
  Matrix entries_;
};

struct FactorDims {
  Eigen::Index d1 = 0;
  Eigen::Index d2 = 0;
};

/// Normalized pure state, optionally tagged with a bipartite tensor-factor
/// structure (d1, d2) with d1 * d2 == dim.
class State {
 public:
  explicit State(Vector amplitudes, std::optional<FactorDims> factors = std::nullopt);

  /// Scales an arbitrary nonzero vector to unit norm.
  static State normalized(Vector amplitudes, std::optional<FactorDims> factors = std::nullopt);

  Eigen::Index dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }
  const std::optional<FactorDims>& factor_dims() const { return factors_; }
  State with_factor_dims(Eigen::Index d1, Eigen::Index d2) const;

 private:
  Vector amplitudes_;
  std::optional<FactorDims> factors_;
};

/// Kronecker product; (A (x) I)(I (x) B) == A (x) B.
Operator tensor_product(const Operator& a, const Operator& b);

/// Product state chi (x) zeta, tagged with the factor structure.
State tensor_product(const State& chi, const State& zeta);

Operator commutator(const Operator& a, const Operator& b);

/// Frobenius norm of AB - BA.
double commutator_norm(const Operator& a, const Operator& b);

struct HermitianEig {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // orthonormal columns, phase-fixed
};

/// Eigendecomposition of a Hermitian operator. Deterministic for identical
/// input; each eigenvector's first component with modulus > 1e-8 is made
/// real-positive.
HermitianEig hermitian_eig(const Operator& a);

struct Svd {
  Matrix u;
  RealVector singular_values;  // descending
  Matrix v;                    // M = U * S * V^dagger
};

Svd svd(const Matrix& m);

/// <psi, A psi>; real up to rounding when A is Hermitian.
Complex expectation(const State& psi, const Operator& a);
double real_expectation(const State& psi, const Operator& a);

/// Throws std::invalid_argument unless a.is_hermitian(); `what` names the
/// offending argument in the message.
void require_hermitian(const Operator& a, const char* what);

}  // namespace qrv
