#include "qrv/linalg.hpp"

#include <cmath>
#include <string>

namespace qrv {

namespace {

// Rotates each column so that its first component with modulus > 1e-8 is
// real-positive. Returns the applied phases so SVD can keep U*S*V^dagger
// intact.
Vector fix_column_phases(Matrix& columns) {
  Vector phases = Vector::Ones(columns.cols());
  for (Eigen::Index k = 0; k < columns.cols(); ++k) {
    for (Eigen::Index i = 0; i < columns.rows(); ++i) {
      const Complex z = columns(i, k);
      if (std::abs(z) > 1e-8) {
        const Complex phase = z / std::abs(z);
        columns.col(k) *= std::conj(phase);
        phases(k) = phase;
        break;
      }
    }
  }
  return phases;
}

}  // namespace

Operator::Operator(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
    throw std::invalid_argument("Operator: entries must form a nonempty square matrix");
  }
}

Operator Operator::identity(Eigen::Index dim) {
  return Operator(Matrix::Identity(dim, dim));
}

Operator Operator::zero(Eigen::Index dim) {
  return Operator(Matrix::Zero(dim, dim));
}

Operator Operator::diagonal(const RealVector& diag) {
  Matrix m = Matrix::Zero(diag.size(), diag.size());
  for (Eigen::Index i = 0; i < diag.size(); ++i) m(i, i) = diag(i);
  return Operator(std::move(m));
}

double Operator::hermiticity_defect() const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

bool Operator::is_hermitian(double tol) const {
  return hermiticity_defect() <= tol * std::max(1.0, frobenius_norm());
}

bool Operator::is_projector(double tol) const {
  const double scale = std::max(1.0, frobenius_norm());
  if (hermiticity_defect() > tol * scale) return false;
  return (entries_ * entries_ - entries_).norm() <= tol * scale;
}

Operator Operator::operator+(const Operator& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("Operator+: dimension mismatch");
  return Operator(entries_ + other.entries_);
}

Operator Operator::operator-(const Operator& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("Operator-: dimension mismatch");
  return Operator(entries_ - other.entries_);
}

Operator Operator::operator*(const Operator& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("Operator*: dimension mismatch");
  return Operator(entries_ * other.entries_);
}

State::State(Vector amplitudes, std::optional<FactorDims> factors)
    : amplitudes_(std::move(amplitudes)), factors_(factors) {
  if (amplitudes_.size() < 1) throw std::invalid_argument("State: empty amplitude vector");
  const double norm_sq = amplitudes_.squaredNorm();
  if (std::abs(norm_sq - 1.0) > 1e-12) {
    throw std::invalid_argument("State: amplitudes not normalized (|norm^2 - 1| = " +
                                std::to_string(std::abs(norm_sq - 1.0)) + ")");
  }
  if (factors_) {
    if (factors_->d1 < 1 || factors_->d2 < 1 || factors_->d1 * factors_->d2 != dim()) {
      throw std::invalid_argument("State: factor dims do not multiply to the state dimension");
    }
  }
}

State State::normalized(Vector amplitudes, std::optional<FactorDims> factors) {
  const double norm = amplitudes.norm();
  if (norm == 0.0) throw std::invalid_argument("State::normalized: zero vector");
  return State(amplitudes / norm, factors);
}

State State::with_factor_dims(Eigen::Index d1, Eigen::Index d2) const {
  return State(amplitudes_, FactorDims{d1, d2});
}

Operator tensor_product(const Operator& a, const Operator& b) {
  const Eigen::Index da = a.dim(), db = b.dim();
  Matrix out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
  return Operator(std::move(out));
}

State tensor_product(const State& chi, const State& zeta) {
  const Eigen::Index d1 = chi.dim(), d2 = zeta.dim();
  Vector out(d1 * d2);
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index j = 0; j < d2; ++j) out(i * d2 + j) = chi.amplitudes()(i) * zeta.amplitudes()(j);
  return State::normalized(std::move(out), FactorDims{d1, d2});
}

Operator commutator(const Operator& a, const Operator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("commutator: dimension mismatch");
  return Operator(a.matrix() * b.matrix() - b.matrix() * a.matrix());
}

double commutator_norm(const Operator& a, const Operator& b) {
  return commutator(a, b).frobenius_norm();
}

void require_hermitian(const Operator& a, const char* what) {
  if (!a.is_hermitian()) {
    throw std::invalid_argument(std::string(what) + ": operator is not Hermitian (defect " +
                                std::to_string(a.hermiticity_defect()) + ")");
  }
}

HermitianEig hermitian_eig(const Operator& a) {
  require_hermitian(a, "hermitian_eig");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  }
  HermitianEig out{solver.eigenvalues(), solver.eigenvectors()};
  fix_column_phases(out.eigenvectors);
  return out;
}

Svd svd(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Svd out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
  // Phase-fix U, compensate in V: (U p)(V p)^dagger column pair leaves
  // U S V^dagger unchanged.
  const Vector phases = fix_column_phases(out.u);
  for (Eigen::Index k = 0; k < out.v.cols(); ++k) out.v.col(k) *= std::conj(phases(k));
  return out;
}

Complex expectation(const State& psi, const Operator& a) {
  if (psi.dim() != a.dim()) throw std::invalid_argument("expectation: dimension mismatch");
  return psi.amplitudes().dot(a.matrix() * psi.amplitudes());
}

double real_expectation(const State& psi, const Operator& a) {
  return expectation(psi, a).real();
}

}  // namespace qrv
