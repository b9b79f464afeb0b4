#pragma once

#include "qrv/linalg.hpp"
#include "qrv/scalar_function.hpp"

#include <vector>

namespace qrv {

struct SpectralBranch {
  double eigenvalue;
  Operator projector;
  int multiplicity;
};

/// Tolerance-grouped spectral decomposition: distinct eigenvalues (separated
/// by more than the grouping tolerance) with orthogonal projectors summing to
/// the identity.
class SpectralDecomposition {
 public:
  SpectralDecomposition(Eigen::Index dim, std::vector<SpectralBranch> branches, double tolerance);

  Eigen::Index dim() const { return dim_; }
  const std::vector<SpectralBranch>& branches() const { return branches_; }
  std::size_t size() const { return branches_.size(); }
  /// Resolved grouping tolerance actually used at construction.
  double tolerance() const { return tolerance_; }

  std::vector<double> eigenvalues() const;

  /// Sum of a * P_a.
  Operator reconstruct() const;

 private:
  Eigen::Index dim_;
  std::vector<SpectralBranch> branches_;
  double tolerance_;
};

/// Spectral decomposition of a Hermitian operator. Eigenvalues within
/// `eps_eig` of each other (single-linkage chain) share one branch whose
/// projector sums the rank-1 pieces. Negative eps_eig selects the default
/// 1e-8 * spectral range.
SpectralDecomposition decompose(const Operator& a, double eps_eig = -1.0);

/// Spectral calculus: sum of G(a) * P_a. Commutes with the source operator.
Operator operator_function(const SpectralDecomposition& d, const ScalarFunction1& g);

/// Projector family of C = F(A, B) on the product space, assembled as
/// sums of P_a (x) P_b over pairs with F(a, b) in the same value bin.
/// decomp_a lives on factor 1, decomp_b on factor 2. Negative eps_bin selects
/// the default 1e-9 * range of F values.
SpectralDecomposition joint_function_projectors(const SpectralDecomposition& decomp_a,
                                                const SpectralDecomposition& decomp_b,
                                                const ScalarFunction2& f, double eps_bin = -1.0);

}  // namespace qrv
