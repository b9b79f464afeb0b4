#pragma once

#include "qrv/distribution.hpp"
#include "qrv/linalg.hpp"
#include "qrv/spectral.hpp"

namespace qrv {

/// Eigenvalue law of an observable in state psi: weight <psi, P_a psi> per
/// branch. One weight per distinct eigenvalue, never per eigenvector.
DiscreteDistribution observable_distribution(const State& psi, const SpectralDecomposition& decomp);

/// Law of a Hermitian operator C (decompose, then observable_distribution).
DiscreteDistribution qm_distribution_of_function(const State& psi, const Operator& c,
                                                 double eps_eig = -1.0);

enum class Factor { First = 1, Second = 2 };

/// Law of an observable acting on one tensor factor: weights
/// <psi, (P_a (x) 1) psi> or <psi, (1 (x) P_b) psi>. The decomposition lives
/// on the chosen factor space; psi must carry factor dims.
DiscreteDistribution marginal_distribution(const State& psi, const SpectralDecomposition& decomp,
                                           Factor which);

/// Bi-orthogonal form psi = sum_k alpha_k chi_k (x) zeta_k with orthonormal
/// bases per factor; rank counts singular values above 1e-10. Rank 1 means
/// factorizable.
struct SchmidtDecomposition {
  RealVector coefficients;  // nonincreasing, positive
  Matrix left;              // d1 x rank, columns chi_k
  Matrix right;             // d2 x rank, columns zeta_k
  int rank = 0;
};

SchmidtDecomposition schmidt(const State& psi);

/// <psi, C^n psi> for Hermitian C, 0 <= n <= 8.
double qm_moment(const State& psi, const Operator& c, int n);

/// Closed-form width of the time-t position law: Delta_x^2 +
/// (t/m)^2 Delta_p^2 + (t/m) (<XP+PX> - 2<X><P>).
double qm_free_particle_variance(const State& psi, const Operator& x, const Operator& p, double t,
                                 double mass);

}  // namespace qrv
