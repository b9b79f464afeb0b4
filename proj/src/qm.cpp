#include "qrv/qm.hpp"

#include <cmath>
#include <stdexcept>

namespace qrv {

namespace {

constexpr double kSchmidtRankCutoff = 1e-10;

}  // namespace

DiscreteDistribution observable_distribution(const State& psi, const SpectralDecomposition& decomp) {
  if (psi.dim() != decomp.dim()) {
    throw std::invalid_argument("observable_distribution: dimension mismatch");
  }
  std::vector<double> values, weights;
  values.reserve(decomp.size());
  weights.reserve(decomp.size());
  for (const auto& branch : decomp.branches()) {
    values.push_back(branch.eigenvalue);
    weights.push_back(real_expectation(psi, branch.projector));
  }
  // Branch values are already separated by more than the grouping tolerance.
  return DiscreteDistribution::from_points(std::move(values), std::move(weights), 0.0);
}

DiscreteDistribution qm_distribution_of_function(const State& psi, const Operator& c,
                                                 double eps_eig) {
  require_hermitian(c, "qm_distribution_of_function");
  return observable_distribution(psi, decompose(c, eps_eig));
}

DiscreteDistribution marginal_distribution(const State& psi, const SpectralDecomposition& decomp,
                                           Factor which) {
  if (!psi.factor_dims()) {
    throw std::invalid_argument("marginal_distribution: state carries no factor structure");
  }
  const auto [d1, d2] = *psi.factor_dims();
  const Eigen::Index expected = which == Factor::First ? d1 : d2;
  if (decomp.dim() != expected) {
    throw std::invalid_argument("marginal_distribution: decomposition does not match the factor");
  }
  std::vector<double> values, weights;
  values.reserve(decomp.size());
  weights.reserve(decomp.size());
  for (const auto& branch : decomp.branches()) {
    const Operator extended = which == Factor::First
                                  ? tensor_product(branch.projector, Operator::identity(d2))
                                  : tensor_product(Operator::identity(d1), branch.projector);
    values.push_back(branch.eigenvalue);
    weights.push_back(real_expectation(psi, extended));
  }
  return DiscreteDistribution::from_points(std::move(values), std::move(weights), 0.0);
}

SchmidtDecomposition schmidt(const State& psi) {
  if (!psi.factor_dims()) {
    throw std::invalid_argument("schmidt: state carries no factor structure");
  }
  const auto [d1, d2] = *psi.factor_dims();
  Matrix coeff(d1, d2);
  for (Eigen::Index i = 0; i < d1; ++i)
    for (Eigen::Index j = 0; j < d2; ++j) coeff(i, j) = psi.amplitudes()(i * d2 + j);

  const Svd decomposition = svd(coeff);
  int rank = 0;
  while (rank < decomposition.singular_values.size() &&
         decomposition.singular_values(rank) > kSchmidtRankCutoff) {
    ++rank;
  }
  if (rank == 0) throw std::logic_error("schmidt: normalized state with zero Schmidt rank");

  SchmidtDecomposition out;
  out.coefficients = decomposition.singular_values.head(rank);
  out.left = decomposition.u.leftCols(rank);
  // psi(i*d2+j) = sum_k U(i,k) s_k conj(V(j,k)), so the right basis is conj(V).
  out.right = decomposition.v.leftCols(rank).conjugate();
  out.rank = rank;
  return out;
}

double qm_moment(const State& psi, const Operator& c, int n) {
  if (n < 0 || n > 8) throw std::invalid_argument("qm_moment: order must be in [0, 8]");
  require_hermitian(c, "qm_moment");
  if (psi.dim() != c.dim()) throw std::invalid_argument("qm_moment: dimension mismatch");
  Vector v = psi.amplitudes();
  for (int k = 0; k < n; ++k) v = c.matrix() * v;
  return psi.amplitudes().dot(v).real();
}

double qm_free_particle_variance(const State& psi, const Operator& x, const Operator& p, double t,
                                 double mass) {
  if (mass == 0.0) throw std::invalid_argument("qm_free_particle_variance: mass must be nonzero");
  require_hermitian(x, "qm_free_particle_variance(X)");
  require_hermitian(p, "qm_free_particle_variance(P)");
  const double s = t / mass;
  const double mean_x = real_expectation(psi, x);
  const double mean_p = real_expectation(psi, p);
  const double var_x = qm_moment(psi, x, 2) - mean_x * mean_x;
  const double var_p = qm_moment(psi, p, 2) - mean_p * mean_p;
  const Operator sym = x * p + p * x;
  const double correlation = real_expectation(psi, sym) - 2.0 * mean_x * mean_p;
  return var_x + s * s * var_p + s * correlation;
}

}  // namespace qrv
