#include "qrv/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qrv {

namespace {

double resolve_group_tol(double lo, double hi, double requested, double range_factor) {
  if (requested >= 0.0) return requested;
  const double floor = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  return std::max(range_factor * (hi - lo), floor);
}

}  // namespace

SpectralDecomposition::SpectralDecomposition(Eigen::Index dim, std::vector<SpectralBranch> branches,
                                             double tolerance)
    : dim_(dim), branches_(std::move(branches)), tolerance_(tolerance) {
  if (branches_.empty()) throw std::invalid_argument("SpectralDecomposition: no branches");
}

std::vector<double> SpectralDecomposition::eigenvalues() const {
  std::vector<double> out;
  out.reserve(branches_.size());
  for (const auto& b : branches_) out.push_back(b.eigenvalue);
  return out;
}

Operator SpectralDecomposition::reconstruct() const {
  Matrix sum = Matrix::Zero(dim_, dim_);
  for (const auto& b : branches_) sum += b.eigenvalue * b.projector.matrix();
  return Operator(std::move(sum));
}

SpectralDecomposition decompose(const Operator& a, double eps_eig) {
  const HermitianEig eig = hermitian_eig(a);
  const Eigen::Index n = a.dim();
  const double tol = resolve_group_tol(eig.eigenvalues(0), eig.eigenvalues(n - 1), eps_eig, 1e-8);

  std::vector<SpectralBranch> branches;
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && eig.eigenvalues(end) - eig.eigenvalues(end - 1) <= tol) ++end;
    const Eigen::Index count = end - start;
    const auto block = eig.eigenvectors.middleCols(start, count);
    branches.push_back(SpectralBranch{
        eig.eigenvalues.segment(start, count).mean(),
        Operator(block * block.adjoint()),
        int(count),
    });
    start = end;
  }
  return SpectralDecomposition(n, std::move(branches), tol);
}

Operator operator_function(const SpectralDecomposition& d, const ScalarFunction1& g) {
  Matrix sum = Matrix::Zero(d.dim(), d.dim());
  for (const auto& b : d.branches()) sum += g(b.eigenvalue) * b.projector.matrix();
  return Operator(std::move(sum));
}

SpectralDecomposition joint_function_projectors(const SpectralDecomposition& decomp_a,
                                                const SpectralDecomposition& decomp_b,
                                                const ScalarFunction2& f, double eps_bin) {
  struct Pair {
    double value;
    const Operator* pa;
    const Operator* pb;
    int multiplicity;
  };
  std::vector<Pair> pairs;
  pairs.reserve(decomp_a.size() * decomp_b.size());
  for (const auto& ba : decomp_a.branches()) {
    for (const auto& bb : decomp_b.branches()) {
      pairs.push_back(Pair{f(ba.eigenvalue, bb.eigenvalue), &ba.projector, &bb.projector,
                           ba.multiplicity * bb.multiplicity});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& x, const Pair& y) { return x.value < y.value; });

  const double tol =
      resolve_group_tol(pairs.front().value, pairs.back().value, eps_bin, 1e-9);

  const Eigen::Index dim = decomp_a.dim() * decomp_b.dim();
  std::vector<SpectralBranch> branches;
  std::size_t start = 0;
  while (start < pairs.size()) {
    std::size_t end = start + 1;
    while (end < pairs.size() && pairs[end].value - pairs[end - 1].value <= tol) ++end;
    Matrix projector = Matrix::Zero(dim, dim);
    double weighted = 0.0;
    int mult = 0;
    for (std::size_t i = start; i < end; ++i) {
      projector += tensor_product(*pairs[i].pa, *pairs[i].pb).matrix();
      weighted += pairs[i].value * pairs[i].multiplicity;
      mult += pairs[i].multiplicity;
    }
    branches.push_back(SpectralBranch{weighted / mult, Operator(std::move(projector)), mult});
    start = end;
  }
  return SpectralDecomposition(dim, std::move(branches), tol);
}

}  // namespace qrv
