#include "qrv/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qrv {

PredictedRelation predicted_relation(CaseBranch branch) {
  switch (branch) {
    case CaseBranch::CommutingFunctional:
    case CaseBranch::TensorFactorizable:
      return PredictedRelation::EqualExpected;
    case CaseBranch::NonCommuting:
    case CaseBranch::TensorEntangled:
      return PredictedRelation::GenericallyUnequal;
  }
  throw std::logic_error("predicted_relation: unknown branch");
}

std::string to_string(CaseBranch branch) {
  switch (branch) {
    case CaseBranch::NonCommuting: return "non_commuting";
    case CaseBranch::CommutingFunctional: return "commuting_functional";
    case CaseBranch::TensorFactorizable: return "tensor_factorizable";
    case CaseBranch::TensorEntangled: return "tensor_entangled";
  }
  throw std::logic_error("to_string: unknown branch");
}

std::string to_string(PredictedRelation relation) {
  return relation == PredictedRelation::EqualExpected ? "equal_expected" : "generically_unequal";
}

double FunctionalTable::lookup(double a, double tol) const {
  const double limit = std::max(tol, 0.0);
  double best_distance = std::numeric_limits<double>::infinity();
  double best_value = 0.0;
  for (const auto& [key, value] : pairs) {
    const double distance = std::abs(key - a);
    if (distance < best_distance) {
      best_distance = distance;
      best_value = value;
    }
  }
  if (best_distance > limit) {
    throw std::invalid_argument("FunctionalTable::lookup: no entry near " + std::to_string(a));
  }
  return best_value;
}

ScalarFunction1 FunctionalTable::as_function(double tol) const {
  return ScalarFunction1{[table = *this, tol](double a) { return table.lookup(a, tol); },
                         "G(A) value table"};
}

std::optional<FunctionalTable> detect_functional_dependence(const SpectralDecomposition& decomp_a,
                                                            const Operator& b, double tol) {
  if (decomp_a.dim() != b.dim()) {
    throw std::invalid_argument("detect_functional_dependence: dimension mismatch");
  }
  // B = G(A) iff B is a scalar b_a = Tr(P_a B) / mult_a on every eigenspace
  // of A and has no off-block part, i.e. B equals its block-scalar average.
  FunctionalTable table;
  Matrix blocked = Matrix::Zero(b.dim(), b.dim());
  for (const auto& branch : decomp_a.branches()) {
    const double value =
        (branch.projector.matrix() * b.matrix()).trace().real() / branch.multiplicity;
    blocked += value * branch.projector.matrix();
    table.pairs.emplace_back(branch.eigenvalue, value);
  }
  const double residual = (b.matrix() - blocked).norm();
  if (residual > tol * std::max(1.0, b.frobenius_norm())) return std::nullopt;
  return table;
}

CaseLabel classify(const Operator& a, const Operator& b, const State& psi, const Tolerances& tol) {
  require_hermitian(a, "classify(A)");
  require_hermitian(b, "classify(B)");
  if (a.dim() != b.dim() || a.dim() != psi.dim()) {
    throw std::invalid_argument("classify: dimension mismatch");
  }

  const double norms = a.frobenius_norm() * b.frobenius_norm();
  const double rel = norms > 0.0 ? commutator_norm(a, b) / norms : 0.0;
  if (rel > tol.commutator_rel) {
    return CaseLabel{CaseBranch::NonCommuting, PredictedRelation::GenericallyUnequal};
  }

  const SpectralDecomposition decomp_a = decompose(a, tol.eig);
  if (auto table = detect_functional_dependence(decomp_a, b, tol.functional)) {
    return CaseLabel{CaseBranch::CommutingFunctional, PredictedRelation::EqualExpected,
                     std::move(table), true};
  }
  const SpectralDecomposition decomp_b = decompose(b, tol.eig);
  if (auto table = detect_functional_dependence(decomp_b, a, tol.functional)) {
    return CaseLabel{CaseBranch::CommutingFunctional, PredictedRelation::EqualExpected,
                     std::move(table), false};
  }

  if (psi.factor_dims()) {
    const int rank = schmidt(psi).rank;
    const CaseBranch branch =
        rank == 1 ? CaseBranch::TensorFactorizable : CaseBranch::TensorEntangled;
    CaseLabel label{branch, predicted_relation(branch)};
    label.schmidt_rank = rank;
    return label;
  }

  throw UnclassifiedError(
      "classify: commuting pair is neither functionally dependent nor tensor-split");
}

Operator synthesize_commuting(const SpectralDecomposition& decomp_a,
                              const SpectralDecomposition& decomp_b, const ScalarFunction2& f) {
  if (decomp_a.dim() != decomp_b.dim()) {
    throw std::invalid_argument("synthesize_commuting: dimension mismatch");
  }
  Matrix sum = Matrix::Zero(decomp_a.dim(), decomp_a.dim());
  for (const auto& ba : decomp_a.branches()) {
    for (const auto& bb : decomp_b.branches()) {
      sum += f(ba.eigenvalue, bb.eigenvalue) * (ba.projector.matrix() * bb.projector.matrix());
    }
  }
  return Operator(std::move(sum));
}

namespace {

bool is_eigenvector_of(const State& psi, const Operator& op, double tol) {
  const Vector image = op.matrix() * psi.amplitudes();
  const Complex mean = psi.amplitudes().dot(image);
  const double residual = (image - mean * psi.amplitudes()).norm();
  return residual <= tol * std::max(1.0, op.frobenius_norm());
}

}  // namespace

ComparisonReport run_comparison(const Operator& a, const Operator& b, const ScalarFunction2& f,
                                const State& psi, const Operator& c,
                                const ComparisonSettings& settings) {
  if (c.dim() != psi.dim()) throw std::invalid_argument("run_comparison: C dimension mismatch");
  require_hermitian(c, "run_comparison(C)");
  const Tolerances& tol = settings.tol;

  ComparisonReport report;
  report.label = classify(a, b, psi, tol);
  report.function_label = f.label;
  report.tolerances = tol;
  report.commutator_abs = commutator_norm(a, b);
  const double norms = a.frobenius_norm() * b.frobenius_norm();
  report.commutator_rel = norms > 0.0 ? report.commutator_abs / norms : 0.0;

  const SpectralDecomposition decomp_a = decompose(a, tol.eig);
  const SpectralDecomposition decomp_b = decompose(b, tol.eig);
  const DiscreteDistribution rho = observable_distribution(psi, decomp_a);
  const DiscreteDistribution pi = observable_distribution(psi, decomp_b);

  // For commuting pairs, C is redundant information: verify it realizes
  // F(A, B) through spectral calculus before trusting it.
  if (report.label.branch != CaseBranch::NonCommuting) {
    const Operator synthesized = synthesize_commuting(decomp_a, decomp_b, f);
    const double defect = (synthesized - c).frobenius_norm();
    if (defect > tol.c_check * std::max(1.0, c.frobenius_norm())) {
      throw std::invalid_argument("run_comparison: supplied C does not realize F(A, B)");
    }
  }

  const SpectralDecomposition decomp_c = decompose(c, tol.eig);
  report.sigma_qm = observable_distribution(psi, decomp_c);

  // One bin grid for every classical-side law of F values.
  std::vector<double> product_values;
  product_values.reserve(rho.size() * pi.size());
  for (double va : rho.values())
    for (double vb : pi.values()) product_values.push_back(f(va, vb));
  const double bin = resolve_bin_tol(product_values, tol.bin);

  const DiscreteDistribution independent = independent_combine(rho, pi, f, bin);
  if (report.label.branch == CaseBranch::CommutingFunctional) {
    const FunctionalTable& table = *report.label.dependence;
    if (report.label.b_of_a) {
      report.sigma_rv = dependent_combine(rho, table.as_function(decomp_a.tolerance()), f, bin);
    } else {
      ScalarFunction1 composed{
          [table, f, lookup_tol = decomp_b.tolerance()](double vb) {
            return f(table.lookup(vb, lookup_tol), vb);
          },
          f.label + " with a = G(b)"};
      report.sigma_rv = pushforward(pi, composed, bin);
    }
    report.sigma_rv_independent = independent;
  } else {
    report.sigma_rv = independent;
  }

  report.tv = total_variation(report.sigma_qm, report.sigma_rv, tol.snap);
  report.w1 = wasserstein1(report.sigma_qm, report.sigma_rv);
  for (int n = 0; n <= 4; ++n) {
    report.moments_qm[n] = qm_moment(psi, c, n);
    report.moments_rv[n] = rv_moment(report.sigma_rv, n);
  }

  if (report.label.relation == PredictedRelation::GenericallyUnequal &&
      report.w1 <= tol.equal_w1) {
    if (is_eigenvector_of(psi, b, tol.eigvec)) {
      report.exceptional_equality = true;
      report.exceptional_reason = "state is an eigenvector of B";
    } else if (is_eigenvector_of(psi, a, tol.eigvec)) {
      report.exceptional_equality = true;
      report.exceptional_reason = "state is an eigenvector of A";
    }
  }

  report.verdict_consistent = report.label.relation == PredictedRelation::EqualExpected
                                  ? report.w1 <= tol.equal_w1
                                  : report.w1 > tol.equal_w1 || report.exceptional_equality;

  const DiscreteDistribution empirical =
      sample_oracle(rho, pi, f, settings.oracle_samples, settings.oracle_seed, bin);
  report.oracle =
      OracleCheck{settings.oracle_seed, settings.oracle_samples,
                  total_variation(empirical, independent, tol.snap)};

  report.details.emplace_back("eps_eig_c", decomp_c.tolerance());
  report.details.emplace_back("eps_bin", bin);
  return report;
}

}  // namespace qrv
