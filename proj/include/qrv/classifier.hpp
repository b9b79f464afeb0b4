#pragma once

#include "qrv/distribution.hpp"
#include "qrv/linalg.hpp"
#include "qrv/qm.hpp"
#include "qrv/rv.hpp"
#include "qrv/spectral.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qrv {

/// Raised by classify() for commuting pairs that are neither functionally
/// dependent nor tensor-split; the decision tree has no branch for them.
class UnclassifiedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CaseBranch {
  NonCommuting,
  CommutingFunctional,
  TensorFactorizable,
  TensorEntangled,
};

enum class PredictedRelation { EqualExpected, GenericallyUnequal };

PredictedRelation predicted_relation(CaseBranch branch);

std::string to_string(CaseBranch branch);
std::string to_string(PredictedRelation relation);

/// Value table of a detected dependence B = G(A): pairs (a, G(a)) ascending
/// in a.
struct FunctionalTable {
  std::vector<std::pair<double, double>> pairs;

  /// Nearest-entry lookup; throws if no entry lies within `tol` of `a`.
  double lookup(double a, double tol) const;
  ScalarFunction1 as_function(double tol) const;
};

struct CaseLabel {
  CaseBranch branch;
  PredictedRelation relation;
  /// Present for CommutingFunctional.
  std::optional<FunctionalTable> dependence;
  /// True when the table reads B = G(A), false for the A = G(B) direction.
  bool b_of_a = true;
  /// Present when a tensor branch was reached.
  std::optional<int> schmidt_rank;
};

struct Tolerances {
  double commutator_rel = 1e-8;  // relative: ||[A,B]|| / (||A|| ||B||)
  double eig = -1.0;             // spectral grouping; negative = auto
  double bin = -1.0;             // value binning; negative = auto
  double snap = -1.0;            // TV support snapping; negative = auto
  double equal_w1 = 1e-9;        // equality gate for EqualExpected branches
  double functional = 1e-10;     // functional-dependence residual, relative
  double eigvec = 1e-8;          // eigenvector test for exceptional equality
  double c_check = 1e-8;         // supplied-C vs synthesized-C cross-check
};

struct ComparisonSettings {
  Tolerances tol;
  std::uint64_t oracle_seed = 12345;
  std::size_t oracle_samples = 100000;
};

struct OracleCheck {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  /// TV between the seeded empirical law and the exact independent combine.
  double tv_vs_exact = 0.0;
};

/// Everything a comparison run measured; the verdict is recomputable from the
/// stored numbers alone.
struct ComparisonReport {
  CaseLabel label;
  std::string function_label;

  DiscreteDistribution sigma_qm = DiscreteDistribution::point_mass(0.0);
  DiscreteDistribution sigma_rv = DiscreteDistribution::point_mass(0.0);
  /// Naive independent-mode law, reported alongside the dependent-mode
  /// sigma_rv in the functional branch.
  std::optional<DiscreteDistribution> sigma_rv_independent;

  double tv = 0.0;
  double w1 = 0.0;
  std::array<double, 5> moments_qm{};  // n = 0..4
  std::array<double, 5> moments_rv{};

  double commutator_abs = 0.0;
  double commutator_rel = 0.0;

  bool exceptional_equality = false;
  std::string exceptional_reason;
  bool verdict_consistent = false;

  OracleCheck oracle;
  Tolerances tolerances;
  /// Scenario-specific named numbers (widths, correlation terms, ...).
  std::vector<std::pair<std::string, double>> details;
};

/// Returns the value table {a -> b} iff B acts as a scalar on every
/// eigenspace of A, i.e. B = sum_a b_a P_a within `tol` relative to ||B||.
/// Callers are expected to have checked [A, B] ~ 0 first.
std::optional<FunctionalTable> detect_functional_dependence(const SpectralDecomposition& decomp_a,
                                                            const Operator& b,
                                                            double tol = 1e-10);

/// Walks the decision tree: noncommuting / functional dependence (preferring
/// B = G(A)) / tensor structure with Schmidt rank. Throws UnclassifiedError
/// for commuting pairs outside the taxonomy.
CaseLabel classify(const Operator& a, const Operator& b, const State& psi,
                   const Tolerances& tol = {});

/// Sum of F(a, b) P_a P_b over both branch sets; the spectral-calculus
/// realization of F(A, B) for commuting A, B on the same space.
Operator synthesize_commuting(const SpectralDecomposition& decomp_a,
                              const SpectralDecomposition& decomp_b, const ScalarFunction2& f);

/// Full comparison: classify, build sigma_qm from C and sigma_rv in the
/// branch-appropriate mode, measure distances and moments, run the seeded
/// sampling cross-check, and judge the predicted relation. C must be the
/// operator realization of F(A, B); for commuting pairs this is cross-checked
/// against the synthesized operator.
ComparisonReport run_comparison(const Operator& a, const Operator& b, const ScalarFunction2& f,
                                const State& psi, const Operator& c,
                                const ComparisonSettings& settings = {});

}  // namespace qrv
