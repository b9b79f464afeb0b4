#pragma once

#include "qrv/distribution.hpp"
#include "qrv/scalar_function.hpp"

#include <cstdint>

namespace qrv {

/// How the classical side combines the two one-observable laws.
enum class CombinationMode {
  Independent,           // product law through F(a, b)
  FunctionalDependence,  // single-variable law through a -> F(a, G(a))
};

/// Law of H(A): mass of each support point a moved to H(a), merged within
/// eps_bin. Total mass is preserved exactly.
DiscreteDistribution pushforward(const DiscreteDistribution& rho, const ScalarFunction1& h,
                                 double eps_bin = -1.0);

/// Law of F(A, B) for independent A, B: weight rho(a) * pi(b) at F(a, b)
/// over the full product of supports, then bin-merged.
DiscreteDistribution independent_combine(const DiscreteDistribution& rho,
                                         const DiscreteDistribution& pi, const ScalarFunction2& f,
                                         double eps_bin = -1.0);

/// Law of F(A, G(A)): pushforward of rho through a -> F(a, G(a)).
DiscreteDistribution dependent_combine(const DiscreteDistribution& rho, const ScalarFunction1& g,
                                       const ScalarFunction2& f, double eps_bin = -1.0);

/// Sum of c^n * sigma(c), 0 <= n <= 8.
double rv_moment(const DiscreteDistribution& sigma, int n);

double rv_variance(const DiscreteDistribution& sigma);

/// Empirical law of F(a, b) from n_samples independent draws, a from rho and
/// b from pi. Bit-deterministic per (seed, n_samples); the bin grid matches
/// independent_combine on the same inputs.
DiscreteDistribution sample_oracle(const DiscreteDistribution& rho, const DiscreteDistribution& pi,
                                   const ScalarFunction2& f, std::size_t n_samples,
                                   std::uint64_t seed, double eps_bin = -1.0);

}  // namespace qrv
