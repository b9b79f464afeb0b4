#include "qrv/rv.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace qrv {

namespace {

// 53-bit uniform in [0, 1) straight from the engine words, so oracle runs are
// reproducible independent of any library distribution implementation.
double next_uniform(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

std::size_t draw_index(const std::vector<double>& cdf, double u) {
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) return cdf.size() - 1;
  return std::size_t(it - cdf.begin());
}

std::vector<double> cumulative(const DiscreteDistribution& d) {
  std::vector<double> cdf(d.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    acc += d.weights()[i];
    cdf[i] = acc;
  }
  return cdf;
}

}  // namespace

DiscreteDistribution pushforward(const DiscreteDistribution& rho, const ScalarFunction1& h,
                                 double eps_bin) {
  std::vector<double> values(rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) values[i] = h(rho.values()[i]);
  const double tol = resolve_bin_tol(values, eps_bin);
  return DiscreteDistribution::from_points(std::move(values), rho.weights(), tol);
}

DiscreteDistribution independent_combine(const DiscreteDistribution& rho,
                                         const DiscreteDistribution& pi, const ScalarFunction2& f,
                                         double eps_bin) {
  std::vector<double> values, weights;
  values.reserve(rho.size() * pi.size());
  weights.reserve(rho.size() * pi.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    for (std::size_t j = 0; j < pi.size(); ++j) {
      values.push_back(f(rho.values()[i], pi.values()[j]));
      weights.push_back(rho.weights()[i] * pi.weights()[j]);
    }
  }
  const double tol = resolve_bin_tol(values, eps_bin);
  return DiscreteDistribution::from_points(std::move(values), std::move(weights), tol);
}

DiscreteDistribution dependent_combine(const DiscreteDistribution& rho, const ScalarFunction1& g,
                                       const ScalarFunction2& f, double eps_bin) {
  ScalarFunction1 composed{[&g, &f](double a) { return f(a, g(a)); },
                           f.label + " with b = " + g.label};
  return pushforward(rho, composed, eps_bin);
}

double rv_moment(const DiscreteDistribution& sigma, int n) {
  return sigma.moment(n);
}

double rv_variance(const DiscreteDistribution& sigma) {
  return sigma.variance();
}

DiscreteDistribution sample_oracle(const DiscreteDistribution& rho, const DiscreteDistribution& pi,
                                   const ScalarFunction2& f, std::size_t n_samples,
                                   std::uint64_t seed, double eps_bin) {
  if (n_samples < 1) throw std::invalid_argument("sample_oracle: n_samples must be >= 1");

  const std::vector<double> cdf_a = cumulative(rho);
  const std::vector<double> cdf_b = cumulative(pi);

  std::vector<std::size_t> counts(rho.size() * pi.size(), 0);
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < n_samples; ++s) {
    const std::size_t i = draw_index(cdf_a, next_uniform(rng));
    const std::size_t j = draw_index(cdf_b, next_uniform(rng));
    ++counts[i * pi.size() + j];
  }

  // Same value set as independent_combine so the resolved bin grid matches.
  std::vector<double> values, weights;
  values.reserve(counts.size());
  weights.reserve(counts.size());
  for (std::size_t i = 0; i < rho.size(); ++i) {
    for (std::size_t j = 0; j < pi.size(); ++j) {
      values.push_back(f(rho.values()[i], pi.values()[j]));
      weights.push_back(double(counts[i * pi.size() + j]) / double(n_samples));
    }
  }
  const double tol = resolve_bin_tol(values, eps_bin);
  return DiscreteDistribution::from_points(std::move(values), std::move(weights), tol);
}

}  // namespace qrv
