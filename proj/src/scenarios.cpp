#include "qrv/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qrv {

namespace {

constexpr double kEdgeMassBudget = 1e-10;  // allowed mass above level n/2

Operator hermitized(const Operator& op) {
  return Operator((op.matrix() + op.matrix().adjoint()) / 2.0);
}

/// exp(-i angle G) v through the eigenbasis of the Hermitian generator G.
Vector evolve(const Operator& generator, double angle, const Vector& v) {
  const HermitianEig eig = hermitian_eig(generator);
  Vector coords = eig.eigenvectors.adjoint() * v;
  for (Eigen::Index k = 0; k < coords.size(); ++k) {
    coords(k) *= std::exp(Complex(0.0, -angle * eig.eigenvalues(k)));
  }
  return eig.eigenvectors * coords;
}

/// Rejects states whose number-basis mass leaks past the lowest n/2 levels;
/// beyond that the cutoff corner contaminates spectra above test tolerances.
void require_within_truncation(const Vector& amplitudes, const char* what) {
  const Eigen::Index half = amplitudes.size() / 2;
  const double low_mass = amplitudes.head(half).squaredNorm();
  if (low_mass < 1.0 - kEdgeMassBudget) {
    throw std::invalid_argument(std::string(what) +
                                ": state mass leaks past the lowest n/2 levels; "
                                "raise the dimension or shrink the parameter");
  }
}

double mass_near_odd_integers(const DiscreteDistribution& d, double tol) {
  double total = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double v = d.values()[i];
    const double odd = 2.0 * std::round((v - 1.0) / 2.0) + 1.0;
    if (std::abs(v - odd) <= tol) total += d.weights()[i];
  }
  return total;
}

ComparisonSettings settings_of(const ScenarioConfig& config) {
  return ComparisonSettings{config.tol, config.seed, config.samples};
}

State uniform_state(int dim) {
  return State::normalized(Vector::Ones(dim));
}

}  // namespace

void validate(const ScenarioConfig& config) {
  if (config.dim < 2) throw std::invalid_argument("ScenarioConfig: dim must be >= 2");
  if (config.samples == 0) throw std::invalid_argument("ScenarioConfig: samples must be positive");
  if (!(config.t_over_m == config.t_over_m) || std::isinf(config.t_over_m)) {
    throw std::invalid_argument("ScenarioConfig: t_over_m must be finite");
  }
  if (config.grid_length <= 0.0) {
    throw std::invalid_argument("ScenarioConfig: grid_length must be positive");
  }
  const auto positive = [](double value, const char* name) {
    if (!(value > 0.0)) {
      throw std::invalid_argument(std::string("ScenarioConfig: tolerance ") + name +
                                  " must be positive");
    }
  };
  const auto positive_or_auto = [](double value, const char* name) {
    // Negative values select the automatic scale-aware default.
    if (value == 0.0 || std::isnan(value)) {
      throw std::invalid_argument(std::string("ScenarioConfig: tolerance ") + name +
                                  " must be positive (or negative for automatic)");
    }
  };
  positive(config.tol.commutator_rel, "commutator_rel");
  positive_or_auto(config.tol.eig, "eig");
  positive_or_auto(config.tol.bin, "bin");
  positive_or_auto(config.tol.snap, "snap");
  positive(config.tol.equal_w1, "equal_w1");
  positive(config.tol.functional, "functional");
  positive(config.tol.eigvec, "eigvec");
  positive(config.tol.c_check, "c_check");
}

QuadraturePair build_fock_xp(int n) {
  if (n < 4) throw std::invalid_argument("build_fock_xp: need n >= 4");
  Matrix lowering = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) lowering(i, i + 1) = std::sqrt(double(i + 1));
  const Matrix raising = lowering.adjoint();
  const double root_half = 1.0 / std::numbers::sqrt2;
  return QuadraturePair{Operator(root_half * (lowering + raising)),
                        Operator(Complex(0.0, root_half) * (raising - lowering))};
}

QuadraturePair build_grid_xp(int n, double length) {
  if (n < 4) throw std::invalid_argument("build_grid_xp: need n >= 4");
  if (length <= 0.0) throw std::invalid_argument("build_grid_xp: need length > 0");
  RealVector positions(n);
  for (int j = 0; j < n; ++j) positions(j) = (j - n / 2) * length / n;

  Matrix fourier(n, n);
  const double scale = 1.0 / std::sqrt(double(n));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      const double phase = -2.0 * std::numbers::pi * k * j / n;
      fourier(k, j) = scale * std::exp(Complex(0.0, phase));
    }
  }
  RealVector momenta(n);
  for (int k = 0; k < n; ++k) {
    const int wrapped = k < n / 2 ? k : k - n;
    momenta(k) = 2.0 * std::numbers::pi * wrapped / length;
  }
  const Matrix p = fourier.adjoint() * momenta.asDiagonal().toDenseMatrix().cast<Complex>() *
                   fourier;
  return QuadraturePair{Operator::diagonal(positions), hermitized(Operator(p))};
}

State fock_vacuum(int n) {
  if (n < 2) throw std::invalid_argument("fock_vacuum: need n >= 2");
  Vector amplitudes = Vector::Zero(n);
  amplitudes(0) = 1.0;
  return State(std::move(amplitudes));
}

State fock_coherent(int n, double alpha) {
  if (n < 2) throw std::invalid_argument("fock_coherent: need n >= 2");
  Vector amplitudes(n);
  double coeff = std::exp(-alpha * alpha / 2.0);
  amplitudes(0) = coeff;
  for (int i = 1; i < n; ++i) {
    coeff *= alpha / std::sqrt(double(i));
    amplitudes(i) = coeff;
  }
  State state = State::normalized(std::move(amplitudes));
  require_within_truncation(state.amplitudes(), "fock_coherent");
  return state;
}

State squeezed_rotated_state(const QuadraturePair& xp, double squeeze, double rotation) {
  const Operator mixing = hermitized(
      Operator((xp.x.matrix() * xp.p.matrix() + xp.p.matrix() * xp.x.matrix()) / 2.0));
  const Operator number_like =
      hermitized(Operator((xp.x.matrix() * xp.x.matrix() + xp.p.matrix() * xp.p.matrix()) / 2.0));
  Vector v = fock_vacuum(int(xp.x.dim())).amplitudes();
  v = evolve(mixing, squeeze, v);
  v = evolve(number_like, rotation, v);
  State state = State::normalized(std::move(v));
  require_within_truncation(state.amplitudes(), "squeezed_rotated_state");
  return state;
}

State grid_gaussian(int n, double length, double sigma, double center, double momentum) {
  if (n < 4) throw std::invalid_argument("grid_gaussian: need n >= 4");
  if (sigma <= 0.0) throw std::invalid_argument("grid_gaussian: need sigma > 0");
  if (std::abs(center) + 6.0 * sigma > length / 2.0) {
    throw std::invalid_argument("grid_gaussian: packet does not fit the box");
  }
  Vector amplitudes(n);
  for (int j = 0; j < n; ++j) {
    const double x = (j - n / 2) * length / n;
    const double envelope = std::exp(-(x - center) * (x - center) / (4.0 * sigma * sigma));
    amplitudes(j) = envelope * std::exp(Complex(0.0, momentum * x));
  }
  return State::normalized(std::move(amplitudes));
}

ComparisonReport scenario_harmonic(const ScenarioConfig& config) {
  validate(config);
  if (config.dim < 32) throw std::invalid_argument("scenario_harmonic: need dim >= 32");
  const QuadraturePair xp = build_fock_xp(config.dim);
  const Operator a = hermitized(xp.x * xp.x);
  const Operator b = hermitized(xp.p * xp.p);
  const Operator c = a + b;
  const State psi = fock_coherent(config.dim, config.alpha);
  const ScalarFunction2 f{[](double va, double vb) { return va + vb; }, "a + b"};

  ComparisonReport report = run_comparison(a, b, f, psi, c, settings_of(config));
  report.details.emplace_back("alpha", config.alpha);
  report.details.emplace_back("mass_near_odd_qm", mass_near_odd_integers(report.sigma_qm, 1e-6));
  report.details.emplace_back(
      "mass_between_odd_rv",
      report.sigma_rv.total_mass() - mass_near_odd_integers(report.sigma_rv, 1e-6));
  return report;
}

ComparisonReport scenario_free_particle(const ScenarioConfig& config) {
  validate(config);
  if (config.dim < 4) throw std::invalid_argument("scenario_free_particle: need dim >= 4");
  const QuadraturePair xp = build_fock_xp(config.dim);
  const double s = config.t_over_m;
  const Operator c = xp.x + Complex(s) * xp.p;
  const State psi = squeezed_rotated_state(xp, config.squeeze, config.rotation);
  const ScalarFunction2 f{[s](double va, double vb) { return va + s * vb; }, "a + (t/m) b"};

  ComparisonReport report = run_comparison(xp.x, xp.p, f, psi, c, settings_of(config));

  const double mean_x = qm_moment(psi, xp.x, 1);
  const double mean_p = qm_moment(psi, xp.p, 1);
  const double var_x = qm_moment(psi, xp.x, 2) - mean_x * mean_x;
  const double var_p = qm_moment(psi, xp.p, 2) - mean_p * mean_p;
  const Operator correlator =
      hermitized(Operator(xp.x.matrix() * xp.p.matrix() + xp.p.matrix() * xp.x.matrix()));
  const double kappa = real_expectation(psi, correlator) - 2.0 * mean_x * mean_p;

  report.details.emplace_back("t_over_m", s);
  report.details.emplace_back("kappa", kappa);
  report.details.emplace_back("delta2_qm_numeric", report.sigma_qm.variance());
  report.details.emplace_back("delta2_qm_closed", qm_free_particle_variance(psi, xp.x, xp.p, s, 1.0));
  report.details.emplace_back("delta2_rv_numeric", report.sigma_rv.variance());
  report.details.emplace_back("delta2_rv_closed", var_x + s * s * var_p);
  return report;
}

ComparisonReport scenario_functional(const ScenarioConfig& config) {
  validate(config);
  RealVector spin(3);
  spin << -1.0, 0.0, 1.0;
  const Operator a = Operator::diagonal(spin);
  const Operator b = hermitized(a * a);
  const Operator c = a + b;
  const ScalarFunction2 f{[](double va, double vb) { return va + vb; }, "a + b"};

  ComparisonReport report = run_comparison(a, b, f, uniform_state(3), c, settings_of(config));
  if (report.sigma_rv_independent) {
    report.details.emplace_back("w1_naive_independent",
                                wasserstein1(report.sigma_qm, *report.sigma_rv_independent));
  }
  return report;
}

ComparisonReport scenario_tensor(const ScenarioConfig& config, TensorVariant variant) {
  validate(config);
  RealVector updown(2);
  updown << 1.0, -1.0;
  const Operator sigma_z = Operator::diagonal(updown);
  const Operator one = Operator::identity(2);
  const Operator a = tensor_product(sigma_z, one);
  const Operator b = tensor_product(one, sigma_z);
  const Operator c = tensor_product(sigma_z, sigma_z);
  const ScalarFunction2 f{[](double va, double vb) { return va * vb; }, "a * b"};

  State psi = [&] {
    switch (variant) {
      case TensorVariant::Product: {
        const State plus = State::normalized(Vector::Ones(2));
        return tensor_product(plus, plus);
      }
      case TensorVariant::Bell: {
        Vector v = Vector::Zero(4);
        v(0) = v(3) = 1.0;
        return State::normalized(std::move(v)).with_factor_dims(2, 2);
      }
      case TensorVariant::Partial: {
        Vector v = Vector::Zero(4);
        v(0) = 2.0;
        v(3) = 1.0;
        return State::normalized(std::move(v)).with_factor_dims(2, 2);
      }
    }
    throw std::logic_error("scenario_tensor: unknown variant");
  }();

  return run_comparison(a, b, f, psi, c, settings_of(config));
}

const std::vector<ScenarioInfo>& scenario_registry() {
  static const std::vector<ScenarioInfo> registry = {
      {"harmonic", "X^2 vs P^2 with C = X^2 + P^2 on a truncated ladder, coherent state",
       "dim=64, alpha=1.0"},
      {"free_particle", "position at time t: C = X + (t/m) P on a squeezed-rotated state",
       "dim=64, t_over_m=1.0, squeeze=0.5, rotation=0.3927"},
      {"functional", "spin-1-like pair with B = A^2, F = a + b, uniform state", "dim=3 (fixed)"},
      {"tensor_product", "two qubits, sigma_z (x) sigma_z, product state |+>|+>",
       "dim=4 (fixed)"},
      {"tensor_bell", "two qubits, sigma_z (x) sigma_z, Bell state", "dim=4 (fixed)"},
      {"tensor_partial", "two qubits, sigma_z (x) sigma_z, state (2|00>+|11>)/sqrt(5)",
       "dim=4 (fixed)"},
  };
  return registry;
}

bool is_known_scenario(const std::string& id) {
  for (const auto& info : scenario_registry()) {
    if (info.id == id) return true;
  }
  return false;
}

ComparisonReport run_scenario(const ScenarioConfig& config) {
  if (config.id == "harmonic") return scenario_harmonic(config);
  if (config.id == "free_particle") return scenario_free_particle(config);
  if (config.id == "functional") return scenario_functional(config);
  if (config.id == "tensor_product") return scenario_tensor(config, TensorVariant::Product);
  if (config.id == "tensor_bell") return scenario_tensor(config, TensorVariant::Bell);
  if (config.id == "tensor_partial") return scenario_tensor(config, TensorVariant::Partial);
  throw std::invalid_argument("run_scenario: unknown scenario id '" + config.id + "'");
}

}  // namespace qrv
