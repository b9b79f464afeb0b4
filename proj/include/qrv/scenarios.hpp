#pragma once

#include "qrv/classifier.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qrv {

/// Parameters for a canonical scenario run. Time and mass enter only through
/// the ratio t/m (hbar = 1 units throughout); the fixed-dimension scenarios
/// (functional, tensor_*) ignore `dim`.
struct ScenarioConfig {
  std::string id;
  int dim = 64;
  double t_over_m = 1.0;
  double alpha = 1.0;      // coherent amplitude (harmonic)
  double squeeze = 0.5;    // quadrature-mixing strength (free_particle)
  double rotation = 0.39269908169872414;  // pi/8 phase rotation (free_particle)
  double grid_length = 32.0;
  Tolerances tol;
  std::uint64_t seed = 12345;
  std::size_t samples = 100000;
};

/// Throws std::invalid_argument on out-of-range fields (dim < 2,
/// nonpositive sample count, bad explicit tolerances).
void validate(const ScenarioConfig& config);

struct QuadraturePair {
  Operator x;
  Operator p;
};

/// Truncated-ladder quadratures X = (a + a^dag)/sqrt2, P = i(a^dag - a)/sqrt2
/// on n levels. [X, P] = i on the low-lying span; the last diagonal entry of
/// the commutator is i(1 - n), the price of the cutoff.
QuadraturePair build_fock_xp(int n);

/// Periodic-grid quadratures: X diagonal on x_j = (j - n/2) L / n, P built
/// from the discrete Fourier transform with wrapped momenta 2 pi k' / L.
QuadraturePair build_grid_xp(int n, double length);

State fock_vacuum(int n);

/// Truncated coherent state of real amplitude alpha, normalized. Rejects
/// parameters that push number-basis mass past the lowest n/2 levels
/// (threshold 1 - 1e-10): truncation artifacts would exceed test tolerances.
State fock_coherent(int n, double alpha);

/// exp(-i phi (X^2+P^2)/2) exp(-i r (XP+PX)/2) |0>: squeezed then rotated,
/// both unitaries built by spectral calculus of the truncated generators.
/// The X-P correlation of the result is measured downstream, never assumed.
/// Same truncation-mass policy as fock_coherent.
State squeezed_rotated_state(const QuadraturePair& xp, double squeeze, double rotation);

/// Normalized Gaussian wave packet on the grid of build_grid_xp: position
/// spread sigma, center x0, momentum p0. Requires |x0| + 6 sigma <= L/2 so
/// the packet fits the box.
State grid_gaussian(int n, double length, double sigma, double center = 0.0,
                    double momentum = 0.0);

/// A = X^2, B = P^2, C = X^2 + P^2 on the truncated ladder with a coherent
/// state: the quantum law sits on odd integers, the random-variable law
/// spreads between them. Extra details: mass near / between odd integers.
ComparisonReport scenario_harmonic(const ScenarioConfig& config);

/// A = X, B = P, C = X + (t/m) P (position at time t in closed form) on a
/// squeezed-and-rotated state. Extra details: both widths, numeric and
/// closed-form, and the measured correlation term kappa.
ComparisonReport scenario_free_particle(const ScenarioConfig& config);

/// Spin-1-like functional pair: A = diag(-1,0,1), B = A^2, F = a + b on the
/// uniform state. Dependent-mode sigma_rv reproduces sigma_qm; the naive
/// independent combination does not (detail: its W1 against sigma_qm).
ComparisonReport scenario_functional(const ScenarioConfig& config);

enum class TensorVariant { Product, Bell, Partial };

/// Two qubits, A = sigma_z (x) 1, B = 1 (x) sigma_z, C = sigma_z (x) sigma_z:
/// product state |+>|+>, Bell pair, or the partially entangled
/// (2|00> + |11>)/sqrt5.
ComparisonReport scenario_tensor(const ScenarioConfig& config, TensorVariant variant);

struct ScenarioInfo {
  std::string id;
  std::string summary;
  std::string parameters;  // textual defaults for the listing table
};

/// Registered scenarios in stable listing order.
const std::vector<ScenarioInfo>& scenario_registry();

bool is_known_scenario(const std::string& id);

/// Dispatch on config.id; throws std::invalid_argument for unknown ids.
ComparisonReport run_scenario(const ScenarioConfig& config);

}  // namespace qrv
