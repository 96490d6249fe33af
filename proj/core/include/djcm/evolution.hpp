#pragma once

// Exact per-block time evolution and the closed-form Bell-pair amplitudes.

#include "djcm/model.hpp"

#include <complex>

namespace djcm {

using cplx = std::complex<double>;

/// Bell-basis weights at t = 0:
///   c00 -> Phi+, c01 -> Psi+, c10 -> Phi-, c11 -> Psi-.
struct InitialAmplitudes {
  cplx c00{0.0, 0.0};
  cplx c01{0.0, 0.0};
  cplx c10{0.0, 0.0};
  cplx c11{0.0, 0.0};

  /// Scenario-I pair (c00, c01) = (cos theta, sin theta).
  static InitialAmplitudes scenario_i(double theta);
  /// Scenario-II pair (c10, c11) = (cos theta, sin theta).
  static InitialAmplitudes scenario_ii(double theta);

  /// Unit norm within 1e-12 and zero weight outside the scenario's Bell pair.
  void validate(Scenario scenario) const;

  /// The scenario's pair in (first, second) order: (c00, c01) or (c10, c11).
  std::pair<cplx, cplx> pair(Scenario scenario) const;
};

struct BlockState {
  Eigen::Vector4cd amplitudes = Eigen::Vector4cd::Zero();  // over e1..e4
  BlockIndex block;
  double time = 0.0;
};

/// (first, second) components of the scenario's Bell pair: (cbar00, cbar01)
/// for Scenario-I, (cbar10, cbar11) for Scenario-II.
struct BellAmplitudes {
  cplx first{0.0, 0.0};
  cplx second{0.0, 0.0};
};

/// Rows and columns in the order of the vector (cbar00, cbar01, cbar01, cbar00).
struct BellDensityMatrix {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
};

enum class PropagationMode {
  interaction_picture,  // H^I only; the resonant free part is a block-global phase
  full_hamiltonian,     // H^I + diag, with whatever convention built the block
};

BlockState initial_block_state(Scenario scenario, const InitialAmplitudes& amps, BlockIndex block);

/// exp(-i H t) assembled from the block spectrum; built once, evaluated at many t.
class SpectralPropagator {
public:
  explicit SpectralPropagator(const BlockHamiltonian& H,
                              PropagationMode mode = PropagationMode::interaction_picture);

  Eigen::Matrix4cd matrix(double t) const;
  Eigen::Vector4cd apply(const Eigen::Vector4cd& psi, double t) const;

  const Spectrum& spectrum() const { return spectrum_; }

private:
  Spectrum spectrum_;
};

BlockState propagate(const BlockState& state, const BlockHamiltonian& H, double t,
                     PropagationMode mode = PropagationMode::interaction_picture);

/// Closed form exp(-i t (W_A/2 X (x) I + W_B/2 I (x) X)) as a product of two
/// commuting single-flip rotations.  Independent of the eigensolver.
Eigen::Matrix4cd propagator_product_form(double omega_rabi_A, double omega_rabi_B, double t);

/// Half-angle rotation of the Bell pair at frequency Sigma = W_A + W_B:
///   first(t)  = first(0) cos(Sigma t/2) - i second(0) sin(Sigma t/2)
///   second(t) = second(0) cos(Sigma t/2) - i first(0) sin(Sigma t/2)
/// Scenario-II uses the same form with c10 -> c00, c11 -> c01.
BellAmplitudes paper_amplitudes(const InitialAmplitudes& amps, double omega_rabi_A,
                                double omega_rabi_B, double t, Scenario scenario = Scenario::I);

/// Bell-pair components of an exact block state:
///   Scenario-I:  first = (v2+v3)/sqrt2, second = (v1+v4)/sqrt2
///   Scenario-II: first = (v2-v3)/sqrt2, second = (v1-v4)/sqrt2
BellAmplitudes bell_components(const BlockState& state, Scenario scenario = Scenario::I);

/// Closed-form Bell-basis density matrix for real initial amplitudes.
BellDensityMatrix paper_density_matrix(const InitialAmplitudes& amps, double omega_rabi_A,
                                       double omega_rabi_B, double t,
                                       Scenario scenario = Scenario::I);

/// rho_ij = conj(psi_i) psi_j for psi = (first, second, second, first).
BellDensityMatrix bell_outer_product(const BellAmplitudes& bell);

}  // namespace djcm
