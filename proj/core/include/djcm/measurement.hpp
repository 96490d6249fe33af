#pragma once

// Single-site observables.  Two inversion conventions are kept apart on
// purpose: `exact` is Tr[rho_i sigma_z] from the true partial trace of the
// block state, `paper_bell` is the Bell-population imbalance |cbar_first|^2 -
// |cbar_second|^2 with W_B = -W_A.

#include "djcm/evolution.hpp"

namespace djcm {

enum class Site { A, B };

enum class InversionConvention { exact, paper_bell };

std::string to_string(InversionConvention c);

struct ReducedAtomState {
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();  // (ground, excited)
  Site site = Site::A;
};

struct InversionSample {
  double W_A = 0.0;
  double W_B = 0.0;
  InversionConvention convention = InversionConvention::exact;
};

/// Partial trace over the other atom and both field modes.
ReducedAtomState reduce_atom(const BlockState& state, Site site);

InversionSample inversion_exact(const BlockState& state);

InversionSample inversion_paper(const InitialAmplitudes& amps, double omega_rabi_A,
                                double omega_rabi_B, double t, Scenario scenario = Scenario::I);

}  // namespace djcm
