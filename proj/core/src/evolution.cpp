#include "djcm/evolution.hpp"

#include <cmath>
#include <sstream>

namespace djcm {

namespace {

constexpr double kNormTolerance = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
constexpr cplx kI{0.0, 1.0};

Eigen::Matrix2cd half_angle_rotation(double omega, double t) {
  const double phase = 0.5 * omega * t;
  const double c = std::cos(phase);
  const double s = std::sin(phase);
  Eigen::Matrix2cd r;
  r << cplx(c, 0.0), cplx(0.0, -s),
       cplx(0.0, -s), cplx(c, 0.0);
  return r;
}

}  // namespace

InitialAmplitudes InitialAmplitudes::scenario_i(double theta) {
  InitialAmplitudes a;
  a.c00 = std::cos(theta);
  a.c01 = std::sin(theta);
  return a;
}

InitialAmplitudes InitialAmplitudes::scenario_ii(double theta) {
  InitialAmplitudes a;
  a.c10 = std::cos(theta);
  a.c11 = std::sin(theta);
  return a;
}

void InitialAmplitudes::validate(Scenario scenario) const {
  const double norm2 = std::norm(c00) + std::norm(c01) + std::norm(c10) + std::norm(c11);
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "initial Bell amplitudes must be normalized (|c|^2 sum = " << norm2 << ")";
    throw ValidationError(msg.str());
  }
  if (scenario == Scenario::I && (c10 != cplx{} || c11 != cplx{})) {
    throw ValidationError("Scenario-I requires c10 = c11 = 0");
  }
  if (scenario == Scenario::II && (c00 != cplx{} || c01 != cplx{})) {
    throw ValidationError("Scenario-II requires c00 = c01 = 0");
  }
}

std::pair<cplx, cplx> InitialAmplitudes::pair(Scenario scenario) const {
  return scenario == Scenario::I ? std::pair{c00, c01} : std::pair{c10, c11};
}

BlockState initial_block_state(Scenario scenario, const InitialAmplitudes& amps, BlockIndex block) {
  amps.validate(scenario);
  BlockState s;
  s.block = block;
  s.time = 0.0;
  if (scenario == Scenario::I) {
    s.amplitudes << amps.c01, amps.c00, amps.c00, amps.c01;
  } else {
    s.amplitudes << amps.c11, amps.c10, -amps.c10, -amps.c11;
  }
  s.amplitudes *= kInvSqrt2;
  return s;
}

SpectralPropagator::SpectralPropagator(const BlockHamiltonian& H, PropagationMode mode)
    : spectrum_(block_spectrum(H, mode == PropagationMode::full_hamiltonian)) {}

Eigen::Matrix4cd SpectralPropagator::matrix(double t) const {
  Eigen::Vector4cd phases;
  for (int k = 0; k < 4; ++k) {
    phases(k) = std::polar(1.0, -spectrum_.eigenvalues(k) * t);
  }
  const Eigen::Matrix4cd V = spectrum_.eigenvectors.cast<cplx>();
  return V * phases.asDiagonal() * V.transpose();
}

Eigen::Vector4cd SpectralPropagator::apply(const Eigen::Vector4cd& psi, double t) const {
  const Eigen::Matrix4d& V = spectrum_.eigenvectors;
  Eigen::Vector4cd dressed = V.transpose().cast<cplx>() * psi;
  for (int k = 0; k < 4; ++k) {
    dressed(k) *= std::polar(1.0, -spectrum_.eigenvalues(k) * t);
  }
  return V.cast<cplx>() * dressed;
}

BlockState propagate(const BlockState& state, const BlockHamiltonian& H, double t,
                     PropagationMode mode) {
  const SpectralPropagator U(H, mode);
  BlockState out;
  out.block = state.block;
  out.time = state.time + t;
  out.amplitudes = U.apply(state.amplitudes, t);
  return out;
}

Eigen::Matrix4cd propagator_product_form(double omega_rabi_A, double omega_rabi_B, double t) {
  const Eigen::Matrix2cd ra = half_angle_rotation(omega_rabi_A, t);
  const Eigen::Matrix2cd rb = half_angle_rotation(omega_rabi_B, t);
  // Index k = 2*a + b; the A factor acts on the high bit.
  Eigen::Matrix4cd u;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      u(i, j) = ra(atom_A_of(i), atom_A_of(j)) * rb(atom_B_of(i), atom_B_of(j));
    }
  }
  return u;
}

BellAmplitudes paper_amplitudes(const InitialAmplitudes& amps, double omega_rabi_A,
                                double omega_rabi_B, double t, Scenario scenario) {
  const auto [first0, second0] = amps.pair(scenario);
  const double half = 0.5 * (omega_rabi_A + omega_rabi_B) * t;
  const double c = std::cos(half);
  const double s = std::sin(half);
  BellAmplitudes out;
  out.first = first0 * c - kI * second0 * s;
  out.second = second0 * c - kI * first0 * s;
  return out;
}

BellAmplitudes bell_components(const BlockState& state, Scenario scenario) {
  const auto& v = state.amplitudes;
  BellAmplitudes out;
  if (scenario == Scenario::I) {
    out.first = (v(1) + v(2)) * kInvSqrt2;
    out.second = (v(0) + v(3)) * kInvSqrt2;
  } else {
    out.first = (v(1) - v(2)) * kInvSqrt2;
    out.second = (v(0) - v(3)) * kInvSqrt2;
  }
  return out;
}

BellDensityMatrix paper_density_matrix(const InitialAmplitudes& amps, double omega_rabi_A,
                                       double omega_rabi_B, double t, Scenario scenario) {
  const auto [first0, second0] = amps.pair(scenario);
  if (first0.imag() != 0.0 || second0.imag() != 0.0) {
    throw ValidationError("the closed-form Bell density matrix requires real initial amplitudes");
  }
  const double a = first0.real();
  const double b = second0.real();
  const double sigma_t = (omega_rabi_A + omega_rabi_B) * t;
  const double c2 = std::pow(std::cos(0.5 * sigma_t), 2);
  const double s2 = std::pow(std::sin(0.5 * sigma_t), 2);

  const cplx outer{a * a * c2 + b * b * s2, 0.0};
  const cplx inner{b * b * c2 + a * a * s2, 0.0};
  const cplx coherence{a * b, -0.5 * (a * a - b * b) * std::sin(sigma_t)};

  BellDensityMatrix m;
  auto& r = m.rho;
  r(0, 0) = r(3, 3) = outer;
  r(0, 3) = outer;
  r(3, 0) = std::conj(outer);
  r(1, 1) = r(2, 2) = inner;
  r(1, 2) = inner;
  r(2, 1) = std::conj(inner);
  r(0, 1) = r(0, 2) = coherence;
  r(1, 0) = r(2, 0) = std::conj(coherence);
  // Blocks not written out in closed form follow from the same vector.
  r(1, 3) = r(2, 3) = std::conj(coherence);
  r(3, 1) = r(3, 2) = coherence;
  return m;
}

BellDensityMatrix bell_outer_product(const BellAmplitudes& bell) {
  Eigen::Vector4cd psi;
  psi << bell.first, bell.second, bell.second, bell.first;
  BellDensityMatrix m;
  m.rho = psi.conjugate() * psi.transpose();
  return m;
}

}  // namespace djcm
