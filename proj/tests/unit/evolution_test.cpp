#include "djcm/evolution.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace djcm;

namespace {

const double kR = 1.0 / std::sqrt(2.0);
constexpr cplx kI{0.0, 1.0};

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(InitialBlockState, ScenarioIExamples) {
  InitialAmplitudes a;
  a.c00 = 1.0;
  BlockState s = initial_block_state(Scenario::I, a, {});
  EXPECT_LT(max_abs(s.amplitudes - Eigen::Vector4cd(0, kR, kR, 0)), 1e-16);

  a = {};
  a.c01 = 1.0;
  s = initial_block_state(Scenario::I, a, {2, 3});
  EXPECT_LT(max_abs(s.amplitudes - Eigen::Vector4cd(kR, 0, 0, kR)), 1e-16);
  EXPECT_EQ(s.block, (BlockIndex{2, 3}));
}

TEST(InitialBlockState, ScenarioIIExample) {
  InitialAmplitudes a;
  a.c10 = 1.0;
  const BlockState s = initial_block_state(Scenario::II, a, {});
  EXPECT_LT(max_abs(s.amplitudes - Eigen::Vector4cd(0, kR, -kR, 0)), 1e-16);
}

TEST(InitialBlockState, RejectsMismatchAndBadNorm) {
  EXPECT_THROW(initial_block_state(Scenario::I, InitialAmplitudes::scenario_ii(0.3), {}),
               ValidationError);
  EXPECT_THROW(initial_block_state(Scenario::II, InitialAmplitudes::scenario_i(0.3), {}),
               ValidationError);
  InitialAmplitudes a;
  a.c00 = 0.9;
  EXPECT_THROW(initial_block_state(Scenario::I, a, {}), ValidationError);
}

TEST(Propagate, ZeroTimeIsIdentity) {
  const BlockState s = initial_block_state(Scenario::I, InitialAmplitudes::scenario_i(0.4), {1, 2});
  const BlockState out = propagate(s, interaction_block(SystemParams{}, {1, 2}), 0.0);
  EXPECT_LT(max_abs(out.amplitudes - s.amplitudes), 1e-14);
}

TEST(Propagate, UnitBlockAtPiFlipsGlobalSign) {
  InitialAmplitudes a;
  a.c01 = 1.0;
  const BlockState s = initial_block_state(Scenario::I, a, {});
  const BlockState out = propagate(s, BlockHamiltonian::from_rabi(1, 1), std::numbers::pi);
  EXPECT_LT(max_abs(out.amplitudes + s.amplitudes), 1e-14);
  EXPECT_DOUBLE_EQ(out.time, std::numbers::pi);
}

TEST(Propagate, ZeroCouplingLeavesStateUnchanged) {
  SystemParams p;
  p.g_A = p.g_B = 0.0;
  const BlockState s = initial_block_state(Scenario::II, InitialAmplitudes::scenario_ii(1.1), {4, 0});
  for (double t : {0.5, 10.0, 1e3}) {
    EXPECT_LT(max_abs(propagate(s, interaction_block(p, {4, 0}), t).amplitudes - s.amplitudes), 1e-16);
  }
}

TEST(ProductForm, ZeroTimeIsIdentity) {
  EXPECT_LT(max_abs(propagator_product_form(1.3, 2.1, 0.0) - Eigen::Matrix4cd::Identity()), 1e-16);
}

TEST(ProductForm, SingleFactorMixesOnlyAFlipPairs) {
  const Eigen::Matrix4cd U = propagator_product_form(1.7, 0.0, 0.9);
  const double c = std::cos(0.5 * 1.7 * 0.9);
  const double s = std::sin(0.5 * 1.7 * 0.9);
  Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
  for (auto [i, j] : {std::pair{0, 2}, std::pair{1, 3}}) {
    expected(i, i) = expected(j, j) = c;
    expected(i, j) = expected(j, i) = -kI * s;
  }
  EXPECT_LT(max_abs(U - expected), 1e-15);
}

TEST(ProductForm, AgreesWithSpectralAndPadeOracles) {
  oracle::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const double a = rng.uniform(0, 5);
    const double b = rng.uniform(0, 5);
    const double t = rng.uniform(0, 20);
    const BlockHamiltonian H = BlockHamiltonian::from_rabi(a, b);
    const Eigen::Matrix4cd product = propagator_product_form(a, b, t);
    EXPECT_LT(max_abs(SpectralPropagator(H).matrix(t) - product), 1e-12);
    EXPECT_LT(max_abs(oracle::expm_propagator(H.interaction, t) - product), 1e-12);
  }
}

TEST(Propagate, NormAndGroupProperty) {
  oracle::Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    const Scenario sc = i % 2 ? Scenario::II : Scenario::I;
    const double theta = rng.uniform(0, std::numbers::pi);
    const BlockIndex block{rng.integer(0, 10), rng.integer(0, 10)};
    const BlockState s = initial_block_state(
        sc, sc == Scenario::I ? InitialAmplitudes::scenario_i(theta) : InitialAmplitudes::scenario_ii(theta),
        block);
    const BlockHamiltonian H = interaction_block(SystemParams{}, block);
    const double t1 = rng.uniform(0, 50);
    const double t2 = rng.uniform(0, 50);
    const BlockState once = propagate(s, H, t1 + t2);
    const BlockState twice = propagate(propagate(s, H, t1), H, t2);
    EXPECT_NEAR(once.amplitudes.norm(), 1.0, 1e-12);
    EXPECT_LT(max_abs(once.amplitudes - twice.amplitudes), 1e-12);
  }
}

TEST(Propagate, BellFormIsPreserved) {
  oracle::Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    const Scenario sc = i % 2 ? Scenario::II : Scenario::I;
    const double theta = rng.uniform(0, std::numbers::pi);
    SystemParams p;
    p.g_A = rng.uniform(0, 5);
    p.g_B = rng.uniform(0, 5);
    const BlockIndex block{rng.integer(0, 30), rng.integer(0, 30)};
    const BlockState s = initial_block_state(
        sc, sc == Scenario::I ? InitialAmplitudes::scenario_i(theta) : InitialAmplitudes::scenario_ii(theta),
        block);
    const auto v = propagate(s, interaction_block(p, block), rng.uniform(0, 100)).amplitudes;
    const double sign = sc == Scenario::I ? 1.0 : -1.0;
    EXPECT_LT(std::abs(v(0) - sign * v(3)), 1e-12);
    EXPECT_LT(std::abs(v(1) - sign * v(2)), 1e-12);
  }
}

TEST(Propagate, FullHamiltonianDiffersByGlobalPhaseOnResonance) {
  const BlockIndex block{2, 1};
  const BlockHamiltonian H = interaction_block(SystemParams{}, block);
  const BlockState s = initial_block_state(Scenario::I, InitialAmplitudes::scenario_i(0.3), block);
  const double t = 3.7;
  const auto picture = propagate(s, H, t).amplitudes;
  const auto full = propagate(s, H, t, PropagationMode::full_hamiltonian).amplitudes;
  const cplx phase = std::polar(1.0, -H.diagonal(0) * t);
  EXPECT_LT(max_abs(full - phase * picture), 1e-12);
}

TEST(PaperAmplitudes, Examples) {
  const InitialAmplitudes a = InitialAmplitudes::scenario_i(0.0);
  BellAmplitudes b = paper_amplitudes(a, 1.3, 0.4, 0.0);
  EXPECT_EQ(b.first, cplx(1.0));
  EXPECT_EQ(b.second, cplx(0.0));

  // Sigma t / 2 = pi / 2.
  b = paper_amplitudes(a, 1.0, 1.0, std::numbers::pi / 2);
  EXPECT_LT(std::abs(b.first), 1e-15);
  EXPECT_LT(std::abs(b.second - (-kI)), 1e-15);
}

TEST(PaperAmplitudes, MatchExactBellComponents) {
  oracle::Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    InitialAmplitudes amps;
    const double theta = rng.uniform(0, std::numbers::pi);
    const double phase = rng.uniform(0, 2 * std::numbers::pi);
    amps.c00 = std::cos(theta);
    amps.c01 = std::polar(std::sin(theta), phase);
    const double a = rng.uniform(0, 5);
    const double b = rng.uniform(0, 5);
    const double t = rng.uniform(0, 20);
    const BellAmplitudes closed = paper_amplitudes(amps, a, b, t);
    EXPECT_NEAR(std::norm(closed.first) + std::norm(closed.second), 1.0, 1e-12);
    const BlockState s = propagate(initial_block_state(Scenario::I, amps, {}),
                                   BlockHamiltonian::from_rabi(a, b), t);
    const BellAmplitudes exact = bell_components(s);
    EXPECT_LT(std::abs(exact.first - closed.first), 1e-12);
    EXPECT_LT(std::abs(exact.second - closed.second), 1e-12);
  }
}

TEST(PaperAmplitudes, ScenarioIIExactPairRotatesAtDifferenceFrequency) {
  // Under X_A and X_B the Psi- component picks up opposite signs, so the exact
  // Scenario-II pair rotates at (Omega_B - Omega_A)/2.
  const InitialAmplitudes amps = InitialAmplitudes::scenario_ii(0.0);
  const double a = 1.2;
  const double b = 0.5;
  const double t = 2.3;
  const BlockState s = propagate(initial_block_state(Scenario::II, amps, {}),
                                 BlockHamiltonian::from_rabi(a, b), t);
  const BellAmplitudes exact = bell_components(s, Scenario::II);
  const double half = 0.5 * (b - a) * t;
  EXPECT_LT(std::abs(exact.first - cplx(std::cos(half))), 1e-12);
  EXPECT_LT(std::abs(exact.second + kI * std::sin(half)), 1e-12);
}

TEST(PaperDensityMatrix, InitialPhiPlus) {
  const BellDensityMatrix m = paper_density_matrix(InitialAmplitudes::scenario_i(0.0), 1, 1, 0.0);
  EXPECT_EQ(m.rho(0, 0), cplx(1.0));
  EXPECT_EQ(m.rho(3, 3), cplx(1.0));
  EXPECT_EQ(m.rho(0, 3), cplx(1.0));
  EXPECT_EQ(m.rho(1, 1), cplx(0.0));
  EXPECT_EQ(m.rho(0, 1).real(), 0.0);
  EXPECT_EQ(m.rho(0, 1).imag(), 0.0);
}

TEST(PaperDensityMatrix, EqualMixtureIsFlat) {
  const auto amps = InitialAmplitudes::scenario_i(std::numbers::pi / 4);
  for (double t : {0.0, 0.3, 7.1}) {
    const BellDensityMatrix m = paper_density_matrix(amps, 0.8, 1.9, t);
    EXPECT_NEAR(m.rho(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(m.rho(1, 1).real(), 0.5, 1e-15);
  }
}

TEST(PaperDensityMatrix, EqualsOuterProductOfAmplitudes) {
  oracle::Rng rng(35);
  for (int i = 0; i < 200; ++i) {
    const auto amps = InitialAmplitudes::scenario_i(rng.uniform(-std::numbers::pi, std::numbers::pi));
    const double a = rng.uniform(0, 5);
    const double b = rng.uniform(0, 5);
    const double t = rng.uniform(0, 20);
    const BellDensityMatrix closed = paper_density_matrix(amps, a, b, t);
    const BellDensityMatrix outer = bell_outer_product(paper_amplitudes(amps, a, b, t));
    EXPECT_LT(max_abs(closed.rho - outer.rho), 1e-12);
    EXPECT_LT(max_abs(closed.rho - closed.rho.adjoint()), 1e-12);
    // Printed normalisation: trace is twice the Bell-pair weight.
    EXPECT_NEAR(closed.rho.trace().real(), 2.0, 1e-12);
  }
}

TEST(PaperDensityMatrix, RejectsComplexAmplitudes) {
  InitialAmplitudes amps;
  amps.c00 = cplx(0.0, 1.0);
  EXPECT_THROW(paper_density_matrix(amps, 1, 1, 0.5), ValidationError);
}
