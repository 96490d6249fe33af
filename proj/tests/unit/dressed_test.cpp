#include "djcm/dressed.hpp"

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <numbers>

using namespace djcm;

// Residuals of the printed transform, computed independently with numpy from
// the same alpha_ij expressions (missing parenthesis in alpha_22 placed as in
// alpha_24).
constexpr double kPrintedOrthogonality = 0.5791220751390437;
constexpr double kPrintedConsistency = 0.28350229687068207;
constexpr double kTheta6RotationResidual = 1.2482327864890743;  // theta_6 = 0.7, others 0

TEST(BuildTransform, ZeroAnglesKeepPrintedSignErrors) {
  // With every angle zero the printed entries do not reduce to the identity:
  // alpha_24 keeps -c6 and alpha_32 keeps c1 c2 c3 c6.
  const OrthogonalTransform T = build_transform(MixingAngles{});
  Eigen::Matrix4d expected;
  expected << 1, 0, 0, 0,
              0, 1, 0, -1,
              0, 1, 1, 0,
              0, 0, 0, 1;
  EXPECT_EQ(T.matrix, expected);
  EXPECT_NEAR(T.orthogonality_residual, std::sqrt(6.0), 1e-15);
  EXPECT_EQ(T.source, TransformSource::bose_parameterization);
}

TEST(BuildTransform, PrintedAnglesResidualIsPinned) {
  const OrthogonalTransform T = build_transform(paper_angles());
  EXPECT_NEAR(T.orthogonality_residual, kPrintedOrthogonality, 1e-12);
  const ConsistencyResult r = consistency_residual(T, BlockHamiltonian::from_rabi(1, 1));
  EXPECT_NEAR(r.offdiag_norm, kPrintedConsistency, 1e-12);
}

TEST(BuildTransform, SingleAngleEmbeddingResidualIsPinned) {
  MixingAngles m;
  m.theta[5] = 0.7;
  const OrthogonalTransform T = build_transform(m);
  EXPECT_NEAR(T.orthogonality_residual, kTheta6RotationResidual, 1e-12);
}

TEST(BuildTransform, RejectsNonFiniteAngles) {
  MixingAngles m;
  m.theta[2] = std::numeric_limits<double>::infinity();
  EXPECT_THROW(build_transform(m), ValidationError);
}

TEST(PaperAngles, Values) {
  const MixingAngles m = paper_angles();
  EXPECT_NEAR(m.theta[5], std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(m.theta[3], 5 * std::numbers::pi / 6, 1e-15);
  EXPECT_NEAR(std::cos(m.theta[0]), 1 / std::sqrt(6.0), 1e-15);
}

TEST(ConsistencyResidual, IdentityOnDiagonalMatrix) {
  const Eigen::Matrix4d H = Eigen::Vector4d(1, 2, 3, 4).asDiagonal();
  const ConsistencyResult r = consistency_residual(Eigen::Matrix4d::Identity(), H);
  EXPECT_EQ(r.offdiag_norm, 0.0);
  EXPECT_EQ(r.diagonal, Eigen::Vector4d(1, 2, 3, 4));
}

TEST(ConsistencyResidual, IdentityOnUnitBlock) {
  OrthogonalTransform identity;
  const ConsistencyResult r = consistency_residual(identity, BlockHamiltonian::from_rabi(1, 1));
  EXPECT_NEAR(r.offdiag_norm, std::sqrt(2.0), 1e-15);
}

TEST(NumericDiagonalizer, ZeroMatrixGivesIdentity) {
  const OrthogonalTransform T = numeric_diagonalizer(BlockHamiltonian::from_rabi(0, 0));
  EXPECT_EQ(T.matrix, Eigen::Matrix4d::Identity());
  EXPECT_EQ(T.source, TransformSource::numeric_eigenvectors);
}

TEST(NumericDiagonalizer, UnitBlockHadamardRows) {
  const BlockHamiltonian H = BlockHamiltonian::from_rabi(1, 1);
  const OrthogonalTransform T = numeric_diagonalizer(H);
  EXPECT_LT((T.matrix.row(0).transpose() - Eigen::Vector4d(.5, -.5, -.5, .5)).norm(), 1e-14);
  EXPECT_LT((T.matrix.row(3).transpose() - Eigen::Vector4d(.5, .5, .5, .5)).norm(), 1e-14);
  const ConsistencyResult r = consistency_residual(T, H);
  EXPECT_LT(r.offdiag_norm, 1e-12);
  EXPECT_LT((r.diagonal - Eigen::Vector4d(-1, 0, 0, 1)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(NumericDiagonalizer, RandomSymmetricMatrices) {
  oracle::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    Eigen::Matrix4d m;
    for (int r = 0; r < 4; ++r)
      for (int c = r; c < 4; ++c) m(r, c) = m(c, r) = rng.uniform(-3, 3);
    const OrthogonalTransform T = numeric_diagonalizer(m);
    EXPECT_LT(T.orthogonality_residual, 1e-12);
    const ConsistencyResult r = consistency_residual(T.matrix, m);
    EXPECT_LT(r.offdiag_norm, 1e-12);
    const auto jacobi = oracle::jacobi_eigenvalues(m);
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(r.diagonal(k), jacobi[k], 1e-12);
  }
}

TEST(NumericDiagonalizer, MatchesBlockSpectrumOnEveryBlock) {
  oracle::Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    SystemParams p;
    p.g_A = rng.uniform(0, 5);
    p.g_B = rng.uniform(0, 5);
    const BlockHamiltonian H = interaction_block(p, {rng.integer(0, 50), rng.integer(0, 50)});
    const ConsistencyResult r = consistency_residual(numeric_diagonalizer(H), H);
    const Spectrum s = block_spectrum(H, false);
    EXPECT_LT(r.offdiag_norm, 1e-12);
    EXPECT_LT((r.diagonal - s.eigenvalues).cwiseAbs().maxCoeff(), 1e-12);
  }
}
