#pragma once

// Dressed-state transformation of one (n_A, n_B) block.
//
// Two routes are kept side by side: the printed six-angle parameterisation,
// reproduced literally for auditing, and the numeric eigenvector transform that
// downstream code actually uses.

#include "djcm/model.hpp"

#include <array>

namespace djcm {

struct MixingAngles {
  std::array<double, 6> theta{};  // theta_1..theta_6, radians, stored as given
};

enum class TransformSource { bose_parameterization, numeric_eigenvectors };

std::string to_string(TransformSource s);

struct OrthogonalTransform {
  Eigen::Matrix4d matrix = Eigen::Matrix4d::Identity();  // rows are dressed states
  double orthogonality_residual = 0.0;                   // |T T^T - I|_F
  TransformSource source = TransformSource::numeric_eigenvectors;
};

struct ConsistencyResult {
  double offdiag_norm = 0.0;
  Eigen::Vector4d diagonal = Eigen::Vector4d::Zero();
};

/// The sixteen alpha_ij entries evaluated from the printed expressions.
OrthogonalTransform build_transform(const MixingAngles& angles);

/// theta_1..theta_6 = arccos of 1/sqrt6, 2/sqrt5, -sqrt(3/5), -sqrt3/2, sqrt(2/3), 1/sqrt2.
MixingAngles paper_angles();

/// M = T H^I T^T; off-diagonal Frobenius norm and diagonal of M.
ConsistencyResult consistency_residual(const OrthogonalTransform& T, const BlockHamiltonian& H);
ConsistencyResult consistency_residual(const Eigen::Matrix4d& T, const Eigen::Matrix4d& H);

/// Transpose of the deterministic eigenvector matrix of the interaction block.
OrthogonalTransform numeric_diagonalizer(const BlockHamiltonian& H);
OrthogonalTransform numeric_diagonalizer(const Eigen::Matrix4d& symmetric);

}  // namespace djcm
