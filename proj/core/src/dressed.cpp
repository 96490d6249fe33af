#include "djcm/dressed.hpp"

#include <cmath>

namespace djcm {

std::string to_string(TransformSource s) {
  return s == TransformSource::bose_parameterization ? "bose_parameterization"
                                                     : "numeric_eigenvectors";
}

OrthogonalTransform build_transform(const MixingAngles& angles) {
  for (double t : angles.theta) {
    if (!std::isfinite(t)) {
      throw ValidationError("mixing angles must be finite");
    }
  }
  const auto& th = angles.theta;
  const double s1 = std::sin(th[0]), c1 = std::cos(th[0]);
  const double s2 = std::sin(th[1]), c2 = std::cos(th[1]);
  const double s3 = std::sin(th[2]), c3 = std::cos(th[2]);
  const double s4 = std::sin(th[3]), c4 = std::cos(th[3]);
  const double s5 = std::sin(th[4]), c5 = std::cos(th[4]);
  const double s6 = std::sin(th[5]), c6 = std::cos(th[5]);

  Eigen::Matrix4d a;
  a(0, 0) = c1 * c5 + s1 * s3 * s4 * s5;
  a(0, 1) = c1 * s5 * s6 + s1 * c3 * c6 + s1 * s3 * s4 * c5 * s6;
  a(0, 2) = s1 * s3 * c4;
  a(0, 3) = -c1 * s5 * s6 - s1 * c3 * s6 + s1 * s3 * s4 * c5 * s6;

  a(1, 0) = -s1 * c2 * c5 + (c1 * c2 * s3 - s2 * c3) * s4 * s5;
  // The printed alpha_22 lacks an opening parenthesis; placed as in alpha_24.
  a(1, 1) = s1 * c2 * s5 * s6 + (c1 * c2 * c3 + s2 * s3) * c6 + (c1 * c2 * s3 - s2 * c3) * s4 * c5 * s6;
  a(1, 2) = (c1 * c2 * s3 - s2 * c3) * c4;
  a(1, 3) = s1 * c2 * s5 * c6 - (c1 * c2 * c3 + s2 * s3) * c6 + (c1 * c2 * s3 - s2 * c3) * s4 * c5 * s6;

  a(2, 0) = -s1 * s2 * c5 + (c1 * s2 * s3 + c2 * c3) * s4;
  a(2, 1) = s1 * s2 * s5 * s6 + (c1 * c2 * c3 - c2 * s3) * c6 + (c1 * s2 * s3 + c2 * c3) * s4 * c5 * s6;
  a(2, 2) = (c1 * s2 * s3 + c2 * c3) * c4;
  a(2, 3) = s1 * s2 * s5 * c6 - (c1 * s2 * c3 - c2 * s3) * s6 + (c1 * s2 * s3 + c2 * c3) * s4 * c5 * s6;

  a(3, 0) = c4 * s5;
  a(3, 1) = c4 * c5 * s6;
  a(3, 2) = -s4;
  a(3, 3) = c4 * c5 * c6;

  OrthogonalTransform T;
  T.matrix = a;
  T.orthogonality_residual = (a * a.transpose() - Eigen::Matrix4d::Identity()).norm();
  T.source = TransformSource::bose_parameterization;
  return T;
}

MixingAngles paper_angles() {
  MixingAngles m;
  m.theta = {
      std::acos(1.0 / std::sqrt(6.0)),
      std::acos(2.0 / std::sqrt(5.0)),
      std::acos(-std::sqrt(3.0 / 5.0)),
      std::acos(-std::sqrt(3.0) / 2.0),
      std::acos(std::sqrt(2.0 / 3.0)),
      std::acos(1.0 / std::sqrt(2.0)),
  };
  return m;
}

ConsistencyResult consistency_residual(const Eigen::Matrix4d& T, const Eigen::Matrix4d& H) {
  const Eigen::Matrix4d M = T * H * T.transpose();
  ConsistencyResult r;
  r.diagonal = M.diagonal();
  Eigen::Matrix4d off = M;
  off.diagonal().setZero();
  r.offdiag_norm = off.norm();
  return r;
}

ConsistencyResult consistency_residual(const OrthogonalTransform& T, const BlockHamiltonian& H) {
  return consistency_residual(T.matrix, H.interaction);
}

OrthogonalTransform numeric_diagonalizer(const Eigen::Matrix4d& symmetric) {
  const Spectrum s = symmetric_spectrum(symmetric);
  OrthogonalTransform T;
  T.matrix = s.eigenvectors.transpose();
  T.orthogonality_residual = (T.matrix * T.matrix.transpose() - Eigen::Matrix4d::Identity()).norm();
  T.source = TransformSource::numeric_eigenvectors;
  return T;
}

OrthogonalTransform numeric_diagonalizer(const BlockHamiltonian& H) {
  return numeric_diagonalizer(H.interaction);
}

}  // namespace djcm
