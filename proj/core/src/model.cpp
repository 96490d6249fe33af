#include "djcm/model.hpp"

#include <cmath>
#include <sstream>

namespace djcm {

std::string to_string(Scenario s) { return s == Scenario::I ? "I" : "II"; }

std::string to_string(DiagonalConvention c) {
  return c == DiagonalConvention::paper_printed ? "paper_printed" : "excitation_conserving";
}

void SystemParams::validate() const {
  auto finite = [](double x) { return std::isfinite(x); };
  if (!finite(omega_A) || !finite(omega_B) || !finite(g_A) || !finite(g_B) || !finite(delta)) {
    throw ValidationError("system parameters must be finite");
  }
  if (g_A < 0.0 || g_B < 0.0) {
    throw ValidationError("couplings g_A, g_B must be nonnegative");
  }
  if (omega_A <= 0.0 || omega_B <= 0.0) {
    throw ValidationError("frequencies omega_A, omega_B must be positive");
  }
}

void require_resonant(const SystemParams& params) {
  params.validate();
  if (params.delta != 0.0) {
    std::ostringstream msg;
    msg << "the Bell-basis closed form requires zero detuning (got delta=" << params.delta << ")";
    throw ValidationError(msg.str());
  }
}

BlockHamiltonian BlockHamiltonian::from_rabi(double omega_rabi_A, double omega_rabi_B) {
  BlockHamiltonian H;
  H.omega_rabi_A = omega_rabi_A;
  H.omega_rabi_B = omega_rabi_B;
  const double a = 0.5 * omega_rabi_A;
  const double b = 0.5 * omega_rabi_B;
  // B flips: e1<->e2, e3<->e4.  A flips: e1<->e3, e2<->e4.
  H.interaction(0, 1) = H.interaction(1, 0) = b;
  H.interaction(2, 3) = H.interaction(3, 2) = b;
  H.interaction(0, 2) = H.interaction(2, 0) = a;
  H.interaction(1, 3) = H.interaction(3, 1) = a;
  return H;
}

Eigen::Matrix4d BlockHamiltonian::full() const {
  Eigen::Matrix4d m = interaction;
  m.diagonal() += diagonal;
  return m;
}

double rabi_frequency(double g, std::uint32_t n) {
  return g * std::sqrt(static_cast<double>(n) + 1.0);
}

BlockHamiltonian interaction_block(const SystemParams& params, BlockIndex block,
                                   DiagonalConvention convention) {
  BlockHamiltonian H = BlockHamiltonian::from_rabi(rabi_frequency(params.g_A, block.n_A),
                                                   rabi_frequency(params.g_B, block.n_B));
  H.block = block;
  H.diagonal = free_diagonal(params, block, convention);
  H.free_offset = (block.n_A + 0.5) * params.omega_A + (block.n_B + 0.5) * params.omega_B;
  return H;
}

Eigen::Vector4d free_diagonal(const SystemParams& params, BlockIndex block,
                              DiagonalConvention convention) {
  const double nA = block.n_A;
  const double nB = block.n_B;
  const double wA = params.omega_A;
  const double wB = params.omega_B;
  Eigen::Vector4d d;
  if (convention == DiagonalConvention::paper_printed) {
    d << nA * wA + nB * wB + (1.0 + nA) * wA + (1.0 + nB) * wB,
        (1.0 + nA) * wA + nB * wB,
        nA * wA + (1.0 + nB) * wB,
        nA * wA + nB * wB;
    return d;
  }
  const double excitations = (nA + 1.0) * wA + (nB + 1.0) * wB;
  for (int k = 0; k < 4; ++k) {
    const int sigma_z_sum = (2 * atom_A_of(k) - 1) + (2 * atom_B_of(k) - 1);
    d(k) = excitations + 0.5 * params.delta * sigma_z_sum;
  }
  return d;
}

namespace {

// Replace the columns [first, last) of V, which span one eigenspace, by the
// Gram-Schmidt orthonormalisation of the projected unit vectors e1..e4.
void canonicalize_cluster(Eigen::Matrix4d& V, int first, int last) {
  const int dim = last - first;
  const Eigen::MatrixXd cluster = V.middleCols(first, dim);
  const Eigen::Matrix4d projector = cluster * cluster.transpose();

  int chosen = 0;
  for (int j = 0; j < 4 && chosen < dim; ++j) {
    Eigen::Vector4d v = projector.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (int c = 0; c < chosen; ++c) {
        const auto u = V.col(first + c);
        v -= u.dot(v) * u;
      }
    }
    // Each accepted vector has norm >= 0.1, so rounding in the projector is
    // never amplified by more than a factor 10.
    const double norm = v.norm();
    if (norm < 0.1) {
      continue;
    }
    V.col(first + chosen) = v / norm;
    ++chosen;
  }
  if (chosen != dim) {
    throw SolverError("failed to build a canonical basis for a degenerate eigenspace");
  }
}

void fix_signs(Eigen::Matrix4d& V) {
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) {
      if (std::abs(V(r, c)) > 1e-10) {
        if (V(r, c) < 0.0) {
          V.col(c) = -V.col(c);
        }
        break;
      }
    }
  }
}

}  // namespace

Spectrum symmetric_spectrum(const Eigen::Matrix4d& matrix) {
  if ((matrix - matrix.transpose()).norm() != 0.0) {
    throw ValidationError("block_spectrum requires a symmetric matrix");
  }
  if (!matrix.allFinite()) {
    throw ValidationError("block_spectrum requires finite entries");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(matrix);
  if (solver.info() != Eigen::Success) {
    throw SolverError("symmetric eigensolver did not converge");
  }

  Spectrum out;
  out.eigenvalues = solver.eigenvalues();
  out.eigenvectors = solver.eigenvectors();

  const double scale = std::max(1.0, matrix.norm());
  const double cluster_tol = 1e-13 * scale;
  int first = 0;
  for (int k = 1; k <= 4; ++k) {
    if (k == 4 || out.eigenvalues(k) - out.eigenvalues(k - 1) > cluster_tol) {
      if (k - first > 1) {
        canonicalize_cluster(out.eigenvectors, first, k);
      }
      first = k;
    }
  }
  fix_signs(out.eigenvectors);

  const double residual =
      (matrix * out.eigenvectors - out.eigenvectors * out.eigenvalues.asDiagonal()).norm();
  const double orthogonality =
      (out.eigenvectors.transpose() * out.eigenvectors - Eigen::Matrix4d::Identity()).norm();
  if (residual > 1e-12 * scale || orthogonality > 1e-12) {
    std::ostringstream msg;
    msg << "eigendecomposition residual too large: |HV-VL|=" << residual
        << " |VtV-I|=" << orthogonality;
    throw SolverError(msg.str());
  }
  return out;
}

Spectrum block_spectrum(const BlockHamiltonian& H, bool include_diagonal) {
  Spectrum s = symmetric_spectrum(include_diagonal ? H.full() : H.interaction);
  s.free_offset = H.free_offset;
  return s;
}

}  // namespace djcm
