#pragma once

// Block structure of the double Jaynes-Cummings Hamiltonian.
//
// Two independent atom-cavity sites A and B.  Each site conserves its own
// excitation number N_i = a_i^dag a_i + |1_i><1_i|, so the dynamics closes in
// four-dimensional sectors labelled by (n_A, n_B).  Within a sector the
// product basis is ordered
//
//   e1 = |0_A 0_B; n_A+1, n_B+1>
//   e2 = |0_A 1_B; n_A+1, n_B  >
//   e3 = |1_A 0_B; n_A,   n_B+1>
//   e4 = |1_A 1_B; n_A,   n_B  >
//
// so that bit 1 of (index) is the A atom and bit 0 the B atom.  Units hbar = 1.

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace djcm {

/// Raised when inputs violate a documented precondition.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical kernel fails to meet its accuracy contract.
class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Scenario { I, II };

enum class DiagonalConvention {
  excitation_conserving,
  paper_printed,
};

std::string to_string(Scenario s);
std::string to_string(DiagonalConvention c);

struct SystemParams {
  double omega_A = 1.0;
  double omega_B = 1.0;
  double g_A = 1.0;
  double g_B = 1.0;
  double delta = 0.0;
  Scenario scenario = Scenario::I;

  /// Throws ValidationError unless g >= 0 and omega > 0 on both sites.
  void validate() const;
};

/// Validates and additionally rejects delta != 0.  The closed-form
/// Bell-basis pipeline is only defined on resonance.
void require_resonant(const SystemParams& params);

struct BlockIndex {
  std::uint32_t n_A = 0;
  std::uint32_t n_B = 0;

  friend bool operator==(const BlockIndex&, const BlockIndex&) = default;
};

/// Atomic occupation (0 = ground, 1 = excited) of basis state k in 0..3.
constexpr int atom_A_of(int k) { return (k >> 1) & 1; }
constexpr int atom_B_of(int k) { return k & 1; }

struct BlockHamiltonian {
  BlockIndex block;
  Eigen::Matrix4d interaction = Eigen::Matrix4d::Zero();
  Eigen::Vector4d diagonal = Eigen::Vector4d::Zero();
  double omega_rabi_A = 0.0;
  double omega_rabi_B = 0.0;
  double free_offset = 0.0;  // E0 = (n_A+1/2) w_A + (n_B+1/2) w_B

  /// Interaction-only block for given Rabi frequencies; zero diagonal.
  static BlockHamiltonian from_rabi(double omega_rabi_A, double omega_rabi_B);

  Eigen::Matrix4d full() const;
};

struct Spectrum {
  Eigen::Vector4d eigenvalues;   // ascending
  Eigen::Matrix4d eigenvectors;  // columns, orthonormal
  double free_offset = 0.0;
};

/// g * sqrt(n + 1).
double rabi_frequency(double g, std::uint32_t n);

BlockHamiltonian interaction_block(
    const SystemParams& params, BlockIndex block,
    DiagonalConvention convention = DiagonalConvention::excitation_conserving);

Eigen::Vector4d free_diagonal(const SystemParams& params, BlockIndex block,
                              DiagonalConvention convention);

/// Symmetric 4x4 eigendecomposition with deterministic ordering.
///
/// Eigenvalues ascend.  Inside a (numerically) degenerate cluster the basis is
/// rebuilt by projecting e1..e4 onto the cluster's eigenspace and running
/// Gram-Schmidt, so the result does not depend on the backend solver.  Every
/// column is then signed so that its first nonzero entry is positive.
/// Throws SolverError if the backend fails or the residual |HV - VL| exceeds
/// 1e-12 * max(1, |H|).
Spectrum symmetric_spectrum(const Eigen::Matrix4d& matrix);

Spectrum block_spectrum(const BlockHamiltonian& H, bool include_diagonal);

}  // namespace djcm
