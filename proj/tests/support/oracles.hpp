#pragma once

// Test-only reference computations.  None of these share code with the
// library paths they are used to check.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace djcm::oracle {

/// Cyclic Jacobi rotations; eigenvalues ascending.
inline std::array<double, 4> jacobi_eigenvalues(Eigen::Matrix4d a) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-34) break;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Eigen::Matrix4d J = Eigen::Matrix4d::Identity();
        J(p, p) = c;
        J(q, q) = c;
        J(p, q) = s;
        J(q, p) = -s;
        a = J.transpose() * a * J;
      }
    }
  }
  std::array<double, 4> ev{a(0, 0), a(1, 1), a(2, 2), a(3, 3)};
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// exp(-i H t) by Eigen's Pade-based matrix exponential.
inline Eigen::Matrix4cd expm_propagator(const Eigen::Matrix4d& H, double t) {
  const Eigen::Matrix4cd arg = std::complex<double>(0.0, -t) * H.cast<std::complex<double>>();
  return arg.exp();
}

/// Reduced 2x2 density matrix of one atom from a block state embedded in the
/// full truncated space atom_A x atom_B x Fock_A x Fock_B.
inline Eigen::Matrix2cd full_space_reduced_atom(const Eigen::Vector4cd& block_amplitudes,
                                                std::uint32_t nA, std::uint32_t nB, bool site_A) {
  const int fa = static_cast<int>(nA) + 2;
  const int fb = static_cast<int>(nB) + 2;
  auto index = [&](int a, int b, int pa, int pb) { return ((a * 2 + b) * fa + pa) * fb + pb; };
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4 * fa * fb);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      // Excited atom takes one photon out of its own mode.
      psi(index(a, b, static_cast<int>(nA) + 1 - a, static_cast<int>(nB) + 1 - b)) =
          block_amplitudes(2 * a + b);
    }
  }
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int other = 0; other < 2; ++other)
        for (int pa = 0; pa < fa; ++pa)
          for (int pb = 0; pb < fb; ++pb) {
            const int i = site_A ? index(x, other, pa, pb) : index(other, x, pa, pb);
            const int j = site_A ? index(y, other, pa, pb) : index(other, y, pa, pb);
            rho(x, y) += psi(i) * std::conj(psi(j));
          }
  return rho;
}

/// Poisson pmf by running product, no logarithms.
inline std::vector<double> poisson_pmf(double mean, std::uint32_t cutoff) {
  std::vector<double> p(cutoff + 1);
  p[0] = std::exp(-mean);
  for (std::uint32_t n = 1; n <= cutoff; ++n) p[n] = p[n - 1] * mean / n;
  return p;
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
  std::uint32_t integer(std::uint32_t lo, std::uint32_t hi) {
    return std::uniform_int_distribution<std::uint32_t>(lo, hi)(engine);
  }
};

}  // namespace djcm::oracle
