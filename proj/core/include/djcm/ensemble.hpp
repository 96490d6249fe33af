#pragma once

// Poisson-weighted ensembles over photon-number blocks and collapse/revival
// extraction.

#include "djcm/measurement.hpp"

#include <optional>
#include <span>
#include <vector>

namespace djcm {

enum class Weighting {
  twin_diagonal,        // n_A = n_B = n, weight p_n
  independent_product,  // all (n_A, n_B), weight p_{n_A} p_{n_B}
};

/// CaseI: coherent weight on the first amplitude of the scenario's Bell pair
/// (c00 or c10).  CaseII: on the second (c01 or c11).
enum class CoherentCase { I, II };

std::string to_string(Weighting w);
std::string to_string(CoherentCase c);

inline constexpr double kPoissonTailTolerance = 1e-10;

/// ceil(alpha_sq + 10 sqrt(alpha_sq) + 10).
std::uint32_t default_cutoff(double alpha_sq);

struct CoherentConfig {
  double alpha_sq = 20.0;
  std::optional<std::uint32_t> cutoff;  // default_cutoff(alpha_sq) when empty
  Weighting weighting = Weighting::twin_diagonal;
  CoherentCase coherent_case = CoherentCase::I;

  std::uint32_t resolved_cutoff() const;
  /// alpha_sq > 0 and Poisson tail beyond the cutoff below 1e-10.
  void validate() const;
};

/// Unnormalised Poisson mass strictly above `cutoff`, summed in log space.
double poisson_tail_mass(double alpha_sq, std::uint32_t cutoff);

/// Smallest cutoff whose tail mass is below kPoissonTailTolerance.
std::uint32_t minimal_cutoff(double alpha_sq);

/// p_n = exp(-a) a^n / n! for n = 0..cutoff, renormalised to sum to one.
/// Throws ValidationError (naming a sufficient cutoff) if the tail is too heavy.
std::vector<double> poisson_weights(double alpha_sq, std::uint32_t cutoff);

/// `samples` points 0, dt, ..., t_max with dt = t_max / (samples - 1).
std::vector<double> uniform_grid(double t_max, std::size_t samples);

/// Pairwise summation with a fixed tree topology.
double pairwise_sum(std::span<const double> terms);

struct InversionSeries {
  std::vector<double> t;
  std::vector<double> W_A;
  std::vector<double> W_B;
  InversionConvention convention = InversionConvention::paper_bell;
};

/// Ensemble-averaged inversion.  Each time sample is an independent pairwise
/// reduction over blocks in a fixed order, so splitting the time grid across
/// `workers` threads gives bitwise identical output.
InversionSeries ensemble_inversion(const SystemParams& params, const CoherentConfig& config,
                                   std::span<const double> times, InversionConvention convention,
                                   unsigned workers = 1);

struct RevivalAnalysis {
  std::optional<double> t_collapse_est;
  std::optional<double> t_revival_est;
  std::optional<double> t_collapse_pred;  // sqrt(2)/g, absent for g = 0
  std::optional<double> t_revival_pred;   // 2 pi sqrt(alpha_sq)/g
  double envelope_window = 0.0;           // 2 pi / (2 g sqrt(alpha_sq + 1))
  double collapse_threshold = 0.0;        // |W(0)| / e
  double revival_window_lo = 0.0;
  double revival_window_hi = 0.0;
};

/// Works on W_A of a uniformly sampled series.
///
/// Collapse: first t at which max |W| over [t, t + envelope_window] drops
/// below |W(0)|/e.  Revival: location of the largest |W| in
/// [0.5, 1.5] * t_revival_pred, refined by a parabola through the three
/// samples around it; absent if no collapse was seen or the maximum sits on
/// the window edge.
RevivalAnalysis detect_collapse_revival(const InversionSeries& series, double g, double alpha_sq);

}  // namespace djcm
