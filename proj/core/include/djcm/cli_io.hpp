#pragma once

// Resolved run configuration and the emitters behind each `djcm` subcommand.
//
// Files are reproducible byte for byte: floats are written with 17
// significant digits in scientific notation, sums use a fixed order, and
// every file starts with `#` lines recording the resolved configuration.

#include "djcm/ensemble.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace djcm {

enum class Subcommand { spectrum, rabi, revival, verify };
enum class OutputFormat { csv, json };

std::string to_string(Subcommand s);
std::string to_string(OutputFormat f);

/// Inclusive photon-number range, written "k" or "lo:hi".
struct BlockRange {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;

  static BlockRange parse(const std::string& text);
  bool single() const { return lo == hi; }
  std::string str() const;
};

struct RunConfig {
  Subcommand subcommand = Subcommand::verify;
  SystemParams params;
  double theta = 0.0;  // c_first = cos(theta), c_second = sin(theta)
  CoherentConfig coherent;
  double t_max = 50.0;
  std::size_t samples = 20000;
  BlockRange range_A;
  BlockRange range_B;
  std::string out_path;  // empty: standard output
  OutputFormat format = OutputFormat::csv;
  unsigned workers = 1;

  /// Rejects invalid values and combinations before any computation.
  void validate() const;
};

/// "%.16e": 17 significant digits.
std::string format_double(double x);

/// key=value lines of every resolved setting, in a fixed order.
std::vector<std::string> describe(const RunConfig& config);

inline constexpr const char* kSeriesColumns = "t,W_A_paper,W_B_paper,W_A_exact,W_B_exact";

void write_spectrum(const RunConfig& config, std::ostream& out);
void write_rabi(const RunConfig& config, std::ostream& out);
RevivalAnalysis write_revival(const RunConfig& config, std::ostream& out);

/// Summary object {t_collapse_est, t_revival_est, t_collapse_pred,
/// t_revival_pred, convention, weighting}; absent values are null.
std::string revival_summary_json(const RevivalAnalysis& analysis, const CoherentConfig& coherent);

}  // namespace djcm
