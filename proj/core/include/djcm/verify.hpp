#pragma once

// Audit of the closed-form results against the exact block dynamics.
//
// Hard checks carry a threshold and fail the run when exceeded.  Informational
// checks record measured values (printed-formula residuals, convention
// discrepancies) and never fail.

#include "djcm/cli_io.hpp"

#include <optional>

namespace djcm {

enum class CheckStatus { pass, fail, informational };

std::string to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  std::string inputs;
  double value = 0.0;
  std::optional<double> threshold;  // empty: "recorded"
  CheckStatus status = CheckStatus::informational;
};

struct VerifyReport {
  std::vector<CheckRecord> checks;

  bool passed() const;
  std::vector<std::string> failures() const;
  const CheckRecord* find(const std::string& name) const;
};

/// Couplings from `params` set the time scale; everything else uses fixed seeds.
VerifyReport run_verify(const SystemParams& params);

void write_verify(const VerifyReport& report, const RunConfig& config, std::ostream& out);

}  // namespace djcm
