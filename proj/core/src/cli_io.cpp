#include "djcm/cli_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace djcm {

using json = nlohmann::ordered_json;

std::string to_string(Subcommand s) {
  switch (s) {
    case Subcommand::spectrum: return "spectrum";
    case Subcommand::rabi: return "rabi";
    case Subcommand::revival: return "revival";
    case Subcommand::verify: return "verify";
  }
  return "?";
}

std::string to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

BlockRange BlockRange::parse(const std::string& text) {
  auto parse_one = [&](const std::string& s) -> std::uint32_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
      throw ValidationError("bad photon-number range '" + text + "' (expected k or lo:hi)");
    }
    return static_cast<std::uint32_t>(std::stoul(s));
  };
  BlockRange r;
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    r.lo = r.hi = parse_one(text);
  } else {
    r.lo = parse_one(text.substr(0, colon));
    r.hi = parse_one(text.substr(colon + 1));
  }
  if (r.lo > r.hi) {
    throw ValidationError("bad photon-number range '" + text + "' (lo > hi)");
  }
  return r;
}

std::string BlockRange::str() const {
  return single() ? std::to_string(lo) : std::to_string(lo) + ":" + std::to_string(hi);
}

void RunConfig::validate() const {
  params.validate();
  if (!std::isfinite(theta)) {
    throw ValidationError("theta must be finite");
  }
  if (range_A.lo > range_A.hi || range_B.lo > range_B.hi) {
    throw ValidationError("photon-number range has lo > hi");
  }
  if (subcommand == Subcommand::rabi || subcommand == Subcommand::revival) {
    require_resonant(params);
    if (samples < 2 || !std::isfinite(t_max) || t_max <= 0.0) {
      throw ValidationError("time grid needs t_max > 0 and at least two samples");
    }
  }
  if (subcommand == Subcommand::rabi && (!range_A.single() || !range_B.single())) {
    throw ValidationError("rabi takes a single block (--nA k --nB k), not a range");
  }
  if (subcommand == Subcommand::revival) {
    coherent.validate();
  }
  if (workers == 0) {
    throw ValidationError("workers must be at least 1");
  }
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

std::vector<std::string> describe(const RunConfig& c) {
  const auto& p = c.params;
  return {
      "subcommand=" + to_string(c.subcommand),
      "scenario=" + to_string(p.scenario),
      "theta=" + format_double(c.theta),
      "wA=" + format_double(p.omega_A),
      "wB=" + format_double(p.omega_B),
      "gA=" + format_double(p.g_A),
      "gB=" + format_double(p.g_B),
      "delta=" + format_double(p.delta),
      "alpha-sq=" + format_double(c.coherent.alpha_sq),
      "cutoff=" + std::to_string(c.coherent.resolved_cutoff()),
      "case=" + std::string(c.coherent.coherent_case == CoherentCase::I ? "I" : "II"),
      "weighting=" + std::string(c.coherent.weighting == Weighting::twin_diagonal ? "twin" : "product"),
      "tmax=" + format_double(c.t_max),
      "samples=" + std::to_string(c.samples),
      "nA=" + c.range_A.str(),
      "nB=" + c.range_B.str(),
      "format=" + to_string(c.format),
  };
}

namespace {

void write_header(const RunConfig& config, std::ostream& out) {
  out << "# djcm " << to_string(config.subcommand) << "\n";
  for (const auto& line : describe(config)) {
    out << "# " << line << "\n";
  }
}

json config_json(const RunConfig& config) {
  json j = json::object();
  for (const auto& line : describe(config)) {
    const auto eq = line.find('=');
    j[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return j;
}

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

InitialAmplitudes scenario_amplitudes(const RunConfig& config) {
  return config.params.scenario == Scenario::I ? InitialAmplitudes::scenario_i(config.theta)
                                               : InitialAmplitudes::scenario_ii(config.theta);
}

void write_series(const RunConfig& config, const InversionSeries& paper,
                  const InversionSeries& exact, const std::string* summary, std::ostream& out) {
  if (config.format == OutputFormat::csv) {
    write_header(config, out);
    if (summary) {
      out << "# summary " << *summary << "\n";
    }
    out << kSeriesColumns << "\n";
    for (std::size_t i = 0; i < paper.t.size(); ++i) {
      out << format_double(paper.t[i]) << ',' << format_double(paper.W_A[i]) << ','
          << format_double(paper.W_B[i]) << ',' << format_double(exact.W_A[i]) << ','
          << format_double(exact.W_B[i]) << "\n";
    }
    return;
  }
  json j;
  j["config"] = config_json(config);
  if (summary) {
    j["summary"] = json::parse(*summary);
  }
  j["columns"] = {{"t", paper.t},
                  {"W_A_paper", paper.W_A},
                  {"W_B_paper", paper.W_B},
                  {"W_A_exact", exact.W_A},
                  {"W_B_exact", exact.W_B}};
  out << j.dump(1) << "\n";
}

}  // namespace

void write_spectrum(const RunConfig& config, std::ostream& out) {
  config.validate();
  json blocks = json::array();
  if (config.format == OutputFormat::csv) {
    write_header(config, out);
    out << "n_A,n_B,hamiltonian,E1,E2,E3,E4\n";
  }
  for (std::uint32_t a = config.range_A.lo; a <= config.range_A.hi; ++a) {
    for (std::uint32_t b = config.range_B.lo; b <= config.range_B.hi; ++b) {
      const BlockIndex block{a, b};
      struct Row {
        std::string kind;
        Eigen::Vector4d values;
      };
      const Row rows[] = {
          {"interaction",
           block_spectrum(interaction_block(config.params, block), false).eigenvalues},
          {"excitation_conserving",
           block_spectrum(interaction_block(config.params, block,
                                            DiagonalConvention::excitation_conserving),
                          true)
               .eigenvalues},
          {"paper_printed",
           block_spectrum(
               interaction_block(config.params, block, DiagonalConvention::paper_printed), true)
               .eigenvalues},
      };
      json entry = {{"n_A", a}, {"n_B", b}};
      for (const auto& row : rows) {
        if (config.format == OutputFormat::csv) {
          out << a << ',' << b << ',' << row.kind;
          for (int k = 0; k < 4; ++k) {
            out << ',' << format_double(row.values(k));
          }
          out << "\n";
        } else {
          entry[row.kind] = std::vector<double>(row.values.data(), row.values.data() + 4);
        }
      }
      blocks.push_back(std::move(entry));
    }
  }
  if (config.format == OutputFormat::json) {
    out << json{{"config", config_json(config)}, {"blocks", blocks}}.dump(1) << "\n";
  }
}

void write_rabi(const RunConfig& config, std::ostream& out) {
  config.validate();
  const InitialAmplitudes amps = scenario_amplitudes(config);
  const BlockIndex block{config.range_A.lo, config.range_B.lo};
  const BlockHamiltonian H = interaction_block(config.params, block);
  const SpectralPropagator U(H);
  const BlockState initial = initial_block_state(config.params.scenario, amps, block);

  InversionSeries paper;
  InversionSeries exact;
  paper.convention = InversionConvention::paper_bell;
  exact.convention = InversionConvention::exact;
  paper.t = uniform_grid(config.t_max, config.samples);
  exact.t = paper.t;
  for (double t : paper.t) {
    const InversionSample wp =
        inversion_paper(amps, H.omega_rabi_A, H.omega_rabi_B, t, config.params.scenario);
    BlockState s = initial;
    s.amplitudes = U.apply(initial.amplitudes, t);
    s.time = t;
    const InversionSample we = inversion_exact(s);
    paper.W_A.push_back(wp.W_A);
    paper.W_B.push_back(wp.W_B);
    exact.W_A.push_back(we.W_A);
    exact.W_B.push_back(we.W_B);
  }
  write_series(config, paper, exact, nullptr, out);
}

std::string revival_summary_json(const RevivalAnalysis& a, const CoherentConfig& coherent) {
  json j = {{"t_collapse_est", optional_json(a.t_collapse_est)},
            {"t_revival_est", optional_json(a.t_revival_est)},
            {"t_collapse_pred", optional_json(a.t_collapse_pred)},
            {"t_revival_pred", optional_json(a.t_revival_pred)},
            {"convention", to_string(InversionConvention::paper_bell)},
            {"weighting", to_string(coherent.weighting)}};
  return j.dump();
}

RevivalAnalysis write_revival(const RunConfig& config, std::ostream& out) {
  config.validate();
  const std::vector<double> times = uniform_grid(config.t_max, config.samples);
  const InversionSeries paper = ensemble_inversion(config.params, config.coherent, times,
                                                   InversionConvention::paper_bell, config.workers);
  const InversionSeries exact = ensemble_inversion(config.params, config.coherent, times,
                                                   InversionConvention::exact, config.workers);
  const double g = 0.5 * (config.params.g_A + config.params.g_B);
  const RevivalAnalysis analysis = detect_collapse_revival(paper, g, config.coherent.alpha_sq);
  const std::string summary = revival_summary_json(analysis, config.coherent);
  write_series(config, paper, exact, &summary, out);
  return analysis;
}

}  // namespace djcm
