#include "djcm/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>
#include <thread>

namespace djcm {

std::string to_string(Weighting w) {
  return w == Weighting::twin_diagonal ? "twin_diagonal" : "independent_product";
}

std::string to_string(CoherentCase c) { return c == CoherentCase::I ? "CaseI" : "CaseII"; }

std::uint32_t default_cutoff(double alpha_sq) {
  return static_cast<std::uint32_t>(std::ceil(alpha_sq + 10.0 * std::sqrt(alpha_sq) + 10.0));
}

std::uint32_t CoherentConfig::resolved_cutoff() const {
  return cutoff.value_or(default_cutoff(alpha_sq));
}

void CoherentConfig::validate() const {
  if (!std::isfinite(alpha_sq) || alpha_sq <= 0.0) {
    throw ValidationError("alpha_sq must be positive and finite");
  }
  const std::uint32_t c = resolved_cutoff();
  if (poisson_tail_mass(alpha_sq, c) >= kPoissonTailTolerance) {
    std::ostringstream msg;
    msg << "cutoff " << c << " leaves Poisson tail mass >= " << kPoissonTailTolerance
        << " for alpha_sq=" << alpha_sq << "; use cutoff >= " << minimal_cutoff(alpha_sq);
    throw ValidationError(msg.str());
  }
}

namespace {

double log_poisson(double alpha_sq, std::uint32_t n) {
  return -alpha_sq + n * std::log(alpha_sq) - std::lgamma(n + 1.0);
}

}  // namespace

double poisson_tail_mass(double alpha_sq, std::uint32_t cutoff) {
  double term = std::exp(log_poisson(alpha_sq, cutoff + 1));
  double tail = 0.0;
  // Terms shrink geometrically once n > alpha_sq; stop when they no longer matter.
  for (std::uint64_t n = cutoff + 1;; ++n) {
    tail += term;
    term *= alpha_sq / static_cast<double>(n + 1);
    if (n + 1 > alpha_sq && term <= tail * 1e-17) {
      break;
    }
    if (n > cutoff + 100000) {
      break;
    }
  }
  return tail;
}

std::uint32_t minimal_cutoff(double alpha_sq) {
  std::uint32_t c = 0;
  while (poisson_tail_mass(alpha_sq, c) >= kPoissonTailTolerance) {
    ++c;
  }
  return c;
}

std::vector<double> poisson_weights(double alpha_sq, std::uint32_t cutoff) {
  CoherentConfig check;
  check.alpha_sq = alpha_sq;
  check.cutoff = cutoff;
  check.validate();

  std::vector<double> p(cutoff + 1);
  for (std::uint32_t n = 0; n <= cutoff; ++n) {
    p[n] = std::exp(log_poisson(alpha_sq, n));
  }
  const double total = pairwise_sum(p);
  for (double& x : p) {
    x /= total;
  }
  return p;
}

std::vector<double> uniform_grid(double t_max, std::size_t samples) {
  if (samples < 2) {
    throw ValidationError("a time grid needs at least two samples");
  }
  if (!std::isfinite(t_max) || t_max <= 0.0) {
    throw ValidationError("t_max must be positive and finite");
  }
  std::vector<double> t(samples);
  const double dt = t_max / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    t[i] = dt * static_cast<double>(i);
  }
  return t;
}

double pairwise_sum(std::span<const double> terms) {
  if (terms.size() <= 8) {
    double s = 0.0;
    for (double x : terms) {
      s += x;
    }
    return s;
  }
  const std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

namespace {

struct WeightedBlock {
  BlockIndex block;
  double weight;
  double omega_rabi_A;
  double omega_rabi_B;
};

struct ExactBlock {
  SpectralPropagator propagator;
  BlockState initial;
};

}  // namespace

InversionSeries ensemble_inversion(const SystemParams& params, const CoherentConfig& config,
                                   std::span<const double> times, InversionConvention convention,
                                   unsigned workers) {
  params.validate();
  if (convention == InversionConvention::paper_bell) {
    require_resonant(params);
  }
  config.validate();
  const std::vector<double> p = poisson_weights(config.alpha_sq, config.resolved_cutoff());

  std::vector<WeightedBlock> blocks;
  const auto n_max = static_cast<std::uint32_t>(p.size());
  auto push = [&](std::uint32_t a, std::uint32_t b, double w) {
    blocks.push_back({{a, b}, w, rabi_frequency(params.g_A, a), rabi_frequency(params.g_B, b)});
  };
  if (config.weighting == Weighting::twin_diagonal) {
    for (std::uint32_t n = 0; n < n_max; ++n) {
      push(n, n, p[n]);
    }
  } else {
    for (std::uint32_t a = 0; a < n_max; ++a) {
      for (std::uint32_t b = 0; b < n_max; ++b) {
        push(a, b, p[a] * p[b]);
      }
    }
  }

  InitialAmplitudes amps;
  const cplx one{1.0, 0.0};
  const bool first = config.coherent_case == CoherentCase::I;
  if (params.scenario == Scenario::I) {
    (first ? amps.c00 : amps.c01) = one;
  } else {
    (first ? amps.c10 : amps.c11) = one;
  }

  std::vector<ExactBlock> exact;
  if (convention == InversionConvention::exact) {
    // Off resonance the free part is no longer a block-global phase.
    const PropagationMode mode = params.delta == 0.0 ? PropagationMode::interaction_picture
                                                     : PropagationMode::full_hamiltonian;
    exact.reserve(blocks.size());
    for (const auto& b : blocks) {
      exact.push_back({SpectralPropagator(interaction_block(params, b.block), mode),
                       initial_block_state(params.scenario, amps, b.block)});
    }
  }

  InversionSeries out;
  out.convention = convention;
  out.t.assign(times.begin(), times.end());
  out.W_A.assign(times.size(), 0.0);
  out.W_B.assign(times.size(), 0.0);

  auto run_range = [&](std::size_t begin, std::size_t end) {
    std::vector<double> terms_A(blocks.size());
    std::vector<double> terms_B(blocks.size());
    for (std::size_t i = begin; i < end; ++i) {
      const double t = times[i];
      for (std::size_t k = 0; k < blocks.size(); ++k) {
        InversionSample s;
        if (convention == InversionConvention::paper_bell) {
          s = inversion_paper(amps, blocks[k].omega_rabi_A, blocks[k].omega_rabi_B, t,
                              params.scenario);
        } else {
          BlockState state = exact[k].initial;
          state.amplitudes = exact[k].propagator.apply(state.amplitudes, t);
          state.time = t;
          s = inversion_exact(state);
        }
        terms_A[k] = blocks[k].weight * s.W_A;
        terms_B[k] = blocks[k].weight * s.W_B;
      }
      out.W_A[i] = pairwise_sum(terms_A);
      out.W_B[i] = pairwise_sum(terms_B);
    }
  };

  const std::size_t n = times.size();
  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n)));
  if (threads == 1) {
    run_range(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t begin = std::min(n, w * chunk);
      const std::size_t end = std::min(n, begin + chunk);
      pool.emplace_back(run_range, begin, end);
    }
  }
  return out;
}

namespace {

// max |w| over [i, i + width] for every i, truncated at the end of the series.
std::vector<double> forward_running_max(const std::vector<double>& w, std::size_t width) {
  const std::size_t n = w.size();
  std::vector<double> env(n);
  std::deque<std::size_t> window;  // indices with decreasing |w|
  for (std::size_t ii = n; ii-- > 0;) {
    while (!window.empty() && std::abs(w[window.back()]) <= std::abs(w[ii])) {
      window.pop_back();
    }
    window.push_back(ii);
    while (window.front() > ii + width) {
      window.pop_front();
    }
    env[ii] = std::abs(w[window.front()]);
  }
  return env;
}

}  // namespace

RevivalAnalysis detect_collapse_revival(const InversionSeries& series, double g, double alpha_sq) {
  const auto& t = series.t;
  const auto& w = series.W_A;
  if (t.size() != w.size() || t.size() < 3) {
    throw ValidationError("collapse/revival detection needs a series of at least three samples");
  }
  if (!(alpha_sq > 0.0) || !(g >= 0.0)) {
    throw ValidationError("detection requires g >= 0 and alpha_sq > 0");
  }

  RevivalAnalysis r;
  if (g == 0.0) {
    return r;
  }
  r.t_collapse_pred = std::numbers::sqrt2 / g;
  r.t_revival_pred = 2.0 * std::numbers::pi * std::sqrt(alpha_sq) / g;
  r.envelope_window = 2.0 * std::numbers::pi / (2.0 * g * std::sqrt(alpha_sq + 1.0));
  r.revival_window_lo = 0.5 * *r.t_revival_pred;
  r.revival_window_hi = 1.5 * *r.t_revival_pred;

  const double w0 = std::abs(w.front());
  r.collapse_threshold = w0 / std::numbers::e;
  if (w0 == 0.0) {
    return r;
  }

  const double dt = t[1] - t[0];
  const auto width = static_cast<std::size_t>(std::llround(r.envelope_window / dt));
  const std::vector<double> env = forward_running_max(w, width);
  for (std::size_t i = 0; i < env.size(); ++i) {
    if (env[i] < r.collapse_threshold) {
      r.t_collapse_est = t[i];
      break;
    }
  }
  if (!r.t_collapse_est) {
    return r;
  }

  std::size_t lo = t.size();
  std::size_t hi = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= r.revival_window_lo && t[i] <= r.revival_window_hi) {
      lo = std::min(lo, i);
      hi = std::max(hi, i);
    }
  }
  if (lo >= hi) {
    return r;
  }
  std::size_t best = lo;
  for (std::size_t i = lo; i <= hi; ++i) {
    if (std::abs(w[i]) > std::abs(w[best])) {
      best = i;
    }
  }
  if (best == lo || best == hi) {
    return r;
  }
  const double ym = std::abs(w[best - 1]);
  const double y0 = std::abs(w[best]);
  const double yp = std::abs(w[best + 1]);
  const double curvature = ym - 2.0 * y0 + yp;
  double offset = 0.0;
  if (curvature < 0.0) {
    offset = 0.5 * (ym - yp) / curvature;
  }
  r.t_revival_est = t[best] + offset * dt;
  return r;
}

}  // namespace djcm
