#include "djcm/measurement.hpp"

#include <array>

namespace djcm {

std::string to_string(InversionConvention c) {
  return c == InversionConvention::exact ? "exact" : "paper_bell";
}

namespace {

// Full quantum numbers (atom_A, atom_B, photons_A, photons_B) of basis state k.
struct ProductLabel {
  int atom_A;
  int atom_B;
  std::uint32_t photons_A;
  std::uint32_t photons_B;
};

ProductLabel label_of(int k, BlockIndex b) {
  const int a = atom_A_of(k);
  const int bb = atom_B_of(k);
  return {a, bb, b.n_A + 1 - a, b.n_B + 1 - bb};
}

}  // namespace

ReducedAtomState reduce_atom(const BlockState& state, Site site) {
  std::array<ProductLabel, 4> labels;
  for (int k = 0; k < 4; ++k) {
    labels[k] = label_of(k, state.block);
  }
  ReducedAtomState out;
  out.site = site;
  // rho_i[a][a'] = sum over environment labels shared by both kets.
  for (int k = 0; k < 4; ++k) {
    for (int l = 0; l < 4; ++l) {
      const auto& p = labels[k];
      const auto& q = labels[l];
      const bool same_env =
          site == Site::A
              ? (p.atom_B == q.atom_B && p.photons_A == q.photons_A && p.photons_B == q.photons_B)
              : (p.atom_A == q.atom_A && p.photons_A == q.photons_A && p.photons_B == q.photons_B);
      if (!same_env) {
        continue;
      }
      const int row = site == Site::A ? p.atom_A : p.atom_B;
      const int col = site == Site::A ? q.atom_A : q.atom_B;
      out.rho(row, col) += state.amplitudes(k) * std::conj(state.amplitudes(l));
    }
  }
  return out;
}

InversionSample inversion_exact(const BlockState& state) {
  const ReducedAtomState a = reduce_atom(state, Site::A);
  const ReducedAtomState b = reduce_atom(state, Site::B);
  InversionSample s;
  s.convention = InversionConvention::exact;
  s.W_A = a.rho(1, 1).real() - a.rho(0, 0).real();
  s.W_B = b.rho(1, 1).real() - b.rho(0, 0).real();
  return s;
}

InversionSample inversion_paper(const InitialAmplitudes& amps, double omega_rabi_A,
                                double omega_rabi_B, double t, Scenario scenario) {
  const BellAmplitudes bell = paper_amplitudes(amps, omega_rabi_A, omega_rabi_B, t, scenario);
  InversionSample s;
  s.convention = InversionConvention::paper_bell;
  s.W_A = std::norm(bell.first) - std::norm(bell.second);
  s.W_B = -s.W_A;
  return s;
}

}  // namespace djcm
