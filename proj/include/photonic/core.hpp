// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <complex>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace photonic {

// Polarization qubit encoding: |0> = H, |1> = V.
enum class Polarization { H, V };

using ModeId = std::string;   // spatial rail label, e.g. "a1", "5", "b2'"
using TimeBin = int;          // discrete arrival bin; delay lines shift it
using Amplitude = std::complex<double>;

inline Polarization flipped(Polarization p) {
  return p == Polarization::H ? Polarization::V : Polarization::H;
}

struct BasisKey {
  ModeId mode;
  Polarization pol = Polarization::H;
  TimeBin bin = 0;
  auto operator<=>(const BasisKey&) const = default;
};

// One photon as a sparse complex amplitude vector over (mode, pol, bin).
// Photons are distinguishable here: a multi-photon state is an ordered
// product of these, never a symmetrized Fock state. That rules out
// Hong-Ou-Mandel style interference by construction, which is exactly the
// regime the closed-form success rates assume.
struct SinglePhotonState {
  std::map<BasisKey, Amplitude> amps;

  Amplitude amplitude(const BasisKey& k) const {
    auto it = amps.find(k);
    return it == amps.end() ? Amplitude{} : it->second;
  }

  double norm_sq() const {
    double s = 0.0;
    for (const auto& [k, a] : amps) s += std::norm(a);
    return s;
  }

  // Set of spatial modes this photon has support on.
  std::set<ModeId> support() const {
    std::set<ModeId> m;
    for (const auto& [k, a] : amps) m.insert(k.mode);
    return m;
  }
};

// Ordered product of single-photon states plus the classical control bit of
// the gate (the control qubit is treated as a classical signal driving the
// polarization flips; it is not itself propagated through the optics).
struct PhotonEnsemble {
  std::vector<SinglePhotonState> photons;
  int control_bit = 0;
};

// Complex pair (beta_h, beta_v) describing one polarization qubit.
struct Qubit {
  Amplitude h;
  Amplitude v;
};

// Photon in `mode` at `bin` carrying the qubit (beta_h, beta_v).
// Accepts |beta_h|^2+|beta_v|^2 within 1e-9 of 1 and renormalizes exactly;
// anything further off is rejected with the residual in the message.
SinglePhotonState make_qubit_state(const ModeId& mode, const Qubit& q,
                                   TimeBin bin = 0);

// Probability that the photon is found in any of `modes` (any polarization,
// any time bin). `modes` must be nonempty.
double marginal_mode_probability(const SinglePhotonState& state,
                                 const std::set<ModeId>& modes);

// Checked variant: every queried mode must belong to `known_modes`
// (typically CircuitTopology::modes()); unknown ones are reported by name.
double marginal_mode_probability(const SinglePhotonState& state,
                                 const std::set<ModeId>& modes,
                                 const std::set<ModeId>& known_modes);

// Distribution of the photon count landing in `modes`: entry [k] is the
// probability that exactly k of the ensemble's photons are found there.
// Photons are independent, so this is a Poisson-binomial; computed by exact
// DP convolution, size photons+1. An empty ensemble yields {1.0}.
std::vector<double> herald_count_distribution(const PhotonEnsemble& ensemble,
                                              const std::set<ModeId>& modes);

}  // namespace photonic
