// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#include "photonic/core.hpp"

#include <cmath>
#include <stdexcept>

namespace photonic {

SinglePhotonState make_qubit_state(const ModeId& mode, const Qubit& q,
                                   TimeBin bin) {
  const double n2 = std::norm(q.h) + std::norm(q.v);
  if (std::abs(n2 - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "make_qubit_state: amplitudes not normalized, |residual| = " +
        std::to_string(std::abs(n2 - 1.0)));
  }
  const double inv = 1.0 / std::sqrt(n2);
  SinglePhotonState s;
  if (q.h != Amplitude{}) s.amps[{mode, Polarization::H, bin}] = q.h * inv;
  if (q.v != Amplitude{}) s.amps[{mode, Polarization::V, bin}] = q.v * inv;
  return s;
}

double marginal_mode_probability(const SinglePhotonState& state,
                                 const std::set<ModeId>& modes) {
  if (modes.empty())
    throw std::invalid_argument("marginal_mode_probability: empty mode set");
  double p = 0.0;
  for (const auto& [k, a] : state.amps)
    if (modes.count(k.mode)) p += std::norm(a);
  return p;
}

double marginal_mode_probability(const SinglePhotonState& state,
                                 const std::set<ModeId>& modes,
                                 const std::set<ModeId>& known_modes) {
  for (const auto& m : modes)
    if (!known_modes.count(m))
      throw std::invalid_argument(
          "marginal_mode_probability: unknown mode '" + m + "'");
  return marginal_mode_probability(state, modes);
}

std::vector<double> herald_count_distribution(const PhotonEnsemble& ensemble,
                                              const std::set<ModeId>& modes) {
  std::vector<double> dist{1.0};
  for (const auto& photon : ensemble.photons) {
    const double p = marginal_mode_probability(photon, modes);
    std::vector<double> next(dist.size() + 1, 0.0);
    for (std::size_t k = 0; k < dist.size(); ++k) {
      next[k] += dist[k] * (1.0 - p);
      next[k + 1] += dist[k] * p;
    }
    dist = std::move(next);
  }
  return dist;
}

}  // namespace photonic
