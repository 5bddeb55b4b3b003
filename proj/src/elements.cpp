// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#include "photonic/elements.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace photonic {

namespace {

void insert_amp(SinglePhotonState& s, const BasisKey& k, Amplitude a) {
  if (a == Amplitude{}) return;
  auto [it, fresh] = s.amps.emplace(k, a);
  if (!fresh) {
    it->second += a;
    if (it->second == Amplitude{}) s.amps.erase(it);
  }
}

// H<->V swap of everything on `mode` whose bin satisfies `want`.
template <typename BinPred>
SinglePhotonState flip_on_mode(const SinglePhotonState& state,
                               const ModeId& mode, BinPred want) {
  SinglePhotonState out;
  for (const auto& [k, a] : state.amps) {
    BasisKey nk = k;
    if (k.mode == mode && want(k.bin)) nk.pol = flipped(k.pol);
    insert_amp(out, nk, a);
  }
  return out;
}

}  // namespace

SinglePhotonState apply_pbs(const SinglePhotonState& state, const Pbs& pbs,
                            Amplitude reflection_phase) {
  if (pbs.in_a.empty())
    throw std::invalid_argument("apply_pbs: in_a must be set");
  if (pbs.in_a == pbs.in_b)
    throw std::invalid_argument("apply_pbs: input rails coincide");
  if (pbs.out_transmit == pbs.out_reflect)
    throw std::invalid_argument("apply_pbs: output rails coincide");
  SinglePhotonState out;
  for (const auto& [k, a] : state.amps) {
    BasisKey nk = k;
    Amplitude na = a;
    if (k.mode == pbs.in_a) {
      if (k.pol == Polarization::H) {
        nk.mode = pbs.out_transmit;
      } else {
        nk.mode = pbs.out_reflect;
        na *= reflection_phase;
      }
    } else if (!pbs.in_b.empty() && k.mode == pbs.in_b) {
      if (k.pol == Polarization::H) {
        nk.mode = pbs.out_reflect;
        na *= reflection_phase;
      } else {
        nk.mode = pbs.out_transmit;
      }
    }
    insert_amp(out, nk, na);
  }
  return out;
}

SinglePhotonState apply_hwp(const SinglePhotonState& state, const ModeId& mode,
                            double theta_deg) {
  if (theta_deg < 0.0 || theta_deg >= 180.0)
    throw std::invalid_argument("apply_hwp: theta must lie in [0, 180) deg");
  const double t = 2.0 * theta_deg * std::numbers::pi / 180.0;
  const double c = std::cos(t), s = std::sin(t);

  SinglePhotonState out;
  // Collect (H, V) pairs per time bin on the target mode, rotate, reinsert.
  std::map<TimeBin, std::pair<Amplitude, Amplitude>> hv;
  for (const auto& [k, a] : state.amps) {
    if (k.mode != mode) {
      insert_amp(out, k, a);
      continue;
    }
    auto& slot = hv[k.bin];
    (k.pol == Polarization::H ? slot.first : slot.second) = a;
  }
  for (const auto& [bin, amps] : hv) {
    const auto [h, v] = amps;
    insert_amp(out, {mode, Polarization::H, bin}, c * h + s * v);
    insert_amp(out, {mode, Polarization::V, bin}, s * h - c * v);
  }
  return out;
}

SinglePhotonState apply_classical_cnot(const SinglePhotonState& state,
                                       const ModeId& mode, int control_bit) {
  if (control_bit != 0 && control_bit != 1)
    throw std::invalid_argument("apply_classical_cnot: control must be 0 or 1");
  if (control_bit == 0) return state;
  return flip_on_mode(state, mode, [](TimeBin) { return true; });
}

SinglePhotonState apply_delay(const SinglePhotonState& state,
                              const ModeId& mode, int delta) {
  if (delta < 0) throw std::invalid_argument("apply_delay: delta must be >= 0");
  SinglePhotonState out;
  for (const auto& [k, a] : state.amps) {
    BasisKey nk = k;
    if (k.mode == mode) nk.bin += delta;
    insert_amp(out, nk, a);
  }
  return out;
}

SinglePhotonState apply_switchable_rotator(const SinglePhotonState& state,
                                           const ModeId& mode, bool active) {
  if (!active) return state;
  return flip_on_mode(state, mode, [](TimeBin) { return true; });
}

SinglePhotonState apply_scheduled_rotator(const SinglePhotonState& state,
                                          const SwitchableRotator& rot) {
  return flip_on_mode(state, rot.mode, [&](TimeBin b) {
    return std::find(rot.active_bins.begin(), rot.active_bins.end(), b) !=
           rot.active_bins.end();
  });
}

SinglePhotonState apply_element(const SinglePhotonState& state,
                                const OpticalElement& element,
                                int control_bit) {
  return std::visit(
      [&](const auto& e) -> SinglePhotonState {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, Pbs>) {
          return apply_pbs(state, e);
        } else if constexpr (std::is_same_v<T, Hwp>) {
          return apply_hwp(state, e.mode, e.theta_deg);
        } else if constexpr (std::is_same_v<T, ClassicalCnot>) {
          return apply_classical_cnot(state, e.mode, control_bit);
        } else if constexpr (std::is_same_v<T, DelayLine>) {
          return apply_delay(state, e.mode, e.delta);
        } else {
          return apply_scheduled_rotator(state, e);
        }
      },
      element);
}

std::set<ModeId> CircuitTopology::modes() const {
  std::set<ModeId> all;
  all.insert(input_modes.begin(), input_modes.end());
  all.insert(output_modes.begin(), output_modes.end());
  all.insert(herald_modes.begin(), herald_modes.end());
  for (const auto& el : elements) {
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, Pbs>) {
            all.insert(e.in_a);
            if (!e.in_b.empty()) all.insert(e.in_b);
            all.insert(e.out_transmit);
            all.insert(e.out_reflect);
          } else {
            all.insert(e.mode);
          }
        },
        el);
  }
  return all;
}

void CircuitTopology::validate() const {
  for (const auto& m : herald_modes)
    if (output_modes.count(m))
      throw std::invalid_argument(
          "CircuitTopology: mode '" + m + "' is both output and herald");
  for (const auto& el : elements) {
    std::visit(
        [](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, Pbs>) {
            if (e.in_a.empty() || e.out_transmit.empty() ||
                e.out_reflect.empty() || e.out_transmit == e.out_reflect ||
                e.in_a == e.in_b)
              throw std::invalid_argument("CircuitTopology: malformed PBS");
          } else if constexpr (std::is_same_v<T, Hwp>) {
            if (e.mode.empty() || e.theta_deg < 0.0 || e.theta_deg >= 180.0)
              throw std::invalid_argument("CircuitTopology: malformed HWP");
          } else if constexpr (std::is_same_v<T, DelayLine>) {
            if (e.mode.empty() || e.delta < 0)
              throw std::invalid_argument(
                  "CircuitTopology: malformed delay line");
          } else {
            if (e.mode.empty())
              throw std::invalid_argument(
                  "CircuitTopology: element missing mode");
          }
        },
        el);
  }
}

}  // namespace photonic
