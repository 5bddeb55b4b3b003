// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <variant>
#include <vector>

#include "photonic/core.hpp"

namespace photonic {

// Phase picked up on reflection at a polarizing beam splitter. The physical
// convention (+1 here, -1 or +i elsewhere in the literature) drops out of
// every probability in this artifact; it is a named constant so tests can
// exercise an alternate convention explicitly.
inline constexpr Amplitude kPbsReflectionPhase{1.0, 0.0};

// Polarizing beam splitter, 4-port. H transmits, V reflects:
//   (in_a, H) -> out_transmit      (in_a, V) -> out_reflect
//   (in_b, H) -> out_reflect       (in_b, V) -> out_transmit
// in_b may be empty when only one input rail is wired up.
struct Pbs {
  ModeId in_a;
  ModeId in_b;
  ModeId out_transmit;
  ModeId out_reflect;
};

// Half-wave plate at tilt theta (degrees, [0, 180)). Jones action on (H, V):
//   [ cos 2t   sin 2t ]
//   [ sin 2t  -cos 2t ]
// t = 22.5 deg maps H -> (H+V)/sqrt2, V -> (H-V)/sqrt2;
// t = 67.5 deg maps H -> (V-H)/sqrt2, V -> (H+V)/sqrt2.
struct Hwp {
  ModeId mode;
  double theta_deg;
};

// Polarization flip (H <-> V) applied iff the gate's classical control bit
// is 1. This is the "CNOT" of the gate circuits: control is classical.
struct ClassicalCnot {
  ModeId mode;
};

// Shifts the time bin of everything on `mode` by delta (>= 0).
struct DelayLine {
  ModeId mode;
  int delta;
};

// 90-degree polarization rotator that is switched on only for amplitudes in
// the listed time bins. The herald merge network drives these from the
// photon arrival schedule; an empty list means permanently off. A uniform
// on/off version is available as apply_switchable_rotator(state, mode, bool).
struct SwitchableRotator {
  ModeId mode;
  std::vector<TimeBin> active_bins;
};

using OpticalElement =
    std::variant<Pbs, Hwp, ClassicalCnot, DelayLine, SwitchableRotator>;

// A gate circuit: ordered elements plus the declared mode roles.
// herald_modes and output_modes are disjoint; validate() enforces that and
// basic element well-formedness.
struct CircuitTopology {
  std::vector<OpticalElement> elements;
  std::set<ModeId> input_modes;
  std::set<ModeId> output_modes;
  std::set<ModeId> herald_modes;

  // Every mode referenced anywhere in the circuit.
  std::set<ModeId> modes() const;
  void validate() const;
};

SinglePhotonState apply_pbs(const SinglePhotonState& state, const Pbs& pbs,
                            Amplitude reflection_phase = kPbsReflectionPhase);
SinglePhotonState apply_hwp(const SinglePhotonState& state, const ModeId& mode,
                            double theta_deg);
SinglePhotonState apply_classical_cnot(const SinglePhotonState& state,
                                       const ModeId& mode, int control_bit);
SinglePhotonState apply_delay(const SinglePhotonState& state,
                              const ModeId& mode, int delta);
SinglePhotonState apply_switchable_rotator(const SinglePhotonState& state,
                                           const ModeId& mode, bool active);
SinglePhotonState apply_scheduled_rotator(const SinglePhotonState& state,
                                          const SwitchableRotator& rot);

// Dispatches on the element kind; control_bit feeds ClassicalCnot.
SinglePhotonState apply_element(const SinglePhotonState& state,
                                const OpticalElement& element,
                                int control_bit);

}  // namespace photonic
