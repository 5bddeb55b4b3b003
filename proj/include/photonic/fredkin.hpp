// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <utility>

#include "photonic/elements.hpp"

namespace photonic {

// The two heralded controlled-SWAP circuits this library models. Both route
// a pair of polarization qubits ("a1", "a2" -> "b1", "b2") and succeed
// exactly when no photon escapes to the herald side; they differ in how that
// condition is detected:
//   Original - herald modes b1'/b2' feed detectors D_a and D_b directly and
//              success is announced by *neither* detector firing.
//   Modified - b1'/b2' feed a time-multiplexing merge network that funnels
//              every escaped photon onto one rail; any photon there flips an
//              auxiliary V photon away from detector D_c, so success is
//              announced by D_c firing (a positive herald).
enum class GateVariant { Original, Modified };

// Detector click pattern together with the herald verdict derived from it.
struct HeraldEvent {
  std::map<std::string, bool> clicks;
  bool fired = false;
};

// Original gate: inputs split on PBSs into rails 1..4, classically
// controlled polarization flips, rail-exchanging PBSs into 5..8, 22.5/67.5
// degree half-wave plates, and final PBSs producing outputs b1/b2 plus
// herald rails b1'/b2'. Every input photon ends up half on its output rail
// and half on a herald rail, for either control value.
CircuitTopology build_original_gate();

// Modified gate: the original circuit plus the herald merge network.
//
// The merge network turns "no photon on b1' or b2'" into a statement about a
// single rail "hc". Each herald rail is split by polarization; the V path is
// delayed (d1 on the b1' side, d2 on the b2' side) and recombined, so the
// four possible escapees arrive distinguishably:
//     H from b1' ......... straight arm, bin 0
//     H from b2' ......... delayed arm,  bin d3
//     V from b2' ......... straight arm, bin d2
//     V from b1' ......... delayed arm,  bin d1 + d3
// Scheduled 90-degree rotators (on at bin 0 on the delayed arm, at bin d2 on
// the straight arm, and at bins {0, d2} after the final merge) make every
// one of those four cases exit V-polarized on "hc", whatever its bin. All
// 2x2 cases are exercised by tests; the schedule is valid whenever
// d1 == d2, d3 >= 1 and d1 > 2*d3 (defaults 3, 3, 1).
//
// Photons on "hc" drive the control port of an abstract CNOT whose target is
// an auxiliary V photon wired to detector D_c: one or more escaped photons
// (any time bin) flip the auxiliary photon to H so it misses D_c. The CNOT,
// auxiliary photon and D_c are modeled by the herald rule and the Monte
// Carlo detector stage, not as optical elements.
CircuitTopology build_modified_gate(int d1 = 3, int d2 = 3, int d3 = 1);

// Pushes every photon of the ensemble through the circuit's elements in
// order. Photons must enter on input modes; per-photon norm is preserved to
// 1e-12 (checked).
PhotonEnsemble evolve(const CircuitTopology& circuit,
                      const PhotonEnsemble& ensemble);

// Herald verdict from detector clicks. Original wants {"D_a", "D_b"} silent;
// Modified wants {"D_c"} to fire. Missing keys are an error.
bool herald_rule(GateVariant variant,
                 const std::map<std::string, bool>& clicks);

// Projects each photon onto the circuit's output modes and renormalizes it,
// i.e. the post-selected state given that no photon escaped. A photon with
// no output-mode amplitude makes the condition impossible and is an error.
PhotonEnsemble conditional_output_state(const CircuitTopology& circuit,
                                        const PhotonEnsemble& ensemble);

// Textbook controlled-SWAP on the logical qubits: control 0 passes
// (in1, in2) through, control 1 returns (in2, in1).
std::pair<Qubit, Qubit> ideal_output(int control_bit, const Qubit& in1,
                                     const Qubit& in2);

}  // namespace photonic
