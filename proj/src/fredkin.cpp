// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#include "photonic/fredkin.hpp"

#include <cmath>
#include <stdexcept>

namespace photonic {

CircuitTopology build_original_gate() {
  CircuitTopology c;
  // Input split: H components transmit to the inner rails (2, 3), V
  // components reflect to the outer rails (1, 4).
  c.elements.push_back(Pbs{"a1", "", "2", "1"});
  c.elements.push_back(Pbs{"a2", "", "3", "4"});
  // Control-driven polarization flips on all four rails. With control 1 the
  // flipped polarizations make the next PBS pair swap which logical qubit
  // reaches which output; with control 0 everything returns to its own side.
  for (const char* m : {"1", "2", "3", "4"})
    c.elements.push_back(ClassicalCnot{m});
  // Rail exchange. PBS3 couples the inner rails, PBS4 the outer ones.
  c.elements.push_back(Pbs{"2", "3", "6", "5"});
  c.elements.push_back(Pbs{"1", "4", "8", "7"});
  // 22.5-degree plates on 5/6 and 67.5-degree plates on 7/8 turn each branch
  // into an equal H/V superposition so the final PBSs leak half of every
  // photon to the herald rails.
  c.elements.push_back(Hwp{"5", 22.5});
  c.elements.push_back(Hwp{"6", 22.5});
  c.elements.push_back(Hwp{"7", 67.5});
  c.elements.push_back(Hwp{"8", 67.5});
  c.elements.push_back(Pbs{"6", "7", "b1", "b1'"});
  c.elements.push_back(Pbs{"5", "8", "b2", "b2'"});

  c.input_modes = {"a1", "a2"};
  c.output_modes = {"b1", "b2"};
  c.herald_modes = {"b1'", "b2'"};
  c.validate();
  return c;
}

CircuitTopology build_modified_gate(int d1, int d2, int d3) {
  if (d1 < 1 || d2 < 1 || d3 < 1)
    throw std::invalid_argument("build_modified_gate: delays must be >= 1");
  if (d1 != d2)
    throw std::invalid_argument("build_modified_gate: requires d1 == d2");
  if (d1 <= 2 * d3)
    throw std::invalid_argument("build_modified_gate: requires d1 > 2*d3");

  CircuitTopology c = build_original_gate();
  // Split each herald rail by polarization and delay the V path, so H and V
  // escapees from the same rail occupy different time bins when remerged.
  c.elements.push_back(Pbs{"b1'", "", "u1", "v1"});
  c.elements.push_back(DelayLine{"v1", d1});
  c.elements.push_back(Pbs{"u1", "v1", "w1", "w1x"});
  c.elements.push_back(Pbs{"b2'", "", "u2", "v2"});
  c.elements.push_back(DelayLine{"v2", d2});
  c.elements.push_back(Pbs{"u2", "v2", "w2", "w2x"});
  // Merge the two rails. H from w1 and V from w2 exit on the straight arm
  // s1; V from w1 and H from w2 exit on the delayed arm s2.
  c.elements.push_back(Pbs{"w1", "w2", "s1", "s2"});
  // Bin-scheduled rotators (see header): every escapee reaches "hc" and
  // leaves it V-polarized, in one of the four distinct bins
  // {0, d3, d2, d1+d3}.
  c.elements.push_back(SwitchableRotator{"s2", {0}});
  c.elements.push_back(DelayLine{"s2", d3});
  c.elements.push_back(SwitchableRotator{"s1", {d2}});
  c.elements.push_back(Pbs{"s1", "s2", "hc", "hx"});
  c.elements.push_back(SwitchableRotator{"hc", {0, d2}});

  c.herald_modes = {"hc"};
  c.validate();
  return c;
}

PhotonEnsemble evolve(const CircuitTopology& circuit,
                      const PhotonEnsemble& ensemble) {
  if (ensemble.control_bit != 0 && ensemble.control_bit != 1)
    throw std::invalid_argument("evolve: control bit must be 0 or 1");
  PhotonEnsemble out;
  out.control_bit = ensemble.control_bit;
  out.photons.reserve(ensemble.photons.size());
  for (const auto& photon : ensemble.photons) {
    for (const auto& m : photon.support())
      if (!circuit.input_modes.count(m))
        throw std::invalid_argument("evolve: photon enters on mode '" + m +
                                    "', which is not a circuit input");
    SinglePhotonState s = photon;
    for (const auto& el : circuit.elements)
      s = apply_element(s, el, ensemble.control_bit);
    if (std::abs(s.norm_sq() - photon.norm_sq()) > 1e-12)
      throw std::logic_error("evolve: photon norm not preserved");
    out.photons.push_back(std::move(s));
  }
  return out;
}

bool herald_rule(GateVariant variant,
                 const std::map<std::string, bool>& clicks) {
  auto need = [&](const char* key) {
    auto it = clicks.find(key);
    if (it == clicks.end())
      throw std::invalid_argument(
          std::string("herald_rule: missing detector '") + key + "'");
    return it->second;
  };
  if (variant == GateVariant::Original) return !need("D_a") && !need("D_b");
  return need("D_c");
}

PhotonEnsemble conditional_output_state(const CircuitTopology& circuit,
                                        const PhotonEnsemble& ensemble) {
  PhotonEnsemble out;
  out.control_bit = ensemble.control_bit;
  for (const auto& photon : ensemble.photons) {
    SinglePhotonState kept;
    double w = 0.0;
    for (const auto& [k, a] : photon.amps) {
      if (circuit.output_modes.count(k.mode)) {
        kept.amps[k] = a;
        w += std::norm(a);
      }
    }
    if (w < 1e-30)
      throw std::invalid_argument(
          "conditional_output_state: herald-incompatible state (photon has "
          "no amplitude on output modes)");
    const double inv = 1.0 / std::sqrt(w);
    for (auto& [k, a] : kept.amps) a *= inv;
    out.photons.push_back(std::move(kept));
  }
  return out;
}

std::pair<Qubit, Qubit> ideal_output(int control_bit, const Qubit& in1,
                                     const Qubit& in2) {
  if (control_bit != 0 && control_bit != 1)
    throw std::invalid_argument("ideal_output: control bit must be 0 or 1");
  return control_bit ? std::pair{in2, in1} : std::pair{in1, in2};
}

}  // namespace photonic
