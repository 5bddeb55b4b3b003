// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "photonic/montecarlo.hpp"

namespace photonic {
namespace benes {

// A rearrangeably non-blocking Benes network built from 2x2 crossbar
// switches, each realized by one heralded controlled-SWAP gate (control 0 =
// Through, control 1 = Cross). N = 2^k ports need 2k-1 columns of N/2
// switches. The network succeeds when every gate heralds, so the success
// probability is the single-gate rate raised to the switch count.

enum class SwitchState { Through, Cross };

struct SwitchUnit {
  int column = 0;
  int row = 0;
  // Per-switch herald test point; lets a bench peel one gate's statistics
  // out of a network run.
  std::string flag_mode;
};

struct BenesNetwork {
  int ports = 0;
  std::vector<std::vector<SwitchUnit>> columns;  // (2k-1) x (N/2)
  // wiring[s][line] = line fed in column s+1; switch r in a column owns
  // lines 2r (up) and 2r+1 (down).
  std::vector<std::vector<int>> wiring;

  int switch_count() const {
    int n = 0;
    for (const auto& c : columns) n += static_cast<int>(c.size());
    return n;
  }
};

// Per-column switch settings, aligned with BenesNetwork::columns.
using SwitchSettings = std::vector<std::vector<SwitchState>>;

// ports must be a power of two, >= 2.
BenesNetwork build_benes(int ports);

// Switch settings realizing `perm` (input i exits on port perm[i]),
// computed with the classic looping decomposition. `perm` must be a
// permutation of 0..ports-1.
SwitchSettings route(const BenesNetwork& net, const std::vector<int>& perm);

// Forward-propagates port labels through the switched network; returns the
// realized permutation. route() followed by apply_settings() is the
// identity check used throughout the tests.
std::vector<int> apply_settings(const BenesNetwork& net,
                                const SwitchSettings& settings);

// p_gate ^ switch_count.
double network_success_probability(const BenesNetwork& net, double p_gate);

// Samples whole-network shots: every switch runs one modified-gate trial
// with its own pair of source triggers and its own detector window (same
// specs everywhere), and the network counts as heralded when every switch
// heralds on a non-vacuum trigger. Chunked over workers exactly like
// mc::run_trials.
mc::Estimate simulate_network(const BenesNetwork& net,
                              const SwitchSettings& settings,
                              const SourceSpec& source,
                              const DetectorSpec& det, std::uint64_t trials,
                              std::uint64_t seed, unsigned workers = 4);

}  // namespace benes
}  // namespace photonic
