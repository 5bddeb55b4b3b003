// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#include "photonic/benes.hpp"

#include <cmath>
#include <future>
#include <stdexcept>

namespace photonic {
namespace benes {

namespace {

bool is_pow2(int n) { return n >= 2 && (n & (n - 1)) == 0; }

void check_ports(int ports) {
  if (!is_pow2(ports))
    throw std::invalid_argument(
        "benes: ports must be a power of two, >= 2 (got " +
        std::to_string(ports) + ")");
}

// Recursive looping decomposition over the sub-block of `settings` occupying
// columns [col_lo, col_hi] and switch rows [row_lo, row_lo + N/2).
void route_block(const std::vector<int>& perm, int col_lo, int col_hi,
                 int row_lo, SwitchSettings& settings) {
  const int n = static_cast<int>(perm.size());
  if (n == 2) {
    settings[col_lo][row_lo] =
        perm[0] == 0 ? SwitchState::Through : SwitchState::Cross;
    return;
  }

  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;

  // Color inputs 0 (upper subnetwork) / 1 (lower): paired inputs and the
  // sources of paired outputs must take opposite colors; walking those two
  // constraints alternately closes each cycle.
  std::vector<int> color(n, -1);
  for (int start = 0; start < n; ++start) {
    int i = start;
    while (color[i] == -1) {
      color[i] = 0;
      const int j = inv[perm[i] ^ 1];
      color[j] = 1;
      i = j ^ 1;
    }
  }

  std::vector<int> up_perm(n / 2), down_perm(n / 2);
  for (int r = 0; r < n / 2; ++r) {
    const int a = 2 * r;
    const int up_in = color[a] == 0 ? a : a ^ 1;
    const int down_in = up_in ^ 1;
    settings[col_lo][row_lo + r] =
        color[a] == 0 ? SwitchState::Through : SwitchState::Cross;
    settings[col_hi][row_lo + r] =
        color[inv[a]] == 0 ? SwitchState::Through : SwitchState::Cross;
    up_perm[r] = perm[up_in] / 2;
    down_perm[r] = perm[down_in] / 2;
  }
  route_block(up_perm, col_lo + 1, col_hi - 1, row_lo, settings);
  route_block(down_perm, col_lo + 1, col_hi - 1, row_lo + n / 4, settings);
}

}  // namespace

BenesNetwork build_benes(int ports) {
  check_ports(ports);
  if (ports == 2) {
    BenesNetwork net;
    net.ports = 2;
    net.columns = {{SwitchUnit{0, 0, "flag_c0_r0"}}};
    return net;
  }

  const BenesNetwork sub = build_benes(ports / 2);
  BenesNetwork net;
  net.ports = ports;
  const int stages = static_cast<int>(sub.columns.size()) + 2;
  const int half = ports / 2;

  net.columns.resize(stages);
  for (int s = 0; s < stages; ++s) {
    const int rows = half;
    net.columns[s].reserve(rows);
    for (int r = 0; r < rows; ++r)
      net.columns[s].push_back(SwitchUnit{
          s, r, "flag_c" + std::to_string(s) + "_r" + std::to_string(r)});
  }

  net.wiring.assign(stages - 1, std::vector<int>(ports));
  // Outer input column feeds the two stacked subnetworks: up ports go to the
  // upper copy (lines 0..N/2-1), down ports to the lower copy.
  for (int r = 0; r < half; ++r) {
    net.wiring[0][2 * r] = r;
    net.wiring[0][2 * r + 1] = half + r;
  }
  // Interior wiring is the sub-network wiring, duplicated with an offset.
  for (std::size_t s = 0; s < sub.wiring.size(); ++s) {
    for (int line = 0; line < half; ++line) {
      net.wiring[1 + s][line] = sub.wiring[s][line];
      net.wiring[1 + s][half + line] = half + sub.wiring[s][line];
    }
  }
  // Inverse shuffle back into the outer output column.
  for (int r = 0; r < half; ++r) {
    net.wiring[stages - 2][r] = 2 * r;
    net.wiring[stages - 2][half + r] = 2 * r + 1;
  }
  return net;
}

SwitchSettings route(const BenesNetwork& net, const std::vector<int>& perm) {
  check_ports(net.ports);
  if (static_cast<int>(perm.size()) != net.ports)
    throw std::invalid_argument("route: permutation size != port count");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= net.ports || seen[p])
      throw std::invalid_argument("route: not a permutation of 0..N-1");
    seen[p] = true;
  }

  SwitchSettings settings(net.columns.size());
  for (std::size_t s = 0; s < net.columns.size(); ++s)
    settings[s].assign(net.columns[s].size(), SwitchState::Through);
  route_block(perm, 0, static_cast<int>(net.columns.size()) - 1, 0, settings);
  return settings;
}

std::vector<int> apply_settings(const BenesNetwork& net,
                                const SwitchSettings& settings) {
  if (settings.size() != net.columns.size())
    throw std::invalid_argument("apply_settings: settings shape mismatch");
  std::vector<int> token(net.ports);  // token[line] = input port label
  for (int i = 0; i < net.ports; ++i) token[i] = i;

  for (std::size_t s = 0; s < net.columns.size(); ++s) {
    if (settings[s].size() != net.columns[s].size())
      throw std::invalid_argument("apply_settings: settings shape mismatch");
    for (std::size_t r = 0; r < settings[s].size(); ++r)
      if (settings[s][r] == SwitchState::Cross)
        std::swap(token[2 * r], token[2 * r + 1]);
    if (s + 1 < net.columns.size()) {
      std::vector<int> next(net.ports);
      for (int line = 0; line < net.ports; ++line)
        next[net.wiring[s][line]] = token[line];
      token = std::move(next);
    }
  }

  std::vector<int> out(net.ports);
  for (int line = 0; line < net.ports; ++line) out[token[line]] = line;
  return out;
}

double network_success_probability(const BenesNetwork& net, double p_gate) {
  if (!(p_gate >= 0.0 && p_gate <= 1.0))
    throw std::invalid_argument(
        "network_success_probability: p_gate must lie in [0, 1]");
  return std::pow(p_gate, net.switch_count());
}

namespace {

std::uint64_t network_chunk(const SwitchSettings& settings,
                            const SourceSpec& source, const DetectorSpec& det,
                            std::uint64_t trials, std::uint64_t chunk_seed) {
  Xoshiro256pp rng(chunk_seed);
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    bool all = true;
    for (std::size_t s = 0; s < settings.size(); ++s) {
      for (std::size_t r = 0; r < settings[s].size(); ++r) {
        const int control =
            settings[s][r] == SwitchState::Cross ? 1 : 0;
        const mc::TrialOutcome t = mc::simulate_trial(
            GateVariant::Modified, source, source, det, control, rng);
        all = all && t.heralded_useful;
      }
    }
    hits += all;
  }
  return hits;
}

}  // namespace

mc::Estimate simulate_network(const BenesNetwork& net,
                              const SwitchSettings& settings,
                              const SourceSpec& source,
                              const DetectorSpec& det, std::uint64_t trials,
                              std::uint64_t seed, unsigned workers) {
  if (trials == 0)
    throw std::invalid_argument("simulate_network: trials must be > 0");
  if (workers == 0)
    throw std::invalid_argument("simulate_network: workers must be > 0");
  if (settings.size() != net.columns.size())
    throw std::invalid_argument("simulate_network: settings shape mismatch");

  std::vector<std::future<std::uint64_t>> futures;
  futures.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = trials * w / workers;
    const std::uint64_t hi = trials * (w + 1) / workers;
    futures.push_back(std::async(std::launch::async, network_chunk,
                                 std::cref(settings), std::cref(source),
                                 std::cref(det), hi - lo, sub_seed(seed, w)));
  }
  std::uint64_t hits = 0;
  for (auto& f : futures) hits += f.get();

  const double v = static_cast<double>(hits) / static_cast<double>(trials);
  return {v, std::sqrt(v * (1.0 - v) / static_cast<double>(trials)), trials,
          seed};
}

}  // namespace benes
}  // namespace photonic
