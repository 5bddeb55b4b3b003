// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#include "photonic/montecarlo.hpp"

#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>
#include <vector>

namespace photonic {
namespace mc {

TrialOutcome simulate_trial(GateVariant variant, const SourceSpec& src1,
                            const SourceSpec& src2, const DetectorSpec& det,
                            int control_bit, Xoshiro256pp& rng) {
  if (control_bit != 0 && control_bit != 1)
    throw std::invalid_argument("simulate_trial: control bit must be 0 or 1");

  TrialOutcome t;
  t.photons_in_1 = sample_photon_number(src1, rng);
  t.photons_in_2 = sample_photon_number(src2, rng);
  t.vacuum_input = (t.photons_in_1 + t.photons_in_2 == 0);

  int leak1 = 0, leak2 = 0;
  for (int i = 0; i < t.photons_in_1; ++i) leak1 += rng.bernoulli(0.5);
  for (int i = 0; i < t.photons_in_2; ++i) leak2 += rng.bernoulli(0.5);
  t.leaked = leak1 + leak2;

  if (variant == GateVariant::Original) {
    // With control 1 the gate swaps sides, so input-1 escapees surface on
    // b2' (detector D_b) and input-2 escapees on b1' (D_a); control 0 keeps
    // each input with its own herald rail. The counts are exchangeable, but
    // the wiring is kept faithful anyway.
    const int count_a = control_bit ? leak2 : leak1;
    const int count_b = control_bit ? leak1 : leak2;
    t.herald_counts = {{"D_a", count_a}, {"D_b", count_b}};
    t.herald.clicks = {{"D_a", sample_click(det, count_a, rng)},
                       {"D_b", sample_click(det, count_b, rng)}};
  } else {
    // Any escapee flips the auxiliary photon away from D_c; only a fully
    // clean pass leaves it there to be detected with efficiency eta.
    const int at_dc = (t.leaked == 0) ? 1 : 0;
    t.herald_counts = {{"D_c", at_dc}};
    t.herald.clicks = {{"D_c", sample_click(det, at_dc, rng)}};
  }
  t.herald.fired = herald_rule(variant, t.herald.clicks);
  t.heralded_useful = t.herald.fired && !t.vacuum_input;
  t.correct = t.heralded_useful && t.photons_in_1 == 1 &&
              t.photons_in_2 == 1 && t.leaked == 0;
  return t;
}

TrialCounters run_chunk(GateVariant variant, const SourceSpec& src1,
                        const SourceSpec& src2, const DetectorSpec& det,
                        int control_bit, std::uint64_t trials,
                        std::uint64_t chunk_seed) {
  Xoshiro256pp rng(chunk_seed);
  TrialCounters c;
  c.trials = trials;
  for (std::uint64_t i = 0; i < trials; ++i) {
    const TrialOutcome t =
        simulate_trial(variant, src1, src2, det, control_bit, rng);
    c.useful_heralds += t.heralded_useful;
    c.corrects += t.correct;
  }
  return c;
}

McResult run_trials(GateVariant variant, const SourceSpec& src1,
                    const SourceSpec& src2, const DetectorSpec& det,
                    int control_bit, std::uint64_t trials, std::uint64_t seed,
                    unsigned workers) {
  if (trials == 0) throw std::invalid_argument("run_trials: trials must be > 0");
  if (workers == 0)
    throw std::invalid_argument("run_trials: workers must be > 0");

  std::vector<std::future<TrialCounters>> futures;
  futures.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = trials * w / workers;
    const std::uint64_t hi = trials * (w + 1) / workers;
    futures.push_back(std::async(std::launch::async, run_chunk, variant, src1,
                                 src2, det, control_bit, hi - lo,
                                 sub_seed(seed, w)));
  }
  TrialCounters total;
  for (auto& f : futures) {
    const TrialCounters c = f.get();
    total.trials += c.trials;
    total.useful_heralds += c.useful_heralds;
    total.corrects += c.corrects;
  }

  McResult r;
  const double h =
      static_cast<double>(total.useful_heralds) / static_cast<double>(trials);
  r.herald_rate = {h, std::sqrt(h * (1.0 - h) / static_cast<double>(trials)),
                   trials, seed};
  if (total.useful_heralds > 0) {
    const double f = static_cast<double>(total.corrects) /
                     static_cast<double>(total.useful_heralds);
    r.fidelity = {f,
                  std::sqrt(f * (1.0 - f) /
                            static_cast<double>(total.useful_heralds)),
                  total.useful_heralds, seed};
  } else {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    r.fidelity = {nan, nan, 0, seed};
  }
  return r;
}

CompareReport compare(double analytic, const Estimate& est) {
  CompareReport r;
  if (est.std_err > 0.0) {
    r.z_score = (est.value - analytic) / est.std_err;
  } else if (est.value == analytic) {
    r.z_score = 0.0;
  } else {
    r.z_score = std::copysign(std::numeric_limits<double>::infinity(),
                              est.value - analytic);
  }
  r.pass = std::abs(r.z_score) <= 3.0;  // NaN compares false -> fail
  return r;
}

}  // namespace mc
}  // namespace photonic
