// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "photonic/fredkin.hpp"
#include "photonic/noise.hpp"
#include "photonic/rng.hpp"

namespace photonic {
namespace mc {

// One sampled gate shot. Per-photon routing uses the structural fact --
// verified against the amplitude model by the test suite -- that every
// input photon of either circuit reaches the herald side with probability
// exactly 1/2, independently of the input qubits and of the control bit.
//
// The draw order per trial is fixed (part of the reproducibility contract):
// photon number of input 1, photon number of input 2, one herald-side
// Bernoulli per photon of input 1 then of input 2, then detector clicks
// (D_a, D_b for the original gate; D_c for the modified one).
struct TrialOutcome {
  int photons_in_1 = 0;           // photons delivered to input a1
  int photons_in_2 = 0;           // photons delivered to input a2
  int leaked = 0;                 // photons that ended on the herald side
  std::map<std::string, int> herald_counts;  // photons seen per detector
  HeraldEvent herald;             // clicks and the raw herald verdict
  bool vacuum_input = false;      // both sources delivered nothing
  bool heralded_useful = false;   // herald fired on a non-vacuum trigger
  bool correct = false;           // heralded_useful, one photon per input,
                                  // and nothing leaked
};

// Frequency estimate with its binomial standard error
// sqrt(v (1-v) / trials) and the provenance needed to replay it.
struct Estimate {
  double value = 0.0;
  double std_err = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

// Raw counts of one worker's chunk; summing these over chunks in any order
// reproduces the sequential reference result exactly (integer addition).
struct TrialCounters {
  std::uint64_t trials = 0;
  std::uint64_t useful_heralds = 0;
  std::uint64_t corrects = 0;
};

struct McResult {
  Estimate herald_rate;  // P(herald fired, at least one source photon)
  Estimate fidelity;     // P(correct | counted herald); NaN if none counted
};

struct CompareReport {
  double z_score = 0.0;
  bool pass = false;
};

TrialOutcome simulate_trial(GateVariant variant, const SourceSpec& src1,
                            const SourceSpec& src2, const DetectorSpec& det,
                            int control_bit, Xoshiro256pp& rng);

// Runs `trials` shots on one rng stream seeded with `chunk_seed`.
TrialCounters run_chunk(GateVariant variant, const SourceSpec& src1,
                        const SourceSpec& src2, const DetectorSpec& det,
                        int control_bit, std::uint64_t trials,
                        std::uint64_t chunk_seed);

// Splits the trials over `workers` chunks -- worker w owns trials
// [w*T/W, (w+1)*T/W) on the stream seeded sub_seed(seed, w) -- and runs the
// chunks concurrently. The result is bit-identical to running the same
// chunks back to back on one thread, and to any rerun with the same
// (seed, parameters, trials, workers).
//
// The herald rate estimates the vacuum-excluded herald probability (the
// quantity the closed forms in analytics give); with sources that cannot
// go dark the exclusion never triggers.
McResult run_trials(GateVariant variant, const SourceSpec& src1,
                    const SourceSpec& src2, const DetectorSpec& det,
                    int control_bit, std::uint64_t trials, std::uint64_t seed,
                    unsigned workers = 4);

// z = (mc - analytic) / std_err; passes at |z| <= 3. A zero std_err passes
// only on exact agreement (otherwise z is reported as +-inf).
CompareReport compare(double analytic, const Estimate& mc);

}  // namespace mc
}  // namespace photonic
