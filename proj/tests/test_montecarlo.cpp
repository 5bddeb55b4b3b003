// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "photonic/analytics.hpp"
#include "photonic/montecarlo.hpp"

using namespace photonic;
using namespace photonic::mc;

namespace {

CompareReport check_against(double analytic, const Estimate& est) {
  const CompareReport r = compare(analytic, est);
  CAPTURE(analytic);
  CAPTURE(est.value);
  CAPTURE(r.z_score);
  CHECK(r.pass);
  return r;
}

}  // namespace

TEST_CASE("compare: z-scores, exact-agreement edge and NaN poisoning") {
  CHECK(compare(0.5, {0.5, 0.01, 100, 0}).z_score == 0.0);
  // Binary-exact boundary: 0.546875 = 0.5 + 3 * 0.015625, so z is exactly 3.
  CHECK(compare(0.5, {0.546875, 0.015625, 100, 0}).z_score == 3.0);
  CHECK(compare(0.5, {0.546875, 0.015625, 100, 0}).pass);  // boundary holds
  CHECK_FALSE(compare(0.5, {0.5475, 0.015625, 100, 0}).pass);  // just beyond
  CHECK(compare(0.5, {0.453125, 0.015625, 100, 0}).z_score == -3.0);

  // Degenerate estimator (std_err = 0): pass only on exact agreement.
  CHECK(compare(1.0, {1.0, 0.0, 10, 0}).pass);
  CHECK(compare(1.0, {1.0, 0.0, 10, 0}).z_score == 0.0);
  const CompareReport off = compare(1.0, {0.999, 0.0, 10, 0});
  CHECK_FALSE(off.pass);
  CHECK(std::isinf(off.z_score));

  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_FALSE(compare(0.5, {nan, nan, 0, 0}).pass);
}

TEST_CASE("trial streams are deterministic per seed") {
  const DetectorSpec det{0.7, 1e-3};
  Xoshiro256pp r1(5), r2(5), r3(6);
  bool same = true, diff = false;
  for (int i = 0; i < 200; ++i) {
    const TrialOutcome a = simulate_trial(GateVariant::Original,
                                          PoissonSource{0.5}, PoissonSource{0.3},
                                          det, 1, r1);
    const TrialOutcome b = simulate_trial(GateVariant::Original,
                                          PoissonSource{0.5}, PoissonSource{0.3},
                                          det, 1, r2);
    const TrialOutcome c = simulate_trial(GateVariant::Original,
                                          PoissonSource{0.5}, PoissonSource{0.3},
                                          det, 1, r3);
    same = same && a.photons_in_1 == b.photons_in_1 &&
           a.photons_in_2 == b.photons_in_2 && a.leaked == b.leaked &&
           a.herald.fired == b.herald.fired;
    diff = diff || a.photons_in_1 != c.photons_in_1 || a.leaked != c.leaked ||
           a.herald.fired != c.herald.fired;
  }
  CHECK(same);
  CHECK(diff);
}

TEST_CASE("trial bookkeeping: vacuum, usefulness and correctness flags") {
  Xoshiro256pp rng(9);
  const DetectorSpec perfect{1.0, 0.0};

  // Two guaranteed-empty sources: vacuum trigger, original herald fires
  // (nothing to click) but is not useful.
  const TrialOutcome vac = simulate_trial(
      GateVariant::Original, FixedNumber{0}, FixedNumber{0}, perfect, 0, rng);
  CHECK(vac.vacuum_input);
  CHECK(vac.herald.fired);
  CHECK_FALSE(vac.heralded_useful);
  CHECK_FALSE(vac.correct);

  // Ideal single photons with perfect detectors: heralded iff nothing
  // leaked, and then the trial is automatically correct.
  for (int i = 0; i < 500; ++i) {
    const TrialOutcome t = simulate_trial(
        GateVariant::Original, IdealSingle{}, IdealSingle{}, perfect, 1, rng);
    CHECK(t.photons_in_1 == 1);
    CHECK(t.herald.fired == (t.leaked == 0));
    CHECK(t.correct == t.heralded_useful);
  }

  // Modified gate with a blind detector can only herald via dark counts,
  // and only when at least one photon leaked (the window is empty then).
  const DetectorSpec dark{0.0, 1.0};
  for (int i = 0; i < 500; ++i) {
    const TrialOutcome t = simulate_trial(
        GateVariant::Modified, IdealSingle{}, IdealSingle{}, dark, 0, rng);
    CHECK(t.herald.fired == (t.leaked > 0));
  }
}

TEST_CASE("original-gate detector wiring follows the control bit") {
  // With control 1, input-1 escapees land on D_b. Force every photon to
  // leak (blind, dark-free detectors keep clicks quiet): counts must sit on
  // the swapped detector.
  Xoshiro256pp rng(21);
  const DetectorSpec blind{0.0, 0.0};
  for (int control : {0, 1}) {
    for (int i = 0; i < 50; ++i) {
      const TrialOutcome t =
          simulate_trial(GateVariant::Original, FixedNumber{3}, FixedNumber{0},
                         blind, control, rng);
      const int at_a = t.herald_counts.at("D_a");
      const int at_b = t.herald_counts.at("D_b");
      CHECK(at_a + at_b == t.leaked);
      CHECK((control == 1 ? at_a : at_b) == 0);
    }
  }
}

TEST_CASE("run_trials is reproducible and worker-split invariantly counted") {
  const DetectorSpec det{0.8, 1e-3};
  const McResult a = run_trials(GateVariant::Original, IdealSingle{},
                                IdealSingle{}, det, 1, 40000, 42);
  const McResult b = run_trials(GateVariant::Original, IdealSingle{},
                                IdealSingle{}, det, 1, 40000, 42);
  CHECK(a.herald_rate.value == b.herald_rate.value);
  CHECK(a.herald_rate.std_err == b.herald_rate.std_err);
  CHECK(a.fidelity.value == b.fidelity.value);

  // A different worker count reshuffles the streams; the estimate moves but
  // stays inside its own noise band.
  const McResult c = run_trials(GateVariant::Original, IdealSingle{},
                                IdealSingle{}, det, 1, 40000, 42, 1);
  const double p = analytics::p11(0.8, 1e-3);
  check_against(p, a.herald_rate);
  check_against(p, c.herald_rate);

  CHECK_THROWS_AS(run_trials(GateVariant::Original, IdealSingle{},
                             IdealSingle{}, det, 1, 0, 42),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_trials(GateVariant::Original, IdealSingle{},
                             IdealSingle{}, det, 1, 100, 42, 0),
                  std::invalid_argument);
}

TEST_CASE("uneven worker splits still account for every trial") {
  const DetectorSpec det{0.9, 0.0};
  const McResult r = run_trials(GateVariant::Modified, IdealSingle{},
                                IdealSingle{}, det, 1, 10, 42, 4);
  CHECK(r.herald_rate.trials == 10);
  const McResult again = run_trials(GateVariant::Modified, IdealSingle{},
                                    IdealSingle{}, det, 1, 10, 42, 4);
  CHECK(r.herald_rate.value == again.herald_rate.value);
}

TEST_CASE("perfect-detector run: rate exactly matched, fidelity exactly 1") {
  const DetectorSpec perfect{1.0, 0.0};
  const McResult r = run_trials(GateVariant::Original, IdealSingle{},
                                IdealSingle{}, perfect, 0, 200000, 42);
  check_against(0.25, r.herald_rate);
  // Every heralded trial is a genuine success here, so the fidelity
  // estimator collapses to exactly 1 with zero spread.
  CHECK(r.fidelity.value == 1.0);
  CHECK(r.fidelity.std_err == 0.0);
  CHECK(compare(1.0, r.fidelity).pass);
  CHECK(r.fidelity.trials > 0);
}

TEST_CASE("monte carlo reproduces the fixed-photon-number rates") {
  const std::uint64_t trials = 400000;
  check_against(analytics::p11(0.6, 1e-3),
                run_trials(GateVariant::Original, IdealSingle{}, IdealSingle{},
                           {0.6, 1e-3}, 1, trials, 42)
                    .herald_rate);
  check_against(analytics::p22(0.7, 0.01),
                run_trials(GateVariant::Original, FixedNumber{2},
                           FixedNumber{2}, {0.7, 0.01}, 0, trials, 43)
                    .herald_rate);
  check_against(analytics::pmn_original(3, 2, 0.8, 1e-4),
                run_trials(GateVariant::Original, FixedNumber{3},
                           FixedNumber{2}, {0.8, 1e-4}, 1, trials, 44)
                    .herald_rate);
  check_against(analytics::pmn_modified(2, 1, 0.75, 1e-3),
                run_trials(GateVariant::Modified, FixedNumber{2},
                           FixedNumber{1}, {0.75, 1e-3}, 1, trials, 45)
                    .herald_rate);
}

TEST_CASE("monte carlo reproduces the poisson-averaged rates") {
  const std::uint64_t trials = 400000;
  check_against(analytics::p_original_poisson(0.2, 0.2, 0.6, 1e-4),
                run_trials(GateVariant::Original, PoissonSource{0.2},
                           PoissonSource{0.2}, {0.6, 1e-4}, 1, trials, 46)
                    .herald_rate);
  check_against(analytics::p_new(0.1, 0.1, 1.0, 0.0),
                run_trials(GateVariant::Modified, PoissonSource{0.1},
                           PoissonSource{0.1}, {1.0, 0.0}, 1, trials, 47)
                    .herald_rate);
  // Degenerate corner: blind detector, certain dark counts. The positive
  // herald then fires exactly when a photon leaked, rate 1 - e^{-mu}.
  check_against(analytics::p_new(0.3, 0.3, 0.0, 1.0),
                run_trials(GateVariant::Modified, PoissonSource{0.3},
                           PoissonSource{0.3}, {0.0, 1.0}, 1, trials, 48)
                    .herald_rate);
}

TEST_CASE("monte carlo reproduces the heralded fidelities") {
  const std::uint64_t trials = 400000;
  const McResult orig = run_trials(GateVariant::Original, IdealSingle{},
                                   IdealSingle{}, {0.5, 0.0}, 1, trials, 49);
  check_against(analytics::fidelity_original(0.5), orig.fidelity);

  const McResult mod = run_trials(GateVariant::Modified, IdealSingle{},
                                  IdealSingle{}, {0.6, 1e-5}, 1, trials, 50);
  check_against(analytics::fidelity_modified(0.6, 1e-5, IdealSingle{}),
                mod.fidelity);

  const McResult poisson =
      run_trials(GateVariant::Modified, PoissonSource{0.1}, PoissonSource{0.1},
                 {1.0, 0.0}, 1, trials, 51);
  check_against(analytics::fidelity_modified(1.0, 0.0, PoissonSource{0.1}),
                poisson.fidelity);

  // No herald can ever fire here: fidelity must come back NaN and fail
  // any comparison rather than silently passing.
  const McResult never = run_trials(GateVariant::Modified, IdealSingle{},
                                    IdealSingle{}, {0.0, 0.0}, 1, 1000, 52);
  CHECK(std::isnan(never.fidelity.value));
  CHECK_FALSE(compare(1.0, never.fidelity).pass);
}
