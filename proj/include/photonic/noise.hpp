// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <variant>

#include "photonic/rng.hpp"

namespace photonic {

// How dark counts combine with detection on occupied windows.
//   DarkOnEmpty     - no_click(0) = 1 - pd, no_click(n>=1) = (1-eta)^n.
//                     Dark counts only matter for empty windows; this is the
//                     model every closed form in analytics assumes.
//   IndependentDark - no_click(n) = (1-pd) * (1-eta)^n. Dark counts fire
//                     independently of photon detection. Offered for
//                     sensitivity studies; nothing downstream depends on it.
enum class DetectorModel { DarkOnEmpty, IndependentDark };

// Threshold single-photon detector: efficiency eta, dark count probability
// pd per trial window. No photon-number resolution.
struct DetectorSpec {
  double eta = 1.0;
  double pd = 0.0;
  DetectorModel model = DetectorModel::DarkOnEmpty;
};

// Photon sources, per trigger:
//   IdealSingle  - exactly one photon.
//   PoissonSource- n ~ Poisson(mu); heralded-spdc / weak-coherent regime.
//   FixedNumber  - exactly n photons; a test/oracle source so the fixed
//                  photon-number success formulas have a trial-level
//                  comparator (IdealSingle == FixedNumber{1}).
struct IdealSingle {};
struct PoissonSource {
  double mu;
};
struct FixedNumber {
  int n;
};
using SourceSpec = std::variant<IdealSingle, PoissonSource, FixedNumber>;

// Probability that the detector stays silent given n photons arrived.
double no_click_probability(const DetectorSpec& det, int n);

// Draws the photon number for one trigger. Poisson sampling is by inverse
// CDF search, truncated at 50 (the residual mass is far below every
// tolerance in this library for the mu <= 2 domain).
int sample_photon_number(const SourceSpec& source, Xoshiro256pp& rng);

// Draws a click given n photons in the window.
bool sample_click(const DetectorSpec& det, int n, Xoshiro256pp& rng);

}  // namespace photonic
