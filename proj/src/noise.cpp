// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#include "photonic/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace photonic {

namespace {

void check_unit(const char* name, double v) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

constexpr int kPoissonCap = 50;

}  // namespace

double no_click_probability(const DetectorSpec& det, int n) {
  check_unit("eta", det.eta);
  check_unit("pd", det.pd);
  if (n < 0)
    throw std::invalid_argument("no_click_probability: n must be >= 0");
  const double miss = std::pow(1.0 - det.eta, n);
  if (det.model == DetectorModel::IndependentDark) return (1.0 - det.pd) * miss;
  return n == 0 ? 1.0 - det.pd : miss;
}

int sample_photon_number(const SourceSpec& source, Xoshiro256pp& rng) {
  if (std::holds_alternative<IdealSingle>(source)) return 1;
  if (const auto* f = std::get_if<FixedNumber>(&source)) {
    if (f->n < 0)
      throw std::invalid_argument("FixedNumber source: n must be >= 0");
    return f->n;
  }
  const double mu = std::get<PoissonSource>(source).mu;
  if (!(mu > 0.0))
    throw std::invalid_argument("PoissonSource: mu must be > 0");
  const double u = rng.uniform01();
  double pmf = std::exp(-mu);
  double cdf = pmf;
  int k = 0;
  while (u >= cdf && k < kPoissonCap) {
    ++k;
    pmf *= mu / k;
    cdf += pmf;
  }
  return k;
}

bool sample_click(const DetectorSpec& det, int n, Xoshiro256pp& rng) {
  return rng.uniform01() < 1.0 - no_click_probability(det, n);
}

}  // namespace photonic
