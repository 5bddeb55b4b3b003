// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "photonic/analytics.hpp"

using namespace photonic;
using namespace photonic::analytics;

namespace {

// Independent comb for the fixed-photon-number original-gate rate: enumerate
// the binomially thinned herald-side counts (k1, k2) outright and weigh each
// detector's silence. Slower and structurally unlike the library's expanded
// form, so it can serve as an oracle for it.
double pmn_by_enumeration(int m, int n, double eta, double pd) {
  auto silent = [&](int k) {
    return k == 0 ? 1.0 - pd : std::pow(1.0 - eta, k);
  };
  auto binom = [](int k, int j) {
    double b = 1.0;
    for (int i = 1; i <= j; ++i) b = b * (k - i + 1) / i;
    return b;
  };
  double p = 0.0;
  for (int k1 = 0; k1 <= m; ++k1)
    for (int k2 = 0; k2 <= n; ++k2)
      p += binom(m, k1) * std::ldexp(1.0, -m) * binom(n, k2) *
           std::ldexp(1.0, -n) * silent(k1) * silent(k2);
  return p;
}

// Closed form of the Poisson-averaged original-gate rate: herald-side
// arrivals per source are Poisson(mu/2), so each detector is silent with
// probability (1-pd)e^{-mu/2} + e^{-eta mu/2} - e^{-mu/2}; subtract the
// all-vacuum triggers. An independent check on the library's series.
double poisson_original_closed(double mu1, double mu2, double eta, double pd) {
  auto v = [&](double mu) {
    return (1.0 - pd) * std::exp(-0.5 * mu) + std::exp(-0.5 * eta * mu) -
           std::exp(-0.5 * mu);
  };
  return v(mu1) * v(mu2) -
         (1.0 - pd) * (1.0 - pd) * std::exp(-(mu1 + mu2));
}

const std::vector<double> kEtaGrid = {0.0,  0.05, 0.1, 0.3, 0.5,
                                      0.65, 0.8,  0.9, 1.0};
const std::vector<double> kPdGrid = {0.0, 1e-6, 1e-4, 1e-3, 1e-2, 0.1};

}  // namespace

TEST_CASE("single-photon success rate: anchors and frozen values") {
  CHECK(p11(1.0, 0.0) == 0.25);
  CHECK(p11(0.1, 0.0) == doctest::Approx(0.9025).epsilon(1e-12));
  CHECK(p11(0.8, 0.01) == doctest::Approx(0.354025).epsilon(1e-12));
  CHECK(p11(0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(p11(1.2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(p11(0.5, -0.1), std::invalid_argument);
}

TEST_CASE("the approximation drops dark counts and nothing else") {
  for (double eta : kEtaGrid) {
    CHECK(p11_approx(eta) == p11(eta, 0.0));
    CHECK(p11_approx(eta) > p11(eta, 1e-3));  // pd only lowers the rate
  }
}

TEST_CASE("better detectors make the passive herald fire less, not more") {
  // The original gate heralds on silence, so raising eta strictly lowers
  // every success rate with at least one photon around...
  for (std::size_t i = 1; i < kEtaGrid.size(); ++i) {
    CHECK(p11(kEtaGrid[i], 0.001) < p11(kEtaGrid[i - 1], 0.001));
    CHECK(p22(kEtaGrid[i], 0.001) < p22(kEtaGrid[i - 1], 0.001));
  }
  // ...while the modified gate heralds on a detection, so eta helps it.
  for (std::size_t i = 1; i < kEtaGrid.size(); ++i) {
    CHECK(p_new(0.1, 0.1, kEtaGrid[i], 0.001) >
          p_new(0.1, 0.1, kEtaGrid[i - 1], 0.001));
  }
}

TEST_CASE("two-photon rate: frozen value and consistency with the family") {
  CHECK(p22(0.7, 0.01) == doctest::Approx(0.1764).epsilon(1e-12));
  CHECK(p22(1.0, 0.0) == doctest::Approx(0.0625).epsilon(1e-15));
  for (double eta : kEtaGrid)
    for (double pd : kPdGrid) {
      CHECK(p22(eta, pd) ==
            doctest::Approx(pmn_original(2, 2, eta, pd)).epsilon(1e-15));
      CHECK(p11(eta, pd) ==
            doctest::Approx(pmn_original(1, 1, eta, pd)).epsilon(1e-15));
    }
}

TEST_CASE("fixed-photon-number rate matches brute-force enumeration") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (double eta : {0.0, 0.35, 0.8, 1.0})
        for (double pd : {0.0, 1e-3, 0.05}) {
          CAPTURE(m);
          CAPTURE(n);
          CHECK(pmn_original(m, n, eta, pd) ==
                doctest::Approx(pmn_by_enumeration(m, n, eta, pd))
                    .epsilon(1e-14));
        }
  CHECK(pmn_original(2, 3, 0.8, 0.01) ==
        doctest::Approx(0.076773125).epsilon(1e-12));
  // All-vacuum trigger: herald fires iff neither detector dark-counts.
  CHECK(pmn_original(0, 0, 0.7, 0.01) ==
        doctest::Approx(0.9801).epsilon(1e-12));
  CHECK(pmn_original(0, 1, 0.7, 0.01) ==
        doctest::Approx(0.63855).epsilon(1e-12));
  CHECK_THROWS_AS(pmn_original(-1, 0, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("poisson-averaged original rate agrees with its closed form") {
  for (double mu1 : {0.05, 0.2, 1.0, 2.0})
    for (double mu2 : {0.1, 0.5, 1.5})
      for (double eta : {0.3, 0.8, 1.0})
        for (double pd : {0.0, 1e-3}) {
          CAPTURE(mu1);
          CAPTURE(mu2);
          CHECK(p_original_poisson(mu1, mu2, eta, pd) ==
                doctest::Approx(poisson_original_closed(mu1, mu2, eta, pd))
                    .epsilon(1e-12));
        }
  CHECK(p_original_poisson(0.2, 0.3, 0.8, 0.001) ==
        doctest::Approx(0.21181627455443125).epsilon(1e-12));
}

TEST_CASE("series truncation is checked, not silently accepted") {
  SeriesConfig tight;
  tight.n_max = 8;
  CHECK_THROWS_WITH_AS(p_original_poisson(2.0, 2.0, 0.8, 0.0, tight),
                       doctest::Contains("n_max"), std::invalid_argument);
  SeriesConfig enough;
  enough.n_max = 60;
  CHECK(p_original_poisson(2.0, 2.0, 0.8, 0.0, enough) ==
        doctest::Approx(poisson_original_closed(2.0, 2.0, 0.8, 0.0))
            .epsilon(1e-12));
  CHECK_THROWS_AS(p_original_poisson(0.0, 0.1, 0.8, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(p_original_poisson(0.1, -1.0, 0.8, 0.0),
                  std::invalid_argument);
}

TEST_CASE("modified-gate fixed-number rate and its excluded vacuum") {
  CHECK(pmn_modified(1, 1, 0.6, 0.001) ==
        doctest::Approx(0.15075).epsilon(1e-12));
  CHECK(pmn_modified(0, 1, 0.5, 0.01) ==
        doctest::Approx(0.255).epsilon(1e-12));
  CHECK(pmn_modified(1, 1, 1.0, 0.0) == doctest::Approx(0.25).epsilon(1e-15));
  // More photons around means leaking is more likely: rate falls toward pd.
  CHECK(pmn_modified(2, 2, 0.8, 0.001) < pmn_modified(1, 1, 0.8, 0.001));
  CHECK_THROWS_WITH_AS(pmn_modified(0, 0, 0.8, 0.001),
                       doctest::Contains("vacuum"), std::invalid_argument);
}

TEST_CASE("positive-herald poisson rate: anchors and approximation") {
  const double exact = std::exp(-0.1) - std::exp(-0.2);
  CHECK(p_new(0.1, 0.1, 1.0, 0.0) == doctest::Approx(exact).epsilon(1e-15));
  CHECK(p_new(0.1, 0.1, 1.0, 0.0) ==
        doctest::Approx(0.0861066649579777).epsilon(1e-12));
  CHECK(std::abs(p_new(0.1, 0.1, 1.0, 0.0) - 0.085) < 0.002);
  CHECK(p_new(0.2, 0.3, 0.8, 1e-4) ==
        doctest::Approx(0.13783821860871).epsilon(1e-12));

  // At pd = 0 and equal means the approximation is exact.
  for (double mu : {0.05, 0.1, 0.5, 1.0})
    for (double eta : {0.3, 0.7, 1.0})
      CHECK(p_new(mu, mu, eta, 0.0) ==
            doctest::Approx(p_new_approx(mu, eta)).epsilon(1e-15));

  CHECK_THROWS_AS(p_new(0.0, 0.1, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(p_new_approx(-0.1, 1.0), std::invalid_argument);
}

TEST_CASE("original-gate fidelity and its tradeoff identity") {
  CHECK(fidelity_original(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fidelity_original(0.5) ==
        doctest::Approx(4.0 / 9.0).epsilon(1e-15));
  // Success rate times fidelity is pinned at the ideal 1/4: whatever the
  // silent herald gains in rate it loses in output quality.
  for (double eta : kEtaGrid)
    CHECK(fidelity_original(eta) * p11_approx(eta) ==
          doctest::Approx(0.25).epsilon(1e-15));
  // Fidelity degrades as detectors get worse.
  for (std::size_t i = 1; i < kEtaGrid.size(); ++i)
    CHECK(fidelity_original(kEtaGrid[i]) > fidelity_original(kEtaGrid[i - 1]));
}

TEST_CASE("modified-gate fidelity for ideal and poisson sources") {
  CHECK(fidelity_modified(0.8, 0.0, IdealSingle{}) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fidelity_modified(0.6, 1e-5, IdealSingle{}) ==
        doctest::Approx(0.999950002499875).epsilon(1e-12));
  // A single-photon-number source of exactly one behaves like IdealSingle.
  CHECK(fidelity_modified(0.6, 1e-5, FixedNumber{1}) ==
        fidelity_modified(0.6, 1e-5, IdealSingle{}));
  CHECK(fidelity_modified(1.0, 0.0, PoissonSource{0.1}) ==
        doctest::Approx(0.023770829861937624).epsilon(1e-12));
  // Multiphoton contamination keeps poisson fidelity strictly below ideal.
  CHECK(fidelity_modified(0.9, 1e-4, PoissonSource{0.2}) <
        fidelity_modified(0.9, 1e-4, IdealSingle{}));

  CHECK_THROWS_AS(fidelity_modified(0.6, 0.0, FixedNumber{2}),
                  std::invalid_argument);
  // eta = pd = 0 never heralds; the conditional fidelity is undefined.
  CHECK_THROWS_WITH_AS(fidelity_modified(0.0, 0.0, IdealSingle{}),
                       doctest::Contains("zero"), std::invalid_argument);
  CHECK_THROWS_AS(fidelity_modified(0.6, 0.0, PoissonSource{-1.0}),
                  std::invalid_argument);
}
