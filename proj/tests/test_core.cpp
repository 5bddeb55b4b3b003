// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "photonic/core.hpp"

using namespace photonic;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("make_qubit_state places amplitudes at the requested key") {
  const SinglePhotonState s =
      make_qubit_state("a1", {Amplitude{0.6, 0.0}, Amplitude{0.0, 0.8}}, 2);
  CHECK(s.amps.size() == 2);
  CHECK(s.amplitude({"a1", Polarization::H, 2}) == Amplitude{0.6, 0.0});
  CHECK(s.amplitude({"a1", Polarization::V, 2}) == Amplitude{0.0, 0.8});
  CHECK(s.norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.support() == std::set<ModeId>{"a1"});
}

TEST_CASE("make_qubit_state drops exact-zero components") {
  const SinglePhotonState s = make_qubit_state("x", {1.0, 0.0});
  CHECK(s.amps.size() == 1);
  CHECK(s.amplitude({"x", Polarization::V, 0}) == Amplitude{});
}

TEST_CASE("make_qubit_state renormalizes tiny drift and rejects real drift") {
  // |h|^2+|v|^2 = 1 + ~3e-10: inside the 1e-9 gate, comes out exact.
  const double h = kInvSqrt2 + 1e-10;
  const SinglePhotonState s = make_qubit_state("m", {h, kInvSqrt2});
  CHECK(s.norm_sq() == doctest::Approx(1.0).epsilon(1e-15));

  CHECK_THROWS_AS(make_qubit_state("m", {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_WITH_AS(make_qubit_state("m", {0.0, 0.0}),
                       doctest::Contains("not normalized"),
                       std::invalid_argument);
}

TEST_CASE("marginal_mode_probability sums the named modes only") {
  SinglePhotonState s;
  s.amps[{"p", Polarization::H, 0}] = kInvSqrt2;
  s.amps[{"q", Polarization::V, 3}] = Amplitude{0.0, 0.5};
  s.amps[{"r", Polarization::H, 1}] = 0.5;
  CHECK(marginal_mode_probability(s, {"p"}) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(marginal_mode_probability(s, {"q", "r"}) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(marginal_mode_probability(s, {"absent"}) == 0.0);
  CHECK_THROWS_AS(marginal_mode_probability(s, {}), std::invalid_argument);
}

TEST_CASE("checked marginal rejects modes outside the circuit") {
  SinglePhotonState s = make_qubit_state("a", {1.0, 0.0});
  const std::set<ModeId> known{"a", "b"};
  CHECK(marginal_mode_probability(s, {"b"}, known) == 0.0);
  CHECK_THROWS_WITH_AS(marginal_mode_probability(s, {"typo"}, known),
                       doctest::Contains("unknown mode 'typo'"),
                       std::invalid_argument);
}

TEST_CASE("herald_count_distribution is the exact Poisson-binomial") {
  PhotonEnsemble e;
  CHECK(herald_count_distribution(e, {"h"}) == std::vector<double>{1.0});

  // One photon split 50/50 across h and o.
  SinglePhotonState half;
  half.amps[{"h", Polarization::H, 0}] = kInvSqrt2;
  half.amps[{"o", Polarization::V, 0}] = kInvSqrt2;
  e.photons.push_back(half);
  auto d1 = herald_count_distribution(e, {"h"});
  REQUIRE(d1.size() == 2);
  CHECK(d1[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d1[1] == doctest::Approx(0.5).epsilon(1e-14));

  // Second photon with herald weight 0.2: counts follow the two-Bernoulli
  // convolution {0.5*0.8, 0.5*0.8+0.5*0.2, 0.5*0.2} = {0.4, 0.5, 0.1}.
  SinglePhotonState skew;
  skew.amps[{"h", Polarization::H, 0}] = std::sqrt(0.2);
  skew.amps[{"o", Polarization::H, 0}] = std::sqrt(0.8);
  e.photons.push_back(skew);
  auto d2 = herald_count_distribution(e, {"h"});
  REQUIRE(d2.size() == 3);
  CHECK(d2[0] == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(d2[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d2[2] == doctest::Approx(0.1).epsilon(1e-14));
  double sum = 0.0;
  for (double p : d2) sum += p;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("basis keys order by mode, then polarization, then bin") {
  const BasisKey a{"a", Polarization::H, 5};
  const BasisKey b{"a", Polarization::V, 0};
  const BasisKey c{"b", Polarization::H, -1};
  CHECK(a < b);
  CHECK(b < c);
  CHECK(a == BasisKey{"a", Polarization::H, 5});
}
