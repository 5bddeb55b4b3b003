// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "photonic/noise.hpp"

namespace photonic {
namespace analytics {

// Truncation of the Poisson-weighted success-rate series. Photon numbers
// above n_max are dropped; the dropped Poisson mass must stay below
// tail_bound per source or the evaluation refuses to run (reporting the
// n_max that would suffice). Defaults hold for mu <= 2.
struct SeriesConfig {
  int n_max = 30;
  double tail_bound = 1e-12;
};

// All rates below are probabilities per trigger of the gate's herald
// condition; "original" rates condition on both herald detectors staying
// silent, "modified" rates on the auxiliary detector firing. Every one of
// them excludes the empty trigger (no source photon at all), which for the
// Poisson-source rates shows up as the vacuum subtraction term. m and n are
// the exact photon numbers entering the two input ports.

// Both sources deliver exactly one photon:
//   p11 = (2 - eta - pd)^2 / 4.
double p11(double eta, double pd);

// p11 in the negligible-dark-count limit: (2 - eta)^2 / 4.
double p11_approx(double eta);

// Both sources deliver exactly two photons; expanded form of pmn(2,2).
double p22(double eta, double pd);

// General fixed photon numbers m, n >= 0 through the original gate. Each of
// the m+n photons independently reaches the herald side with probability
// 1/2; detectors see binomially thinned counts:
//   pmn = 2^-(m+n) * [ d^2 + d*S(m) + d*S(n) + S(m)*S(n) ],
//   d = 1 - pd,  S(k) = sum_{j=1..k} C(k,j) (1-eta)^j  (empty sum = 0).
double pmn_original(int m, int n, double eta, double pd);

// Poisson-averaged original-gate rate: sum over m,n of pmn_original times
// Poisson(m; mu1) Poisson(n; mu2), minus the vacuum term (1-pd)^2 e^-(mu1+mu2).
// Series evaluation under `cfg`.
double p_original_poisson(double mu1, double mu2, double eta, double pd,
                          const SeriesConfig& cfg = {});

// Fixed photon numbers through the modified gate, (m, n) != (0, 0):
//   pmn = 2^-(m+n) * eta + (1 - 2^-(m+n)) * pd
// (all photons stay on the output side -> auxiliary photon seen with
// efficiency eta; otherwise only a dark count can fire).
double pmn_modified(int m, int n, double eta, double pd);

// Poisson-averaged modified-gate rate, in closed form:
//   p_new = (eta - pd) e^-(mu1+mu2)/2 + pd - eta e^-(mu1+mu2).
double p_new(double mu1, double mu2, double eta, double pd);

// p_new with mu1 = mu2 = mu and negligible dark counts:
//   eta (e^-mu - e^-2mu).
double p_new_approx(double mu, double eta);

// Heralded-output fidelity of the original gate with ideal single-photon
// sources and pd = 0: the herald fires on detector blindness as well as on
// true success, leaving F = 1 / (2 - eta)^2. Well-defined for eta = 0 too
// (herald always fires, true success is 1/4).
double fidelity_original(double eta);

// Heralded-output fidelity of the modified gate. Ideal single-photon
// sources give (eta/4) / (eta/4 + 3 pd / 4); a Poisson source (applied to
// both inputs) weighs the single-photon success by Poisson(1; mu)^2 against
// the full herald rate p_new(mu, mu, eta, pd).
double fidelity_modified(double eta, double pd, const SourceSpec& source);

}  // namespace analytics
}  // namespace photonic
