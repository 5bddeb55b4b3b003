// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#include "photonic/analytics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace photonic {
namespace analytics {

namespace {

void check_unit(const char* name, double v) {
  if (!(v >= 0.0 && v <= 1.0))
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

void check_mu(const char* name, double v) {
  if (!(v > 0.0))
    throw std::invalid_argument(std::string(name) + " must be > 0");
}

void check_count(const char* name, int v) {
  if (v < 0)
    throw std::invalid_argument(std::string(name) + " must be >= 0");
}

// sum_{j=1..k} C(k,j) x^j, exact empty sum for k = 0. C(k,j) is integral and
// well below 2^53 for every k this library meets, so plain doubles are exact.
double thinned_miss_sum(int k, double x) {
  double sum = 0.0;
  double binom = 1.0;
  double xp = 1.0;
  for (int j = 1; j <= k; ++j) {
    binom = binom * (k - j + 1) / j;
    xp *= x;
    sum += binom * xp;
  }
  return sum;
}

double poisson_pmf0(double mu) { return std::exp(-mu); }

// Smallest n with Poisson(mu) tail mass beyond n at or below `bound`.
int required_nmax(double mu, double bound) {
  double pmf = poisson_pmf0(mu);
  double cdf = pmf;
  for (int n = 0; n < 4096; ++n) {
    if (1.0 - cdf <= bound) return n;
    pmf *= mu / (n + 1);
    cdf += pmf;
  }
  return 4096;
}

}  // namespace

double p11(double eta, double pd) {
  check_unit("eta", eta);
  check_unit("pd", pd);
  const double r = 2.0 - eta - pd;
  return 0.25 * r * r;
}

double p11_approx(double eta) {
  check_unit("eta", eta);
  const double r = 2.0 - eta;
  return 0.25 * r * r;
}

double p22(double eta, double pd) {
  check_unit("eta", eta);
  check_unit("pd", pd);
  const double x = 1.0 - eta;
  const double d = 1.0 - pd;
  return (d * d + 4.0 * d * x + 2.0 * d * x * x + 4.0 * x * x +
          4.0 * x * x * x + x * x * x * x) /
         16.0;
}

double pmn_original(int m, int n, double eta, double pd) {
  check_count("m", m);
  check_count("n", n);
  check_unit("eta", eta);
  check_unit("pd", pd);
  const double d = 1.0 - pd;
  const double sm = thinned_miss_sum(m, 1.0 - eta);
  const double sn = thinned_miss_sum(n, 1.0 - eta);
  return std::ldexp(d * d + d * sm + d * sn + sm * sn, -(m + n));
}

double p_original_poisson(double mu1, double mu2, double eta, double pd,
                          const SeriesConfig& cfg) {
  check_mu("mu1", mu1);
  check_mu("mu2", mu2);
  check_unit("eta", eta);
  check_unit("pd", pd);
  for (double mu : {mu1, mu2}) {
    const int need = required_nmax(mu, cfg.tail_bound);
    if (need > cfg.n_max)
      throw std::invalid_argument(
          "p_original_poisson: truncation bound unsatisfiable at n_max = " +
          std::to_string(cfg.n_max) + "; this mu needs n_max >= " +
          std::to_string(need));
  }
  double sum = 0.0;
  double pm = poisson_pmf0(mu1);
  for (int m = 0; m <= cfg.n_max; ++m) {
    double pn = poisson_pmf0(mu2);
    for (int n = 0; n <= cfg.n_max; ++n) {
      sum += pmn_original(m, n, eta, pd) * pm * pn;
      pn *= mu2 / (n + 1);
    }
    pm *= mu1 / (m + 1);
  }
  const double d = 1.0 - pd;
  return sum - d * d * std::exp(-(mu1 + mu2));
}

double pmn_modified(int m, int n, double eta, double pd) {
  check_count("m", m);
  check_count("n", n);
  check_unit("eta", eta);
  check_unit("pd", pd);
  if (m == 0 && n == 0)
    throw std::invalid_argument(
        "pmn_modified: (0, 0) is the excluded vacuum trigger");
  const double keep = std::ldexp(1.0, -(m + n));
  return keep * eta + (1.0 - keep) * pd;
}

double p_new(double mu1, double mu2, double eta, double pd) {
  check_mu("mu1", mu1);
  check_mu("mu2", mu2);
  check_unit("eta", eta);
  check_unit("pd", pd);
  const double mu = mu1 + mu2;
  return (eta - pd) * std::exp(-0.5 * mu) + pd - eta * std::exp(-mu);
}

double p_new_approx(double mu, double eta) {
  check_mu("mu", mu);
  check_unit("eta", eta);
  return eta * (std::exp(-mu) - std::exp(-2.0 * mu));
}

double fidelity_original(double eta) {
  check_unit("eta", eta);
  const double r = 2.0 - eta;
  return 1.0 / (r * r);
}

double fidelity_modified(double eta, double pd, const SourceSpec& source) {
  check_unit("eta", eta);
  check_unit("pd", pd);
  double num, den;
  if (std::holds_alternative<IdealSingle>(source) ||
      (std::holds_alternative<FixedNumber>(source) &&
       std::get<FixedNumber>(source).n == 1)) {
    num = 0.25 * eta;
    den = 0.25 * eta + 0.75 * pd;
  } else if (const auto* p = std::get_if<PoissonSource>(&source)) {
    check_mu("mu", p->mu);
    const double p1 = p->mu * std::exp(-p->mu);
    num = p1 * p1 * 0.25 * eta;
    den = p_new(p->mu, p->mu, eta, pd);
  } else {
    throw std::invalid_argument(
        "fidelity_modified: source must be ideal single-photon or Poisson");
  }
  if (!(den > 0.0))
    throw std::invalid_argument(
        "fidelity_modified: herald probability is zero");
  return num / den;
}

}  // namespace analytics
}  // namespace photonic
