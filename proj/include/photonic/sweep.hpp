// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "photonic/analytics.hpp"
#include "photonic/montecarlo.hpp"

namespace photonic {
namespace cli {

// The formula names the CLI accepts, mapped to analytics calls. A single
// registry keeps the `analytics` and `sweep` subcommands and the verify
// suite in agreement about names, parameter needs and Monte Carlo
// comparators.
//   p11, p11-approx, p22, pmn-original, pmn-modified  (photon-number rates)
//   p-original-poisson, p-new, p-new-approx           (Poisson-source rates)
//   fidelity-original, fidelity-modified
const std::vector<std::string>& formula_names();

struct FormulaParams {
  double eta = 1.0;
  double pd = 0.0;
  std::optional<double> mu1;  // Poisson mean, input 1 (or both for single-mu
  std::optional<double> mu2;  // formulas); absent selects ideal sources
  int m = 1;                  // fixed photon numbers for pmn-* formulas
  int n = 1;
  analytics::SeriesConfig series;
};

// Evaluates `formula` at `params`. Unknown names and missing mu values are
// reported by name.
double eval_formula(const std::string& formula, const FormulaParams& params);

// Monte Carlo comparator matching `formula` at `params` (same trial stream
// contract as mc::run_trials). Every formula has one.
mc::Estimate mc_estimate(const std::string& formula,
                         const FormulaParams& params, std::uint64_t trials,
                         std::uint64_t seed);

struct SweepConfig {
  std::string formula;
  std::vector<double> eta_grid{1.0};
  std::vector<double> pd_grid{0.0};
  std::vector<double> mu1_grid;  // empty = formula does not use mu / ideal
  std::vector<double> mu2_grid;
  bool lock_mu = false;          // iterate mu1/mu2 in lockstep (--mu)
  int m = 1;
  int n = 1;
  std::uint64_t trials = 0;      // 0 = analytic columns only
  std::uint64_t seed = 0;
  analytics::SeriesConfig series;
};

struct ResultRow {
  double eta = 1.0;
  double pd = 0.0;
  double mu1 = 0.0;  // 0 marks "not used by this formula" in the CSV
  double mu2 = 0.0;
  double analytic = 0.0;
  std::optional<mc::Estimate> mc;
  std::optional<double> z;
  std::optional<bool> pass;
};

// Grid iteration order is mu1 -> mu2 -> pd -> eta with eta innermost, so
// rows within one (mu, pd) block are eta-sorted. Row r's Monte Carlo run is
// seeded sub_seed(config.seed, r); identical config + seed reproduces every
// byte of the CSV.
std::vector<ResultRow> run_sweep(const SweepConfig& config);

// Shortest round-trip decimal rendering (std::to_chars); every numeric CSV
// field parses back to exactly the double that was written.
std::string format_double(double v);

// Header "eta,mu1,mu2,pd,analytic,mc,std_err,z,pass"; the four trailing
// fields are empty on analytic-only rows; "\n" line ends, no quoting needed.
void write_csv(std::ostream& os, const std::vector<ResultRow>& rows);

// ---- verification suite ------------------------------------------------

struct VerifyResult {
  std::string name;                      // formula[param=value,...]
  std::map<std::string, double> params;
  double analytic = 0.0;
  mc::Estimate mc;
  double z = 0.0;
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyResult> results;
  bool all_pass = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

// Cross-validates every formula against its Monte Carlo comparator on five
// parameter points each (50 comparisons at |z| <= 3). Point i runs with
// seed sub_seed(seed, 1000 + i). `analytic_offset` is a fault-injection
// hook for the test suite: it shifts every analytic value so the suite can
// prove the verification actually bites; the CLI always passes 0.
VerifyReport run_verify(std::uint64_t trials, std::uint64_t seed,
                        double analytic_offset = 0.0);

// JSON rendering of a verify report:
// {"meta": {"seed", "rng", "version", "trials"}, "results": [...]}.
std::string verify_report_json(const VerifyReport& report);

}  // namespace cli
}  // namespace photonic
