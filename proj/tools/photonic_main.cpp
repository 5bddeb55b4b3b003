// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
//
// photonic -- heralded-Fredkin-gate rate calculator, sweep runner,
// Monte Carlo verifier and Benes-network planner.
//
// Exit codes: 0 success, 1 usage/configuration error, 2 verification failure.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "photonic/analytics.hpp"
#include "photonic/benes.hpp"
#include "photonic/sweep.hpp"
#include "photonic/version.hpp"

namespace {

using namespace photonic;

constexpr std::uint64_t kDefaultSeed = 42;

// Grid spec: a single value "0.7", a comma list "0.05,0.1,0.2", or an
// inclusive range "start:stop:step".
std::vector<double> parse_grid(const std::string& spec, const char* flag) {
  auto fail = [&](const std::string& why) -> std::vector<double> {
    throw std::invalid_argument(std::string(flag) + ": " + why + " ('" +
                                spec + "')");
  };
  auto to_num = [&](const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      fail("not a number");
    }
    if (pos != s.size()) fail("not a number");
    return v;
  };

  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) fail("range needs start:stop:step");
    const double a = to_num(parts[0]), b = to_num(parts[1]),
                 step = to_num(parts[2]);
    if (!(step > 0.0)) fail("step must be > 0");
    if (b < a) fail("stop must be >= start");
    std::vector<double> grid;
    const int count = static_cast<int>(std::floor((b - a) / step + 1e-9));
    for (int i = 0; i <= count; ++i) grid.push_back(a + i * step);
    // Snap the endpoint so inclusive ranges land exactly on `stop`.
    if (!grid.empty() && std::abs(grid.back() - b) < 1e-9) grid.back() = b;
    return grid;
  }

  std::vector<double> grid;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) grid.push_back(to_num(item));
  if (grid.empty()) fail("empty grid");
  return grid;
}

std::vector<int> parse_perm(const std::string& spec) {
  std::vector<int> perm;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      perm.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("--perm: not an integer list ('" + spec +
                                  "')");
    }
  }
  return perm;
}

nlohmann::json params_json(const cli::FormulaParams& p, bool with_mn) {
  nlohmann::json j{{"eta", p.eta}, {"pd", p.pd}};
  if (p.mu1) j["mu1"] = *p.mu1;
  if (p.mu2) j["mu2"] = *p.mu2;
  if (with_mn) {
    j["m"] = p.m;
    j["n"] = p.n;
  }
  return j;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os)
    throw std::invalid_argument("cannot open output file '" + path + "'");
  return os;
}

int cmd_analytics(const std::string& formula, const cli::FormulaParams& p,
                  bool as_json, const std::string& out_path) {
  const double value = cli::eval_formula(formula, p);
  std::printf("%.12g\n", value);
  nlohmann::json j{{"formula", formula},
                   {"params", params_json(p, formula.rfind("pmn", 0) == 0)},
                   {"value", value},
                   {"meta", {{"version", kVersion}}}};
  if (as_json) std::cout << j.dump(2) << '\n';
  if (!out_path.empty()) open_out(out_path) << j.dump(2) << '\n';
  return 0;
}

int cmd_sweep(const cli::SweepConfig& config, const std::string& out_path) {
  const auto rows = cli::run_sweep(config);
  auto os = open_out(out_path);
  cli::write_csv(os, rows);
  if (!os) throw std::invalid_argument("failed writing '" + out_path + "'");
  std::cout << "wrote " << rows.size() << " rows to " << out_path << '\n';
  if (config.trials > 0)
    for (const auto& r : rows)
      if (!r.pass.value_or(true)) return 2;
  return 0;
}

int cmd_verify(std::uint64_t trials, std::uint64_t seed, double offset,
               const std::string& out_path) {
  const cli::VerifyReport report = cli::run_verify(trials, seed, offset);
  for (const auto& r : report.results)
    std::printf("%-4s %-55s analytic=%-12.6g mc=%-12.6g z=%+.2f\n",
                r.pass ? "ok" : "FAIL", r.name.c_str(), r.analytic,
                r.mc.value, r.z);
  std::size_t passed = 0;
  for (const auto& r : report.results) passed += r.pass;
  std::printf("verify: %zu/%zu comparisons passed (trials=%llu seed=%llu)\n",
              passed, report.results.size(),
              static_cast<unsigned long long>(trials),
              static_cast<unsigned long long>(seed));
  if (!out_path.empty())
    open_out(out_path) << cli::verify_report_json(report) << '\n';
  return report.all_pass ? 0 : 2;
}

int cmd_benes(int ports, const std::string& perm_spec,
              std::optional<double> mu, double eta, double pd,
              std::uint64_t trials, std::uint64_t seed,
              const std::string& out_path) {
  const benes::BenesNetwork net = benes::build_benes(ports);
  std::vector<int> perm(ports);
  for (int i = 0; i < ports; ++i) perm[i] = i;
  if (!perm_spec.empty()) perm = parse_perm(perm_spec);
  const benes::SwitchSettings settings = benes::route(net, perm);
  const std::vector<int> realized = benes::apply_settings(net, settings);
  if (realized != perm)
    throw std::logic_error("benes: routed settings failed verification");

  const DetectorSpec det{eta, pd, DetectorModel::DarkOnEmpty};
  const double p_gate = mu ? analytics::p_new(*mu, *mu, eta, pd)
                           : analytics::pmn_modified(1, 1, eta, pd);
  const double p_success = benes::network_success_probability(net, p_gate);

  std::printf("ports=%d stages=%zu switches=%d\n", net.ports,
              net.columns.size(), net.switch_count());
  for (std::size_t s = 0; s < settings.size(); ++s) {
    std::printf("col%zu:", s);
    for (const auto& st : settings[s])
      std::printf(" %s", st == benes::SwitchState::Cross ? "Cross" : "Through");
    std::printf("\n");
  }
  std::printf("p_gate=%s\n", cli::format_double(p_gate).c_str());
  std::printf("p_success=%s\n", cli::format_double(p_success).c_str());

  nlohmann::json j{{"ports", net.ports},
                   {"switches", net.switch_count()},
                   {"perm", perm},
                   {"p_gate", p_gate},
                   {"p_success", p_success},
                   {"meta",
                    {{"seed", seed},
                     {"rng", kRngName},
                     {"version", kVersion}}}};
  j["settings"] = nlohmann::json::array();
  for (const auto& col : settings) {
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& st : col)
      jc.push_back(st == benes::SwitchState::Cross ? "Cross" : "Through");
    j["settings"].push_back(jc);
  }

  int rc = 0;
  if (trials > 0) {
    const SourceSpec src =
        mu ? SourceSpec{PoissonSource{*mu}} : SourceSpec{IdealSingle{}};
    const mc::Estimate est =
        benes::simulate_network(net, settings, src, det, trials, seed);
    const mc::CompareReport cr = mc::compare(p_success, est);
    std::printf("mc=%s std_err=%s z=%+.2f %s\n",
                cli::format_double(est.value).c_str(),
                cli::format_double(est.std_err).c_str(), cr.z_score,
                cr.pass ? "ok" : "FAIL");
    j["mc"] = {{"value", est.value},
               {"std_err", est.std_err},
               {"z", cr.z_score},
               {"pass", cr.pass}};
    if (!cr.pass) rc = 2;
  }
  if (!out_path.empty()) open_out(out_path) << j.dump(2) << '\n';
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heralded photonic Fredkin gate rates, sweeps and networks"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  const auto prob01 = CLI::Range(0.0, 1.0);
  const auto mu_range = CLI::Range(0.0, 2.0);  // 0 itself is rejected deeper

  // analytics ------------------------------------------------------------
  auto* a = app.add_subcommand("analytics",
                               "evaluate one closed-form rate or fidelity");
  std::string a_formula;
  cli::FormulaParams a_params;
  double a_mu1 = 0.0, a_mu2 = 0.0;
  bool a_json = false;
  std::string a_out;
  a->add_option("formula", a_formula, "one of: " + [] {
     std::string s;
     for (const auto& n : cli::formula_names()) s += n + " ";
     return s;
   }())
      ->required()
      ->check(CLI::IsMember(cli::formula_names()));
  a->add_option("--eta", a_params.eta, "detector efficiency")->check(prob01);
  a->add_option("--pd", a_params.pd, "dark count probability")->check(prob01);
  auto* a_mu1_opt =
      a->add_option("--mu1", a_mu1, "Poisson mean, input 1")->check(mu_range);
  auto* a_mu2_opt =
      a->add_option("--mu2", a_mu2, "Poisson mean, input 2")->check(mu_range);
  a->add_option("--m", a_params.m, "photon number, input 1")
      ->check(CLI::Range(0, 30));
  a->add_option("--n", a_params.n, "photon number, input 2")
      ->check(CLI::Range(0, 30));
  a->add_flag("--json", a_json, "also print a JSON object");
  a->add_option("--out", a_out, "write the JSON object to this file");

  // sweep ------------------------------------------------------------------
  auto* s = app.add_subcommand("sweep", "evaluate a formula over a grid, "
                                        "optionally cross-checked by Monte "
                                        "Carlo, and write a CSV");
  std::string s_formula, s_eta = "1", s_pd = "0", s_mu1, s_mu2, s_mu, s_out;
  cli::SweepConfig s_config;
  s->add_option("--formula", s_formula)
      ->required()
      ->check(CLI::IsMember(cli::formula_names()));
  s->add_option("--grid-eta,--eta", s_eta,
                "eta grid: value, list, or start:stop:step");
  s->add_option("--grid-pd,--pd", s_pd, "pd grid");
  auto* s_mu1_opt = s->add_option("--grid-mu1,--mu1", s_mu1, "mu1 grid");
  auto* s_mu2_opt = s->add_option("--grid-mu2,--mu2", s_mu2, "mu2 grid");
  auto* s_mu_opt =
      s->add_option("--mu", s_mu, "shared mu grid (locks mu1 = mu2)");
  s->add_option("--m", s_config.m)->check(CLI::Range(0, 30));
  s->add_option("--n", s_config.n)->check(CLI::Range(0, 30));
  s->add_option("--trials", s_config.trials,
                "Monte Carlo trials per row (0 = analytic only)");
  s->add_option("--seed", s_config.seed, "rng seed")
      ->envname("PHOTONIC_SEED")
      ->default_val(kDefaultSeed);
  s->add_option("--out", s_out, "CSV output path")->required();

  // verify -----------------------------------------------------------------
  auto* v = app.add_subcommand(
      "verify", "cross-validate every formula against Monte Carlo");
  std::uint64_t v_trials = 1000000;
  std::uint64_t v_seed = kDefaultSeed;
  double v_offset = 0.0;
  std::string v_out;
  v->add_option("--trials", v_trials, "trials per comparison point")
      ->check(CLI::Range(std::uint64_t{100000},
                         std::numeric_limits<std::uint64_t>::max()));
  v->add_option("--seed", v_seed, "rng seed")
      ->envname("PHOTONIC_SEED")
      ->default_val(kDefaultSeed);
  v->add_option("--out", v_out, "write the JSON report to this file");
  // Fault-injection hook for the test suite: shifts every analytic value so
  // the failure path can be exercised deterministically. Hidden from help.
  v->add_option("--check-offset", v_offset)->group("");

  // benes ------------------------------------------------------------------
  auto* b = app.add_subcommand(
      "benes", "route a permutation through a Benes network of gates");
  int b_ports = 0;
  std::string b_perm, b_out;
  double b_eta = 1.0, b_pd = 0.0, b_mu = 0.0;
  std::uint64_t b_trials = 0, b_seed = kDefaultSeed;
  b->add_option("--ports", b_ports, "port count (power of two)")->required();
  b->add_option("--perm", b_perm, "target permutation, e.g. 2,3,0,1 "
                                  "(default identity)");
  b->add_option("--eta", b_eta)->check(prob01);
  b->add_option("--pd", b_pd)->check(prob01);
  auto* b_mu_opt = b->add_option(
      "--mu", b_mu, "Poisson mean per source (absent = ideal single photons)");
  b_mu_opt->check(mu_range);
  b->add_option("--trials", b_trials, "Monte Carlo network trials");
  b->add_option("--seed", b_seed, "rng seed")
      ->envname("PHOTONIC_SEED")
      ->default_val(kDefaultSeed);
  b->add_option("--out", b_out, "write a JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(a)) {
      if (a_mu1_opt->count()) a_params.mu1 = a_mu1;
      if (a_mu2_opt->count()) a_params.mu2 = a_mu2;
      return cmd_analytics(a_formula, a_params, a_json, a_out);
    }
    if (app.got_subcommand(s)) {
      s_config.formula = s_formula;
      s_config.eta_grid = parse_grid(s_eta, "--eta");
      s_config.pd_grid = parse_grid(s_pd, "--pd");
      if (s_mu_opt->count()) {
        if (s_mu1_opt->count() || s_mu2_opt->count())
          throw std::invalid_argument("--mu excludes --mu1/--mu2");
        s_config.mu1_grid = parse_grid(s_mu, "--mu");
        s_config.mu2_grid = s_config.mu1_grid;
        s_config.lock_mu = true;
      } else {
        if (s_mu1_opt->count()) s_config.mu1_grid = parse_grid(s_mu1, "--mu1");
        if (s_mu2_opt->count()) s_config.mu2_grid = parse_grid(s_mu2, "--mu2");
      }
      return cmd_sweep(s_config, s_out);
    }
    if (app.got_subcommand(v))
      return cmd_verify(v_trials, v_seed, v_offset, v_out);
    if (app.got_subcommand(b))
      return cmd_benes(b_ports, b_perm,
                       b_mu_opt->count() ? std::optional<double>(b_mu)
                                         : std::nullopt,
                       b_eta, b_pd, b_trials, b_seed, b_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
