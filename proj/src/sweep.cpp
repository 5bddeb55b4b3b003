// Copyright (c) 2026 The photonic-fredkin authors
// SPDX-License-Identifier: Apache-2.0
#include "photonic/sweep.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "photonic/version.hpp"

namespace photonic {
namespace cli {

namespace {

enum class MuUse { None, Single, Pair };

struct FormulaInfo {
  std::string name;
  MuUse mu = MuUse::None;
  bool uses_mn = false;
  bool is_fidelity = false;
  GateVariant variant = GateVariant::Original;
};

const std::vector<FormulaInfo>& registry() {
  static const std::vector<FormulaInfo> r = {
      {"p11", MuUse::None, false, false, GateVariant::Original},
      {"p11-approx", MuUse::None, false, false, GateVariant::Original},
      {"p22", MuUse::None, false, false, GateVariant::Original},
      {"pmn-original", MuUse::None, true, false, GateVariant::Original},
      {"p-original-poisson", MuUse::Pair, false, false, GateVariant::Original},
      {"pmn-modified", MuUse::None, true, false, GateVariant::Modified},
      {"p-new", MuUse::Pair, false, false, GateVariant::Modified},
      {"p-new-approx", MuUse::Single, false, false, GateVariant::Modified},
      {"fidelity-original", MuUse::None, false, true, GateVariant::Original},
      // mu optional: present -> Poisson sources, absent -> ideal singles.
      {"fidelity-modified", MuUse::Single, false, true, GateVariant::Modified},
  };
  return r;
}

const FormulaInfo& lookup(const std::string& name) {
  for (const auto& f : registry())
    if (f.name == name) return f;
  throw std::invalid_argument("unknown formula '" + name + "'");
}

double need_mu(const std::optional<double>& mu, const char* which,
               const std::string& formula) {
  if (!mu)
    throw std::invalid_argument(formula + " requires " + which);
  return *mu;
}

}  // namespace

const std::vector<std::string>& formula_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& f : registry()) v.push_back(f.name);
    return v;
  }();
  return names;
}

double eval_formula(const std::string& formula, const FormulaParams& p) {
  using namespace analytics;
  if (formula == "p11") return p11(p.eta, p.pd);
  if (formula == "p11-approx") return p11_approx(p.eta);
  if (formula == "p22") return p22(p.eta, p.pd);
  if (formula == "pmn-original") return pmn_original(p.m, p.n, p.eta, p.pd);
  if (formula == "p-original-poisson") {
    // Two statements: argument evaluation order must not decide which
    // missing parameter gets reported.
    const double mu1 = need_mu(p.mu1, "mu1", formula);
    const double mu2 = need_mu(p.mu2, "mu2", formula);
    return p_original_poisson(mu1, mu2, p.eta, p.pd, p.series);
  }
  if (formula == "pmn-modified") return pmn_modified(p.m, p.n, p.eta, p.pd);
  if (formula == "p-new") {
    const double mu1 = need_mu(p.mu1, "mu1", formula);
    const double mu2 = need_mu(p.mu2, "mu2", formula);
    return p_new(mu1, mu2, p.eta, p.pd);
  }
  if (formula == "p-new-approx")
    return p_new_approx(need_mu(p.mu1, "mu", formula), p.eta);
  if (formula == "fidelity-original") return fidelity_original(p.eta);
  if (formula == "fidelity-modified") {
    const SourceSpec src =
        p.mu1 ? SourceSpec{PoissonSource{*p.mu1}} : SourceSpec{IdealSingle{}};
    return fidelity_modified(p.eta, p.pd, src);
  }
  throw std::invalid_argument("unknown formula '" + formula + "'");
}

mc::Estimate mc_estimate(const std::string& formula, const FormulaParams& p,
                         std::uint64_t trials, std::uint64_t seed) {
  const FormulaInfo& info = lookup(formula);
  SourceSpec s1 = IdealSingle{};
  SourceSpec s2 = IdealSingle{};
  if (formula == "p22") {
    s1 = FixedNumber{2};
    s2 = FixedNumber{2};
  } else if (info.uses_mn) {
    s1 = FixedNumber{p.m};
    s2 = FixedNumber{p.n};
  } else if (info.mu == MuUse::Pair) {
    s1 = PoissonSource{need_mu(p.mu1, "mu1", formula)};
    s2 = PoissonSource{need_mu(p.mu2, "mu2", formula)};
  } else if (info.mu == MuUse::Single && p.mu1) {
    s1 = PoissonSource{*p.mu1};
    s2 = PoissonSource{*p.mu1};
  } else if (formula == "p-new-approx") {
    throw std::invalid_argument("p-new-approx requires mu");
  }
  const DetectorSpec det{p.eta, p.pd, DetectorModel::DarkOnEmpty};
  const mc::McResult r =
      mc::run_trials(info.variant, s1, s2, det, /*control_bit=*/1, trials,
                     seed);
  return info.is_fidelity ? r.fidelity : r.herald_rate;
}

std::vector<ResultRow> run_sweep(const SweepConfig& config) {
  const FormulaInfo& info = lookup(config.formula);
  if (config.eta_grid.empty() || config.pd_grid.empty())
    throw std::invalid_argument("run_sweep: empty parameter grid");

  // Resolve the (mu1, mu2) points this formula sweeps over.
  std::vector<std::pair<double, double>> mu_points;
  const bool wants_mu = info.mu != MuUse::None;
  if (!wants_mu || (info.is_fidelity && config.mu1_grid.empty())) {
    mu_points.emplace_back(0.0, 0.0);  // unused -> rendered as 0
  } else if (info.mu == MuUse::Single) {
    if (config.mu1_grid.empty())
      throw std::invalid_argument(config.formula + " requires a mu grid");
    for (double mu : config.mu1_grid) mu_points.emplace_back(mu, mu);
  } else if (config.lock_mu) {
    if (config.mu1_grid.empty() || config.mu1_grid != config.mu2_grid)
      throw std::invalid_argument(
          "run_sweep: locked mu sweep needs one shared mu grid");
    for (double mu : config.mu1_grid) mu_points.emplace_back(mu, mu);
  } else {
    if (config.mu1_grid.empty() || config.mu2_grid.empty())
      throw std::invalid_argument(config.formula +
                                  " requires mu1 and mu2 grids");
    for (double m1 : config.mu1_grid)
      for (double m2 : config.mu2_grid) mu_points.emplace_back(m1, m2);
  }

  std::vector<ResultRow> rows;
  std::uint64_t row_index = 0;
  for (const auto& [mu1, mu2] : mu_points) {
    for (double pd : config.pd_grid) {
      for (double eta : config.eta_grid) {
        FormulaParams p;
        p.eta = eta;
        p.pd = pd;
        if (wants_mu && !(info.is_fidelity && config.mu1_grid.empty())) {
          p.mu1 = mu1;
          p.mu2 = mu2;
        }
        p.m = config.m;
        p.n = config.n;
        p.series = config.series;

        ResultRow row;
        row.eta = eta;
        row.pd = pd;
        row.mu1 = p.mu1.value_or(0.0);
        row.mu2 = p.mu2.value_or(0.0);
        row.analytic = eval_formula(config.formula, p);
        if (config.trials > 0) {
          row.mc = mc_estimate(config.formula, p, config.trials,
                               sub_seed(config.seed, row_index));
          const mc::CompareReport cr = mc::compare(row.analytic, *row.mc);
          row.z = cr.z_score;
          row.pass = cr.pass;
        }
        rows.push_back(row);
        ++row_index;
      }
    }
  }
  return rows;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
  os << "eta,mu1,mu2,pd,analytic,mc,std_err,z,pass\n";
  for (const auto& r : rows) {
    os << format_double(r.eta) << ',' << format_double(r.mu1) << ','
       << format_double(r.mu2) << ',' << format_double(r.pd) << ','
       << format_double(r.analytic) << ',';
    if (r.mc) {
      os << format_double(r.mc->value) << ',' << format_double(r.mc->std_err)
         << ',' << format_double(*r.z) << ',' << (*r.pass ? '1' : '0');
    } else {
      os << ",,,";
    }
    os << '\n';
  }
}

// ---- verification suite ------------------------------------------------

namespace {

struct VerifyPoint {
  std::string formula;
  FormulaParams params;
};

std::vector<VerifyPoint> verify_points() {
  std::vector<VerifyPoint> pts;
  auto add = [&](const std::string& f, double eta, double pd,
                 std::optional<double> mu1 = std::nullopt,
                 std::optional<double> mu2 = std::nullopt, int m = 1,
                 int n = 1) {
    FormulaParams p;
    p.eta = eta;
    p.pd = pd;
    p.mu1 = mu1;
    p.mu2 = mu2;
    p.m = m;
    p.n = n;
    pts.push_back({f, p});
  };

  add("p11", 1.0, 0.0);
  add("p11", 0.6, 0.0);
  add("p11", 0.8, 1e-3);
  add("p11", 0.3, 1e-2);
  add("p11", 0.5, 1e-4);

  for (double eta : {1.0, 0.8, 0.6, 0.4, 0.2}) add("p11-approx", eta, 0.0);

  add("p22", 0.7, 0.0);
  add("p22", 1.0, 0.0);
  add("p22", 0.5, 1e-3);
  add("p22", 0.9, 1e-2);
  add("p22", 0.2, 1e-4);

  add("pmn-original", 0.7, 1e-3, {}, {}, 1, 2);
  add("pmn-original", 0.5, 0.0, {}, {}, 2, 1);
  add("pmn-original", 0.8, 1e-4, {}, {}, 3, 2);
  add("pmn-original", 0.6, 1e-2, {}, {}, 0, 1);
  add("pmn-original", 0.9, 1e-3, {}, {}, 4, 4);

  add("p-original-poisson", 0.6, 1e-4, 0.2, 0.2);
  add("p-original-poisson", 0.5, 1e-5, 0.1, 0.1);
  add("p-original-poisson", 0.8, 1e-3, 0.5, 0.3);
  add("p-original-poisson", 0.9, 0.0, 1.0, 1.0);
  add("p-original-poisson", 0.7, 1e-2, 0.05, 0.4);

  add("pmn-modified", 0.6, 1e-3, {}, {}, 1, 1);
  add("pmn-modified", 0.8, 1e-4, {}, {}, 0, 1);
  add("pmn-modified", 0.9, 1e-2, {}, {}, 2, 2);
  add("pmn-modified", 0.5, 0.0, {}, {}, 1, 3);
  add("pmn-modified", 0.7, 1e-5, {}, {}, 2, 0);

  add("p-new", 1.0, 0.0, 0.1, 0.1);
  add("p-new", 0.5, 1e-5, 0.1, 0.1);
  add("p-new", 0.8, 1e-4, 0.2, 0.3);
  add("p-new", 0.6, 1e-3, 0.05, 0.05);
  add("p-new", 0.9, 1e-2, 1.0, 0.5);

  add("p-new-approx", 1.0, 0.0, 0.1);
  add("p-new-approx", 0.8, 0.0, 0.2);
  add("p-new-approx", 0.6, 0.0, 0.05);
  add("p-new-approx", 0.9, 0.0, 0.5);
  add("p-new-approx", 0.7, 0.0, 1.0);

  for (double eta : {0.5, 0.8, 1.0, 0.3, 0.6})
    add("fidelity-original", eta, 0.0);

  // pd must stay large enough that the contamination shows up within the
  // minimum trial budget; at pd ~ 1e-5 a 1e5-trial sample almost always
  // contains zero dark-count events and the estimator degenerates.
  add("fidelity-modified", 0.6, 5e-3);
  add("fidelity-modified", 0.9, 1e-3);
  add("fidelity-modified", 1.0, 0.0);
  add("fidelity-modified", 0.7, 1e-4, 0.1);
  add("fidelity-modified", 0.5, 1e-3, 0.2);

  return pts;
}

std::map<std::string, double> param_map(const std::string& formula,
                                        const FormulaParams& p) {
  const FormulaInfo& info = lookup(formula);
  std::map<std::string, double> out{{"eta", p.eta}, {"pd", p.pd}};
  if (p.mu1) out["mu1"] = *p.mu1;
  if (p.mu2) out["mu2"] = *p.mu2;
  if (info.uses_mn) {
    out["m"] = p.m;
    out["n"] = p.n;
  }
  return out;
}

std::string point_name(const std::string& formula,
                       const std::map<std::string, double>& params) {
  std::string s = formula + "[";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) s += ',';
    s += k + '=' + format_double(v);
    first = false;
  }
  return s + "]";
}

}  // namespace

VerifyReport run_verify(std::uint64_t trials, std::uint64_t seed,
                        double analytic_offset) {
  if (trials < 100000)
    throw std::invalid_argument(
        "run_verify: needs at least 100000 trials per point");
  VerifyReport report;
  report.trials = trials;
  report.seed = seed;
  report.all_pass = true;

  const auto pts = verify_points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    VerifyResult r;
    r.params = param_map(pts[i].formula, pts[i].params);
    r.name = point_name(pts[i].formula, r.params);
    r.analytic = eval_formula(pts[i].formula, pts[i].params) + analytic_offset;
    r.mc = mc_estimate(pts[i].formula, pts[i].params, trials,
                       sub_seed(seed, 1000 + i));
    const mc::CompareReport cr = mc::compare(r.analytic, r.mc);
    r.z = cr.z_score;
    r.pass = cr.pass;
    report.all_pass = report.all_pass && r.pass;
    report.results.push_back(std::move(r));
  }
  return report;
}

std::string verify_report_json(const VerifyReport& report) {
  nlohmann::json j;
  j["meta"] = {{"seed", report.seed},
               {"rng", kRngName},
               {"version", kVersion},
               {"trials", report.trials}};
  j["results"] = nlohmann::json::array();
  for (const auto& r : report.results) {
    j["results"].push_back({{"name", r.name},
                            {"params", r.params},
                            {"analytic", r.analytic},
                            {"mc", r.mc.value},
                            {"std_err", r.mc.std_err},
                            {"z", r.z},
                            {"pass", r.pass}});
  }
  return j.dump(2);
}

}  // namespace cli
}  // namespace photonic
