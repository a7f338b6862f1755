// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "casmom/config.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "casmom/errors.hpp"
#include "casmom/semiclassical.hpp"

namespace casmom {

namespace {

using nlohmann::json;

const std::set<std::string> kSweepParams = {
    "B0",  "B0_x", "B0_y", "B0_z", "C",
    "m_N", "omega_scale", "Q0_x", "Q0_y", "Q0_z"};

// Rejects keys outside the schema so that typos never silently fall back to
// defaults.
void require_keys(const json &j, const std::string &scope,
                  const std::set<std::string> &allowed) {
  for (const auto &item : j.items())
    if (!allowed.count(item.key()))
      throw UnknownField("config key '" +
                         (scope.empty() ? item.key() : scope + "." + item.key()) +
                         "' is not recognised");
}

double finite(const json &j, const std::string &name) {
  double v;
  try {
    v = j.get<double>();
  } catch (const json::exception &e) {
    throw ParseError("config value '" + name + "': " + e.what());
  }
  if (!std::isfinite(v))
    throw RangeError("config value '" + name + "' must be finite");
  return v;
}

Eigen::Vector3d vec3(const json &j, const std::string &name) {
  if (!j.is_array() || j.size() != 3)
    throw RangeError("config value '" + name +
                     "' must be an array of three numbers");
  return {finite(j[0], name), finite(j[1], name), finite(j[2], name)};
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<double> ladder_in_use(const RunConfig &cfg) {
  return cfg.eps_ladder.empty() ? ScQuadratureSpec{}.eps_ladder
                                : cfg.eps_ladder;
}

} // namespace

RunConfig parse_config(const std::string &json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception &e) {
    throw ParseError(e.what());
  }
  if (!j.is_object())
    throw ParseError("config root must be a JSON object");

  require_keys(j, "", {"params", "n_max", "rel_tol", "eps_ladder",
                       "energy_steps", "pipelines", "sweep"});
  RunConfig cfg;

  if (j.contains("params")) {
    const json &p = j["params"];
    if (!p.is_object())
      throw ParseError("config key 'params' must be an object");
    require_keys(p, "params",
                 {"units", "m_N", "C", "omega_x", "omega_y", "omega_z", "B0",
                  "Q0"});
    if (p.contains("units")) {
      std::string u;
      try {
        u = p["units"].get<std::string>();
      } catch (const json::exception &e) {
        throw ParseError(std::string("config value 'params.units': ") +
                         e.what());
      }
      if (u == "internal")
        cfg.params.units = RawParams::Units::kInternal;
      else if (u == "si")
        cfg.params.units = RawParams::Units::kSI;
      else
        throw RangeError("params.units must be 'internal' or 'si'");
    }
    if (p.contains("m_N"))
      cfg.params.m_N = finite(p["m_N"], "params.m_N");
    if (p.contains("C"))
      cfg.params.C = finite(p["C"], "params.C");
    if (p.contains("omega_x"))
      cfg.params.omega_x = finite(p["omega_x"], "params.omega_x");
    if (p.contains("omega_y"))
      cfg.params.omega_y = finite(p["omega_y"], "params.omega_y");
    if (p.contains("omega_z"))
      cfg.params.omega_z = finite(p["omega_z"], "params.omega_z");
    if (p.contains("B0"))
      cfg.params.B0 = vec3(p["B0"], "params.B0");
    if (p.contains("Q0"))
      cfg.params.Q0 = vec3(p["Q0"], "params.Q0");
  }

  if (j.contains("n_max")) {
    try {
      cfg.n_max = j["n_max"].get<int>();
    } catch (const json::exception &e) {
      throw ParseError(std::string("config value 'n_max': ") + e.what());
    }
  }
  if (j.contains("rel_tol"))
    cfg.rel_tol = finite(j["rel_tol"], "rel_tol");
  if (j.contains("eps_ladder")) {
    if (!j["eps_ladder"].is_array())
      throw ParseError("config key 'eps_ladder' must be an array");
    for (std::size_t i = 0; i < j["eps_ladder"].size(); ++i)
      cfg.eps_ladder.push_back(finite(j["eps_ladder"][i], "eps_ladder"));
  }
  if (j.contains("energy_steps")) {
    try {
      cfg.energy_steps = j["energy_steps"].get<int>();
    } catch (const json::exception &e) {
      throw ParseError(std::string("config value 'energy_steps': ") + e.what());
    }
  }

  if (j.contains("pipelines")) {
    const json &p = j["pipelines"];
    if (!p.is_object())
      throw ParseError("config key 'pipelines' must be an object");
    require_keys(p, "pipelines",
                 {"semiclassical", "qed_analytic", "qed_fock", "energy"});
    auto flag = [&p](const char *name, bool fallback) {
      if (!p.contains(name))
        return fallback;
      try {
        return p[name].get<bool>();
      } catch (const json::exception &e) {
        throw ParseError(std::string("config value 'pipelines.") + name +
                         "': " + e.what());
      }
    };
    cfg.pipelines.semiclassical = flag("semiclassical", true);
    cfg.pipelines.qed_analytic = flag("qed_analytic", true);
    cfg.pipelines.qed_fock = flag("qed_fock", false);
    cfg.pipelines.energy = flag("energy", true);
  }

  if (j.contains("sweep")) {
    const json &s = j["sweep"];
    if (!s.is_object())
      throw ParseError("config key 'sweep' must be an object");
    require_keys(s, "sweep", {"param", "from", "to", "steps"});
    if (s.contains("param")) {
      try {
        cfg.sweep.param = s["param"].get<std::string>();
      } catch (const json::exception &e) {
        throw ParseError(std::string("config value 'sweep.param': ") +
                         e.what());
      }
    }
    if (s.contains("from"))
      cfg.sweep.from = finite(s["from"], "sweep.from");
    if (s.contains("to"))
      cfg.sweep.to = finite(s["to"], "sweep.to");
    if (s.contains("steps")) {
      try {
        cfg.sweep.steps = s["steps"].get<int>();
      } catch (const json::exception &e) {
        throw ParseError(std::string("config value 'sweep.steps': ") +
                         e.what());
      }
    }
  }

  // Domain checks.
  if (cfg.params.omega_x <= 0.0 || cfg.params.omega_y <= 0.0 ||
      cfg.params.omega_z <= 0.0)
    throw RangeError("trap frequencies must be strictly positive");
  if (cfg.params.m_N <= 0.0)
    throw RangeError("nucleus mass must be strictly positive");
  if (cfg.n_max < 2 || cfg.n_max > 30)
    throw RangeError("n_max must lie in [2, 30], got " +
                     std::to_string(cfg.n_max));
  if (!(cfg.rel_tol > 0.0))
    throw RangeError("rel_tol must be strictly positive");
  if (cfg.energy_steps < 2)
    throw RangeError("energy_steps must be at least 2");
  for (std::size_t i = 0; i < cfg.eps_ladder.size(); ++i) {
    if (!(cfg.eps_ladder[i] > 0.0))
      throw RangeError("eps_ladder entries must be strictly positive");
    if (i > 0 && !(cfg.eps_ladder[i] < cfg.eps_ladder[i - 1]))
      throw RangeError("eps_ladder must be strictly decreasing");
  }
  if (cfg.sweep.steps < 0)
    throw RangeError("sweep.steps must be non-negative");
  if (cfg.sweep.steps > 0) {
    if (!kSweepParams.count(cfg.sweep.param))
      throw RangeError("sweep.param '" + cfg.sweep.param +
                       "' is not a sweepable parameter");
    if (cfg.sweep.to < cfg.sweep.from)
      throw RangeError("sweep range must be ordered (from <= to)");
  }
  return cfg;
}

RunConfig load_config(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

RawParams apply_sweep(const RawParams &base, const std::string &param,
                      double value) {
  RawParams raw = base;
  if (param == "B0") {
    const Eigen::Vector3d dir = base.B0.isZero()
                                    ? Eigen::Vector3d::UnitZ()
                                    : Eigen::Vector3d(base.B0.normalized());
    raw.B0 = value * dir;
  } else if (param == "B0_x") {
    raw.B0.x() = value;
  } else if (param == "B0_y") {
    raw.B0.y() = value;
  } else if (param == "B0_z") {
    raw.B0.z() = value;
  } else if (param == "C") {
    raw.C = value;
  } else if (param == "m_N") {
    raw.m_N = value;
  } else if (param == "omega_scale") {
    raw.omega_x = base.omega_x * value;
    raw.omega_y = base.omega_y * value;
    raw.omega_z = base.omega_z * value;
  } else if (param == "Q0_x") {
    raw.Q0.x() = value;
  } else if (param == "Q0_y") {
    raw.Q0.y() = value;
  } else if (param == "Q0_z") {
    raw.Q0.z() = value;
  } else {
    throw RangeError("sweep.param '" + param + "' is not a sweepable parameter");
  }
  return raw;
}

std::vector<ResultRow> compute_rows(const RunConfig &cfg) {
  const int n = std::max(1, cfg.sweep.steps);
  std::vector<ResultRow> rows;
  rows.reserve(n);
  for (int i = 0; i < n; ++i) {
    RawParams raw = cfg.params;
    ResultRow row;
    if (cfg.sweep.steps > 0) {
      row.value = (n == 1) ? cfg.sweep.from
                           : cfg.sweep.from +
                                 (cfg.sweep.to - cfg.sweep.from) * i / (n - 1);
      raw = apply_sweep(raw, cfg.sweep.param, row.value);
    }
    const ModelParams p = derive_params(raw);

    if (cfg.pipelines.qed_analytic) {
      row.report = p_cas_total(p);
      row.resid_pseudomomentum =
          (row.report.P_kin + row.report.P_total + row.report.P_Abr).norm();
    }

    if (cfg.pipelines.semiclassical) {
      ScQuadratureSpec spec;
      spec.rel_tol = cfg.rel_tol;
      if (!cfg.eps_ladder.empty())
        spec.eps_ladder = cfg.eps_ladder;
      row.P_sc = sc_momentum_numeric(p, spec);
    } else {
      row.P_sc = sc_momentum_closed(p);
    }

    if (cfg.pipelines.energy) {
      const double B0mag = p.B0.norm();
      row.ledger = energy_ledger(B0mag, p.Q0, p, cfg.energy_steps);
      const Eigen::Vector3d P = energy_p_cas(B0mag, p);
      const double scale = std::max(
          {std::abs(row.ledger.Delta_E_kin),
           (P.squaredNorm() + 2.0 * std::abs(p.Q0.dot(P))) / (2.0 * p.M),
           1e-300});
      row.resid_work_balance =
          std::abs(row.ledger.W_B0 - row.ledger.Delta_E_kin) / scale;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_results_csv(std::ostream &os, const RunConfig &cfg,
                       const std::vector<ResultRow> &rows) {
  os << "param,value,P_perp_x,P_perp_y,P_perp_z,P_par_x,P_par_y,P_par_z,"
        "P_total_x,P_total_y,P_total_z,P_sc_x,P_sc_y,P_sc_z,Delta_E_kin,W_B0,"
        "resid_total_decomp,resid_pseudomomentum,resid_work_balance,n_max,"
        "rel_tol,eps_ladder\n";
  const std::string pname =
      (cfg.sweep.steps > 0) ? cfg.sweep.param : std::string("none");
  std::string ladder;
  for (double e : ladder_in_use(cfg)) {
    if (!ladder.empty())
      ladder += ';';
    ladder += num(e);
  }
  for (const ResultRow &r : rows) {
    os << csv_field(pname) << ',' << num(r.value);
    for (const Eigen::Vector3d *v :
         {&r.report.P_perp, &r.report.P_par, &r.report.P_total, &r.P_sc})
      os << ',' << num((*v)[0]) << ',' << num((*v)[1]) << ',' << num((*v)[2]);
    os << ',' << num(r.ledger.Delta_E_kin) << ',' << num(r.ledger.W_B0) << ','
       << num(r.report.resid_total_vs_sum) << ','
       << num(r.resid_pseudomomentum) << ',' << num(r.resid_work_balance)
       << ',' << cfg.n_max << ',' << num(cfg.rel_tol) << ','
       << csv_field(ladder) << '\n';
  }
}

void write_provenance(std::ostream &os, const RunConfig &cfg) {
  json j;
  j["tool"] = "casmom";
  j["format_version"] = 1;
  j["settings"] = {{"n_max", cfg.n_max},
                   {"rel_tol", cfg.rel_tol},
                   {"energy_steps", cfg.energy_steps},
                   {"eps_ladder", ladder_in_use(cfg)}};
  j["pipelines"] = {{"semiclassical", cfg.pipelines.semiclassical},
                    {"qed_analytic", cfg.pipelines.qed_analytic},
                    {"qed_fock", cfg.pipelines.qed_fock},
                    {"energy", cfg.pipelines.energy}};
  j["params"] = {
      {"units",
       cfg.params.units == RawParams::Units::kSI ? "si" : "internal"},
      {"m_N", cfg.params.m_N},
      {"C", cfg.params.C},
      {"omega_x", cfg.params.omega_x},
      {"omega_y", cfg.params.omega_y},
      {"omega_z", cfg.params.omega_z},
      {"B0", {cfg.params.B0.x(), cfg.params.B0.y(), cfg.params.B0.z()}},
      {"Q0", {cfg.params.Q0.x(), cfg.params.Q0.y(), cfg.params.Q0.z()}}};
  if (cfg.sweep.steps > 0)
    j["sweep"] = {{"param", cfg.sweep.param},
                  {"from", cfg.sweep.from},
                  {"to", cfg.sweep.to},
                  {"steps", cfg.sweep.steps}};
  j["semiclassical_route"] = cfg.pipelines.semiclassical
                                 ? "regularized-quadrature"
                                 : "closed-form";
  if (cfg.pipelines.qed_fock) {
    const ModelParams p = derive_params(cfg.params);
    const FockBasis basis = build_basis(cfg.n_max);
    const Eigen::Vector3d pf = p_perp_fock(p, basis, KGridSpec{});
    const Eigen::Vector3d pc = p_perp_rot(p);
    const double scale = std::max({pf.norm(), pc.norm(), 1e-300});
    j["fock_crosscheck"] = {
        {"P_perp_fock", {pf.x(), pf.y(), pf.z()}},
        {"P_perp_closed", {pc.x(), pc.y(), pc.z()}},
        {"rel_deviation", (pf - pc).norm() / scale}};
  }
  os << j.dump(2) << '\n';
}

void run(const RunConfig &cfg, const std::string &out_dir) {
  std::filesystem::create_directories(out_dir);
  const std::vector<ResultRow> rows = compute_rows(cfg);

  const std::string csv_path = out_dir + "/results.csv";
  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv)
    throw ParseError("cannot open '" + csv_path + "' for writing");
  write_results_csv(csv, cfg, rows);

  const std::string prov_path = out_dir + "/provenance.json";
  std::ofstream prov(prov_path, std::ios::binary);
  if (!prov)
    throw ParseError("cannot open '" + prov_path + "' for writing");
  write_provenance(prov, cfg);
}

} // namespace casmom
