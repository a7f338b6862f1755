// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// casmom command-line interface.
//
//   casmom compute  --config cfg.json --out outdir
//   casmom sweep    --config cfg.json --out outdir
//                   --param B0 --from 0.1 --to 1.0 --steps 5
//   casmom validate --config cfg.json
//   casmom selftest [--filter <substring>]
//
// Exit codes: 0 success (for selftest: all selected criteria passed);
// 1 selftest criteria failed; 2 bad input or configuration; 3 numeric
// non-convergence; 4 internal invariant violation.

#include <cmath>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "casmom/acceptance.hpp"
#include "casmom/config.hpp"
#include "casmom/errors.hpp"

namespace {

int cmd_compute(const std::string &config_path, const std::string &out_dir) {
  const casmom::RunConfig cfg = casmom::load_config(config_path);
  casmom::run(cfg, out_dir);
  std::cout << "wrote " << out_dir << "/results.csv and " << out_dir
            << "/provenance.json\n";
  return 0;
}

int cmd_sweep(const std::string &config_path, const std::string &out_dir,
              const std::string &param, double from, double to, int steps) {
  casmom::RunConfig cfg = casmom::load_config(config_path);
  if (steps < 1)
    throw casmom::RangeError("sweep needs at least one step");
  if (!std::isfinite(from) || !std::isfinite(to))
    throw casmom::RangeError("sweep range must be finite");
  if (to < from)
    throw casmom::RangeError("sweep range must be ordered (from <= to)");
  cfg.sweep.param = param;
  cfg.sweep.from = from;
  cfg.sweep.to = to;
  cfg.sweep.steps = steps;
  // Revalidates the sweep parameter name.
  casmom::apply_sweep(cfg.params, cfg.sweep.param, cfg.sweep.from);
  casmom::run(cfg, out_dir);
  std::cout << "wrote " << out_dir << "/results.csv (" << steps
            << " rows) and " << out_dir << "/provenance.json\n";
  return 0;
}

int cmd_validate(const std::string &config_path) {
  const casmom::RunConfig cfg = casmom::load_config(config_path);
  std::cout << "config OK: n_max=" << cfg.n_max << " rel_tol=" << cfg.rel_tol
            << " energy_steps=" << cfg.energy_steps << " pipelines="
            << (cfg.pipelines.semiclassical ? "sc" : "-") << ","
            << (cfg.pipelines.qed_analytic ? "qed" : "-") << ","
            << (cfg.pipelines.qed_fock ? "fock" : "-") << ","
            << (cfg.pipelines.energy ? "energy" : "-");
  if (cfg.sweep.steps > 0)
    std::cout << " sweep=" << cfg.sweep.param << "[" << cfg.sweep.from << ","
              << cfg.sweep.to << "]x" << cfg.sweep.steps;
  std::cout << "\n";
  return 0;
}

int cmd_selftest(const std::string &filter) {
  bool all_pass = true;
  bool any = false;
  for (int id : casmom::acceptance_ids_matching(filter)) {
    for (const casmom::CriterionResult &r : casmom::run_acceptance(id)) {
      std::cout << casmom::format_result(r) << "\n";
      all_pass = all_pass && r.pass;
      any = true;
    }
  }
  if (!any) {
    std::cout << "no acceptance criterion matches filter '" << filter << "'\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Casimir momentum of a chiral oscillator in a magnetic field"};
  app.require_subcommand(1);

  std::string config_path, out_dir, param, filter;
  double from = 0.0, to = 0.0;
  int steps = 0;

  CLI::App *compute = app.add_subcommand(
      "compute", "run the configured pipelines at the configured parameters");
  compute->add_option("--config", config_path, "config JSON file")->required();
  compute->add_option("--out", out_dir, "output directory")->required();

  CLI::App *sweep = app.add_subcommand(
      "sweep", "run the pipelines over a one-parameter sweep");
  sweep->add_option("--config", config_path, "config JSON file")->required();
  sweep->add_option("--out", out_dir, "output directory")->required();
  sweep->add_option("--param", param, "parameter to sweep")->required();
  sweep->add_option("--from", from, "first value")->required();
  sweep->add_option("--to", to, "last value")->required();
  sweep->add_option("--steps", steps, "number of sweep points")->required();

  CLI::App *validate = app.add_subcommand(
      "validate", "parse and invariant-check a config file");
  validate->add_option("--config", config_path, "config JSON file")->required();

  CLI::App *selftest = app.add_subcommand(
      "selftest", "run the acceptance suite (one PASS/FAIL line per criterion)");
  selftest->add_option("--filter", filter,
                       "only criteria whose name contains this substring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed())
      return cmd_compute(config_path, out_dir);
    if (sweep->parsed())
      return cmd_sweep(config_path, out_dir, param, from, to, steps);
    if (validate->parsed())
      return cmd_validate(config_path);
    return cmd_selftest(filter);
  } catch (const casmom::Error &e) {
    std::cerr << "casmom: " << e.what() << "\n";
    return casmom::exit_code(e.category());
  } catch (const std::exception &e) {
    std::cerr << "casmom: internal error: " << e.what() << "\n";
    return 4;
  }
}
