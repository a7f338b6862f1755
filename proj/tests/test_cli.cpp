// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end exercises of the installed command-line binary: exit codes,
// output files, byte-determinism and error reporting.  The binary path is
// injected at build time via CASMOM_CLI_PATH.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

const char *kGoodConfig = R"({
  "params": {
    "omega_x": 0.98, "omega_y": 1.0, "omega_z": 1.03,
    "C": 1e-5,
    "B0": [0.0, 0.0, 3e-4],
    "Q0": [0.1, -0.05, 0.2]
  },
  "n_max": 8
})";

// Three nearly equal extrapolation rungs cannot meet rel_tol 1e-12: the
// semiclassical pipeline must fail with the convergence exit code.
const char *kLadderConfig = R"({
  "params": {
    "omega_x": 0.98, "omega_y": 1.0, "omega_z": 1.03,
    "C": 1e-5,
    "B0": [0.0, 0.0, 3e-4],
    "Q0": [0.1, -0.05, 0.2]
  },
  "n_max": 8,
  "rel_tol": 1e-12,
  "eps_ladder": [1e-2, 9e-3, 8e-3]
})";

const char *kBadConfig = R"({ "params": { "omega_q": 1.0 } })";

struct Scratch {
  fs::path dir;
  explicit Scratch(const std::string &tag) {
    dir = fs::temp_directory_path() /
          ("casmom_cli_" + std::to_string(::getpid()) + "_" + tag);
    fs::create_directories(dir);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  fs::path file(const std::string &name, const std::string &content) const {
    const fs::path p = dir / name;
    std::ofstream(p) << content;
    return p;
  }
};

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_lines(const std::string &text) {
  int n = 0;
  for (char c : text)
    if (c == '\n')
      ++n;
  return n;
}

// Runs the CLI with the given arguments, capturing stdout/stderr into files
// under the scratch dir; returns the process exit code.
int run_cli(const Scratch &s, const std::string &args, std::string *out = nullptr,
            std::string *err = nullptr) {
  const fs::path out_p = s.dir / "stdout.txt";
  const fs::path err_p = s.dir / "stderr.txt";
  const std::string cmd = std::string(CASMOM_CLI_PATH) + " " + args + " > " +
                          out_p.string() + " 2> " + err_p.string();
  const int rc = std::system(cmd.c_str());
  if (out)
    *out = slurp(out_p);
  if (err)
    *err = slurp(err_p);
  REQUIRE(WIFEXITED(rc));
  return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("validate accepts a good config and reports the pipelines") {
  Scratch s("validate");
  const fs::path cfg = s.file("good.json", kGoodConfig);
  std::string out;
  CHECK(run_cli(s, "validate --config " + cfg.string(), &out) == 0);
  CHECK(out.find("config OK") != std::string::npos);
  CHECK(out.find("n_max=8") != std::string::npos);
}

TEST_CASE("compute writes results and is byte-deterministic") {
  Scratch s("compute");
  const fs::path cfg = s.file("good.json", kGoodConfig);
  const fs::path out1 = s.dir / "run1";
  const fs::path out2 = s.dir / "run2";

  CHECK(run_cli(s, "compute --config " + cfg.string() + " --out " +
                       out1.string()) == 0);
  CHECK(run_cli(s, "compute --config " + cfg.string() + " --out " +
                       out2.string()) == 0);

  const std::string csv1 = slurp(out1 / "results.csv");
  const std::string csv2 = slurp(out2 / "results.csv");
  REQUIRE(!csv1.empty());
  CHECK(csv1 == csv2);
  CHECK(slurp(out1 / "provenance.json") == slurp(out2 / "provenance.json"));
  REQUIRE(!slurp(out1 / "provenance.json").empty());

  // Header and a single data row.
  CHECK(count_lines(csv1) == 2);
  CHECK(csv1.rfind("param,value,P_perp_x,P_perp_y,P_perp_z,", 0) == 0);
}

TEST_CASE("sweep emits one data row per step") {
  Scratch s("sweep");
  const fs::path cfg = s.file("good.json", kGoodConfig);
  const fs::path out = s.dir / "sweep_out";
  CHECK(run_cli(s, "sweep --config " + cfg.string() + " --out " +
                       out.string() +
                       " --param B0 --from 1e-5 --to 3e-5 --steps 3") == 0);
  const std::string csv = slurp(out / "results.csv");
  CHECK(count_lines(csv) == 4); // header + 3 rows
  CHECK(csv.find("B0,1.0000000000000001e-05") != std::string::npos);

  // Unsweepable parameter and inverted range are input errors.
  std::string err;
  CHECK(run_cli(s, "sweep --config " + cfg.string() + " --out " +
                       out.string() +
                       " --param zork --from 1e-5 --to 3e-5 --steps 3",
                nullptr, &err) == 2);
  CHECK(err.find("not a sweepable parameter") != std::string::npos);
  CHECK(run_cli(s, "sweep --config " + cfg.string() + " --out " +
                       out.string() +
                       " --param B0 --from 3e-5 --to 1e-5 --steps 3") == 2);
}

TEST_CASE("convergence failures surface as exit code 3") {
  Scratch s("ladder");
  const fs::path cfg = s.file("ladder.json", kLadderConfig);
  std::string err;
  CHECK(run_cli(s, "compute --config " + cfg.string() + " --out " +
                       (s.dir / "out").string(),
                nullptr, &err) == 3);
  CHECK(err.find("casmom:") != std::string::npos);
}

TEST_CASE("configuration errors surface as exit code 2") {
  Scratch s("badcfg");
  const fs::path bad = s.file("bad.json", kBadConfig);
  std::string err;
  CHECK(run_cli(s, "validate --config " + bad.string(), nullptr, &err) == 2);
  CHECK(err.find("unknown field") != std::string::npos);

  CHECK(run_cli(s, "validate --config " + (s.dir / "missing.json").string(),
                nullptr, &err) == 2);
  CHECK(err.find("cannot read") != std::string::npos);

  // Unknown subcommand is a usage error with the same exit code.
  CHECK(run_cli(s, "frobnicate") == 2);
}

TEST_CASE("selftest filter selects criteria and rejects unknown names") {
  Scratch s("selftest");
  std::string out;
  CHECK(run_cli(s, "selftest --filter scaling-law", &out) == 0);
  CHECK(out.find("[PASS]") != std::string::npos);
  CHECK(out.find("scaling-law") != std::string::npos);

  CHECK(run_cli(s, "selftest --filter zebra", &out) == 2);
  CHECK(out.find("no acceptance criterion matches") != std::string::npos);
}
