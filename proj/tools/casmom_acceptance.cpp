// Copyright 2026 The casmom Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0
//
// Standalone acceptance-suite runner: one PASS/FAIL line per criterion.
// Exit 0 when every selected criterion passes, 1 otherwise.

#include <iostream>

#include "CLI11.hpp"

#include "casmom/acceptance.hpp"
#include "casmom/errors.hpp"

int main(int argc, char **argv) {
  CLI::App app{"casmom acceptance suite"};
  int criterion = 0;
  app.add_option("--criterion", criterion, "criterion id (1..9); 0 = all")
      ->check(CLI::Range(0, 9));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    bool all_pass = true;
    for (const casmom::CriterionResult &r : casmom::run_acceptance(criterion)) {
      std::cout << casmom::format_result(r) << "\n";
      all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 1;
  } catch (const casmom::Error &e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return casmom::exit_code(e.category());
  } catch (const std::exception &e) {
    std::cerr << "acceptance: internal error: " << e.what() << "\n";
    return 4;
  }
}
