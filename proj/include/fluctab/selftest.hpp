#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fluctab/tableau.hpp"

namespace fluctab {

// Cross-characterization sweeps shared by the acceptance suite and the CLI
// `selftest` subcommand. Each check prints nothing; the caller formats the
// report.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::uint64_t cases = 0;
  double seconds = 0.0;
  std::string detail;  // first failing witness, when any
};

struct SelftestOptions {
  int max_rows = 4;      // sweep r = 1..max_rows
  int tmax = 10;         // total letter size budget
  int crystal_tmax = 7;  // heavier crystal equalities use a smaller box
  int threads = 0;       // 0 = library default
};

CheckResult check_golden_running_example();              // criterion 1
CheckResult check_golden_standard_example();             // criterion 2
CheckResult check_promotion_agreement(const SelftestOptions& o);  // criterion 3
CheckResult check_rectangular_theorems(const SelftestOptions& o); // criterion 4
CheckResult check_grid_identities(const SelftestOptions& o);      // criterion 5
CheckResult check_crystal_layer(const SelftestOptions& o);        // criterion 6
CheckResult check_counting_oracle(const SelftestOptions& o);      // criterion 7

std::vector<CheckResult> run_selftest(const SelftestOptions& o);

}  // namespace fluctab
