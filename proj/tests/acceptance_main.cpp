// Acceptance suite: runs every cross-characterization criterion at its pinned
// parameters and prints one pass/fail line per criterion.

#include <cstdio>
#include <cstdlib>

#include "fluctab/selftest.hpp"

int main(int argc, char** argv) {
  fluctab::SelftestOptions opts;
  // Sweep box: r <= 4, total letter size <= 10; the heavy crystal equalities
  // run at total <= 7 (plus rectangular 4-row cases up to 8).
  for (int k = 1; k < argc; ++k) {
    std::string a = argv[k];
    auto intval = [&](const char* prefix) -> int {
      return std::atoi(a.c_str() + std::string(prefix).size());
    };
    if (a.rfind("--r=", 0) == 0) opts.max_rows = intval("--r=");
    if (a.rfind("--tmax=", 0) == 0) opts.tmax = intval("--tmax=");
    if (a.rfind("--crystal-tmax=", 0) == 0)
      opts.crystal_tmax = intval("--crystal-tmax=");
    if (a.rfind("--threads=", 0) == 0) opts.threads = intval("--threads=");
  }

  bool all_pass = true;
  for (const fluctab::CheckResult& r : fluctab::run_selftest(opts)) {
    std::printf("%s  %s  (%llu cases, %.2f s)%s%s\n",
                r.pass ? "PASS" : "FAIL", r.name.c_str(),
                static_cast<unsigned long long>(r.cases), r.seconds,
                r.detail.empty() ? "" : "  ", r.detail.c_str());
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
