#pragma once

#include <string>
#include <vector>

namespace ldiag {

struct SuiteReport {
  std::string suite;
  bool passed = false;
  long long checks = 0;
  std::string detail;  // violating instance on failure, notes on success
};

// Suite names accepted by run_verify, excluding "all".
const std::vector<std::string>& suite_names();

// Runs one named suite ("all" runs every suite).  seed drives the randomized
// parts; max_degree <= 0 selects each suite's default size.  Throws
// UnknownSuiteError on an unknown name.
std::vector<SuiteReport> run_verify(const std::string& suite, unsigned long long seed,
                                    int max_degree);

}  // namespace ldiag
