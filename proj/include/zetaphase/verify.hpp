#pragma once

#include <string>
#include <vector>

namespace zetaphase {

struct CheckResult {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass;
};

// Suites: constants, identities, zeros, reconstruction, band.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name);
std::vector<SuiteReport> run_all();

}  // namespace zetaphase
