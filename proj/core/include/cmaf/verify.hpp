#pragma once

#include <string>
#include <vector>

namespace cmaf {

/// Outcome of one invariant suite: how many individual checks ran, the worst
/// residual in the suite's own units, and the threshold it was held to.
struct SuiteResult {
  std::string name;
  bool pass = false;
  int checks = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  std::string note;
};

struct VerifyOptions {
  int l_max = 16;
  double u_max = 10.0;   // flow range for the trajectory checks, r0 = 1 units
  int n_steps = 4096;
  double tol = 1e-10;    // residual gate for the two-route coincidence
};

std::vector<SuiteResult> run_verification(const VerifyOptions& opt = {});

bool all_passed(const std::vector<SuiteResult>& results);

/// Deterministic plain-text report, one line per suite.
std::string verification_report(const std::vector<SuiteResult>& results);

}  // namespace cmaf
