#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace curvlab {

// One property check run over a batch of seeded random trials.
struct CheckResult {
  std::string name;
  int trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

struct SuiteConfig {
  int trials = 100;
  std::uint64_t seed = 42;
  int dim_lo = 3;
  int dim_hi = 6;
  // If positive, overrides every check's default tolerance.
  double tol_override = 0.0;
};

// Names of all registered checks, in execution order.
std::vector<std::string> suite_check_names();

// Run a single named check (throws UnknownExample for a bad name).
CheckResult run_check(const std::string& name, const SuiteConfig& cfg);

// The whole battery: oracle equivalences, algebraic identities, decomposition
// properties, spectral consistency, weighted end-to-end checks.
SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace curvlab
