#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "commvar/numkit.hpp"

namespace commvar {

struct RunConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  Tolerances tol;
  int n_max = 3;
  int s_max = 6;
  int D_max = 3;

  /// Throws InvalidArgument unless trials >= 1, every cap >= 1 and tol is valid.
  void validate() const;
};

struct SuiteResult {
  std::string suite;
  int trials = 0;
  int failures = 0;
  double worst_residual = 0.0;
  std::vector<std::string> notes;  // first few failure descriptions
  std::vector<SuiteResult> parts;  // filled for "all"
};

/// roundtrip, cayley, spectrum, equivariance, real, isotropy, cohomology.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite in order for "all". Trial i draws from
/// trial_seed(cfg.seed, i), so results depend only on (suite, cfg).
/// Throws InvalidArgument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

}  // namespace commvar
