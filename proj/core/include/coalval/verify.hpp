#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coalval/theory.hpp"

namespace coalval {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int trials = 200;
  double tol = 1e-9;
};

/// One line of the verification report. `holds` is the observed outcome,
/// `expected_holds` the designated one; the run is clean iff they match on
/// every check.
struct CheckResult {
  std::string name;
  bool expected_holds = true;
  bool holds = true;
  std::string detail;

  bool as_designated() const { return holds == expected_holds; }
};

/// Axiom checks for the prediction value and the four counterexample values,
/// the probabilistic-value equivalence (both directions), the binomial
/// semivalue correspondence, and the Shapley impossibility test.
std::vector<CheckResult> run_verification_suite(const VerifyOptions& options);

} // namespace coalval
