#pragma once

#include <string>
#include <vector>

#include "catsim/circuit.hpp"

namespace catsim {

struct CheckResult {
  std::string name;
  double value = 0.0; // measured residual
  double tolerance = 0.0;
  bool passed = false;
  std::string detail; // error text when the check threw
};

/// Operator identities, gamma-transform, alpha-representation
/// reconstruction, circuit coefficient formulas and inversions, fidelity
/// routes and analytic-vs-numeric Wigner spot checks, all at dimension `dim`.
/// Exceptions inside a check are reported as failures.
std::vector<CheckResult> run_identity_suite(int dim = kDefaultDim);

} // namespace catsim
