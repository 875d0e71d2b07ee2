#pragma once

#include <string>
#include <vector>

#include "wqed/model.hpp"

namespace wqed::validation {

struct CheckResult {
  std::string name;
  bool passed = false;
  double metric = 0.0;     // worst observed deviation
  double threshold = 0.0;  // pass bound on metric
  std::string detail;
};

/// Names accepted by run_checks, in execution order.
const std::vector<std::string>& check_names();

/// Runs the named checks (all when `only` is empty). Throws
/// std::invalid_argument for an unknown name.
std::vector<CheckResult> run_checks(const std::vector<std::string>& only);

CheckResult check_quadrature();
CheckResult check_eigensolver();
CheckResult check_kronecker();
CheckResult check_softcore();
CheckResult check_passivity();
CheckResult check_gap();

/// Largest distance after greedily pairing each value of `a` (in (Re, Im)
/// order) with its nearest unused value of `b`; +inf when sizes differ.
double matched_distance(std::vector<cplx> a, std::vector<cplx> b);

}  // namespace wqed::validation
