#ifndef CSDR_VERIFY_HPP
#define CSDR_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

namespace csdr {

struct CheckResult {
  std::string suite;
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Runs one of the named invariant suites
/// {lie, coset, forms, connection, action, bundles} or "all".
/// Tolerances can be overridden per check name. Throws on an unknown suite.
std::vector<CheckResult> run_verification(
    const std::string& suite,
    const std::map<std::string, double>& tolerance_overrides = {});

/// Machine-readable JSON report for a batch of checks.
std::string verification_report_json(const std::vector<CheckResult>& results);

}  // namespace csdr

#endif
