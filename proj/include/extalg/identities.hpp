#pragma once

#include <string>
#include <vector>

#include "extalg/config.hpp"

namespace extalg {

/// Outcome of one identity over cfg.trials random inputs.
///
/// Each comparison measures diff = max |lhs - rhs| against
/// scale = max(|lhs|, |rhs|). Its relative error is diff / scale; when scale
/// is below 1e-12 the comparison falls back to absolute: 0 if diff <= 1e-12,
/// infinity otherwise. pass holds exactly when max_rel <= tolerance.
struct IdentityReport {
  std::string name;
  int trials = 0;
  double max_abs = 0.0;
  double max_rel = 0.0;
  bool pass = true;
};

/// Labels of every identity in suite order.
std::vector<std::string> identity_names();

/// Runs every identity against the session metric with cfg.trials random
/// inputs each. Identity i draws from its own generator seeded with
/// cfg.seed ^ i, so the result does not depend on `threads`.
std::vector<IdentityReport> run_identity_suite(const SessionConfig& cfg, unsigned threads = 1);

/// `<label> <trials> <max_abs> <max_rel> <PASS|FAIL>`
std::string format_report(const IdentityReport& r);

bool all_passed(const std::vector<IdentityReport>& reports);

}  // namespace extalg
