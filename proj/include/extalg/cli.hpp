#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace extalg {

/// Entry point of the `extalg` tool; args excludes the program name.
///
///   check  --config F [--trials K] [--seed S] [--threads T]
///   eval   --config F EXPR
///   invert --config F
///   bench  --config F [--reps R]
///
/// Returns the process exit code: 0 on success, 1 when an identity fails,
/// 2 on bad input (config, expression, usage).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace extalg
