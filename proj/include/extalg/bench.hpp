#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "extalg/config.hpp"

namespace extalg {

struct BenchEntry {
  std::string kernel;
  int n = 0;
  int reps = 0;
  /// Upper bound on the blade pairs (or minors) the kernel visits.
  std::uint64_t work = 0;
  double min_ns = 0.0;
  double median_ns = 0.0;
  double max_ns = 0.0;
};

/// Times wedge, duality contraction, extend, scalar product and the inversion
/// formula at the configured dimension on seeded random inputs. reps < 20 is
/// raised to 20.
std::vector<BenchEntry> run_bench(const SessionConfig& cfg, int reps = 25);

/// `<kernel> n=<n> reps=<r> work=<w> min_ns=<..> median_ns=<..> max_ns=<..>`
std::string format_bench_entry(const BenchEntry& e);

}  // namespace extalg
