#include "extalg/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

#include "extalg/algebra.hpp"
#include "extalg/duality.hpp"
#include "extalg/metric.hpp"
#include "extalg/products.hpp"
#include "extalg/random.hpp"

namespace extalg {

namespace {

// Defeats dead-code elimination of the timed calls.
volatile double g_sink = 0.0;

BenchEntry time_kernel(const char* name, int n, int reps, std::uint64_t work, const std::function<double()>& body) {
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(reps));
  g_sink = g_sink + body();  // warm-up
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    const double v = body();
    const auto stop = std::chrono::steady_clock::now();
    g_sink = g_sink + v;
    samples.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  const double median = samples.size() % 2 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
  return BenchEntry{name, n, reps, work, samples.front(), median, samples.back()};
}

}  // namespace

std::vector<BenchEntry> run_bench(const SessionConfig& cfg, int reps) {
  reps = std::max(reps, 20);
  const Dimension dim = cfg.dim;
  const int n = dim.n();
  const MetricExtensor gamma(cfg.metric);
  Rng rng(cfg.seed);
  const auto x = random_element<Kind::vector>(rng, dim);
  const auto y = random_element<Kind::vector>(rng, dim);
  const auto phi = random_element<Kind::form>(rng, dim);

  const std::uint64_t pairs = std::uint64_t{1} << (2 * n);
  std::uint64_t minors = 0;
  for (int p = 0; p <= n; ++p) minors += binomial(n, p) * binomial(n, p);

  std::vector<BenchEntry> out;
  out.push_back(time_kernel("wedge", n, reps, pairs, [&] { return wedge(x, y).scalar_part(); }));
  out.push_back(time_kernel("duality_contraction", n, reps, pairs, [&] { return left_contract(phi, x).scalar_part(); }));
  out.push_back(time_kernel("extend", n, reps, minors, [&] { return extend(gamma, x).scalar_part(); }));
  out.push_back(time_kernel("scalar_product", n, reps, minors + dim.blade_count(),
                            [&] { return scalar_product(gamma, x, y); }));
  out.push_back(time_kernel("inversion_formula", n, reps, 2 * pairs + minors,
                            [&] { return invert_extension_via_formula(gamma, phi).scalar_part(); }));
  return out;
}

std::string format_bench_entry(const BenchEntry& e) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s n=%d reps=%d work=%llu min_ns=%.0f median_ns=%.0f max_ns=%.0f", e.kernel.c_str(),
                e.n, e.reps, static_cast<unsigned long long>(e.work), e.min_ns, e.median_ns, e.max_ns);
  return buf;
}

}  // namespace extalg
