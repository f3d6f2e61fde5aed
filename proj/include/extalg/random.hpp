#pragma once

#include <cstdint>
#include <random>

#include "extalg/graded.hpp"
#include "extalg/linalg.hpp"

namespace extalg {

/// Seeded generator whose output depends only on the seed, so runs are
/// reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }
  /// Uniform in [lo, hi].
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// Every blade coefficient uniform in [-1, 1].
template <Kind K>
Graded<K> random_element(Rng& rng, Dimension dim);

/// Random coefficients on grade p only.
template <Kind K>
Graded<K> random_homogeneous(Rng& rng, Dimension dim, int p);

/// Random element masked to a uniformly drawn grade.
template <Kind K>
Graded<K> random_homogeneous(Rng& rng, Dimension dim);

/// Random symmetric G = A + A^T + d I, A uniform in [-1,1]^{n x n} and d
/// uniform in [-2, 2], resampled until |det G| > min_abs_det and the
/// condition number is below max_condition. Covers indefinite signatures.
Matrix random_metric_matrix(Rng& rng, Dimension dim, double min_abs_det = 1e-3,
                            double max_condition = 1e6);

/// Random matrix with entries in [-1,1] and condition number below max_condition.
Matrix random_invertible_matrix(Rng& rng, Dimension dim, double max_condition = 1e6);

}  // namespace extalg
