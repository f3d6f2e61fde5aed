#include "extalg/random.hpp"

#include <bit>
#include <cmath>

namespace extalg {

template <Kind K>
Graded<K> random_element(Rng& rng, Dimension dim) {
  std::vector<double> c(dim.blade_count());
  for (double& v : c) v = rng.uniform(-1.0, 1.0);
  return Graded<K>(dim, std::move(c));
}

template <Kind K>
Graded<K> random_homogeneous(Rng& rng, Dimension dim, int p) {
  if (p < 0 || p > dim.n()) throw DomainError("random_homogeneous: grade out of range");
  std::vector<double> c(dim.blade_count(), 0.0);
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (std::popcount(m) == p) c[m] = rng.uniform(-1.0, 1.0);
  }
  return Graded<K>(dim, std::move(c));
}

template <Kind K>
Graded<K> random_homogeneous(Rng& rng, Dimension dim) {
  return random_homogeneous<K>(rng, dim, rng.uniform_int(0, dim.n()));
}

Matrix random_metric_matrix(Rng& rng, Dimension dim, double min_abs_det, double max_condition) {
  const int n = dim.n();
  for (;;) {
    Matrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
    const double d = rng.uniform(-2.0, 2.0);
    Matrix g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = a(i, j) + a(j, i) + (i == j ? d : 0.0);
    if (std::abs(determinant(g)) > min_abs_det && condition_number(g) < max_condition) return g;
  }
}

Matrix random_invertible_matrix(Rng& rng, Dimension dim, double max_condition) {
  const int n = dim.n();
  for (;;) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
    if (condition_number(m) < max_condition) return m;
  }
}

template Multivector random_element<Kind::vector>(Rng&, Dimension);
template Multiform random_element<Kind::form>(Rng&, Dimension);
template Multivector random_homogeneous<Kind::vector>(Rng&, Dimension, int);
template Multiform random_homogeneous<Kind::form>(Rng&, Dimension, int);
template Multivector random_homogeneous<Kind::vector>(Rng&, Dimension);
template Multiform random_homogeneous<Kind::form>(Rng&, Dimension);

}  // namespace extalg
