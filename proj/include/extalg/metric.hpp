#pragma once

#include <memory>
#include <vector>

#include "extalg/graded.hpp"
#include "extalg/linalg.hpp"

namespace extalg {

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kDegeneracyFloor = 1e-10;

/// Symmetric non-degenerate bilinear form g on V, G_jk = g(e_j, e_k).
class MetricTensor {
 public:
  /// Throws DomainError if g is not square of size 1..12, is asymmetric beyond
  /// 1e-12, or has |det| <= 1e-10.
  explicit MetricTensor(Matrix g);

  Dimension dim() const noexcept { return dim_; }
  const Matrix& matrix() const noexcept { return g_; }

  /// g(v, w) for grade-1 multivectors.
  double operator()(const Multivector& v, const Multivector& w) const;

 private:
  Dimension dim_;
  Matrix g_;
};

/// Symmetric one-to-one map gamma: V -> V*, gamma(e_j) = G_jk eps^k, together
/// with its inverse and the compound matrices that extend both to all grades.
/// Immutable; copies share the precomputed caches.
class MetricExtensor {
 public:
  /// Same validation as MetricTensor.
  explicit MetricExtensor(const Matrix& g);

  Dimension dim() const noexcept { return cache_->dim; }
  const Matrix& matrix() const noexcept { return cache_->g; }
  const Matrix& inverse_matrix() const noexcept { return cache_->g_inv; }
  const CompoundMatrix& forward_compound() const noexcept { return cache_->forward; }
  const CompoundMatrix& inverse_compound() const noexcept { return cache_->inverse; }

  /// gamma(v) for a grade-1 multivector v.
  Multiform operator()(const Multivector& v) const;
  /// gamma^{-1}(omega) for a grade-1 multiform omega.
  Multivector inverse(const Multiform& omega) const;

 private:
  struct Cache {
    Dimension dim;
    Matrix g;
    Matrix g_inv;
    CompoundMatrix forward;
    CompoundMatrix inverse;
  };
  std::shared_ptr<const Cache> cache_;
};

MetricExtensor extensor_from_tensor(const MetricTensor& g);
MetricTensor tensor_from_extensor(const MetricExtensor& gamma);

/// Extension of gamma to the whole exterior algebra: identity on scalars and
/// e_J -> gamma(e_j1)^...^gamma(e_jp), i.e. coefficient det G[J,K] on eps^K.
Multiform extend(const MetricExtensor& gamma, const Multivector& x);
/// Extension of gamma^{-1}; inverse of extend.
Multivector extend_inverse(const MetricExtensor& gamma, const Multiform& phi);

/// e^j = gamma^{-1}(eps^j) and eps_j = gamma(e_j), j = 1..n.
struct ReciprocalBasis {
  std::vector<Multivector> vectors;
  std::vector<Multiform> forms;
};
ReciprocalBasis reciprocal_basis(const MetricExtensor& gamma);

/// e_wedge = e_1^...^e_n, eps_wedge = eps^1^...^eps^n and their metric
/// partners e_wedge_up = extend_inverse(eps_wedge), eps_wedge_down =
/// extend(e_wedge).
struct PseudoscalarSet {
  Multivector e_wedge;
  Multiform eps_wedge;
  Multivector e_wedge_up;
  Multiform eps_wedge_down;
};
PseudoscalarSet pseudoscalars(const MetricExtensor& gamma);

/// Generalized permutation symbol: det of the p x p matrix of Kronecker
/// deltas delta(upper_i, lower_j). Indices are 1-based; sizes must match.
int permutation_symbol(const std::vector<int>& upper, const std::vector<int>& lower);

}  // namespace extalg
