#include "extalg/metric.hpp"

#include <cmath>

#include "extalg/algebra.hpp"

namespace extalg {

namespace {

Dimension validated_metric_dim(const Matrix& g) {
  if (!g.square()) throw DomainError("metric must be a square matrix");
  const Dimension dim(g.rows());
  if (max_asymmetry(g) > kSymmetryTolerance) throw DomainError("metric is not symmetric");
  const double det = determinant(g);
  if (!(std::abs(det) > kDegeneracyFloor)) {
    throw DomainError("metric is degenerate (|det| = " + std::to_string(std::abs(det)) + ")");
  }
  return dim;
}

template <Kind K>
void require_grade_one(const Graded<K>& v, const char* what) {
  if (!v.is_homogeneous(1)) throw DomainError(std::string(what) + ": argument must be grade 1");
}

}  // namespace

MetricTensor::MetricTensor(Matrix g) : dim_(validated_metric_dim(g)), g_(std::move(g)) {}

double MetricTensor::operator()(const Multivector& v, const Multivector& w) const {
  require_same_dimension(dim_, v.dim(), "g(v, w)");
  require_same_dimension(dim_, w.dim(), "g(v, w)");
  require_grade_one(v, "g(v, w)");
  require_grade_one(w, "g(v, w)");
  double s = 0.0;
  for (int j = 0; j < dim_.n(); ++j)
    for (int k = 0; k < dim_.n(); ++k) s += v.coeff(1u << j) * g_(j, k) * w.coeff(1u << k);
  return s;
}

MetricExtensor::MetricExtensor(const Matrix& g) {
  const Dimension dim = validated_metric_dim(g);
  Matrix g_inv = extalg::inverse(g, kDegeneracyFloor);
  CompoundMatrix forward(g);
  CompoundMatrix inv(g_inv);
  cache_ = std::make_shared<const Cache>(Cache{dim, g, std::move(g_inv), std::move(forward), std::move(inv)});
}

Multiform MetricExtensor::operator()(const Multivector& v) const {
  require_same_dimension(dim(), v.dim(), "gamma(v)");
  require_grade_one(v, "gamma(v)");
  return extend(*this, v);
}

Multivector MetricExtensor::inverse(const Multiform& omega) const {
  require_same_dimension(dim(), omega.dim(), "gamma^-1(omega)");
  require_grade_one(omega, "gamma^-1(omega)");
  return extend_inverse(*this, omega);
}

MetricExtensor extensor_from_tensor(const MetricTensor& g) { return MetricExtensor(g.matrix()); }

MetricTensor tensor_from_extensor(const MetricExtensor& gamma) { return MetricTensor(gamma.matrix()); }

Multiform extend(const MetricExtensor& gamma, const Multivector& x) {
  require_same_dimension(gamma.dim(), x.dim(), "extend");
  // G is symmetric, so the compound of G equals the compound of G^T.
  return Multiform(x.dim(), gamma.forward_compound().apply(x.coeffs()));
}

Multivector extend_inverse(const MetricExtensor& gamma, const Multiform& phi) {
  require_same_dimension(gamma.dim(), phi.dim(), "extend_inverse");
  return Multivector(phi.dim(), gamma.inverse_compound().apply(phi.coeffs()));
}

ReciprocalBasis reciprocal_basis(const MetricExtensor& gamma) {
  ReciprocalBasis out;
  const Dimension dim = gamma.dim();
  for (int j = 1; j <= dim.n(); ++j) {
    out.vectors.push_back(gamma.inverse(Multiform::basis(dim, j)));
    out.forms.push_back(gamma(Multivector::basis(dim, j)));
  }
  return out;
}

PseudoscalarSet pseudoscalars(const MetricExtensor& gamma) {
  const Dimension dim = gamma.dim();
  auto e_wedge = Multivector::pseudoscalar(dim);
  auto eps_wedge = Multiform::pseudoscalar(dim);
  auto up = extend_inverse(gamma, eps_wedge);
  auto down = extend(gamma, e_wedge);
  return {std::move(e_wedge), std::move(eps_wedge), std::move(up), std::move(down)};
}

int permutation_symbol(const std::vector<int>& upper, const std::vector<int>& lower) {
  if (upper.size() != lower.size()) throw DomainError("permutation symbol: index lists differ in length");
  const int p = static_cast<int>(upper.size());
  Matrix deltas(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) deltas(i, j) = (upper[i] == lower[j]) ? 1.0 : 0.0;
  return p == 0 ? 1 : static_cast<int>(std::lround(determinant(deltas)));
}

}  // namespace extalg
