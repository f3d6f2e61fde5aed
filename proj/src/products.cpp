#include "extalg/products.hpp"

#include <cmath>

#include "extalg/algebra.hpp"
#include "extalg/duality.hpp"

namespace extalg {

namespace {

constexpr double kNormFloor = 1e-12;

double checked_norm(double norm) {
  if (!(std::abs(norm) >= kNormFloor)) {
    throw InternalInconsistency("pseudoscalar norm " + std::to_string(norm) +
                                " vanishes for an admissible metric");
  }
  return norm;
}

Multiform forward(const CompoundMatrix& g, const Multivector& x) {
  require_same_dimension(g.dim(), x.dim(), "metric product");
  return Multiform(x.dim(), g.apply(x.coeffs()));
}

Multivector lcontract_forward(const CompoundMatrix& g, const Multivector& x, const Multivector& y) {
  return left_contract(forward(g, x), y);
}

double pseudoscalar_norm(const CompoundMatrix& g) {
  const auto e = Multivector::pseudoscalar(g.dim());
  return checked_norm(pairing(forward(g, e), e));
}

Multivector formula_inverse(const CompoundMatrix& g, const Multiform& phi, FormulaVariant variant) {
  require_same_dimension(g.dim(), phi.dim(), "inversion formula");
  const auto e = Multivector::pseudoscalar(phi.dim());
  const auto e_rev = reversion(e);
  const double norm = pseudoscalar_norm(g);
  const Multivector lhs =
      variant == FormulaVariant::first ? lcontract_forward(g, left_contract(phi, e), e_rev)
                                       : lcontract_forward(g, left_contract(phi, e_rev), e);
  return lhs / norm;
}

Matrix checked_metric(const Matrix& g) {
  if (!g.square()) throw DomainError("metric must be a square matrix");
  (void)Dimension(g.rows());
  if (max_asymmetry(g) > kSymmetryTolerance) throw DomainError("metric is not symmetric");
  if (!(std::abs(determinant(g)) > kDegeneracyFloor)) throw DomainError("metric is degenerate");
  return g;
}

}  // namespace

double scalar_product(const MetricExtensor& gamma, const Multivector& x, const Multivector& y) {
  return pairing(extend(gamma, x), y);
}

double scalar_product(const MetricExtensor& gamma, const Multiform& phi, const Multiform& psi) {
  return pairing(extend_inverse(gamma, phi), psi);
}

Multivector lcontract(const MetricExtensor& gamma, const Multivector& x, const Multivector& y) {
  return left_contract(extend(gamma, x), y);
}

Multivector rcontract(const MetricExtensor& gamma, const Multivector& y, const Multivector& x) {
  return right_contract(y, extend(gamma, x));
}

Multiform lcontract(const MetricExtensor& gamma, const Multiform& phi, const Multiform& psi) {
  return left_contract(extend_inverse(gamma, phi), psi);
}

Multiform rcontract(const MetricExtensor& gamma, const Multiform& psi, const Multiform& phi) {
  return right_contract(psi, extend_inverse(gamma, phi));
}

Multivector invert_metric_via_formula(const Matrix& g, const Multiform& omega, FormulaVariant variant) {
  const CompoundMatrix compound(checked_metric(g));
  if (!omega.is_homogeneous(1)) throw DomainError("inversion formula: omega must be grade 1");
  return formula_inverse(compound, omega, variant);
}

Matrix inverse_via_formula(const Matrix& g, FormulaVariant variant) {
  const CompoundMatrix compound(checked_metric(g));
  const Dimension dim = compound.dim();
  Matrix out(dim.n(), dim.n());
  for (int j = 0; j < dim.n(); ++j) {
    const Multivector row = formula_inverse(compound, Multiform::basis(dim, j + 1), variant);
    for (int k = 0; k < dim.n(); ++k) out(j, k) = row.coeff(1u << k);
  }
  return out;
}

Multivector invert_extension_via_formula(const MetricExtensor& gamma, const Multiform& phi,
                                         FormulaVariant variant) {
  return formula_inverse(gamma.forward_compound(), phi, variant);
}

Multivector expand_multivector(const MetricExtensor& gamma, const Multivector& x, FormulaVariant variant) {
  const auto e = Multivector::pseudoscalar(gamma.dim());
  const auto e_rev = reversion(e);
  const double norm = checked_norm(scalar_product(gamma, e, e));
  const Multivector twice = variant == FormulaVariant::first
                                ? lcontract(gamma, lcontract(gamma, x, e), e_rev)
                                : lcontract(gamma, lcontract(gamma, x, e_rev), e);
  return twice / norm;
}

Multiform expand_multiform(const MetricExtensor& gamma, const Multiform& phi, FormulaVariant variant) {
  const auto eps = Multiform::pseudoscalar(gamma.dim());
  const auto eps_rev = reversion(eps);
  const double norm = checked_norm(scalar_product(gamma, eps, eps));
  const Multiform twice = variant == FormulaVariant::first
                              ? lcontract(gamma, lcontract(gamma, phi, eps), eps_rev)
                              : lcontract(gamma, lcontract(gamma, phi, eps_rev), eps);
  return twice / norm;
}

}  // namespace extalg
