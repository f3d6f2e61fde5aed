#pragma once

#include <stdexcept>

#include "extalg/graded.hpp"
#include "extalg/linalg.hpp"
#include "extalg/metric.hpp"

namespace extalg {

/// Thrown when a quantity that admissible metrics can never produce shows up,
/// e.g. a metric pseudoscalar norm below 1e-12.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Metric products. Each one is the duality operation applied after the
// extension (or inverse extension) of its first metric argument.

/// x . y = <gamma(x), y>
double scalar_product(const MetricExtensor& gamma, const Multivector& x, const Multivector& y);
/// phi . psi = <gamma^{-1}(phi), psi>
double scalar_product(const MetricExtensor& gamma, const Multiform& phi, const Multiform& psi);

/// x _| y = <gamma(x), y|
Multivector lcontract(const MetricExtensor& gamma, const Multivector& x, const Multivector& y);
/// y |_ x = |y, gamma(x)>
Multivector rcontract(const MetricExtensor& gamma, const Multivector& y, const Multivector& x);
/// phi _| psi = <gamma^{-1}(phi), psi|
Multiform lcontract(const MetricExtensor& gamma, const Multiform& phi, const Multiform& psi);
/// psi |_ phi = |psi, gamma^{-1}(phi)>
Multiform rcontract(const MetricExtensor& gamma, const Multiform& psi, const Multiform& phi);

/// The two written forms of each inversion/expansion formula, which differ in
/// which pseudoscalar carries the reversion.
enum class FormulaVariant { first, second };

/// gamma^{-1}(omega) for a grade-1 omega, from G alone:
///   first:  <omega, e_wedge|      _| rev(e_wedge) / (e_wedge . e_wedge)
///   second: <omega, rev(e_wedge)| _| e_wedge      / (e_wedge . e_wedge)
/// G^{-1} is never formed. Throws DomainError for an inadmissible G.
Multivector invert_metric_via_formula(const Matrix& g, const Multiform& omega,
                                      FormulaVariant variant = FormulaVariant::first);

/// The matrix whose row j holds gamma^{-1}(eps^j), computed by the formula above.
Matrix inverse_via_formula(const Matrix& g, FormulaVariant variant = FormulaVariant::first);

/// Same formula on multiforms of any grade; uses only the forward extension of
/// gamma.
Multivector invert_extension_via_formula(const MetricExtensor& gamma, const Multiform& phi,
                                         FormulaVariant variant = FormulaVariant::first);

/// x rebuilt as (x _| e_wedge) _| rev(e_wedge) / (e_wedge . e_wedge); the second
/// variant moves the reversion to the inner pseudoscalar.
Multivector expand_multivector(const MetricExtensor& gamma, const Multivector& x,
                               FormulaVariant variant = FormulaVariant::first);
/// phi rebuilt as (phi _| eps_wedge) _| rev(eps_wedge) / (eps_wedge . eps_wedge).
Multiform expand_multiform(const MetricExtensor& gamma, const Multiform& phi,
                           FormulaVariant variant = FormulaVariant::first);

}  // namespace extalg
