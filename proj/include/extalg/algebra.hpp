#pragma once

#include <vector>

#include "extalg/graded.hpp"
#include "extalg/linalg.hpp"

namespace extalg {

/// The grade-p slot x_p of the (n+1)-tuple (x_0, ..., x_n): C(n,p)
/// coefficients over the grade-p blades in increasing mask order.
template <Kind K>
struct GradePart {
  Dimension dim;
  int grade;
  std::vector<double> coeffs;
};

/// [a]_p as a compact grade-p component.
template <Kind K>
GradePart<K> component(const Graded<K>& a, int p);

/// The p-homogeneous element whose only non-null component is part.
template <Kind K>
Graded<K> include(const GradePart<K>& part);

/// include(component(a, p)): keeps only the grade-p coefficients.
template <Kind K>
Graded<K> grade_project(const Graded<K>& a, int p);

/// Exterior product. On blades e_A ^ e_B = wedge_sign(A,B) e_{A|B}, zero when
/// A and B intersect.
template <Kind K>
Graded<K> wedge(const Graded<K>& a, const Graded<K>& b);

/// Grade p scaled by (-1)^p.
template <Kind K>
Graded<K> grade_involution(const Graded<K>& a);

/// Grade p scaled by (-1)^{p(p-1)/2}.
template <Kind K>
Graded<K> reversion(const Graded<K>& a);

/// Coordinates of the same multivector in the basis e'_j = sum_k M(j,k) e_k.
/// Throws DomainError when |det M| <= det_floor.
Multivector change_basis(const Multivector& x, const Matrix& m, double det_floor = 1e-12);
/// Coordinates of the same multiform in the dual basis of e'_j; the pairing
/// of transformed arguments equals the pairing of the originals.
Multiform change_basis(const Multiform& phi, const Matrix& m, double det_floor = 1e-12);

}  // namespace extalg
