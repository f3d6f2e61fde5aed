#include "extalg/algebra.hpp"

#include <bit>
#include <cmath>

namespace extalg {

namespace {

void require_grade(Dimension dim, int p) {
  if (p < 0 || p > dim.n()) {
    throw DomainError("grade " + std::to_string(p) + " outside 0.." + std::to_string(dim.n()));
  }
}

template <Kind K, typename SignOf>
Graded<K> scale_by_grade(const Graded<K>& a, SignOf sign_of) {
  std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t m = 0; m < c.size(); ++m) c[m] *= sign_of(std::popcount(m));
  return Graded<K>(a.dim(), std::move(c));
}

}  // namespace

template <Kind K>
GradePart<K> component(const Graded<K>& a, int p) {
  require_grade(a.dim(), p);
  const auto& masks = blade_tables(a.dim()).by_grade[p];
  GradePart<K> part{a.dim(), p, std::vector<double>(masks.size())};
  for (std::size_t i = 0; i < masks.size(); ++i) part.coeffs[i] = a.coeff(masks[i]);
  return part;
}

template <Kind K>
Graded<K> include(const GradePart<K>& part) {
  require_grade(part.dim, part.grade);
  const auto& masks = blade_tables(part.dim).by_grade[part.grade];
  if (part.coeffs.size() != masks.size()) {
    throw DomainError("grade-" + std::to_string(part.grade) + " component needs " +
                      std::to_string(masks.size()) + " coefficients");
  }
  std::vector<double> c(part.dim.blade_count(), 0.0);
  for (std::size_t i = 0; i < masks.size(); ++i) c[masks[i]] = part.coeffs[i];
  return Graded<K>(part.dim, std::move(c));
}

template <Kind K>
Graded<K> grade_project(const Graded<K>& a, int p) {
  return include(component(a, p));
}

template <Kind K>
Graded<K> wedge(const Graded<K>& a, const Graded<K>& b) {
  require_same_dimension(a.dim(), b.dim(), "wedge");
  const std::uint32_t full = a.dim().full_mask();
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<double> out(ac.size(), 0.0);
  for (std::uint32_t am = 0; am <= full; ++am) {
    const double av = ac[am];
    if (av == 0.0) continue;
    const std::uint32_t free = full & ~am;
    // Every submask of the complement of am, including the empty one.
    for (std::uint32_t bm = free;; bm = (bm - 1) & free) {
      const double bv = bc[bm];
      if (bv != 0.0) out[am | bm] += wedge_sign(am, bm) * av * bv;
      if (bm == 0) break;
    }
  }
  return Graded<K>(a.dim(), std::move(out));
}

template <Kind K>
Graded<K> grade_involution(const Graded<K>& a) {
  return scale_by_grade(a, involution_sign);
}

template <Kind K>
Graded<K> reversion(const Graded<K>& a) {
  return scale_by_grade(a, reversion_sign);
}

namespace {

void require_basis_matrix(Dimension dim, const Matrix& m) {
  if (m.rows() != dim.n() || m.cols() != dim.n()) {
    throw DomainError("change_basis: expected a " + std::to_string(dim.n()) + "x" +
                      std::to_string(dim.n()) + " matrix");
  }
}

}  // namespace

Multivector change_basis(const Multivector& x, const Matrix& m, double det_floor) {
  require_basis_matrix(x.dim(), m);
  // Vector coordinates transform by M^{-T}; grade p by its p-th compound.
  const Matrix inv_t = inverse(m, det_floor).transpose();
  return Multivector(x.dim(), CompoundMatrix(inv_t).apply(x.coeffs()));
}

Multiform change_basis(const Multiform& phi, const Matrix& m, double det_floor) {
  require_basis_matrix(phi.dim(), m);
  if (!(std::abs(determinant(m)) > det_floor)) throw DomainError("change_basis: singular basis matrix");
  return Multiform(phi.dim(), CompoundMatrix(m).apply(phi.coeffs()));
}

#define EXTALG_INSTANTIATE(K)                                   \
  template GradePart<K> component(const Graded<K>&, int);       \
  template Graded<K> include(const GradePart<K>&);              \
  template Graded<K> grade_project(const Graded<K>&, int);      \
  template Graded<K> wedge(const Graded<K>&, const Graded<K>&); \
  template Graded<K> grade_involution(const Graded<K>&);        \
  template Graded<K> reversion(const Graded<K>&);

EXTALG_INSTANTIATE(Kind::vector)
EXTALG_INSTANTIATE(Kind::form)

#undef EXTALG_INSTANTIATE

}  // namespace extalg
