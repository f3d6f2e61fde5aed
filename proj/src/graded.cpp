#include "extalg/graded.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace extalg {

template <Kind K>
Graded<K>::Graded(Dimension dim) : dim_(dim), coeffs_(dim.blade_count(), 0.0) {}

template <Kind K>
Graded<K>::Graded(Dimension dim, std::vector<double> coeffs)
    : dim_(dim), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != dim_.blade_count()) {
    throw DomainError("expected " + std::to_string(dim_.blade_count()) + " coefficients, got " +
                      std::to_string(coeffs_.size()));
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw DomainError("coefficients must be finite");
  }
}

template <Kind K>
Graded<K> Graded<K>::scalar(Dimension dim, double value) {
  std::vector<double> c(dim.blade_count(), 0.0);
  c[0] = value;
  return Graded(dim, std::move(c));
}

template <Kind K>
Graded<K> Graded<K>::blade(Dimension dim, BladeIndex blade, double coeff) {
  if (blade.mask() > dim.full_mask()) throw DomainError("blade outside the dimension");
  std::vector<double> c(dim.blade_count(), 0.0);
  c[blade.mask()] = coeff;
  return Graded(dim, std::move(c));
}

template <Kind K>
Graded<K> Graded<K>::basis(Dimension dim, int k, double coeff) {
  if (k < 1 || k > dim.n()) {
    throw DomainError("basis index " + std::to_string(k) + " outside 1.." +
                      std::to_string(dim.n()));
  }
  return blade(dim, BladeIndex(std::uint32_t{1} << (k - 1)), coeff);
}

template <Kind K>
Graded<K> Graded<K>::pseudoscalar(Dimension dim) {
  return blade(dim, BladeIndex(dim.full_mask()));
}

template <Kind K>
double Graded<K>::max_abs() const noexcept {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

template <Kind K>
bool Graded<K>::is_homogeneous(int p) const noexcept {
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    if (std::popcount(m) != p && coeffs_[m] != 0.0) return false;
  }
  return true;
}

template <Kind K>
Graded<K> Graded<K>::combine(const Graded& a, double sa, const Graded& b, double sb) {
  require_same_dimension(a.dim_, b.dim_, "linear combination");
  std::vector<double> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = sa * a.coeffs_[i] + sb * b.coeffs_[i];
  return Graded(a.dim_, std::move(c));
}

template <Kind K>
double max_abs_diff(const Graded<K>& a, const Graded<K>& b) {
  require_same_dimension(a.dim(), b.dim(), "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    m = std::max(m, std::abs(a.coeffs()[i] - b.coeffs()[i]));
  }
  return m;
}

template class Graded<Kind::vector>;
template class Graded<Kind::form>;
template double max_abs_diff(const Multivector&, const Multivector&);
template double max_abs_diff(const Multiform&, const Multiform&);

}  // namespace extalg
