#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "extalg/blade.hpp"

namespace extalg {

/// Which exterior algebra an element lives in: the contravariant one over V
/// (multivectors) or the covariant one over V* (multiforms).
enum class Kind { vector, form };

/// Dense element of an exterior algebra: one real coefficient per canonical
/// blade, indexed by blade mask. The two instantiations are distinct types so
/// that pairings and contractions only accept the argument kinds they are
/// defined for.
template <Kind K>
class Graded {
 public:
  static constexpr Kind kind = K;

  explicit Graded(Dimension dim);
  /// Throws DomainError unless coeffs has 2^n finite entries.
  Graded(Dimension dim, std::vector<double> coeffs);

  static Graded scalar(Dimension dim, double value);
  static Graded blade(Dimension dim, BladeIndex blade, double coeff = 1.0);
  /// e_k for multivectors, eps^k for multiforms (k is 1-based).
  static Graded basis(Dimension dim, int k, double coeff = 1.0);
  /// e_1^...^e_n, resp. eps^1^...^eps^n.
  static Graded pseudoscalar(Dimension dim);

  Dimension dim() const noexcept { return dim_; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double operator[](BladeIndex b) const { return coeffs_.at(b.mask()); }
  double coeff(std::uint32_t mask) const { return coeffs_.at(mask); }
  double scalar_part() const noexcept { return coeffs_[0]; }

  /// Largest absolute coefficient.
  double max_abs() const noexcept;
  /// True when every coefficient outside grade p is zero.
  bool is_homogeneous(int p) const noexcept;

  friend Graded operator+(const Graded& a, const Graded& b) { return combine(a, 1.0, b, 1.0); }
  friend Graded operator-(const Graded& a, const Graded& b) { return combine(a, 1.0, b, -1.0); }
  friend Graded operator-(const Graded& a) { return a * -1.0; }
  friend Graded operator*(const Graded& a, double s) { return combine(a, s, a, 0.0); }
  friend Graded operator*(double s, const Graded& a) { return a * s; }
  friend Graded operator/(const Graded& a, double s) { return a * (1.0 / s); }

  friend bool operator==(const Graded& a, const Graded& b) {
    return a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static Graded combine(const Graded& a, double sa, const Graded& b, double sb);

  Dimension dim_;
  std::vector<double> coeffs_;
};

using Multivector = Graded<Kind::vector>;
using Multiform = Graded<Kind::form>;

extern template class Graded<Kind::vector>;
extern template class Graded<Kind::form>;

/// Max |a_J - b_J| over all blades.
template <Kind K>
double max_abs_diff(const Graded<K>& a, const Graded<K>& b);

}  // namespace extalg
