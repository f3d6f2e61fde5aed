#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "extalg/graded.hpp"

namespace extalg {

/// Blade coefficients of the duality contractions, one entry per pair of masks
/// (A, B) with A a subset of B:
///   left(A,B)  = < rev(eps^A) ^ eps^{B\A}, e_B >
///   right(A,B) = < e_B, eps^{B\A} ^ rev(eps^A) >
/// Each is +-1. Entries with A not a subset of B are 0.
class ContractionSigns {
 public:
  explicit ContractionSigns(Dimension dim);

  Dimension dim() const noexcept { return dim_; }
  int left(std::uint32_t a, std::uint32_t b) const noexcept { return decode(entry(a, b), kLeftNeg); }
  int right(std::uint32_t a, std::uint32_t b) const noexcept { return decode(entry(a, b), kRightNeg); }

  /// Copy with the right-contraction sign of (a, b) flipped. Test hook only.
  ContractionSigns with_flipped_right(std::uint32_t a, std::uint32_t b) const;

 private:
  static constexpr std::uint8_t kValid = 1;
  static constexpr std::uint8_t kLeftNeg = 2;
  static constexpr std::uint8_t kRightNeg = 4;

  static int decode(std::uint8_t e, std::uint8_t neg_bit) noexcept {
    if (!(e & kValid)) return 0;
    return (e & neg_bit) ? -1 : 1;
  }
  std::uint8_t entry(std::uint32_t a, std::uint32_t b) const noexcept {
    return table_[(std::size_t(b) << dim_.n()) | a];
  }

  Dimension dim_;
  std::vector<std::uint8_t> table_;
};

/// Shared table for a dimension, built on first use and read-only afterwards.
const ContractionSigns& contraction_signs(Dimension dim);

/// <phi, x>: the duality pairing, sum_J phi_J x_J in canonical coordinates.
double pairing(const Multiform& phi, const Multivector& x);
/// <x, phi> = <phi, x>.
double pairing(const Multivector& x, const Multiform& phi);

/// <phi, x| : left contraction of a multivector by a multiform.
Multivector left_contract(const Multiform& phi, const Multivector& x);
/// |x, phi> : right contraction of a multivector by a multiform.
Multivector right_contract(const Multivector& x, const Multiform& phi);
/// <x, phi| : left contraction of a multiform by a multivector.
Multiform left_contract(const Multivector& x, const Multiform& phi);
/// |phi, x> : right contraction of a multiform by a multivector.
Multiform right_contract(const Multiform& phi, const Multivector& x);

namespace testing {

/// While alive, the shared table for dim has the right-contraction sign of
/// (a, b) flipped. Not thread-safe against concurrent construction.
class ScopedSignCorruption {
 public:
  ScopedSignCorruption(Dimension dim, std::uint32_t a, std::uint32_t b);
  ~ScopedSignCorruption();
  ScopedSignCorruption(const ScopedSignCorruption&) = delete;
  ScopedSignCorruption& operator=(const ScopedSignCorruption&) = delete;

 private:
  Dimension dim_;
  const ContractionSigns* original_;
  std::unique_ptr<ContractionSigns> corrupted_;
};

}  // namespace testing

}  // namespace extalg
