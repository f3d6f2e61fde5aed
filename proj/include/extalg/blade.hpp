#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace extalg {

/// Raised for out-of-range grades, dimension mismatches, singular matrices
/// and every other precondition violation on the public surface.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr int kMaxDimension = 12;

/// Number of base vectors of the underlying space, 1 <= n <= 12.
class Dimension {
 public:
  explicit Dimension(int n);

  int n() const noexcept { return n_; }
  std::size_t blade_count() const noexcept { return std::size_t{1} << n_; }
  std::uint32_t full_mask() const noexcept { return (std::uint32_t{1} << n_) - 1; }

  friend bool operator==(Dimension, Dimension) = default;

 private:
  int n_;
};

void require_same_dimension(Dimension a, Dimension b, const char* what);

/// Canonical basis blade e_{j1}^...^e_{jp} (j1 < ... < jp), stored as a bit
/// set where bit k-1 stands for index k.
class BladeIndex {
 public:
  constexpr explicit BladeIndex(std::uint32_t mask) noexcept : mask_(mask) {}

  /// From 1-based indices, which must be strictly increasing.
  static BladeIndex of(std::initializer_list<int> indices);
  static BladeIndex of(const std::vector<int>& indices);

  constexpr std::uint32_t mask() const noexcept { return mask_; }
  constexpr int grade() const noexcept { return std::popcount(mask_); }
  constexpr bool contains(int k) const noexcept { return (mask_ >> (k - 1)) & 1u; }

  /// 1-based indices in increasing order.
  std::vector<int> indices() const;

  friend constexpr bool operator==(BladeIndex, BladeIndex) = default;

 private:
  std::uint32_t mask_;
};

/// Sign of e_A ^ e_B relative to e_{A|B}; 0 when the blades share a factor.
/// Counts the transpositions needed to merge-sort the concatenated indices.
constexpr int wedge_sign(std::uint32_t a, std::uint32_t b) noexcept {
  if (a & b) return 0;
  int swaps = 0;
  // Each factor of b must move past every factor of a with a larger index.
  for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    swaps += std::popcount(a >> (bit + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

constexpr int involution_sign(int grade) noexcept { return (grade & 1) ? -1 : 1; }

constexpr int reversion_sign(int grade) noexcept {
  return ((grade * (grade - 1) / 2) & 1) ? -1 : 1;
}

constexpr long long binomial(int n, int k) noexcept {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Per-dimension lookup tables: masks grouped by grade, and the rank of each
/// mask among the masks of the same grade (increasing numeric order).
struct BladeTables {
  int n = 0;
  std::vector<std::vector<std::uint32_t>> by_grade;
  std::vector<std::uint32_t> rank;
};

/// Built once per dimension on first use; read-only afterwards.
const BladeTables& blade_tables(Dimension dim);

std::string blade_name(BladeIndex blade, char prefix);

}  // namespace extalg
