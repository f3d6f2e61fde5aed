#include "extalg/blade.hpp"

#include <array>
#include <memory>
#include <mutex>

namespace extalg {

Dimension::Dimension(int n) : n_(n) {
  if (n < 1 || n > kMaxDimension) {
    throw DomainError("dimension must be in [1, " + std::to_string(kMaxDimension) +
                      "], got " + std::to_string(n));
  }
}

void require_same_dimension(Dimension a, Dimension b, const char* what) {
  if (a != b) {
    throw DomainError(std::string(what) + ": dimension mismatch (" + std::to_string(a.n()) +
                      " vs " + std::to_string(b.n()) + ")");
  }
}

BladeIndex BladeIndex::of(std::initializer_list<int> indices) {
  return of(std::vector<int>(indices));
}

BladeIndex BladeIndex::of(const std::vector<int>& indices) {
  std::uint32_t mask = 0;
  int previous = 0;
  for (int k : indices) {
    if (k < 1 || k > kMaxDimension) throw DomainError("blade index out of range");
    if (k <= previous) throw DomainError("blade indices must be strictly increasing");
    mask |= std::uint32_t{1} << (k - 1);
    previous = k;
  }
  return BladeIndex(mask);
}

std::vector<int> BladeIndex::indices() const {
  std::vector<int> out;
  for (std::uint32_t rest = mask_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

namespace {

std::unique_ptr<BladeTables> build_tables(int n) {
  auto t = std::make_unique<BladeTables>();
  t->n = n;
  t->by_grade.resize(n + 1);
  t->rank.resize(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    auto& bucket = t->by_grade[std::popcount(m)];
    t->rank[m] = static_cast<std::uint32_t>(bucket.size());
    bucket.push_back(m);
  }
  return t;
}

}  // namespace

const BladeTables& blade_tables(Dimension dim) {
  static std::array<std::once_flag, kMaxDimension + 1> once;
  static std::array<std::unique_ptr<BladeTables>, kMaxDimension + 1> tables;
  const int n = dim.n();
  std::call_once(once[n], [n] { tables[n] = build_tables(n); });
  return *tables[n];
}

std::string blade_name(BladeIndex blade, char prefix) {
  if (blade.mask() == 0) return "1";
  std::string out;
  for (int k : blade.indices()) {
    if (!out.empty()) out += '^';
    out += prefix;
    out += std::to_string(k);
  }
  return out;
}

}  // namespace extalg
