#include "extalg/duality.hpp"

#include <array>
#include <atomic>
#include <mutex>

namespace extalg {

ContractionSigns::ContractionSigns(Dimension dim)
    : dim_(dim), table_(std::size_t{1} << (2 * dim.n()), 0) {
  const std::uint32_t full = dim.full_mask();
  for (std::uint32_t b = 0; b <= full; ++b) {
    for (std::uint32_t a = b;; a = (a - 1) & b) {
      const std::uint32_t rest = b & ~a;
      const int rev = reversion_sign(std::popcount(a));
      // Pairing of canonical blades is the Kronecker delta on masks, so each
      // defining pairing reduces to the sign of the wedge that rebuilds e_B.
      const int left = rev * wedge_sign(a, rest);
      const int right = rev * wedge_sign(rest, a);
      std::uint8_t e = kValid;
      if (left < 0) e |= kLeftNeg;
      if (right < 0) e |= kRightNeg;
      table_[(std::size_t(b) << dim.n()) | a] = e;
      if (a == 0) break;
    }
  }
}

ContractionSigns ContractionSigns::with_flipped_right(std::uint32_t a, std::uint32_t b) const {
  ContractionSigns copy = *this;
  auto& e = copy.table_.at((std::size_t(b) << dim_.n()) | a);
  if (!(e & kValid)) throw DomainError("sign corruption: blade a is not contained in b");
  e ^= kRightNeg;
  return copy;
}

namespace {

struct SignRegistry {
  std::array<std::once_flag, kMaxDimension + 1> once;
  std::array<std::unique_ptr<ContractionSigns>, kMaxDimension + 1> owned;
  std::array<std::atomic<const ContractionSigns*>, kMaxDimension + 1> current{};
};

SignRegistry& registry() {
  static SignRegistry r;
  return r;
}

}  // namespace

const ContractionSigns& contraction_signs(Dimension dim) {
  auto& r = registry();
  const int n = dim.n();
  std::call_once(r.once[n], [&r, dim, n] {
    r.owned[n] = std::make_unique<ContractionSigns>(dim);
    r.current[n].store(r.owned[n].get(), std::memory_order_release);
  });
  return *r.current[n].load(std::memory_order_acquire);
}

double pairing(const Multiform& phi, const Multivector& x) {
  require_same_dimension(phi.dim(), x.dim(), "pairing");
  double s = 0.0;
  const auto a = phi.coeffs();
  const auto b = x.coeffs();
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double pairing(const Multivector& x, const Multiform& phi) { return pairing(phi, x); }

namespace {

enum class Side { left, right };

// out[B\A] += sign(A,B) * small[A] * big[B] over all A subset of B.
template <Side S, class Out, class Small, class Big>
Out contract(const Small& small, const Big& big, const char* what) {
  require_same_dimension(small.dim(), big.dim(), what);
  const Dimension dim = small.dim();
  const ContractionSigns& signs = contraction_signs(dim);
  const auto sc = small.coeffs();
  const auto bc = big.coeffs();
  std::vector<double> out(bc.size(), 0.0);
  for (std::uint32_t b = 0; b <= dim.full_mask(); ++b) {
    const double bv = bc[b];
    if (bv == 0.0) continue;
    for (std::uint32_t a = b;; a = (a - 1) & b) {
      const double av = sc[a];
      if (av != 0.0) {
        const int sign = (S == Side::left) ? signs.left(a, b) : signs.right(a, b);
        out[b & ~a] += sign * av * bv;
      }
      if (a == 0) break;
    }
  }
  return Out(dim, std::move(out));
}

}  // namespace

Multivector left_contract(const Multiform& phi, const Multivector& x) {
  return contract<Side::left, Multivector>(phi, x, "left contraction");
}

Multivector right_contract(const Multivector& x, const Multiform& phi) {
  return contract<Side::right, Multivector>(phi, x, "right contraction");
}

Multiform left_contract(const Multivector& x, const Multiform& phi) {
  return contract<Side::left, Multiform>(x, phi, "left contraction");
}

Multiform right_contract(const Multiform& phi, const Multivector& x) {
  return contract<Side::right, Multiform>(x, phi, "right contraction");
}

namespace testing {

ScopedSignCorruption::ScopedSignCorruption(Dimension dim, std::uint32_t a, std::uint32_t b)
    : dim_(dim), original_(&contraction_signs(dim)) {
  corrupted_ = std::make_unique<ContractionSigns>(original_->with_flipped_right(a, b));
  registry().current[dim.n()].store(corrupted_.get(), std::memory_order_release);
}

ScopedSignCorruption::~ScopedSignCorruption() {
  registry().current[dim_.n()].store(original_, std::memory_order_release);
}

}  // namespace testing

}  // namespace extalg
