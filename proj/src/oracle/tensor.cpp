#include "extalg/oracle/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace extalg::oracle {

namespace {

constexpr Kind opposite(Kind k) { return k == Kind::vector ? Kind::form : Kind::vector; }

std::size_t power(int n, int p) {
  std::size_t r = 1;
  for (int i = 0; i < p; ++i) r *= static_cast<std::size_t>(n);
  return r;
}

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

std::vector<int> decode(std::size_t flat, int n, int p) {
  std::vector<int> t(p);
  for (int i = p - 1; i >= 0; --i) {
    t[i] = static_cast<int>(flat % n);
    flat /= n;
  }
  return t;
}

std::size_t encode(const std::vector<int>& t, int n) {
  std::size_t f = 0;
  for (int j : t) f = f * n + static_cast<std::size_t>(j);
  return f;
}

int permutation_sign(const std::vector<int>& v) {
  int inversions = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++inversions;
  return (inversions & 1) ? -1 : 1;
}

}  // namespace

template <Kind K>
Tensor<K>::Tensor(int n, int p) : n_(n), p_(p) {
  if (n < 1 || n > kMaxOracleDimension) throw DomainError("oracle tensors need 1 <= n <= 4");
  if (p < 0 || p > n) throw DomainError("oracle tensor grade out of range");
  c_.assign(power(n, p), 0.0);
}

template <Kind K>
Tensor<K>::Tensor(int n, int p, std::vector<double> components) : Tensor(n, p) {
  if (components.size() != c_.size()) throw DomainError("oracle tensor: component count mismatch");
  c_ = std::move(components);
}

template <Kind K>
double Tensor<K>::at(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != p_) throw DomainError("oracle tensor: tuple length mismatch");
  return c_.at(encode(tuple, n_));
}

template <Kind K>
double& Tensor<K>::at(const std::vector<int>& tuple) {
  if (static_cast<int>(tuple.size()) != p_) throw DomainError("oracle tensor: tuple length mismatch");
  return c_.at(encode(tuple, n_));
}

template <Kind K>
double Tensor<K>::antisymmetry_violation() const {
  double worst = 0.0;
  for (std::size_t f = 0; f < c_.size(); ++f) {
    const auto t = decode(f, n_, p_);
    for (int i = 0; i + 1 < p_; ++i) {
      auto s = t;
      std::swap(s[i], s[i + 1]);
      worst = std::max(worst, std::abs(c_[f] + c_[encode(s, n_)]));
    }
  }
  return worst;
}

template <Kind K>
Tensor<K> basis_tensor(int n, int k) {
  if (k < 1 || k > n) throw DomainError("oracle basis index out of range");
  Tensor<K> t(n, 1);
  t.at({k - 1}) = 1.0;
  return t;
}

double tensor_pairing(const TensorPForm& phi, const TensorPVector& x) {
  if (phi.n() != x.n()) throw DomainError("oracle pairing: dimension mismatch");
  if (phi.grade() != x.grade()) throw DomainError("oracle pairing: grade mismatch");
  const auto& a = phi.components();
  const auto& b = x.components();
  if (phi.grade() == 0) return a[0] * b[0];
  double s = 0.0;
  for (std::size_t f = 0; f < a.size(); ++f) s += a[f] * b[f];
  return phi.grade() == 1 ? s : s / factorial(phi.grade());
}

namespace {

double pair_any(const TensorPForm& phi, const TensorPVector& x) { return tensor_pairing(phi, x); }
double pair_any(const TensorPVector& x, const TensorPForm& phi) { return tensor_pairing(phi, x); }

}  // namespace

namespace {

struct SignedPermutation {
  std::vector<int> sigma;
  int sign;
};

const std::vector<SignedPermutation>& permutations(int r) {
  static const auto table = [] {
    std::vector<std::vector<SignedPermutation>> t(kMaxOracleDimension + 1);
    for (int k = 0; k <= kMaxOracleDimension; ++k) {
      std::vector<int> sigma(k);
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        t[k].push_back({sigma, permutation_sign(sigma)});
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return t;
  }();
  return table[r];
}

}  // namespace

template <Kind K>
Tensor<K> tensor_wedge(const Tensor<K>& a, const Tensor<K>& b) {
  if (a.n() != b.n()) throw DomainError("oracle wedge: dimension mismatch");
  const int n = a.n();
  const int p = a.grade();
  const int q = b.grade();
  const int r = p + q;
  if (r > n) throw DomainError("oracle wedge: grade exceeds dimension");
  std::vector<double> c(power(n, r), 0.0);
  const double norm = factorial(p) * factorial(q);
  const auto& ca = a.components();
  const auto& cb = b.components();
  for (std::size_t f = 0; f < c.size(); ++f) {
    const auto t = decode(f, n, r);
    double s = 0.0;
    for (const auto& [sigma, sign] : permutations(r)) {
      std::size_t left = 0, right = 0;
      for (int i = 0; i < p; ++i) left = left * n + static_cast<std::size_t>(t[sigma[i]]);
      for (int i = 0; i < q; ++i) right = right * n + static_cast<std::size_t>(t[sigma[p + i]]);
      s += sign * ca[left] * cb[right];
    }
    c[f] = s / norm;
  }
  return Tensor<K>(n, r, std::move(c));
}

template <Kind K>
Tensor<K> tensor_reversion(const Tensor<K>& a) {
  std::vector<double> c(a.components().size());
  for (std::size_t f = 0; f < c.size(); ++f) {
    auto t = decode(f, a.n(), a.grade());
    std::reverse(t.begin(), t.end());
    c[f] = a.at(t);
  }
  return Tensor<K>(a.n(), a.grade(), std::move(c));
}

namespace {

enum class Side { left, right };

// Literal evaluation of the defining sums. `small` is the contracting element
// of grade p, `big` the contracted one of grade q >= p; the result lives in
// big's algebra with grade q - p.
template <Side S, Kind Small>
Tensor<opposite(Small)> contraction(const Tensor<Small>& small, const Tensor<opposite(Small)>& big) {
  constexpr Kind Big = opposite(Small);
  if (small.n() != big.n()) throw DomainError("oracle contraction: dimension mismatch");
  const int n = small.n();
  const int p = small.grade();
  const int q = big.grade();
  if (p > q) throw DomainError("oracle contraction: grade of contracting element exceeds q");
  const Tensor<Small> rev = tensor_reversion(small);
  if (p == q) {
    return Tensor<Big>(n, 0, {pair_any(rev, big)});
  }
  const int r = q - p;
  std::vector<double> acc(power(n, r), 0.0);
  for (std::size_t f = 0; f < acc.size(); ++f) {
    const auto js = decode(f, n, r);
    Tensor<Small> chain(n, 0, {1.0});
    for (int j : js) chain = tensor_wedge(chain, basis_tensor<Small>(n, j + 1));
    const Tensor<Small> probe = (S == Side::left) ? tensor_wedge(rev, chain) : tensor_wedge(chain, rev);
    const double coeff = pair_any(probe, big);
    if (coeff == 0.0) continue;
    // e_j1^...^e_jr has the same components as the chain of dual covectors.
    const auto& blade = chain.components();
    for (std::size_t g = 0; g < acc.size(); ++g) acc[g] += coeff * blade[g];
  }
  const double norm = factorial(r);
  for (double& v : acc) v /= norm;
  return Tensor<Big>(n, r, std::move(acc));
}

}  // namespace

TensorPVector tensor_left_contraction(const TensorPForm& phi, const TensorPVector& x) {
  return contraction<Side::left>(phi, x);
}

TensorPVector tensor_right_contraction(const TensorPVector& x, const TensorPForm& phi) {
  return contraction<Side::right>(phi, x);
}

TensorPForm tensor_left_contraction(const TensorPVector& x, const TensorPForm& phi) {
  return contraction<Side::left>(x, phi);
}

TensorPForm tensor_right_contraction(const TensorPForm& phi, const TensorPVector& x) {
  return contraction<Side::right>(x, phi);
}

template <Kind K>
Tensor<K> blade_to_tensor(const Graded<K>& a, int p) {
  const int n = a.dim().n();
  Tensor<K> t(n, p);
  std::vector<double> c(t.components().size(), 0.0);
  for (std::size_t f = 0; f < c.size(); ++f) {
    const auto tuple = decode(f, n, p);
    std::uint32_t mask = 0;
    bool repeated = false;
    for (int j : tuple) {
      if (mask & (1u << j)) repeated = true;
      mask |= 1u << j;
    }
    if (!repeated) c[f] = permutation_sign(tuple) * a.coeff(mask);
  }
  return Tensor<K>(n, p, std::move(c));
}

template <Kind K>
Graded<K> tensor_to_blade(const Tensor<K>& t) {
  const Dimension dim(t.n());
  std::vector<double> c(dim.blade_count(), 0.0);
  for (std::uint32_t m = 0; m <= dim.full_mask(); ++m) {
    if (std::popcount(m) != t.grade()) continue;
    std::vector<int> tuple = BladeIndex(m).indices();
    for (int& k : tuple) --k;
    c[m] = t.at(tuple);
  }
  return Graded<K>(dim, std::move(c));
}

template class Tensor<Kind::vector>;
template class Tensor<Kind::form>;
template TensorPVector basis_tensor<Kind::vector>(int, int);
template TensorPForm basis_tensor<Kind::form>(int, int);
template TensorPVector tensor_wedge(const TensorPVector&, const TensorPVector&);
template TensorPForm tensor_wedge(const TensorPForm&, const TensorPForm&);
template TensorPVector tensor_reversion(const TensorPVector&);
template TensorPForm tensor_reversion(const TensorPForm&);
template TensorPVector blade_to_tensor(const Multivector&, int);
template TensorPForm blade_to_tensor(const Multiform&, int);
template Multivector tensor_to_blade(const TensorPVector&);
template Multiform tensor_to_blade(const TensorPForm&);

}  // namespace extalg::oracle
