#pragma once

#include <cstddef>
#include <vector>

#include "extalg/graded.hpp"

// Definition-literal reference implementations over full antisymmetric
// component arrays. Slow on purpose; only used to pin the signs and
// normalizations of the blade implementation at n <= 4.
namespace extalg::oracle {

inline constexpr int kMaxOracleDimension = 4;

/// Skew-symmetric p-tensor with all n^p components, index tuple (j1..jp)
/// (0-based) stored at j1*n^{p-1} + ... + jp. For Kind::vector the entries
/// are x(eps^j1, ..., eps^jp); for Kind::form they are phi(e_j1, ..., e_jp).
template <Kind K>
class Tensor {
 public:
  /// Zero tensor. Throws DomainError unless 0 <= p <= n <= 4.
  Tensor(int n, int p);
  /// Throws DomainError on a size mismatch.
  Tensor(int n, int p, std::vector<double> components);

  int n() const noexcept { return n_; }
  int grade() const noexcept { return p_; }
  const std::vector<double>& components() const noexcept { return c_; }

  double at(const std::vector<int>& tuple) const;
  double& at(const std::vector<int>& tuple);

  /// Largest |T(..i..j..) + T(..j..i..)| over adjacent transpositions.
  double antisymmetry_violation() const;

 private:
  int n_;
  int p_;
  std::vector<double> c_;
};

using TensorPVector = Tensor<Kind::vector>;
using TensorPForm = Tensor<Kind::form>;

/// The single-index tensor of basis vector e_{k} (resp. eps^{k}), k 1-based.
template <Kind K>
Tensor<K> basis_tensor(int n, int k);

/// (1/p!) sum over all index tuples of phi(e_J) x(eps^J); the p = 0 and
/// p = 1 cases are the plain product and the plain evaluation.
double tensor_pairing(const TensorPForm& phi, const TensorPVector& x);

/// (a ^ b)(t) = 1/(p! q!) sum_sigma sgn(sigma) a(t_sigma(1..p)) b(t_sigma(p+1..p+q)),
/// which is the determinant convention: e1 ^ e2 has component +1 at (1,2)
/// and pairs to det(<eps^i, e_j>) with wedges of 1-forms.
template <Kind K>
Tensor<K> tensor_wedge(const Tensor<K>& a, const Tensor<K>& b);

/// Reverse the order of the index slots.
template <Kind K>
Tensor<K> tensor_reversion(const Tensor<K>& a);

/// <phi^p, x_q| = 1/(q-p)! sum_j <rev(phi) ^ eps^j1 ^ ... ^ eps^j(q-p), x>
///               e_j1 ^ ... ^ e_j(q-p),   and <rev(phi), x> when p = q.
TensorPVector tensor_left_contraction(const TensorPForm& phi, const TensorPVector& x);
/// |x_q, phi^p> = 1/(q-p)! sum_j <x, eps^j1 ^ ... ^ eps^j(q-p) ^ rev(phi)>
///               e_j1 ^ ... ^ e_j(q-p).
TensorPVector tensor_right_contraction(const TensorPVector& x, const TensorPForm& phi);
/// <x_p, phi^q| : the same sums with the roles of vectors and forms exchanged.
TensorPForm tensor_left_contraction(const TensorPVector& x, const TensorPForm& phi);
/// |phi^q, x_p>
TensorPForm tensor_right_contraction(const TensorPForm& phi, const TensorPVector& x);

/// Coordinate bridge: blade coefficient of e_J equals the component at the
/// increasing tuple J; other tuples follow by antisymmetry.
template <Kind K>
Tensor<K> blade_to_tensor(const Graded<K>& a, int p);
/// Inverse of blade_to_tensor, producing a p-homogeneous element.
template <Kind K>
Graded<K> tensor_to_blade(const Tensor<K>& t);

}  // namespace extalg::oracle
