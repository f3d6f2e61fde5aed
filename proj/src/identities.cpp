#include "extalg/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "extalg/algebra.hpp"
#include "extalg/duality.hpp"
#include "extalg/metric.hpp"
#include "extalg/products.hpp"
#include "extalg/random.hpp"

namespace extalg {

namespace {

constexpr double kNearZero = 1e-12;

int sign_pow(int e) { return (e & 1) ? -1 : 1; }

// State handed to one identity body for one trial.
class Trial {
 public:
  Trial(Rng& rng, const MetricExtensor& gamma, double tolerance)
      : rng(rng), gamma(gamma), dim(gamma.dim()), n(dim.n()), tolerance_(tolerance) {}

  Rng& rng;
  const MetricExtensor& gamma;
  const Dimension dim;
  const int n;

  Multivector mv() { return random_element<Kind::vector>(rng, dim); }
  Multiform mf() { return random_element<Kind::form>(rng, dim); }
  Multivector mv(int p) { return random_homogeneous<Kind::vector>(rng, dim, p); }
  Multiform mf(int p) { return random_homogeneous<Kind::form>(rng, dim, p); }
  Multivector vec() { return mv(1); }
  Multiform form() { return mf(1); }
  int grade(int lo = 0) { return rng.uniform_int(lo, n); }

  template <Kind K>
  std::vector<Graded<K>> ones(int count) {
    std::vector<Graded<K>> out;
    for (int i = 0; i < count; ++i) out.push_back(random_homogeneous<K>(rng, dim, 1));
    return out;
  }

  // (p, q) with p <= q.
  std::pair<int, int> ordered_grades() {
    const int p = grade();
    return {p, rng.uniform_int(p, n)};
  }
  // (p, q) with p > q.
  std::pair<int, int> inverted_grades() {
    const int q = rng.uniform_int(0, n - 1);
    return {rng.uniform_int(q + 1, n), q};
  }

  void check(double lhs, double rhs) { record(std::abs(lhs - rhs), std::max(std::abs(lhs), std::abs(rhs))); }

  template <Kind K>
  void check(const Graded<K>& lhs, const Graded<K>& rhs) {
    record(max_abs_diff(lhs, rhs), std::max(lhs.max_abs(), rhs.max_abs()));
  }

  double max_abs() const { return max_abs_; }
  double max_rel() const { return max_rel_; }
  bool ok() const { return max_rel_ <= tolerance_; }

 private:
  void record(double diff, double scale) {
    max_abs_ = std::max(max_abs_, diff);
    double rel;
    if (scale >= kNearZero) {
      rel = diff / scale;
    } else {
      rel = diff <= kNearZero ? 0.0 : std::numeric_limits<double>::infinity();
    }
    if (std::isnan(rel)) rel = std::numeric_limits<double>::infinity();
    max_rel_ = std::max(max_rel_, rel);
  }

  double tolerance_;
  double max_abs_ = 0.0;
  double max_rel_ = 0.0;
};

template <Kind K>
Graded<K> wedge_all(Dimension dim, const std::vector<Graded<K>>& items) {
  Graded<K> acc = Graded<K>::scalar(dim, 1.0);
  for (const auto& item : items) acc = wedge(acc, item);
  return acc;
}

template <Kind K>
std::vector<Graded<K>> without(const std::vector<Graded<K>>& items, std::size_t k) {
  std::vector<Graded<K>> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (i != k) out.push_back(items[i]);
  return out;
}

template <Kind K>
double first_grade(const Graded<K>& v, int j) {
  return v.coeff(1u << j);
}

// Evaluates the p-linear map whose blade coefficients are `coeffs` (grade p)
// on p grade-1 arguments: sum_J c_J det(args[J rows]).
template <Kind A, Kind B>
double evaluate_multilinear(const Graded<A>& coeffs, const std::vector<Graded<B>>& args) {
  const int n = coeffs.dim().n();
  const int p = static_cast<int>(args.size());
  Matrix m(n, n);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < n; ++j) m(j, i) = first_grade(args[i], j);
  const std::uint32_t cols = (p == 0) ? 0u : ((1u << p) - 1);
  double s = 0.0;
  for (std::uint32_t mask = 0; mask <= coeffs.dim().full_mask(); ++mask) {
    if (std::popcount(mask) != p) continue;
    s += coeffs.coeff(mask) * minor_determinant(m, mask, cols);
  }
  return s;
}

double bilinear(const Matrix& g, const Graded<Kind::vector>& v, const Graded<Kind::vector>& w) {
  double s = 0.0;
  for (int j = 0; j < g.rows(); ++j)
    for (int k = 0; k < g.cols(); ++k) s += first_grade(v, j) * g(j, k) * first_grade(w, k);
  return s;
}

double bilinear(const Matrix& g, const Graded<Kind::form>& v, const Graded<Kind::form>& w) {
  double s = 0.0;
  for (int j = 0; j < g.rows(); ++j)
    for (int k = 0; k < g.cols(); ++k) s += first_grade(v, j) * g(j, k) * first_grade(w, k);
  return s;
}

template <Kind K>
Matrix gram(const Matrix& g, const std::vector<Graded<K>>& a, const std::vector<Graded<K>>& b) {
  const int p = static_cast<int>(a.size());
  Matrix m(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) m(i, j) = bilinear(g, a[i], b[j]);
  return m;
}

double gram_det(const Matrix& m) { return m.rows() == 0 ? 1.0 : determinant(m); }

// Alternating one-item expansion: sum_k (-1)^{k-1} coeff(k) items[^k].
template <Kind K, class Coeff>
Graded<K> alternating_expansion(Dimension dim, const std::vector<Graded<K>>& items, Coeff coeff) {
  Graded<K> acc(dim);
  for (std::size_t k = 0; k < items.size(); ++k) {
    acc = acc + wedge_all(dim, without(items, k)) * (sign_pow(static_cast<int>(k)) * coeff(k));
  }
  return acc;
}

// [f(a, b)]_k = sum_j f([a]_j, [b]_{j+k}) for the grade-lowering maps.
template <class Out, class A, class B, class F>
Out grade_sum(Dimension dim, const A& a, const B& b, F f) {
  Out acc(dim);
  for (int j = 0; j <= dim.n(); ++j)
    for (int k = j; k <= dim.n(); ++k) acc = acc + f(grade_project(a, j), grade_project(b, k));
  return acc;
}

using Body = void (*)(Trial&);

struct Identity {
  const char* name;
  Body body;
};

// ---- duality identities ----------------------------------------------------

void fund1(Trial& t) {
  const int p = t.grade(1);
  const auto phi = t.mf(p);
  const auto vs = t.ones<Kind::vector>(p);
  t.check(pairing(phi, wedge_all(t.dim, vs)), evaluate_multilinear(phi, vs));
}

void fund2(Trial& t) {
  const int p = t.grade(1);
  const auto x = t.mv(p);
  const auto ws = t.ones<Kind::form>(p);
  t.check(pairing(wedge_all(t.dim, ws), x), evaluate_multilinear(x, ws));
}

void fund3(Trial& t) {
  const int p = t.grade(1);
  const auto ws = t.ones<Kind::form>(p);
  const auto vs = t.ones<Kind::vector>(p);
  Matrix m(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) m(i, j) = pairing(ws[i], vs[j]);
  t.check(pairing(wedge_all(t.dim, ws), wedge_all(t.dim, vs)), determinant(m));
}

void fund4(Trial& t) {
  const auto [p, q] = t.ordered_grades();
  const double s = sign_pow(p * (q - p));
  const auto phi = t.mf(p);
  const auto x = t.mv(q);
  t.check(left_contract(phi, x), s * right_contract(x, phi));
  const auto y = t.mv(p);
  const auto psi = t.mf(q);
  t.check(left_contract(y, psi), s * right_contract(psi, y));
}

void contrformvectors(Trial& t) {
  const auto omega = t.form();
  const auto vs = t.ones<Kind::vector>(t.grade(1));
  const auto rhs = alternating_expansion(t.dim, vs, [&](std::size_t k) { return pairing(omega, vs[k]); });
  t.check(left_contract(omega, wedge_all(t.dim, vs)), rhs);
}

void contrvectorforms(Trial& t) {
  const auto v = t.vec();
  const auto ws = t.ones<Kind::form>(t.grade(1));
  const auto rhs = alternating_expansion(t.dim, ws, [&](std::size_t k) { return pairing(v, ws[k]); });
  t.check(left_contract(v, wedge_all(t.dim, ws)), rhs);
}

void scalarhomog1(Trial& t) {
  const int p = t.grade();
  const auto phi = component(t.mf(), p);
  const auto x = component(t.mv(), p);
  double direct = 0.0;
  for (std::size_t i = 0; i < phi.coeffs.size(); ++i) direct += phi.coeffs[i] * x.coeffs[i];
  t.check(pairing(include(phi), include(x)), direct);
}

void scalarhomog2(Trial& t) {
  const auto [p, q] = t.inverted_grades();
  const bool swap = t.rng.uniform_int(0, 1) == 1;
  t.check(pairing(t.mf(swap ? q : p), t.mv(swap ? p : q)), 0.0);
}

void contrhomogmultiv0(Trial& t) {
  const auto [p, q] = t.ordered_grades();
  const auto phi = t.mf(p);
  const auto x = t.mv(q);
  const auto l = left_contract(phi, x);
  const auto r = right_contract(x, phi);
  t.check(l, grade_project(l, q - p));
  t.check(r, grade_project(r, q - p));
  // Mixed-grade arguments decompose into the homogeneous pieces.
  const auto a = t.mf();
  const auto b = t.mv();
  t.check(left_contract(a, b), grade_sum<Multivector>(t.dim, a, b, [](const auto& u, const auto& w) {
            return left_contract(u, w);
          }));
  t.check(right_contract(b, a), grade_sum<Multivector>(t.dim, a, b, [](const auto& u, const auto& w) {
            return right_contract(w, u);
          }));
}

void contrhomogmultiv(Trial& t) {
  const auto [p, q] = t.inverted_grades();
  const auto phi = t.mf(p);
  const auto x = t.mv(q);
  t.check(left_contract(phi, x), Multivector(t.dim));
  t.check(right_contract(x, phi), Multivector(t.dim));
}

void contrhomogmultif0(Trial& t) {
  const auto [p, q] = t.ordered_grades();
  const auto x = t.mv(p);
  const auto phi = t.mf(q);
  const auto l = left_contract(x, phi);
  const auto r = right_contract(phi, x);
  t.check(l, grade_project(l, q - p));
  t.check(r, grade_project(r, q - p));
  const auto a = t.mv();
  const auto b = t.mf();
  t.check(left_contract(a, b), grade_sum<Multiform>(t.dim, a, b, [](const auto& u, const auto& w) {
            return left_contract(u, w);
          }));
  t.check(right_contract(b, a), grade_sum<Multiform>(t.dim, a, b, [](const auto& u, const auto& w) {
            return right_contract(w, u);
          }));
}

void contrhomogmultif(Trial& t) {
  const auto [p, q] = t.inverted_grades();
  const auto x = t.mv(p);
  const auto phi = t.mf(q);
  t.check(left_contract(x, phi), Multiform(t.dim));
  t.check(right_contract(phi, x), Multiform(t.dim));
}

void contrformmultivectors(Trial& t) {
  const auto omega = t.form();
  const auto x = t.mv();
  const auto y = t.mv();
  t.check(left_contract(omega, wedge(x, y)),
          wedge(left_contract(omega, x), y) + wedge(grade_involution(x), left_contract(omega, y)));
}

void contrvectormultiforms(Trial& t) {
  const auto v = t.vec();
  const auto phi = t.mf();
  const auto psi = t.mf();
  t.check(left_contract(v, wedge(phi, psi)),
          wedge(left_contract(v, phi), psi) + wedge(grade_involution(phi), left_contract(v, psi)));
}

void dcvectors(Trial& t) {
  const auto phi = t.mf();
  const auto psi = t.mf();
  const auto x = t.mv();
  t.check(left_contract(phi, left_contract(psi, x)), left_contract(wedge(phi, psi), x));
  t.check(right_contract(right_contract(x, phi), psi), right_contract(x, wedge(phi, psi)));
}

void dcforms(Trial& t) {
  const auto x = t.mv();
  const auto y = t.mv();
  const auto phi = t.mf();
  t.check(left_contract(x, left_contract(y, phi)), left_contract(wedge(x, y), phi));
  t.check(right_contract(right_contract(phi, x), y), right_contract(phi, wedge(x, y)));
}

void dcpvectors(Trial& t) {
  const auto phi = t.mf();
  const auto psi = t.mf();
  const auto x = t.mv();
  t.check(pairing(left_contract(phi, x), psi), pairing(x, wedge(reversion(phi), psi)));
  t.check(pairing(phi, right_contract(x, psi)), pairing(wedge(phi, reversion(psi)), x));
}

void dcpforms(Trial& t) {
  const auto x = t.mv();
  const auto y = t.mv();
  const auto phi = t.mf();
  t.check(pairing(left_contract(x, phi), y), pairing(phi, wedge(reversion(x), y)));
  t.check(pairing(x, right_contract(phi, y)), pairing(wedge(x, reversion(y)), phi));
}

void pairingofpseudo(Trial& t) {
  t.check(pairing(Multiform::pseudoscalar(t.dim), Multivector::pseudoscalar(t.dim)), 1.0);
}

int index_sum(std::uint32_t mask) {
  int s = 0;
  for (int k : BladeIndex(mask).indices()) s += k;
  return s;
}

void expansion1(Trial& t) {
  const auto mask = static_cast<std::uint32_t>(t.rng.uniform_int(0, int(t.dim.full_mask())));
  const int mu = std::popcount(mask);
  const auto lhs = left_contract(Multivector::blade(t.dim, BladeIndex(mask)), Multiform::pseudoscalar(t.dim));
  const auto rhs = Multiform::blade(t.dim, BladeIndex(t.dim.full_mask() & ~mask), sign_pow(mu + index_sum(mask)));
  t.check(lhs, rhs);
}

void expansion2(Trial& t) {
  const auto mask = static_cast<std::uint32_t>(t.rng.uniform_int(0, int(t.dim.full_mask())));
  const int nu = std::popcount(mask);
  const auto lhs = left_contract(Multiform::blade(t.dim, BladeIndex(mask)), Multivector::pseudoscalar(t.dim));
  const auto rhs = Multivector::blade(t.dim, BladeIndex(t.dim.full_mask() & ~mask), sign_pow(nu + index_sum(mask)));
  t.check(lhs, rhs);
}

// <<x, eps_wedge|, rev(e_wedge)| and its mirror.
Multivector duality_expand(const Multivector& x) {
  return left_contract(left_contract(x, Multiform::pseudoscalar(x.dim())),
                       reversion(Multivector::pseudoscalar(x.dim())));
}

Multiform duality_expand(const Multiform& phi) {
  return left_contract(left_contract(phi, Multivector::pseudoscalar(phi.dim())),
                       reversion(Multiform::pseudoscalar(phi.dim())));
}

void expansionformula0(Trial& t) {
  const double alpha = t.rng.uniform(-1.0, 1.0);
  const auto a = Multivector::scalar(t.dim, alpha);
  const auto b = Multiform::scalar(t.dim, alpha);
  t.check(duality_expand(a), a);
  t.check(duality_expand(b), b);
}

void expansionformula1(Trial& t) {
  const auto v = t.vec();
  const auto omega = t.form();
  t.check(duality_expand(v), v);
  t.check(duality_expand(omega), omega);
}

void expansionformula2(Trial& t) {
  const auto v = wedge_all(t.dim, t.ones<Kind::vector>(t.grade(1)));
  const auto w = wedge_all(t.dim, t.ones<Kind::form>(t.grade(1)));
  t.check(duality_expand(v), v);
  t.check(duality_expand(w), w);
}

void expansionformula3(Trial& t) {
  const auto x = t.mv();
  const auto phi = t.mf();
  t.check(duality_expand(x), x);
  t.check(duality_expand(phi), phi);
}

// ---- metric extensor -------------------------------------------------------

void theorem_tensor_extensor(Trial& t) {
  const MetricTensor g = tensor_from_extensor(t.gamma);
  const auto v = t.vec();
  const auto w = t.vec();
  t.check(pairing(t.gamma(v), w), g(v, w));
  t.check(max_abs_diff(extensor_from_tensor(g).matrix(), g.matrix()), 0.0);
}

void gamma_symmetric(Trial& t) {
  const auto v = t.vec();
  const auto w = t.vec();
  t.check(pairing(t.gamma(v), w), pairing(v, t.gamma(w)));
  const auto omega = t.form();
  const auto sigma = t.form();
  t.check(pairing(omega, t.gamma.inverse(sigma)), pairing(t.gamma.inverse(omega), sigma));
}

void extension_symmetric(Trial& t) {
  const auto x = t.mv();
  const auto y = t.mv();
  t.check(pairing(extend(t.gamma, x), y), pairing(extend(t.gamma, y), x));
  // Injective: the inverse extension recovers x.
  t.check(extend_inverse(t.gamma, extend(t.gamma, x)), x);
}

void extension_inverse_symmetric(Trial& t) {
  const auto phi = t.mf();
  const auto psi = t.mf();
  t.check(pairing(extend_inverse(t.gamma, phi), psi), pairing(extend_inverse(t.gamma, psi), phi));
  t.check(extend(t.gamma, extend_inverse(t.gamma, phi)), phi);
}

void extension1(Trial& t) {
  const int p = t.grade();
  const auto a = extend(t.gamma, t.mv(p));
  const auto b = extend_inverse(t.gamma, t.mf(p));
  t.check(a, grade_project(a, p));
  t.check(b, grade_project(b, p));
}

void extension2(Trial& t) {
  const auto x = t.mv();
  const auto y = t.mv();
  t.check(extend(t.gamma, wedge(x, y)), wedge(extend(t.gamma, x), extend(t.gamma, y)));
  const auto phi = t.mf();
  const auto psi = t.mf();
  t.check(extend_inverse(t.gamma, wedge(phi, psi)),
          wedge(extend_inverse(t.gamma, phi), extend_inverse(t.gamma, psi)));
}

void extension3(Trial& t) {
  const auto x = t.mv();
  t.check(grade_involution(extend(t.gamma, x)), extend(t.gamma, grade_involution(x)));
  t.check(reversion(extend(t.gamma, x)), extend(t.gamma, reversion(x)));
}

void extension4(Trial& t) {
  const auto x = t.mv();
  const auto phi = t.mf();
  t.check(extend_inverse(t.gamma, extend(t.gamma, x)), x);
  t.check(extend(t.gamma, extend_inverse(t.gamma, phi)), phi);
}

void reciprocity(Trial& t) {
  const auto basis = reciprocal_basis(t.gamma);
  const int j = t.rng.uniform_int(1, t.n);
  const int k = t.rng.uniform_int(1, t.n);
  const double delta = (j == k) ? 1.0 : 0.0;
  t.check(scalar_product(t.gamma, Multivector::basis(t.dim, j), basis.vectors[k - 1]), delta);
  t.check(scalar_product(t.gamma, Multiform::basis(t.dim, k), basis.forms[j - 1]), delta);
}

// ---- metric products -------------------------------------------------------

void extvectorscalarextvector(Trial& t) {
  const int p = t.grade(1);
  const auto vs = t.ones<Kind::vector>(p);
  const auto ws = t.ones<Kind::vector>(p);
  t.check(scalar_product(t.gamma, wedge_all(t.dim, vs), wedge_all(t.dim, ws)),
          gram_det(gram(t.gamma.matrix(), vs, ws)));
}

void extformscalarextform(Trial& t) {
  const int p = t.grade(1);
  const auto ws = t.ones<Kind::form>(p);
  const auto ss = t.ones<Kind::form>(p);
  t.check(scalar_product(t.gamma, wedge_all(t.dim, ws), wedge_all(t.dim, ss)),
          gram_det(gram(t.gamma.inverse_matrix(), ws, ss)));
}

void contractionpq(Trial& t) {
  const auto [p, q] = t.ordered_grades();
  const double s = sign_pow(p * (q - p));
  const auto x = t.mv(p);
  const auto y = t.mv(q);
  t.check(lcontract(t.gamma, x, y), s * rcontract(t.gamma, y, x));
  const auto phi = t.mf(p);
  const auto psi = t.mf(q);
  t.check(lcontract(t.gamma, phi, psi), s * rcontract(t.gamma, psi, phi));
}

void contrvvectors(Trial& t) {
  const auto v = t.vec();
  const auto vs = t.ones<Kind::vector>(t.grade(1));
  const auto& g = t.gamma.matrix();
  t.check(lcontract(t.gamma, v, wedge_all(t.dim, vs)),
          alternating_expansion(t.dim, vs, [&](std::size_t k) { return bilinear(g, v, vs[k]); }));
}

void contrfforms(Trial& t) {
  const auto w = t.form();
  const auto ws = t.ones<Kind::form>(t.grade(1));
  const auto& g_inv = t.gamma.inverse_matrix();
  t.check(lcontract(t.gamma, w, wedge_all(t.dim, ws)),
          alternating_expansion(t.dim, ws, [&](std::size_t k) { return bilinear(g_inv, w, ws[k]); }));
}

template <Kind K>
double direct_scalar_product(const Matrix& g, const Graded<K>& a, const Graded<K>& b, int p) {
  const auto& masks = blade_tables(a.dim()).by_grade[p];
  double s = 0.0;
  for (auto j : masks)
    for (auto k : masks) s += a.coeff(j) * minor_determinant(g, j, k) * b.coeff(k);
  return s;
}

void scalarhomogmult1(Trial& t) {
  const int p = t.grade();
  const auto x = t.mv();
  const auto y = t.mv();
  t.check(scalar_product(t.gamma, grade_project(x, p), grade_project(y, p)),
          direct_scalar_product(t.gamma.matrix(), x, y, p));
  const auto phi = t.mf();
  const auto psi = t.mf();
  t.check(scalar_product(t.gamma, grade_project(phi, p), grade_project(psi, p)),
          direct_scalar_product(t.gamma.inverse_matrix(), phi, psi, p));
}

void scalarhomogmult2(Trial& t) {
  const auto [p, q] = t.inverted_grades();
  t.check(scalar_product(t.gamma, t.mv(p), t.mv(q)), 0.0);
  t.check(scalar_product(t.gamma, t.mf(q), t.mf(p)), 0.0);
}

void contrhomogmultiv1(Trial& t) {
  const auto [p, q] = t.ordered_grades();
  const auto x = t.mv(p);
  const auto y = t.mv(q);
  const auto l = lcontract(t.gamma, x, y);
  const auto r = rcontract(t.gamma, y, x);
  t.check(l, grade_project(l, q - p));
  t.check(r, grade_project(r, q - p));
  const auto a = t.mv();
  const auto b = t.mv();
  const auto& g = t.gamma;
  t.check(lcontract(g, a, b), grade_sum<Multivector>(t.dim, a, b, [&g](const auto& u, const auto& w) {
            return lcontract(g, u, w);
          }));
  t.check(rcontract(g, b, a), grade_sum<Multivector>(t.dim, a, b, [&g](const auto& u, const auto& w) {
            return rcontract(g, w, u);
          }));
}

void contrhomogmultiv2(Trial& t) {
  const auto [p, q] = t.inverted_grades();
  const auto x = t.mv(p);
  const auto y = t.mv(q);
  t.check(lcontract(t.gamma, x, y), Multivector(t.dim));
  t.check(rcontract(t.gamma, y, x), Multivector(t.dim));
}

void contrhomogmultif1(Trial& t) {
  const auto [p, q] = t.ordered_grades();
  const auto phi = t.mf(p);
  const auto psi = t.mf(q);
  const auto l = lcontract(t.gamma, phi, psi);
  const auto r = rcontract(t.gamma, psi, phi);
  t.check(l, grade_project(l, q - p));
  t.check(r, grade_project(r, q - p));
  const auto a = t.mf();
  const auto b = t.mf();
  const auto& g = t.gamma;
  t.check(lcontract(g, a, b), grade_sum<Multiform>(t.dim, a, b, [&g](const auto& u, const auto& w) {
            return lcontract(g, u, w);
          }));
  t.check(rcontract(g, b, a), grade_sum<Multiform>(t.dim, a, b, [&g](const auto& u, const auto& w) {
            return rcontract(g, w, u);
          }));
}

void contrhomogmultif2(Trial& t) {
  const auto [p, q] = t.inverted_grades();
  const auto phi = t.mf(p);
  const auto psi = t.mf(q);
  t.check(lcontract(t.gamma, phi, psi), Multiform(t.dim));
  t.check(rcontract(t.gamma, psi, phi), Multiform(t.dim));
}

void contrvecexteriormultiv(Trial& t) {
  const auto v = t.vec();
  const auto x = t.mv();
  const auto y = t.mv();
  const auto& g = t.gamma;
  t.check(lcontract(g, v, wedge(x, y)), wedge(lcontract(g, v, x), y) + wedge(grade_involution(x), lcontract(g, v, y)));
}

void contrformexteriormultif(Trial& t) {
  const auto w = t.form();
  const auto phi = t.mf();
  const auto psi = t.mf();
  const auto& g = t.gamma;
  t.check(lcontract(g, w, wedge(phi, psi)),
          wedge(lcontract(g, w, phi), psi) + wedge(grade_involution(phi), lcontract(g, w, psi)));
}

void contrcontrmultiv(Trial& t) {
  const auto x = t.mv();
  const auto y = t.mv();
  const auto z = t.mv();
  const auto& g = t.gamma;
  t.check(lcontract(g, x, lcontract(g, y, z)), lcontract(g, wedge(x, y), z));
  t.check(rcontract(g, rcontract(g, z, y), x), rcontract(g, z, wedge(y, x)));
}

void contrcontrmultif(Trial& t) {
  const auto phi = t.mf();
  const auto chi = t.mf();
  const auto psi = t.mf();
  const auto& g = t.gamma;
  t.check(lcontract(g, phi, lcontract(g, chi, psi)), lcontract(g, wedge(phi, chi), psi));
  t.check(rcontract(g, rcontract(g, psi, chi), phi), rcontract(g, psi, wedge(chi, phi)));
}

void contrscalarmultiv(Trial& t) {
  const auto x = t.mv();
  const auto y = t.mv();
  const auto z = t.mv();
  const auto& g = t.gamma;
  t.check(scalar_product(g, lcontract(g, x, y), z), scalar_product(g, y, wedge(reversion(x), z)));
  t.check(scalar_product(g, z, rcontract(g, y, x)), scalar_product(g, wedge(z, reversion(x)), y));
}

void contrscalarmultif(Trial& t) {
  const auto phi = t.mf();
  const auto chi = t.mf();
  const auto psi = t.mf();
  const auto& g = t.gamma;
  t.check(scalar_product(g, lcontract(g, phi, chi), psi), scalar_product(g, chi, wedge(reversion(phi), psi)));
  t.check(scalar_product(g, psi, rcontract(g, chi, phi)), scalar_product(g, wedge(psi, reversion(phi)), chi));
}

// ---- formulas involving the metric extensor ---------------------------------

void scalargamma(Trial& t) {
  const auto phi = t.mf();
  const auto x = t.mv();
  const auto& g = t.gamma;
  const double direct = pairing(phi, x);
  t.check(scalar_product(g, extend_inverse(g, phi), x), direct);
  t.check(scalar_product(g, phi, extend(g, x)), direct);
}

void contractedgamma(Trial& t) {
  const auto phi = t.mf();
  const auto x = t.mv();
  const auto& g = t.gamma;
  t.check(lcontract(g, extend_inverse(g, phi), x), left_contract(phi, x));
  t.check(rcontract(g, x, extend_inverse(g, phi)), right_contract(x, phi));
  t.check(lcontract(g, extend(g, x), phi), left_contract(x, phi));
  t.check(rcontract(g, phi, extend(g, x)), right_contract(phi, x));
}

void pseudoscalars1(Trial& t) {
  const auto ps = pseudoscalars(t.gamma);
  const auto& g = t.gamma;
  t.check(scalar_product(g, ps.e_wedge, ps.e_wedge_up), 1.0);
  t.check(scalar_product(g, ps.eps_wedge, ps.eps_wedge_down), 1.0);
  t.check(scalar_product(g, ps.e_wedge, ps.e_wedge), scalar_product(g, ps.eps_wedge_down, ps.eps_wedge_down));
  t.check(scalar_product(g, ps.eps_wedge, ps.eps_wedge), scalar_product(g, ps.e_wedge_up, ps.e_wedge_up));
}

void pseudoscalars2(Trial& t) {
  const auto ps = pseudoscalars(t.gamma);
  const auto& g = t.gamma;
  t.check(ps.e_wedge_up, scalar_product(g, ps.eps_wedge, ps.eps_wedge) * ps.e_wedge);
  t.check(ps.eps_wedge_down, scalar_product(g, ps.e_wedge, ps.e_wedge) * ps.eps_wedge);
  t.check(ps.e_wedge, scalar_product(g, ps.eps_wedge_down, ps.eps_wedge_down) * ps.e_wedge_up);
  t.check(ps.eps_wedge, scalar_product(g, ps.e_wedge_up, ps.e_wedge_up) * ps.eps_wedge_down);
}

void pseudoscalars3(Trial& t) {
  const auto ps = pseudoscalars(t.gamma);
  const auto& g = t.gamma;
  t.check(scalar_product(g, ps.e_wedge, ps.e_wedge) * scalar_product(g, ps.e_wedge_up, ps.e_wedge_up), 1.0);
  t.check(scalar_product(g, ps.eps_wedge, ps.eps_wedge) * scalar_product(g, ps.eps_wedge_down, ps.eps_wedge_down),
          1.0);
}

void gamma1(Trial& t) {
  const auto v = t.vec();
  const auto w = wedge_all(t.dim, t.ones<Kind::vector>(t.grade(1)));
  const auto& g = t.gamma;
  t.check(extend(g, left_contract(g(v), w)), left_contract(v, extend(g, w)));
}

void gamma1b(Trial& t) {
  const auto omega = t.form();
  const auto s = wedge_all(t.dim, t.ones<Kind::form>(t.grade(1)));
  const auto& g = t.gamma;
  t.check(extend_inverse(g, left_contract(g.inverse(omega), s)), left_contract(omega, extend_inverse(g, s)));
}

void gamma2(Trial& t) {
  const auto& g = t.gamma;
  const auto e = Multivector::pseudoscalar(t.dim);
  const auto eps = Multiform::pseudoscalar(t.dim);
  const double norm = scalar_product(g, e, e);
  const auto v = t.vec();
  const auto omega = t.form();
  t.check(extend(g, lcontract(g, v, e)), norm * left_contract(v, eps));
  t.check(lcontract(g, lcontract(g, v, e), reversion(e)), norm * v);
  t.check(g(lcontract(g, left_contract(omega, e), reversion(e))), norm * omega);
}

void gamma3(Trial& t) {
  const auto omega = t.form();
  const auto first = invert_metric_via_formula(t.gamma.matrix(), omega, FormulaVariant::first);
  const auto second = invert_metric_via_formula(t.gamma.matrix(), omega, FormulaVariant::second);
  t.check(t.gamma.inverse(omega), first);
  t.check(first, second);
}

void gamma4(Trial& t) {
  const auto x = t.mv();
  const auto y = t.mv();
  const auto& g = t.gamma;
  t.check(extend(g, left_contract(extend(g, x), y)), left_contract(x, extend(g, y)));
}

void gamma4b(Trial& t) {
  const auto phi = t.mf();
  const auto psi = t.mf();
  const auto& g = t.gamma;
  t.check(extend_inverse(g, left_contract(extend_inverse(g, phi), psi)), left_contract(phi, extend_inverse(g, psi)));
}

void gamma5(Trial& t) {
  const auto& g = t.gamma;
  const auto e = Multivector::pseudoscalar(t.dim);
  const auto eps = Multiform::pseudoscalar(t.dim);
  const double norm = scalar_product(g, e, e);
  const auto x = t.mv();
  const auto phi = t.mf();
  t.check(extend(g, lcontract(g, x, e)), norm * left_contract(x, eps));
  t.check(lcontract(g, lcontract(g, x, e), reversion(e)), norm * x);
  t.check(extend(g, lcontract(g, left_contract(phi, e), reversion(e))), norm * phi);
}

void gamma6(Trial& t) {
  const auto phi = t.mf();
  const auto first = invert_extension_via_formula(t.gamma, phi, FormulaVariant::first);
  t.check(extend_inverse(t.gamma, phi), first);
  t.check(first, invert_extension_via_formula(t.gamma, phi, FormulaVariant::second));
}

void gamma7(Trial& t) {
  const auto x = t.mv();
  t.check(expand_multivector(t.gamma, x, FormulaVariant::first), x);
  t.check(expand_multivector(t.gamma, x, FormulaVariant::second), x);
}

void gamma7b(Trial& t) {
  const auto phi = t.mf();
  t.check(expand_multiform(t.gamma, phi, FormulaVariant::first), phi);
  t.check(expand_multiform(t.gamma, phi, FormulaVariant::second), phi);
}

#define EXTALG_IDENTITY(fn) Identity{#fn, &fn}

const std::vector<Identity>& registry() {
  static const std::vector<Identity> all = {
      Identity{"Fund1", &fund1},
      Identity{"Fund2", &fund2},
      Identity{"Fund3", &fund3},
      Identity{"Fund4", &fund4},
      EXTALG_IDENTITY(contrformvectors),
      EXTALG_IDENTITY(contrvectorforms),
      EXTALG_IDENTITY(scalarhomog1),
      EXTALG_IDENTITY(scalarhomog2),
      EXTALG_IDENTITY(contrhomogmultiv0),
      EXTALG_IDENTITY(contrhomogmultiv),
      EXTALG_IDENTITY(contrhomogmultif0),
      EXTALG_IDENTITY(contrhomogmultif),
      EXTALG_IDENTITY(contrformmultivectors),
      EXTALG_IDENTITY(contrvectormultiforms),
      EXTALG_IDENTITY(dcvectors),
      EXTALG_IDENTITY(dcforms),
      EXTALG_IDENTITY(dcpvectors),
      EXTALG_IDENTITY(dcpforms),
      EXTALG_IDENTITY(pairingofpseudo),
      EXTALG_IDENTITY(expansion1),
      EXTALG_IDENTITY(expansion2),
      EXTALG_IDENTITY(expansionformula0),
      EXTALG_IDENTITY(expansionformula1),
      EXTALG_IDENTITY(expansionformula2),
      EXTALG_IDENTITY(expansionformula3),
      EXTALG_IDENTITY(theorem_tensor_extensor),
      EXTALG_IDENTITY(gamma_symmetric),
      EXTALG_IDENTITY(extension_symmetric),
      EXTALG_IDENTITY(extension_inverse_symmetric),
      EXTALG_IDENTITY(extension1),
      EXTALG_IDENTITY(extension2),
      EXTALG_IDENTITY(extension3),
      EXTALG_IDENTITY(extension4),
      EXTALG_IDENTITY(reciprocity),
      EXTALG_IDENTITY(extvectorscalarextvector),
      EXTALG_IDENTITY(extformscalarextform),
      EXTALG_IDENTITY(contractionpq),
      EXTALG_IDENTITY(contrvvectors),
      EXTALG_IDENTITY(contrfforms),
      EXTALG_IDENTITY(scalarhomogmult1),
      EXTALG_IDENTITY(scalarhomogmult2),
      EXTALG_IDENTITY(contrhomogmultiv1),
      EXTALG_IDENTITY(contrhomogmultiv2),
      EXTALG_IDENTITY(contrhomogmultif1),
      EXTALG_IDENTITY(contrhomogmultif2),
      EXTALG_IDENTITY(contrvecexteriormultiv),
      EXTALG_IDENTITY(contrformexteriormultif),
      EXTALG_IDENTITY(contrcontrmultiv),
      EXTALG_IDENTITY(contrcontrmultif),
      EXTALG_IDENTITY(contrscalarmultiv),
      EXTALG_IDENTITY(contrscalarmultif),
      EXTALG_IDENTITY(scalargamma),
      EXTALG_IDENTITY(contractedgamma),
      EXTALG_IDENTITY(pseudoscalars1),
      EXTALG_IDENTITY(pseudoscalars2),
      EXTALG_IDENTITY(pseudoscalars3),
      EXTALG_IDENTITY(gamma1),
      EXTALG_IDENTITY(gamma1b),
      EXTALG_IDENTITY(gamma2),
      EXTALG_IDENTITY(gamma3),
      EXTALG_IDENTITY(gamma4),
      EXTALG_IDENTITY(gamma4b),
      EXTALG_IDENTITY(gamma5),
      EXTALG_IDENTITY(gamma6),
      EXTALG_IDENTITY(gamma7),
      EXTALG_IDENTITY(gamma7b),
  };
  return all;
}

#undef EXTALG_IDENTITY

IdentityReport run_one(const Identity& id, std::size_t index, const SessionConfig& cfg, const MetricExtensor& gamma) {
  Rng rng(cfg.seed ^ static_cast<std::uint64_t>(index));
  Trial trial(rng, gamma, cfg.tolerance);
  for (int i = 0; i < cfg.trials; ++i) id.body(trial);
  return IdentityReport{id.name, cfg.trials, trial.max_abs(), trial.max_rel(), trial.ok()};
}

}  // namespace

std::vector<std::string> identity_names() {
  std::vector<std::string> out;
  for (const auto& id : registry()) out.emplace_back(id.name);
  return out;
}

std::vector<IdentityReport> run_identity_suite(const SessionConfig& cfg, unsigned threads) {
  const MetricExtensor gamma(cfg.metric);
  const auto& ids = registry();
  std::vector<IdentityReport> reports(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) reports[i] = run_one(ids[i], i, cfg, gamma);
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ids.size())));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
  }
  return reports;
}

std::string format_report(const IdentityReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s %d %.3e %.3e %s", r.name.c_str(), r.trials, r.max_abs, r.max_rel,
                r.pass ? "PASS" : "FAIL");
  return buf;
}

bool all_passed(const std::vector<IdentityReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.pass; });
}

}  // namespace extalg
