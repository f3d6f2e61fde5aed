#include "extalg/algebra.hpp"
#include "extalg/duality.hpp"
#include "extalg/random.hpp"
#include "support.hpp"

using namespace extalg;
using testsupport::mf;
using testsupport::mv;

TEST_CASE("dimension and blade index validation") {
  CHECK_THROWS_AS(Dimension(0), DomainError);
  CHECK_THROWS_AS(Dimension(13), DomainError);
  CHECK(Dimension(12).blade_count() == 4096u);
  CHECK(BladeIndex::of({1, 3}).mask() == 0b101u);
  CHECK(BladeIndex::of({2, 4}).grade() == 2);
  CHECK_THROWS_AS(BladeIndex::of({2, 1}), DomainError);
  CHECK_THROWS_AS(BladeIndex::of({1, 1}), DomainError);
  CHECK_THROWS_AS(BladeIndex::of({0}), DomainError);
  CHECK(blade_name(BladeIndex::of({1, 2}), 'e') == "e1^e2");
  CHECK(blade_name(BladeIndex(0), 'd') == "1");
}

TEST_CASE("sign helpers") {
  CHECK(wedge_sign(0b01, 0b10) == 1);
  CHECK(wedge_sign(0b10, 0b01) == -1);
  CHECK(wedge_sign(0b11, 0b01) == 0);
  CHECK(wedge_sign(0b010, 0b101) == -1);
  CHECK(reversion_sign(0) == 1);
  CHECK(reversion_sign(2) == -1);
  CHECK(reversion_sign(3) == -1);
  CHECK(reversion_sign(4) == 1);
  CHECK(involution_sign(3) == -1);
  CHECK(binomial(6, 3) == 20);
}

TEST_CASE("graded construction rejects bad coefficient arrays") {
  CHECK_THROWS_AS(Multivector(Dimension(2), {1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(Multivector(Dimension(1), {1.0, std::nan("")}), DomainError);
  CHECK_THROWS_AS(Multiform::basis(Dimension(2), 3), DomainError);
  CHECK_THROWS_AS(mv(2, {}) + mv(3, {}), DomainError);
}

TEST_CASE("grade projection and inclusion") {
  const auto x = mv(2, {{{}, 3}, {{1}, 2}, {{1, 2}, 5}});
  CHECK(grade_project(x, 1) == mv(2, {{{1}, 2}}));
  CHECK(grade_project(x, 0) == mv(2, {{{}, 3}}));
  CHECK_THROWS_AS(grade_project(x, 3), DomainError);
  CHECK_THROWS_AS(grade_project(x, -1), DomainError);

  const auto part = component(mv(3, {{{1, 2}, 1}}), 2);
  CHECK(part.coeffs == std::vector<double>{1, 0, 0});
  CHECK(include(part) == mv(3, {{{1, 2}, 1}}));
  CHECK(include(GradePart<Kind::vector>{Dimension(3), 2, {0, 0, 0}}) == Multivector(Dimension(3)));
  CHECK_THROWS_AS(include(GradePart<Kind::vector>{Dimension(3), 2, {0, 0}}), DomainError);

  Rng rng(5);
  for (int n = 1; n <= 6; ++n) {
    const auto y = random_element<Kind::form>(rng, Dimension(n));
    Multiform sum{Dimension(n)};
    for (int p = 0; p <= n; ++p) {
      sum = sum + include(component(y, p));
      const auto h = random_homogeneous<Kind::form>(rng, Dimension(n), p);
      CHECK(grade_project(include(component(h, p)), p) == h);
    }
    CHECK(sum == y);
  }
}

TEST_CASE("wedge of basis blades") {
  const auto e1 = Multivector::basis(Dimension(2), 1);
  const auto e2 = Multivector::basis(Dimension(2), 2);
  CHECK(wedge(e1, e2) == mv(2, {{{1, 2}, 1}}));
  CHECK(wedge(e2, e1) == mv(2, {{{1, 2}, -1}}));
  CHECK(wedge(mv(3, {{{2}, 1}}), mv(3, {{{1, 3}, 1}})) == mv(3, {{{1, 2, 3}, -1}}));
  CHECK(wedge(e1, e1) == Multivector(Dimension(2)));
  CHECK_THROWS_AS(wedge(e1, Multivector::basis(Dimension(3), 1)), DomainError);
}

TEST_CASE("wedge laws on random elements") {
  Rng rng(11);
  for (int n = 1; n <= 6; ++n) {
    const Dimension dim(n);
    for (int t = 0; t < 20; ++t) {
      const auto a = random_element<Kind::vector>(rng, dim);
      const auto b = random_element<Kind::vector>(rng, dim);
      const auto c = random_element<Kind::vector>(rng, dim);
      CHECK(testsupport::distance(wedge(wedge(a, b), c), wedge(a, wedge(b, c))) < 1e-13);
      CHECK(wedge(Multivector::scalar(dim, 1.0), a) == a);
      // Graded commutativity on homogeneous pieces.
      const int p = rng.uniform_int(0, n);
      const int q = rng.uniform_int(0, n);
      const auto x = grade_project(a, p);
      const auto y = grade_project(b, q);
      CHECK(testsupport::distance(wedge(x, y), ((p * q) % 2 ? -1.0 : 1.0) * wedge(y, x)) < 1e-14);
      const auto v = random_homogeneous<Kind::vector>(rng, dim, 1);
      CHECK(wedge(v, v).max_abs() < 1e-15);
      // Reversion is an anti-automorphism, involution an automorphism.
      CHECK(testsupport::distance(reversion(wedge(a, b)), wedge(reversion(b), reversion(a))) < 1e-13);
      CHECK(testsupport::distance(grade_involution(wedge(a, b)), wedge(grade_involution(a), grade_involution(b))) <
            1e-13);
    }
  }
}

TEST_CASE("grade involution and reversion") {
  const auto x = mv(3, {{{}, 1}, {{1}, 1}, {{1, 2}, 1}, {{1, 2, 3}, 1}});
  CHECK(grade_involution(x) == mv(3, {{{}, 1}, {{1}, -1}, {{1, 2}, 1}, {{1, 2, 3}, -1}}));
  CHECK(reversion(x) == mv(3, {{{}, 1}, {{1}, 1}, {{1, 2}, -1}, {{1, 2, 3}, -1}}));
  Rng rng(3);
  for (int n = 1; n <= 8; ++n) {
    const auto y = random_element<Kind::form>(rng, Dimension(n));
    CHECK(reversion(reversion(y)) == y);
    CHECK(grade_involution(grade_involution(y)) == y);
    CHECK(reversion(grade_involution(y)) == grade_involution(reversion(y)));
  }
}

TEST_CASE("change of basis") {
  Rng rng(17);
  const auto x = random_element<Kind::vector>(rng, Dimension(3));
  CHECK(testsupport::distance(change_basis(x, Matrix::identity(3)), x) < 1e-15);

  const Matrix swap = Matrix::from_rows({{0, 1}, {1, 0}});
  const auto b = mv(2, {{{1, 2}, 2.5}});
  CHECK(change_basis(b, swap) == mv(2, {{{1, 2}, -2.5}}));
  CHECK_THROWS_AS(change_basis(x, Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 0, 1}})), DomainError);

  // e'_1 = e_1 + e_2, e'_2 = e_2: the vector e_1 + e_2 becomes e'_1.
  const Matrix m = Matrix::from_rows({{1, 1}, {0, 1}});
  CHECK(testsupport::distance(change_basis(mv(2, {{{1}, 1}, {{2}, 1}}), m), mv(2, {{{1}, 1}})) < 1e-15);

  // Pairing invariance on 100 random, possibly badly conditioned, bases.
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Dimension dim(rng.uniform_int(1, 6));
    const Matrix basis = random_invertible_matrix(rng, dim, 1e6);
    const auto v = random_element<Kind::vector>(rng, dim);
    const auto phi = random_element<Kind::form>(rng, dim);
    const double before = pairing(phi, v);
    const double after = pairing(change_basis(phi, basis), change_basis(v, basis));
    worst = std::max(worst, std::abs(before - after) / std::max(1.0, std::abs(before)));
  }
  CHECK(worst < 1e-8);
}
