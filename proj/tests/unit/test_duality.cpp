#include "extalg/algebra.hpp"
#include "extalg/duality.hpp"
#include "extalg/oracle/tensor.hpp"
#include "extalg/random.hpp"
#include "support.hpp"

using namespace extalg;
using testsupport::mf;
using testsupport::mv;

TEST_CASE("pairing examples") {
  for (int n = 1; n <= 12; ++n)
    CHECK(pairing(Multiform::pseudoscalar(Dimension(n)), Multivector::pseudoscalar(Dimension(n))) == 1.0);
  CHECK(pairing(mf(2, {{{1, 2}, 1}}), mv(2, {{{1, 2}, -1}})) == -1.0);
  CHECK(pairing(mf(2, {{{1}, 2}, {{2}, 3}}), mv(2, {{{1}, 5}, {{1, 2}, 7}})) == 10.0);
  CHECK(pairing(mv(2, {{{}, 2}}), mf(2, {{{}, 4}})) == 8.0);
  CHECK_THROWS_AS(pairing(mf(2, {}), mv(3, {})), DomainError);
}

TEST_CASE("contraction examples") {
  CHECK(left_contract(mf(2, {{{1}, 1}}), mv(2, {{{1, 2}, 1}})) == mv(2, {{{2}, 1}}));
  CHECK(right_contract(mv(2, {{{1, 2}, 1}}), mf(2, {{{2}, 1}})) == mv(2, {{{1}, 1}}));
  CHECK(left_contract(mv(2, {{{1}, 1}}), mf(2, {{{1, 2}, 1}})) == mf(2, {{{2}, 1}}));
  CHECK(right_contract(mf(2, {{{1, 2}, 1}}), mv(2, {{{2}, 1}})) == mf(2, {{{1}, 1}}));
  // The reversion inside the definition: <eps^12, e_12| = rev(eps^12) paired = -1.
  CHECK(left_contract(mf(2, {{{1, 2}, 1}}), mv(2, {{{1, 2}, 1}})) == mv(2, {{{}, -1}}));
  CHECK(left_contract(mf(3, {{{2}, 1}}), mv(3, {{{1}, 1}})) == Multivector(Dimension(3)));

  Rng rng(2);
  const auto x = random_element<Kind::vector>(rng, Dimension(4));
  CHECK(left_contract(Multiform::scalar(Dimension(4), 1.0), x) == x);
  CHECK(right_contract(x, Multiform::scalar(Dimension(4), 1.0)) == x);
  CHECK_THROWS_AS(left_contract(mf(2, {}), mv(3, {})), DomainError);
}

TEST_CASE("sign table entries") {
  const auto& signs = contraction_signs(Dimension(3));
  CHECK(signs.left(0b001, 0b011) == 1);
  CHECK(signs.right(0b001, 0b011) == -1);
  CHECK(signs.left(0b100, 0b011) == 0);
  CHECK(signs.left(0b011, 0b011) == -1);
  CHECK(&contraction_signs(Dimension(3)) == &signs);
}

TEST_CASE("blade implementation matches the tensor oracle") {
  Rng rng(99);
  for (int n = 1; n <= 3; ++n) {
    const Dimension dim(n);
    for (int p = 0; p <= n; ++p) {
      for (int q = p; q <= n; ++q) {
        for (int t = 0; t < 10; ++t) {
          const auto phi = random_homogeneous<Kind::form>(rng, dim, p);
          const auto x = random_homogeneous<Kind::vector>(rng, dim, q);
          const auto tphi = oracle::blade_to_tensor(phi, p);
          const auto tx = oracle::blade_to_tensor(x, q);
          CHECK(max_abs_diff(left_contract(phi, x),
                             oracle::tensor_to_blade(oracle::tensor_left_contraction(tphi, tx))) < 1e-12);
          CHECK(max_abs_diff(right_contract(x, phi),
                             oracle::tensor_to_blade(oracle::tensor_right_contraction(tx, tphi))) < 1e-12);
          if (p == q) CHECK(pairing(phi, x) == doctest::Approx(oracle::tensor_pairing(tphi, tx)));
        }
      }
    }
  }
}

TEST_CASE("Fund4 relation grade by grade") {
  Rng rng(4);
  const Dimension dim(4);
  for (int p = 0; p <= 4; ++p) {
    for (int q = p; q <= 4; ++q) {
      const double s = (p * (q - p)) % 2 ? -1.0 : 1.0;
      const auto phi = random_homogeneous<Kind::form>(rng, dim, p);
      const auto x = random_homogeneous<Kind::vector>(rng, dim, q);
      CHECK(max_abs_diff(left_contract(phi, x), s * right_contract(x, phi)) < 1e-15);
      const auto y = random_homogeneous<Kind::vector>(rng, dim, p);
      const auto psi = random_homogeneous<Kind::form>(rng, dim, q);
      CHECK(max_abs_diff(left_contract(y, psi), s * right_contract(psi, y)) < 1e-15);
    }
  }
}

TEST_CASE("contraction is adjoint to the wedge") {
  Rng rng(6);
  for (int n = 1; n <= 6; ++n) {
    const Dimension dim(n);
    const auto phi = random_element<Kind::form>(rng, dim);
    const auto psi = random_element<Kind::form>(rng, dim);
    const auto x = random_element<Kind::vector>(rng, dim);
    CHECK(pairing(left_contract(phi, x), psi) == doctest::Approx(pairing(x, wedge(reversion(phi), psi))));
    CHECK(max_abs_diff(left_contract(phi, left_contract(psi, x)), left_contract(wedge(phi, psi), x)) < 1e-12);
  }
}

TEST_CASE("sign corruption hook") {
  const Dimension dim(2);
  const auto x = mv(2, {{{1, 2}, 1}});
  const auto phi = mf(2, {{{2}, 1}});
  const auto before = right_contract(x, phi);
  {
    testing::ScopedSignCorruption corrupt(dim, 0b10, 0b11);
    CHECK(right_contract(x, phi) == -before);
    CHECK(left_contract(phi, x) == mv(2, {{{1}, -1}}));
  }
  CHECK(right_contract(x, phi) == before);
}
