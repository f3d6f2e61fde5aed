#include "extalg/algebra.hpp"
#include "extalg/duality.hpp"
#include "extalg/metric.hpp"
#include "extalg/products.hpp"
#include "extalg/random.hpp"
#include "support.hpp"

using namespace extalg;
using testsupport::mf;
using testsupport::mv;

TEST_CASE("scalar products") {
  const MetricExtensor g23(Matrix::diagonal({2, 3}));
  CHECK(scalar_product(g23, mv(2, {{{1, 2}, 1}}), mv(2, {{{1, 2}, 1}})) == doctest::Approx(6.0));
  CHECK(scalar_product(g23, mv(2, {{{1}, 1}}), mv(2, {{{1}, 1}})) == doctest::Approx(2.0));
  CHECK(scalar_product(g23, mv(2, {{{1}, 1}}), mv(2, {{{1, 2}, 1}})) == 0.0);
  CHECK(scalar_product(g23, mf(2, {{{2}, 1}}), mf(2, {{{2}, 1}})) == doctest::Approx(1.0 / 3.0));

  const auto r = reciprocal_basis(g23);
  for (int j = 1; j <= 2; ++j)
    for (int k = 1; k <= 2; ++k)
      CHECK(scalar_product(g23, Multivector::basis(Dimension(2), j), r.vectors[k - 1]) ==
            doctest::Approx(j == k ? 1.0 : 0.0));
  CHECK_THROWS_AS(scalar_product(g23, mv(3, {}), mv(3, {})), DomainError);
}

TEST_CASE("contracted products") {
  const MetricExtensor euclid(Matrix::identity(2));
  const MetricExtensor g23(Matrix::diagonal({2, 3}));
  const auto e1 = mv(2, {{{1}, 1}});
  const auto e12 = mv(2, {{{1, 2}, 1}});
  CHECK(lcontract(euclid, e1, e12) == mv(2, {{{2}, 1}}));
  CHECK(lcontract(g23, e1, e12) == mv(2, {{{2}, 2}}));
  CHECK(lcontract(euclid, mf(2, {{{1}, 1}}), mf(2, {{{1, 2}, 1}})) == mf(2, {{{2}, 1}}));
  CHECK(lcontract(g23, mf(2, {{{1}, 1}}), mf(2, {{{1, 2}, 1}})) == mf(2, {{{2}, 0.5}}));
  CHECK(rcontract(g23, e12, mv(2, {{{2}, 1}})) == mv(2, {{{1}, 3}}));

  Rng rng(31);
  for (int p = 0; p <= 4; ++p) {
    for (int q = p; q <= 4; ++q) {
      const MetricExtensor gamma(random_metric_matrix(rng, Dimension(4)));
      const double s = (p * (q - p)) % 2 ? -1.0 : 1.0;
      const auto x = random_homogeneous<Kind::vector>(rng, Dimension(4), p);
      const auto y = random_homogeneous<Kind::vector>(rng, Dimension(4), q);
      CHECK(testsupport::distance(lcontract(gamma, x, y), s * rcontract(gamma, y, x)) < 1e-12);
    }
  }
}

TEST_CASE("metric inversion formula") {
  const Matrix g23 = Matrix::diagonal({2, 3});
  CHECK(testsupport::distance(invert_metric_via_formula(g23, mf(2, {{{1}, 1}})), mv(2, {{{1}, 0.5}})) < 1e-15);
  CHECK(testsupport::distance(invert_metric_via_formula(g23, mf(2, {{{1}, 1}}), FormulaVariant::second),
                              mv(2, {{{1}, 0.5}})) < 1e-15);
  for (int j = 1; j <= 3; ++j)
    CHECK(invert_metric_via_formula(Matrix::identity(3), Multiform::basis(Dimension(3), j)) ==
          Multivector::basis(Dimension(3), j));
  CHECK_THROWS_AS(invert_metric_via_formula(g23, mf(2, {{{1, 2}, 1}})), DomainError);
  CHECK_THROWS_AS(invert_metric_via_formula(Matrix::from_rows({{1, 1}, {1, 1}}), mf(2, {{{1}, 1}})), DomainError);

  Rng rng(41);
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t < 20; ++t) {
      const Matrix g = random_metric_matrix(rng, Dimension(n));
      CHECK(max_abs_diff(inverse_via_formula(g), inverse(g)) < 1e-9);
    }
  }
}

TEST_CASE("extended inversion formula") {
  Rng rng(43);
  for (int n = 1; n <= 5; ++n) {
    const Dimension dim(n);
    const MetricExtensor gamma(random_metric_matrix(rng, dim));
    const auto ps = pseudoscalars(gamma);
    CHECK(testsupport::distance(invert_extension_via_formula(gamma, ps.eps_wedge), ps.e_wedge_up) < 1e-12);
    CHECK(invert_extension_via_formula(gamma, Multiform::scalar(dim, 2.5)).scalar_part() == doctest::Approx(2.5));
    for (int t = 0; t < 20; ++t) {
      const auto phi = random_element<Kind::form>(rng, dim);
      const auto expected = extend_inverse(gamma, phi);
      CHECK(testsupport::distance(invert_extension_via_formula(gamma, phi), expected) < 1e-9);
      CHECK(testsupport::distance(invert_extension_via_formula(gamma, phi, FormulaVariant::second), expected) < 1e-9);
    }
  }
}

TEST_CASE("expansion formulas reproduce their input") {
  const MetricExtensor euclid(Matrix::identity(2));
  const MetricExtensor g23(Matrix::diagonal({2, 3}));
  CHECK(testsupport::distance(expand_multivector(euclid, mv(2, {{{1}, 1}})), mv(2, {{{1}, 1}})) < 1e-15);
  const auto x = mv(2, {{{}, 1}, {{1, 2}, 1}});
  CHECK(testsupport::distance(expand_multivector(g23, x), x) < 1e-15);
  CHECK(testsupport::distance(expand_multivector(g23, x, FormulaVariant::second), x) < 1e-15);

  Rng rng(47);
  for (int n = 1; n <= 6; ++n) {
    const Dimension dim(n);
    const MetricExtensor gamma(random_metric_matrix(rng, dim));
    for (int t = 0; t < 20; ++t) {
      const auto y = random_element<Kind::vector>(rng, dim);
      const auto phi = random_element<Kind::form>(rng, dim);
      CHECK(testsupport::distance(expand_multivector(gamma, y), y) < 1e-9);
      CHECK(testsupport::distance(expand_multiform(gamma, phi), phi) < 1e-9);
      CHECK(testsupport::distance(expand_multiform(gamma, phi, FormulaVariant::second), phi) < 1e-9);
    }
  }
}
