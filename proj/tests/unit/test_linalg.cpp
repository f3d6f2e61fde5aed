#include <Eigen/Dense>

#include "extalg/random.hpp"
#include "support.hpp"

using namespace extalg;

namespace {

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

double max_diff(const Matrix& a, const Eigen::MatrixXd& b) {
  return (to_eigen(a) - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("matrix basics") {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  CHECK(a.transpose() == Matrix::from_rows({{1, 3}, {2, 4}}));
  CHECK(a * Matrix::identity(2) == a);
  CHECK(max_asymmetry(a) == 1.0);
  CHECK_THROWS_AS(Matrix::from_rows({{1, 2}, {3}}), DomainError);
  CHECK(determinant(a) == doctest::Approx(-2.0));
  CHECK_THROWS_AS(inverse(Matrix::from_rows({{1, 2}, {2, 4}})), DomainError);
}

TEST_CASE("LU determinant and inverse agree with Eigen") {
  Rng rng(21);
  for (int n = 1; n <= 8; ++n) {
    for (int t = 0; t < 25; ++t) {
      const Matrix g = random_metric_matrix(rng, Dimension(n));
      const Eigen::MatrixXd e = to_eigen(g);
      const double det = e.partialPivLu().determinant();
      CHECK(std::abs(determinant(g) - det) <= 1e-12 * std::max(1.0, std::abs(det)));
      const Eigen::MatrixXd inv = e.partialPivLu().inverse();
      CHECK(max_diff(inverse(g), inv) <= 1e-9 * std::max(1.0, inv.cwiseAbs().maxCoeff()));
    }
  }
}

TEST_CASE("minors and compound matrices") {
  const Matrix a = Matrix::from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(minor_determinant(a, 0, 0) == 1.0);
  CHECK(minor_determinant(a, 0b011, 0b011) == doctest::Approx(5.0));
  CHECK(minor_determinant(a, 0b101, 0b011) == doctest::Approx(2.0));
  CHECK(minor_determinant(a, 0b111, 0b111) == doctest::Approx(determinant(a)));
  CHECK_THROWS_AS(minor_determinant(a, 0b1, 0b11), DomainError);

  // Cauchy-Binet: the compound of a product is the product of compounds.
  Rng rng(8);
  for (int n = 1; n <= 5; ++n) {
    const Dimension dim(n);
    const Matrix x = random_invertible_matrix(rng, dim);
    const Matrix y = random_invertible_matrix(rng, dim);
    const CompoundMatrix cx(x), cy(y), cxy(x * y);
    for (int t = 0; t < 5; ++t) {
      const auto v = random_element<Kind::vector>(rng, dim);
      const auto lhs = cxy.apply(v.coeffs());
      const auto inner = cy.apply(v.coeffs());
      const auto rhs = cx.apply(inner);
      for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == doctest::Approx(rhs[i]).epsilon(1e-12));
    }
    CHECK(cx.entry(dim.full_mask(), dim.full_mask()) == doctest::Approx(determinant(x)).epsilon(1e-12));
  }
}
