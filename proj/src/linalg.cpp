#include "extalg/linalg.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <utility>

namespace extalg {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const std::vector<double>& d) {
  const int n = static_cast<int>(d.size());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return Matrix{};
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.front().size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw DomainError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<double> Matrix::row(int i) const {
  return {data_.begin() + std::ptrdiff_t(i) * cols_, data_.begin() + std::ptrdiff_t(i + 1) * cols_};
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const double aik = a(i, k);
      for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

double max_asymmetry(const Matrix& a) {
  if (!a.square()) throw DomainError("max_asymmetry: matrix is not square");
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - a(j, i)));
  return m;
}

LuDecomposition::LuDecomposition(const Matrix& a) : n_(a.rows()), lu_(a), perm_(a.rows()), det_(1.0) {
  if (!a.square()) throw DomainError("LU: matrix is not square");
  for (int i = 0; i < n_; ++i) perm_[i] = i;
  for (int k = 0; k < n_; ++k) {
    int pivot = k;
    for (int i = k + 1; i < n_; ++i)
      if (std::abs(lu_(i, k)) > std::abs(lu_(pivot, k))) pivot = i;
    if (pivot != k) {
      for (int j = 0; j < n_; ++j) std::swap(lu_(k, j), lu_(pivot, j));
      std::swap(perm_[k], perm_[pivot]);
      det_ = -det_;
    }
    const double d = lu_(k, k);
    det_ *= d;
    if (d == 0.0) continue;
    for (int i = k + 1; i < n_; ++i) {
      const double f = lu_(i, k) / d;
      lu_(i, k) = f;
      for (int j = k + 1; j < n_; ++j) lu_(i, j) -= f * lu_(k, j);
    }
  }
}

Matrix LuDecomposition::inverse(double det_floor) const {
  if (!(std::abs(det_) > det_floor)) {
    throw DomainError("matrix is singular (|det| = " + std::to_string(std::abs(det_)) + ")");
  }
  Matrix inv(n_, n_);
  std::vector<double> col(n_);
  for (int c = 0; c < n_; ++c) {
    // Solve L U x = P e_c.
    for (int i = 0; i < n_; ++i) col[i] = (perm_[i] == c) ? 1.0 : 0.0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < i; ++j) col[i] -= lu_(i, j) * col[j];
    for (int i = n_ - 1; i >= 0; --i) {
      for (int j = i + 1; j < n_; ++j) col[i] -= lu_(i, j) * col[j];
      col[i] /= lu_(i, i);
    }
    for (int i = 0; i < n_; ++i) inv(i, c) = col[i];
  }
  return inv;
}

double determinant(const Matrix& a) { return LuDecomposition(a).determinant(); }

Matrix inverse(const Matrix& a, double det_floor) { return LuDecomposition(a).inverse(det_floor); }

double condition_number(const Matrix& a) {
  auto inf_norm = [](const Matrix& m) {
    double best = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
      double s = 0.0;
      for (int j = 0; j < m.cols(); ++j) s += std::abs(m(i, j));
      best = std::max(best, s);
    }
    return best;
  };
  const LuDecomposition lu(a);
  if (lu.determinant() == 0.0) return std::numeric_limits<double>::infinity();
  return inf_norm(a) * inf_norm(lu.inverse(0.0));
}

double minor_determinant(const Matrix& a, std::uint32_t rows, std::uint32_t cols) {
  const int p = std::popcount(rows);
  if (p != std::popcount(cols)) throw DomainError("minor: row and column sets differ in size");
  if (p == 0) return 1.0;
  std::array<double, kMaxDimension * kMaxDimension> m{};
  std::array<int, kMaxDimension> ri{}, ci{};
  int r = 0;
  for (std::uint32_t s = rows; s; s &= s - 1) ri[r++] = std::countr_zero(s);
  int c = 0;
  for (std::uint32_t s = cols; s; s &= s - 1) ci[c++] = std::countr_zero(s);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) m[i * p + j] = a(ri[i], ci[j]);

  double det = 1.0;
  for (int k = 0; k < p; ++k) {
    int pivot = k;
    for (int i = k + 1; i < p; ++i)
      if (std::abs(m[i * p + k]) > std::abs(m[pivot * p + k])) pivot = i;
    if (m[pivot * p + k] == 0.0) return 0.0;
    if (pivot != k) {
      for (int j = k; j < p; ++j) std::swap(m[k * p + j], m[pivot * p + j]);
      det = -det;
    }
    const double d = m[k * p + k];
    det *= d;
    for (int i = k + 1; i < p; ++i) {
      const double f = m[i * p + k] / d;
      for (int j = k + 1; j < p; ++j) m[i * p + j] -= f * m[k * p + j];
    }
  }
  return det;
}

CompoundMatrix::CompoundMatrix(const Matrix& a) : dim_(a.rows()) {
  if (!a.square()) throw DomainError("compound matrix: matrix is not square");
  const auto& t = blade_tables(dim_);
  blocks_.resize(dim_.n() + 1);
  for (int p = 0; p <= dim_.n(); ++p) {
    const auto& masks = t.by_grade[p];
    const std::size_t c = masks.size();
    auto& block = blocks_[p];
    block.resize(c * c);
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t k = 0; k < c; ++k) block[j * c + k] = minor_determinant(a, masks[j], masks[k]);
  }
}

double CompoundMatrix::entry(std::uint32_t row_mask, std::uint32_t col_mask) const {
  const int p = std::popcount(row_mask);
  if (p != std::popcount(col_mask) || row_mask > dim_.full_mask() || col_mask > dim_.full_mask()) {
    throw DomainError("compound entry: incompatible blades");
  }
  const auto& t = blade_tables(dim_);
  const std::size_t c = t.by_grade[p].size();
  return blocks_[p][t.rank[row_mask] * c + t.rank[col_mask]];
}

std::vector<double> CompoundMatrix::apply(std::span<const double> in) const {
  if (in.size() != dim_.blade_count()) throw DomainError("compound apply: size mismatch");
  const auto& t = blade_tables(dim_);
  std::vector<double> out(in.size(), 0.0);
  for (int p = 0; p <= dim_.n(); ++p) {
    const auto& masks = t.by_grade[p];
    const std::size_t c = masks.size();
    const auto& block = blocks_[p];
    for (std::size_t j = 0; j < c; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < c; ++k) s += block[j * c + k] * in[masks[k]];
      out[masks[j]] = s;
    }
  }
  return out;
}

}  // namespace extalg
