#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "extalg/blade.hpp"

namespace extalg {

/// Small dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0.0) {}

  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<double>& d);
  /// Throws DomainError on ragged input.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  Matrix transpose() const;
  std::vector<double> row(int i) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

double max_abs_diff(const Matrix& a, const Matrix& b);
/// max_{i,j} |a_ij - a_ji|
double max_asymmetry(const Matrix& a);

/// LU factorization with partial pivoting, PA = LU.
class LuDecomposition {
 public:
  explicit LuDecomposition(const Matrix& a);

  double determinant() const noexcept { return det_; }
  /// Throws DomainError when |det| <= det_floor.
  Matrix inverse(double det_floor = 1e-10) const;

 private:
  int n_;
  Matrix lu_;
  std::vector<int> perm_;
  double det_;
};

double determinant(const Matrix& a);
/// Throws DomainError when |det a| <= det_floor.
Matrix inverse(const Matrix& a, double det_floor = 1e-10);
/// ||a||_inf * ||a^-1||_inf; infinity for singular input.
double condition_number(const Matrix& a);

/// det a[rows, cols] for two index sets of equal size, given as blade masks
/// (bit k-1 selects row/column k). The empty minor is 1.
double minor_determinant(const Matrix& a, std::uint32_t rows, std::uint32_t cols);

/// All exterior powers of a square matrix: for every grade p the
/// C(n,p) x C(n,p) matrix of p x p minors det A[J,K], with J and K ranked in
/// increasing mask order. Immutable once built.
class CompoundMatrix {
 public:
  explicit CompoundMatrix(const Matrix& a);

  Dimension dim() const noexcept { return dim_; }
  double entry(std::uint32_t row_mask, std::uint32_t col_mask) const;

  /// out_J = sum_K det A[J,K] in_K, grade by grade, over dense blade storage.
  std::vector<double> apply(std::span<const double> in) const;

 private:
  Dimension dim_;
  // blocks_[p] is row-major C(n,p) x C(n,p).
  std::vector<std::vector<double>> blocks_;
};

}  // namespace extalg
