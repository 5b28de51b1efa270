#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "realcipher/scalar.hpp"

namespace realcipher {

/// Dense row-major matrix of scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// y = A x
std::vector<Scalar> multiply(const Matrix& a, std::span<const Scalar> x);

/// Maximum absolute row sum.
Scalar norm_inf(const Matrix& a);

/// max |a_ij - b_ij|
Scalar max_abs_difference(const Matrix& a, const Matrix& b);

/// Smallest |det| accepted as invertible.
inline constexpr Scalar kMinDeterminant = 1e-6;

/// Determinant by partially pivoted elimination.
Scalar determinant(const Matrix& a);

/// Gauss-Jordan inverse with partial pivoting. Throws SingularMatrixError
/// when |det(A)| < min_det.
Matrix invert_matrix(const Matrix& a, Scalar min_det = kMinDeterminant);

/// A^-1 = adj(A) / det(A) by cofactor expansion, for n <= 4. Serves as an
/// independent cross-check of invert_matrix.
Matrix invert_matrix_adjugate(const Matrix& a, Scalar min_det = kMinDeterminant);

/// Least-squares solution of M X = R for every column of R via Householder
/// QR. Returns an empty (0x0) matrix when M has fewer rows than columns or
/// is numerically rank deficient (|r_kk| <= rank_tol * max |r_ii|).
Matrix solve_least_squares(const Matrix& m, const Matrix& rhs, Scalar rank_tol = 1e-10);

}  // namespace realcipher
