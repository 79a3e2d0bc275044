#pragma once

#include <span>
#include <string>
#include <vector>

#include "secant/field.hpp"

namespace secant {

// Dense row-major matrix over one working field. Zero-row and zero-column
// matrices are valid values.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t k);
  static Matrix from_rows(const Field& field, std::size_t cols,
                          const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_ints(const Field& field,
                          const std::vector<std::vector<std::int64_t>>& rows);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Scalar> row_vector(std::size_t r) const;

  void append_row(std::span<const Scalar> values);
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::vector<Scalar> apply(std::span<const Scalar> v) const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

// Rows of `top` followed by rows of `bottom`; column counts must agree.
Matrix stack(const Matrix& top, const Matrix& bottom);

// Reduced row echelon form with the pivot columns it found.
struct Echelon {
  Matrix reduced;             // only the nonzero rows
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination. Pivot rule: columns left to right, first row
// (top to bottom) holding a nonzero entry.
Echelon row_echelon(const Matrix& m);

// Exact rank. Rational matrices go through fraction-free Bareiss elimination
// on integer-scaled rows.
int rank(const Matrix& m);

// Rows form a basis of {v : m * v^T = 0}; row count = cols - rank.
Matrix kernel_basis(const Matrix& m);

// Residue of each row of v after elimination against the reduced echelon
// form of s. The result has zeros in every pivot column of s.
Matrix reduce_modulo_rowspace(const Matrix& v, const Matrix& s);

std::string to_string(const Matrix& m);

}  // namespace secant
