#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qhs/rational.hpp"

namespace qhs {

using Vector = std::vector<Rational>;

bool is_zero(std::span<const Rational> v);

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;

  void append_row(std::span<const Rational> values);
  Matrix transposed() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// v^T * M (row vector times matrix).
Vector left_multiply(std::span<const Rational> v, const Matrix& m);
/// M * v.
Vector right_multiply(const Matrix& m, std::span<const Rational> v);

/// Reduced row echelon form. Columns are scanned in `column_order`
/// (default: ascending), so pivots land on the earliest columns of that
/// order and the remaining columns are free.
struct Echelon {
  Matrix reduced;                   // rank() nonzero rows
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::vector<std::size_t> free;    // non-pivot columns, ascending
  std::size_t rank() const { return pivots.size(); }
};

Echelon echelon(const Matrix& m, std::span<const std::size_t> column_order = {});
/// Pivots chosen from the last column backwards; free columns are the low ones.
Echelon echelon_reversed(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per row of the result. Each basis
/// vector has a 1 at one free column and 0 at the others.
Matrix kernel(const Matrix& m);
Matrix kernel(const Matrix& m, const Echelon& e);

/// Some x with m x = b (free variables set to zero), or nullopt.
std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b,
                            std::span<const std::size_t> column_order = {});

/// Reduce v modulo the row space of e.reduced: the result has zeros at
/// every pivot column. `coeffs`, when given, receives the multipliers so
/// that v = residual + sum coeffs[i] * row(i).
Vector reduce_modulo(const Echelon& e, std::span<const Rational> v, Vector* coeffs = nullptr);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace qhs
