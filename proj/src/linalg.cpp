#include "qhs/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qhs {

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

void Matrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += x * b(k, j);
    }
  return p;
}

Vector left_multiply(std::span<const Rational> v, const Matrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("left_multiply: shape mismatch");
  Vector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

Vector right_multiply(const Matrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw std::invalid_argument("right_multiply: shape mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(v[j]) != 0) out[i] += m(i, j) * v[j];
  return out;
}

Echelon echelon(const Matrix& m, std::span<const std::size_t> column_order) {
  std::vector<std::size_t> order;
  if (column_order.empty()) {
    order.resize(m.cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
  } else {
    order.assign(column_order.begin(), column_order.end());
  }
  Matrix a = m;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col : order) {
    if (rank == a.rows()) break;
    std::size_t pivot_row = rank;
    while (pivot_row < a.rows() && sgn(a(pivot_row, col)) == 0) ++pivot_row;
    if (pivot_row == a.rows()) continue;
    if (pivot_row != rank)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot_row, c), a(rank, c));
    Rational inv = 1 / a(rank, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(rank, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || sgn(a(r, col)) == 0) continue;
      Rational factor = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (sgn(a(rank, c)) != 0) a(r, c) -= factor * a(rank, c);
    }
    pivots.push_back(col);
    ++rank;
  }
  Echelon e;
  e.reduced = Matrix(0, a.cols());
  for (std::size_t r = 0; r < rank; ++r) e.reduced.append_row(a.row(r));
  e.pivots = std::move(pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) e.free.push_back(c);
  return e;
}

Echelon echelon_reversed(const Matrix& m) {
  std::vector<std::size_t> order(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) order[i] = m.cols() - 1 - i;
  return echelon(m, order);
}

std::size_t rank(const Matrix& m) { return echelon(m).rank(); }

Matrix kernel(const Matrix& m, const Echelon& e) {
  Matrix k(0, m.cols());
  for (std::size_t f : e.free) {
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    k.append_row(v);
  }
  return k;
}

Matrix kernel(const Matrix& m) { return kernel(m, echelon(m)); }

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b,
                            std::span<const std::size_t> column_order) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  std::vector<std::size_t> order;
  if (column_order.empty()) {
    order.resize(m.cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
  } else {
    order.assign(column_order.begin(), column_order.end());
  }
  order.push_back(m.cols());
  Echelon e = echelon(aug, order);
  Vector x(m.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, m.cols());
  }
  return x;
}

Vector reduce_modulo(const Echelon& e, std::span<const Rational> v, Vector* coeffs) {
  Vector out(v.begin(), v.end());
  if (coeffs) coeffs->assign(e.rank(), Rational(0));
  for (std::size_t r = 0; r < e.rank(); ++r) {
    Rational f = out[e.pivots[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < out.size(); ++c)
      if (sgn(e.reduced(r, c)) != 0) out[c] -= f * e.reduced(r, c);
    if (coeffs) (*coeffs)[r] = f;
  }
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Echelon e = echelon(aug, order);
  if (e.rank() != n) return std::nullopt;
  for (std::size_t r = 0; r < n; ++r)
    if (e.pivots[r] != r) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

}  // namespace qhs
