#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>
#include <vector>

#include "sheaf1d/field.hpp"

namespace sheaf1d {

// Dense row-major matrix. Arithmetic lives in the free functions below,
// which take the field object explicitly.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

template <class F>
using FMatrix = Matrix<typename F::value_type>;

template <class F>
FMatrix<F> zeros(const F& f, int rows, int cols) {
  return FMatrix<F>(rows, cols, f.zero());
}

template <class F>
FMatrix<F> identity(const F& f, int n) {
  FMatrix<F> m(n, n, f.zero());
  for (int i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class F>
FMatrix<F> multiply(const F& f, const FMatrix<F>& a, const FMatrix<F>& b) {
  assert(a.cols() == b.rows());
  FMatrix<F> c(a.rows(), b.cols(), f.zero());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (f.is_zero(a(i, k))) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(a(i, k), b(k, j)));
    }
  return c;
}

template <class F>
FMatrix<F> add(const F& f, const FMatrix<F>& a, const FMatrix<F>& b) {
  FMatrix<F> c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  return c;
}

template <class F>
FMatrix<F> subtract(const F& f, const FMatrix<F>& a, const FMatrix<F>& b) {
  FMatrix<F> c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
  return c;
}

template <class F>
bool is_zero_matrix(const F& f, const FMatrix<F>& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!f.is_zero(a(i, j))) return false;
  return true;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  assert(a.rows() == b.rows());
  Matrix<T> c(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

template <class T>
Matrix<T> select_columns(const Matrix<T>& a, const std::vector<int>& cols) {
  Matrix<T> c(a.rows(), static_cast<int>(cols.size()));
  for (int i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) c(i, static_cast<int>(j)) = a(i, cols[j]);
  return c;
}

template <class T>
Matrix<T> select_rows(const Matrix<T>& a, const std::vector<int>& rows) {
  Matrix<T> c(static_cast<int>(rows.size()), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(static_cast<int>(i), j) = a(rows[i], j);
  return c;
}

template <class F>
struct RrefResult {
  FMatrix<F> reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form by Gauss-Jordan elimination.
template <class F>
RrefResult<F> rref(const F& f, FMatrix<F> m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!f.is_zero(m(r, col))) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    auto inv = f.inv(m(row, col));
    for (int j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), inv);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || f.is_zero(m(r, col))) continue;
      auto factor = m(r, col);
      for (int j = col; j < m.cols(); ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

// Rank by forward elimination only (cheaper than a full rref).
template <class F>
int rank(const F& f, FMatrix<F> m) {
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!f.is_zero(m(r, col))) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = col; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    auto inv = f.inv(m(row, col));
    for (int r = row + 1; r < m.rows(); ++r) {
      if (f.is_zero(m(r, col))) continue;
      auto factor = f.mul(m(r, col), inv);
      for (int j = col; j < m.cols(); ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(row, j)));
    }
    ++row;
  }
  return row;
}

// Columns form a basis of the null space of m.
template <class F>
FMatrix<F> kernel(const F& f, const FMatrix<F>& m) {
  auto [red, pivots] = rref(f, m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int p : pivots) is_pivot[p] = 1;
  std::vector<int> free_cols;
  for (int j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  FMatrix<F> basis(m.cols(), static_cast<int>(free_cols.size()), f.zero());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis(fc, static_cast<int>(k)) = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], static_cast<int>(k)) = f.neg(red(static_cast<int>(r), fc));
  }
  return basis;
}

// Some X with a·X = b, or nullopt when inconsistent.
template <class F>
std::optional<FMatrix<F>> solve(const F& f, const FMatrix<F>& a, const FMatrix<F>& b) {
  auto [red, pivots] = rref(f, hstack(a, b));
  for (int p : pivots)
    if (p >= a.cols()) return std::nullopt;
  FMatrix<F> x(a.cols(), b.cols(), f.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j) x(pivots[r], j) = red(static_cast<int>(r), a.cols() + j);
  return x;
}

template <class F>
std::optional<FMatrix<F>> inverse(const F& f, const FMatrix<F>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(f, a) != a.rows()) return std::nullopt;
  return solve(f, a, identity(f, a.rows()));
}

template <class F>
bool is_invertible(const F& f, const FMatrix<F>& a) {
  return a.rows() == a.cols() && rank(f, a) == a.rows();
}

// Indices of a maximal linearly independent prefix-greedy set of columns.
template <class F>
std::vector<int> independent_columns(const F& f, const FMatrix<F>& m) {
  return rref(f, m).pivots;
}

// Columns of `ambient` (standard basis when empty) extending the
// independent columns of `sub` to a basis of the whole space.
template <class F>
std::vector<int> complement_standard_basis(const F& f, const FMatrix<F>& sub) {
  FMatrix<F> joined = hstack(sub, identity(f, sub.rows()));
  std::vector<int> result;
  for (int p : rref(f, joined).pivots)
    if (p >= sub.cols()) result.push_back(p - sub.cols());
  return result;
}

template <class F>
FMatrix<F> to_field_matrix(const F& f, const Matrix<Rational>& m) {
  FMatrix<F> out(m.rows(), m.cols(), f.zero());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = f.from_rational(m(i, j));
  return out;
}

template <class F>
Matrix<Rational> to_rational_matrix(const F& f, const FMatrix<F>& m) {
  Matrix<Rational> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = f.to_rational(m(i, j));
  return out;
}

}  // namespace sheaf1d
