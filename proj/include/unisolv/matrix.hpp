// Field-generic exact dense linear algebra: determinant (fraction-free
// Bareiss elimination), reduced row echelon form, rank, right nullspace,
// linear solve and inverse. One code path serves Rational and
// GaussianRational.
//
// Pivoting is deterministic: the first row with a nonzero entry, in column
// order. Magnitude-based pivoting is meaningless over exact fields and would
// make echelon bases platform-dependent.

#pragma once

#include <concepts>
#include <cstddef>
#include <utility>
#include <vector>

#include "unisolv/errors.hpp"
#include "unisolv/rational.hpp"

namespace unisolv {

template <class F>
concept ExactField = requires(F a, F b) {
  F{};
  F{1};
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a* b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

template <ExactField F>
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F{1};
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<F> data_;
};

template <ExactField F>
ExactMatrix<F> operator*(const ExactMatrix<F>& a, const ExactMatrix<F>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  ExactMatrix<F> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

/// Exact determinant by one-step fraction-free (Bareiss) elimination.
template <ExactField F>
F det(ExactMatrix<F> m) {
  if (m.rows() != m.cols()) throw DimensionError("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return F{1};
  bool negate = false;
  F prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return F{};
    if (pivot != k) {
      m.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = F{};
    }
    prev = m(k, k);
  }
  F d = m(n - 1, n - 1);
  return negate ? F{} - d : d;
}

template <ExactField F>
struct EchelonForm {
  ExactMatrix<F> reduced;              // reduced row echelon form
  std::vector<std::size_t> pivot_cols; // one per nonzero row, increasing
};

/// Gauss-Jordan reduction with first-nonzero pivoting in column order.
template <ExactField F>
EchelonForm<F> rref(ExactMatrix<F> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) m.swap_rows(pivot, row);
    const F inv = F{1} / m(row, col);
    for (std::size_t j = col; j < cols; ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const F f = m(i, col);
      for (std::size_t j = col; j < cols; ++j) m(i, j) = m(i, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const ExactMatrix<F>& m) {
  return rref(m).pivot_cols.size();
}

/// Basis of the right kernel. Deterministic: for each free column (in index
/// order) the basis vector has that coordinate set to 1.
template <ExactField F>
std::vector<std::vector<F>> nullspace(const ExactMatrix<F>& m) {
  const auto ech = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols);
    v[free] = F{1};
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
      v[ech.pivot_cols[r]] = F{} - ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Exact solution of a square nonsingular system a x = b.
template <ExactField F>
std::vector<F> solve(const ExactMatrix<F>& a, const std::vector<F>& b) {
  if (a.rows() != a.cols()) throw DimensionError("solve: matrix is not square");
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
  const std::size_t n = a.rows();
  ExactMatrix<F> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto ech = rref(std::move(aug));
  if (ech.pivot_cols.size() != n || ech.pivot_cols.back() != n - 1)
    throw SingularMatrixError("solve: singular system");
  std::vector<F> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = ech.reduced(i, n);
  return x;
}

template <ExactField F>
ExactMatrix<F> inverse(const ExactMatrix<F>& a) {
  if (a.rows() != a.cols()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = a.rows();
  ExactMatrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = F{1};
  }
  const auto ech = rref(std::move(aug));
  if (ech.pivot_cols.size() != n || ech.pivot_cols.back() != n - 1)
    throw SingularMatrixError("inverse: singular matrix");
  ExactMatrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

template <ExactField F>
std::vector<F> mat_vec(const ExactMatrix<F>& m, const std::vector<F>& v) {
  if (v.size() != m.cols()) throw DimensionError("mat_vec: length mismatch");
  std::vector<F> r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i] += m(i, j) * v[j];
  return r;
}

}  // namespace unisolv
