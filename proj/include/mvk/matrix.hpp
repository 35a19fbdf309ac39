#ifndef MVK_MATRIX_HPP
#define MVK_MATRIX_HPP

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "mvk/errors.hpp"
#include "mvk/scalar.hpp"

namespace mvk {

// Dense row-major matrix over a scalar field.  Sized for desk-scale linear
// algebra; no blocking, no views.
template <class S>
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols, const S& fill = S(0))
      : rows_(rows), cols_(cols),
        d_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
           fill) {
    if (rows < 1 || cols < 1) throw input_error("matrix dimensions must be positive");
  }
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = static_cast<int>(rows.size());
    if (rows_ < 1) throw input_error("matrix dimensions must be positive");
    cols_ = static_cast<int>(rows.begin()->size());
    if (cols_ < 1) throw input_error("matrix dimensions must be positive");
    d_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_)
        throw input_error("matrix rows must have equal length");
      for (const S& v : r) d_.push_back(v);
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n, S(0));
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int i, int j) {
    return d_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const S& operator()(int i, int j) const {
    return d_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix conj_transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = conjugate((*this)(i, j));
    return t;
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j)
      std::swap((*this)(a, j), (*this)(b, j));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw input_error("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_, S(0));
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<S> d_;
};

// diag(w) * m: row i scaled by w[i].
template <class S>
Matrix<S> scale_rows(Matrix<S> m, const std::vector<S>& w) {
  if (static_cast<int>(w.size()) != m.rows())
    throw input_error("row scale length mismatch");
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) *= w[static_cast<std::size_t>(i)];
  return m;
}

// Kronecker product, row-major pairing: c(i1*rb+i2, j1*cb+j2) = a(i1,j1) b(i2,j2).
template <class S>
Matrix<S> kronecker(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i1 = 0; i1 < a.rows(); ++i1)
    for (int j1 = 0; j1 < a.cols(); ++j1)
      for (int i2 = 0; i2 < b.rows(); ++i2)
        for (int j2 = 0; j2 < b.cols(); ++j2)
          c(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
  return c;
}

template <class S>
struct Nullspace {
  int rank = 0;
  std::vector<std::vector<S>> basis;  // one vector per free column
};

// Kernel basis via full row reduction.  Exact fields take the first
// structurally nonzero pivot; floating point uses partial pivoting and drops
// pivots at or below eps times the largest pivot seen.
template <class S>
Nullspace<S> nullspace(Matrix<S> b, const EqualityPolicy& policy) {
  const int m = b.rows(), n = b.cols();
  std::vector<int> pivot_cols;
  double entry_scale = 0.0;
  if (!policy.is_exact())
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        entry_scale = std::max(entry_scale, abs_value(b(i, j)));
  double max_pivot = 0.0;

  int prow = 0;
  for (int col = 0; col < n && prow < m; ++col) {
    int sel = -1;
    if (policy.is_exact()) {
      for (int r = prow; r < m; ++r)
        if (!(b(r, col) == S(0))) {
          sel = r;
          break;
        }
    } else {
      double best = 0.0;
      for (int r = prow; r < m; ++r) {
        double a = abs_value(b(r, col));
        if (a > best) {
          best = a;
          sel = r;
        }
      }
      if (sel >= 0 && best <= policy.epsilon * std::max(max_pivot, entry_scale))
        sel = -1;
      if (sel >= 0) max_pivot = std::max(max_pivot, best);
    }
    if (sel < 0) continue;  // free column

    b.swap_rows(prow, sel);
    S piv = b(prow, col);
    for (int j = col; j < n; ++j) b(prow, j) = checked_div(b(prow, j), piv);
    for (int r = 0; r < m; ++r) {
      if (r == prow) continue;
      S f = b(r, col);
      if (f == S(0)) continue;
      for (int j = col; j < n; ++j) b(r, j) -= f * b(prow, j);
      b(r, col) = S(0);
    }
    pivot_cols.push_back(col);
    ++prow;
  }

  Nullspace<S> out;
  out.rank = static_cast<int>(pivot_cols.size());
  std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
  for (int pc : pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = 1;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<S> v(static_cast<std::size_t>(n), S(0));
    v[static_cast<std::size_t>(f)] = S(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      v[static_cast<std::size_t>(pivot_cols[k])] = -b(static_cast<int>(k), f);
    out.basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace mvk

#endif
