#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diracbound/errors.hpp"
#include "diracbound/exact/quadratic.hpp"

namespace diracbound {

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix column_vector(const std::vector<F>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<F>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!is_zero(o.data_[i])) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!is_zero(o.data_[i])) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (auto& x : data_)
      if (!is_zero(x)) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
  friend Matrix operator*(const F& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.data_) x = -x;
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    F t;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& bkj = b(k, j);
          if (is_zero(bkj)) continue;
          t = aik;
          t *= bkj;
          c(i, j) += t;
        }
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conj((*this)(i, j));
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
  }
  std::vector<F> column(std::size_t j) const {
    std::vector<F> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  /// Columns selected by index, in the given order.
  Matrix columns(const std::vector<std::size_t>& idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
  }

  const std::vector<F>& data() const { return data_; }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

template <class F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b - b * a;
}

template <class F>
F trace(const Matrix<F>& a) {
  F t(0);
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// tr(AB) without forming the product.
template <class F>
F trace_product(const Matrix<F>& a, const Matrix<F>& b) {
  F t(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k)) || is_zero(b(k, i))) continue;
      t += a(i, k) * b(k, i);
    }
  return t;
}

template <class F>
Matrix<F> kron(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (!is_zero(b(r, c))) k(i * b.rows() + r, j * b.cols() + c) = a(i, j) * b(r, c);
    }
  return k;
}

/// Maps an exact field into another containing it (e.g. Q(i) into Q(sqrt5,i)).
template <class To, class From>
To embed_scalar(const From& x) {
  if constexpr (std::same_as<To, From>) {
    return x;
  } else if constexpr (std::same_as<From, Rational>) {
    return To(x);
  } else if constexpr (std::same_as<From, GaussianRational> && std::same_as<To, QSqrt5i>) {
    return QSqrt5i(QSqrt5(x.a()), QSqrt5(x.b()));
  } else if constexpr (std::same_as<From, QSqrt5> && std::same_as<To, QSqrt5i>) {
    return QSqrt5i(x);
  } else {
    static_assert(sizeof(To) == 0, "no field embedding");
  }
}

template <class To, class From>
Matrix<To> embed_matrix(const Matrix<From>& m) {
  Matrix<To> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = embed_scalar<To>(m(i, j));
  return r;
}

template <class F>
Eigen::MatrixXcd to_eigen(const Matrix<F>& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = to_complex(m(i, j));
  return e;
}

template <class F>
struct Echelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
template <class F>
Echelon<F> rref(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  F factor;
  F t;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const F inv = F(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!is_zero(m(row, j))) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (is_zero(m(row, j))) continue;
        t = factor;
        t *= m(row, j);
        m(r, j) -= t;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

/// Basis of {x : m x = 0} as columns; each basis vector has a single 1 among the free coordinates.
template <class F>
Matrix<F> nullspace(const Matrix<F>& m) {
  Echelon<F> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix<F> basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = F(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, free[k]);
  }
  return basis;
}

/// Some X with A X = B, or nullopt when inconsistent.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw DomainError("solve: shape mismatch");
  Matrix<F> aug(a.rows(), a.cols() + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, a.cols(), b);
  Echelon<F> e = rref(aug);
  Matrix<F> x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
  }
  return x;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
  if (a.rows() != a.cols()) throw DomainError("inverse of non-square matrix");
  auto x = solve(a, Matrix<F>::identity(a.rows()));
  if (!x || rank(a) != a.rows()) throw DomainError("inverse of singular matrix");
  return *x;
}

/// Exact test that a Hermitian matrix is positive semidefinite (symmetric elimination).
template <class F>
bool is_positive_semidefinite(Matrix<F> a) {
  const std::size_t n = a.rows();
  if (a != a.adjoint()) throw DomainError("PSD test on non-Hermitian matrix");
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      int s = sign(real_part(a(i, i)));
      if (s < 0) return false;
      if (s > 0 && k == n) k = i;
    }
    if (k == n) {
      // every remaining diagonal entry is zero: the remaining block must vanish
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && !is_zero(a(i, j))) return false;
      return true;
    }
    done[k] = true;
    const F inv = F(1) / a(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || is_zero(a(i, k))) continue;
      const F f = a(i, k) * inv;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j] && !is_zero(a(k, j))) a(i, j) -= f * a(k, j);
    }
  }
  return true;
}

}  // namespace diracbound
