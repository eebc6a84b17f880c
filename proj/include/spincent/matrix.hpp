#pragma once

// Dense and row-sparse matrices over an exact (or double) scalar type.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spincent/rational.hpp"

namespace spincent {

template <class T>
using SparseVec = std::vector<std::pair<std::size_t, T>>;

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero_matrix() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return is_zero(x); });
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  /// Skips zero entries of the left factor; the generator matrices are monomial.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (is_zero(bkj)) continue;
          c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const T& x = (*this)(i, j);
        if (!is_zero(x) && !is_zero(v[j])) out[i] += x * v[j];
      }
    return out;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// Row-compressed sparse matrix; each row is sorted by column and holds no zeros.
template <class T>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, T(1));
    return m;
  }

  static SparseMatrix from_dense(const Matrix<T>& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (!is_zero(d(i, j))) m.rows_[i].emplace_back(j, d(i, j));
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const SparseVec<T>& row(std::size_t i) const { return rows_[i]; }

  /// Entries must be appended in increasing column order per row.
  void push(std::size_t i, std::size_t j, T value) {
    if (is_zero(value)) return;
    auto& r = rows_[i];
    if (!r.empty() && r.back().first >= j) throw std::logic_error("SparseMatrix::push out of order");
    r.emplace_back(j, std::move(value));
  }

  void set_row(std::size_t i, SparseVec<T> r) { rows_[i] = std::move(r); }

  T at(std::size_t i, std::size_t j) const {
    const auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& e, std::size_t c) { return e.first < c; });
    return (it != r.end() && it->first == j) ? it->second : T(0);
  }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  bool is_zero_matrix() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
  }

  Matrix<T> to_dense() const {
    Matrix<T> d(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : rows_[i]) d(i, j) = v;
    return d;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : rows_[i]) t.rows_[j].emplace_back(i, v);
    return t;
  }

  SparseMatrix scaled(const T& s) const {
    SparseMatrix m(rows(), cols_);
    if (is_zero(s)) return m;
    for (std::size_t i = 0; i < rows(); ++i) {
      m.rows_[i].reserve(rows_[i].size());
      for (const auto& [j, v] : rows_[i]) m.rows_[i].emplace_back(j, v * s);
    }
    return m;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows()) throw std::invalid_argument("sparse product: shape mismatch");
    SparseMatrix c(a.rows(), b.cols_);
    std::vector<T> acc(b.cols_, T(0));
    std::vector<char> mark(b.cols_, 0);
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      touched.clear();
      for (const auto& [k, aik] : a.rows_[i])
        for (const auto& [j, bkj] : b.rows_[k]) {
          if (!mark[j]) {
            mark[j] = 1;
            touched.push_back(j);
            acc[j] = aik * bkj;
          } else {
            acc[j] += aik * bkj;
          }
        }
      std::sort(touched.begin(), touched.end());
      for (std::size_t j : touched) {
        if (!is_zero(acc[j])) c.rows_[i].emplace_back(j, acc[j]);
        acc[j] = T(0);
        mark[j] = 0;
      }
    }
    return c;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, T(1)); }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, T(-1)); }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(rows(), T(0));
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, x] : rows_[i]) out[i] += x * v[j];
    return out;
  }

  SparseVec<T> apply(const SparseVec<T>& v) const {
    // Column access through the transpose would be cheaper for repeated use; callers cache it.
    std::vector<T> dense(cols_, T(0));
    for (const auto& [j, x] : v) dense[j] = x;
    SparseVec<T> out;
    for (std::size_t i = 0; i < rows(); ++i) {
      T s(0);
      for (const auto& [j, x] : rows_[i])
        if (!is_zero(dense[j])) s += x * dense[j];
      if (!is_zero(s)) out.emplace_back(i, s);
    }
    return out;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < rows(); ++i) t += at(i, i);
    return t;
  }

 private:
  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, const T& sb) {
    if (a.rows() != b.rows() || a.cols_ != b.cols_) throw std::invalid_argument("sparse sum: shape mismatch");
    SparseMatrix c(a.rows(), a.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const auto& x = a.rows_[i];
      const auto& y = b.rows_[i];
      auto& out = c.rows_[i];
      std::size_t p = 0;
      std::size_t q = 0;
      while (p < x.size() || q < y.size()) {
        if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
          out.push_back(x[p++]);
        } else if (p == x.size() || y[q].first < x[p].first) {
          out.emplace_back(y[q].first, sb * y[q].second);
          ++q;
        } else {
          T s = x[p].second + sb * y[q].second;
          if (!is_zero(s)) out.emplace_back(x[p].first, s);
          ++p;
          ++q;
        }
      }
    }
    return c;
  }

  std::size_t cols_ = 0;
  std::vector<SparseVec<T>> rows_;
};

template <class T>
SparseMatrix<T> kronecker(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  SparseMatrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t p = 0; p < b.rows(); ++p)
      for (const auto& [j, x] : a.row(i))
        for (const auto& [q, y] : b.row(p)) k.push(i * b.rows() + p, j * b.cols() + q, x * y);
  return k;
}

template <class T>
SparseMatrix<T> commutator(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  return a * b - b * a;
}

/// Block-diagonal sum; an empty block list yields the 0x0 matrix.
template <class T>
SparseMatrix<T> block_diagonal(const std::vector<SparseMatrix<T>>& blocks) {
  std::size_t n = 0;
  std::size_t m = 0;
  for (const auto& b : blocks) {
    n += b.rows();
    m += b.cols();
  }
  SparseMatrix<T> out(n, m);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (const auto& [j, v] : b.row(i)) out.push(r0 + i, c0 + j, v);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

template <class T>
bool is_antisymmetric(const SparseMatrix<T>& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i))
      if (m.at(j, i) != -v) return false;
  return true;
}

template <class T>
bool squares_to_minus_identity(const SparseMatrix<T>& m) {
  return m * m == SparseMatrix<T>::identity(m.rows()).scaled(T(-1));
}

inline SparseMatrix<double> to_double(const SparseMatrix<Rational>& m) {
  SparseMatrix<double> d(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) d.push(i, j, v.get_d());
  return d;
}

}  // namespace spincent
