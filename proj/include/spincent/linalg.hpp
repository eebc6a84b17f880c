#pragma once

// Incremental sparse row reduction, nullspaces, span membership and
// symmetric congruence diagonalization.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "spincent/matrix.hpp"
#include "spincent/rational.hpp"

namespace spincent {

namespace detail {

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(const Rational& x) { return std::fabs(x.get_d()); }

template <class T>
void drop_negligible(SparseVec<T>& v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](const auto& e) { return is_zero(e.second); }), v.end());
}

/// out = a - f * b, merged by column.
template <class T>
void sub_scaled(const SparseVec<T>& a, const T& f, const SparseVec<T>& b, SparseVec<T>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t p = 0;
  std::size_t q = 0;
  while (p < a.size() || q < b.size()) {
    if (q == b.size() || (p < a.size() && a[p].first < b[q].first)) {
      out.push_back(a[p++]);
    } else if (p == a.size() || b[q].first < a[p].first) {
      T v = b[q].second * f;
      v = -v;
      out.emplace_back(b[q].first, std::move(v));
      ++q;
    } else {
      T v = a[p].second - f * b[q].second;
      if (!is_zero(v)) out.emplace_back(a[p].first, std::move(v));
      ++p;
      ++q;
    }
  }
}

template <class T>
void scale_in_place(SparseVec<T>& v, const T& s) {
  for (auto& e : v) e.second *= s;
}

}  // namespace detail

template <class T>
void sort_sparse(SparseVec<T>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

/// Sorts and merges duplicate indices, dropping zero sums.
template <class T>
SparseVec<T> canonical_sparse(SparseVec<T> v) {
  sort_sparse(v);
  SparseVec<T> out;
  out.reserve(v.size());
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
    } else {
      if (!out.empty() && is_zero(out.back().second)) out.pop_back();
      out.push_back(std::move(e));
    }
  }
  if (!out.empty() && is_zero(out.back().second)) out.pop_back();
  return out;
}

/// Incremental row echelon form over sparse rows. Every stored row has leading coefficient 1.
template <class T>
class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : ncols_(ncols), pivot_of_col_(ncols, -1) {}

  std::size_t cols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true when the row was independent of the rows already inserted.
  bool insert(SparseVec<T> row) {
    prepare(row);
    reduce_leading(row);
    if (row.empty()) return false;
    install(std::move(row));
    return true;
  }

  /// Remainder of v after full reduction against the stored rows (zero iff v is in the row span).
  SparseVec<T> remainder(SparseVec<T> v) const {
    prepare(v);
    SparseVec<T> out;
    SparseVec<T> scratch;
    while (!v.empty()) {
      // Move entries without pivots into the output and reduce the rest.
      std::size_t c = v.front().first;
      std::int64_t p = pivot_of_col_[c];
      if (p < 0) {
        out.push_back(v.front());
        v.erase(v.begin());
        continue;
      }
      T f = v.front().second;
      detail::sub_scaled(v, f, rows_[static_cast<std::size_t>(p)], scratch);
      std::swap(v, scratch);
    }
    return out;
  }

  bool in_span(const SparseVec<T>& v) const { return remainder(v).empty(); }

  /// Basis of {x : row . x = 0 for every stored row}, one vector per free column.
  std::vector<SparseVec<T>> nullspace() const {
    std::vector<std::size_t> pivots;
    pivots.reserve(rows_.size());
    for (std::size_t c = 0; c < ncols_; ++c)
      if (pivot_of_col_[c] >= 0) pivots.push_back(c);
    // Back-substitute from the highest pivot so each reduced row only involves free columns.
    std::vector<SparseVec<T>> reduced(rows_.size());
    std::vector<char> is_pivot(ncols_, 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      std::size_t c = *it;
      std::size_t idx = static_cast<std::size_t>(pivot_of_col_[c]);
      const auto& row = rows_[idx];
      std::map<std::size_t, T> acc;
      for (std::size_t e = 1; e < row.size(); ++e) {
        const auto& [j, a] = row[e];
        if (!is_pivot[j]) {
          acc[j] += a;
          continue;
        }
        const auto& sub = reduced[static_cast<std::size_t>(pivot_of_col_[j])];
        for (const auto& [f, b] : sub) acc[f] -= a * b;
      }
      SparseVec<T> red;
      for (auto& [j, a] : acc)
        if (!is_zero(a)) red.emplace_back(j, a);
      reduced[idx] = std::move(red);
    }
    std::map<std::size_t, SparseVec<T>> by_free;
    for (std::size_t c = 0; c < ncols_; ++c)
      if (!is_pivot[c]) by_free[c].emplace_back(c, T(1));
    for (std::size_t c : pivots) {
      for (const auto& [f, a] : reduced[static_cast<std::size_t>(pivot_of_col_[c])]) {
        T v = a;
        v = -v;
        by_free[f].emplace_back(c, v);
      }
    }
    std::vector<SparseVec<T>> basis;
    basis.reserve(by_free.size());
    for (auto& [f, v] : by_free) {
      sort_sparse(v);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::size_t nullity() const { return ncols_ - rows_.size(); }

 private:
  void prepare(SparseVec<T>& row) const {
    for (const auto& e : row)
      if (e.first >= ncols_) throw std::out_of_range("Echelon: column index out of range");
    if constexpr (std::is_same_v<T, double>) {
      double mx = 0;
      for (const auto& e : row) mx = std::max(mx, std::fabs(e.second));
      if (mx > 0)
        for (auto& e : row) e.second /= mx;
    }
    detail::drop_negligible(row);
  }

  void reduce_leading(SparseVec<T>& row) {
    SparseVec<T> scratch;
    while (!row.empty()) {
      std::int64_t p = pivot_of_col_[row.front().first];
      if (p < 0) return;
      T f = row.front().second;
      detail::sub_scaled(row, f, rows_[static_cast<std::size_t>(p)], scratch);
      std::swap(row, scratch);
      if constexpr (std::is_same_v<T, double>) {
        if (!row.empty()) row.erase(row.begin(), std::find_if(row.begin(), row.end(), [](const auto& e) {
                                      return !is_zero(e.second);
                                    }));
      }
    }
  }

  void install(SparseVec<T> row) {
    T inv = T(1) / row.front().second;
    detail::scale_in_place(row, inv);
    row.front().second = T(1);
    pivot_of_col_[row.front().first] = static_cast<std::int64_t>(rows_.size());
    rows_.push_back(std::move(row));
  }

  std::size_t ncols_;
  std::vector<std::int64_t> pivot_of_col_;
  std::vector<SparseVec<T>> rows_;
};

template <class T>
std::size_t sparse_rank(const std::vector<SparseVec<T>>& rows, std::size_t ncols) {
  Echelon<T> e(ncols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

/// Expresses vectors as combinations of a fixed, linearly independent list.
template <class T>
class SpanSolver {
 public:
  SpanSolver(std::size_t ncols, const std::vector<SparseVec<T>>& basis)
      : ncols_(ncols), count_(basis.size()), pivot_of_col_(ncols, -1) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      SparseVec<T> vec = canonical_sparse(basis[b]);
      SparseVec<T> combo{{b, T(1)}};
      reduce(vec, combo);
      if (vec.empty()) throw std::invalid_argument("SpanSolver: basis is linearly dependent");
      T inv = T(1) / vec.front().second;
      detail::scale_in_place(vec, inv);
      detail::scale_in_place(combo, inv);
      pivot_of_col_[vec.front().first] = static_cast<std::int64_t>(vecs_.size());
      vecs_.push_back(std::move(vec));
      combos_.push_back(std::move(combo));
    }
  }

  std::size_t size() const { return count_; }

  /// Coefficients c with v = sum c_b basis[b], or nullopt when v is outside the span.
  std::optional<std::vector<T>> solve(const SparseVec<T>& v) const {
    SparseVec<T> vec = canonical_sparse(v);
    SparseVec<T> combo;
    reduce(vec, combo);
    if (!vec.empty()) return std::nullopt;
    std::vector<T> coeffs(count_, T(0));
    for (const auto& [b, c] : combo) coeffs[b] = -c;
    return coeffs;
  }

 private:
  void reduce(SparseVec<T>& vec, SparseVec<T>& combo) const {
    SparseVec<T> s1;
    SparseVec<T> s2;
    while (!vec.empty()) {
      std::int64_t p = pivot_of_col_[vec.front().first];
      if (p < 0) return;
      T f = vec.front().second;
      auto idx = static_cast<std::size_t>(p);
      detail::sub_scaled(vec, f, vecs_[idx], s1);
      std::swap(vec, s1);
      detail::sub_scaled(combo, f, combos_[idx], s2);
      std::swap(combo, s2);
    }
  }

  std::size_t ncols_;
  std::size_t count_;
  std::vector<std::int64_t> pivot_of_col_;
  std::vector<SparseVec<T>> vecs_;
  std::vector<SparseVec<T>> combos_;
};

/// Flattens a square sparse matrix into a sparse vector indexed by i*n + j.
template <class T>
SparseVec<T> flatten(const SparseMatrix<T>& m) {
  SparseVec<T> v;
  v.reserve(m.nnz());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, x] : m.row(i)) v.emplace_back(i * m.cols() + j, x);
  return v;
}

template <class T>
SparseMatrix<T> unflatten(const SparseVec<T>& v, std::size_t rows, std::size_t cols) {
  SparseMatrix<T> m(rows, cols);
  for (const auto& [k, x] : v) m.push(k / cols, k % cols, x);
  return m;
}

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return std::tie(a.positive, a.negative, a.zero) == std::tie(b.positive, b.negative, b.zero);
  }
};

/// Sylvester inertia of a symmetric rational matrix via exact congruence diagonalization.
inline Signature congruence_signature(Matrix<Rational> a) {
  if (!a.square()) throw std::invalid_argument("signature: matrix not square");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != a(j, i)) throw std::invalid_argument("signature: matrix not symmetric");
  Signature s;
  std::size_t done = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (!is_zero(a(i, i))) {
        piv = i;
        break;
      }
    if (piv == n) {
      // No diagonal pivot: fold an off-diagonal entry onto the diagonal by row/column k += row/column j.
      std::size_t pi = n;
      std::size_t pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!is_zero(a(i, j))) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t t = 0; t < n; ++t) a(pi, t) += a(pj, t);
      for (std::size_t t = 0; t < n; ++t) a(t, pi) += a(t, pj);
      piv = pi;
    }
    if (piv != k) {
      for (std::size_t t = 0; t < n; ++t) std::swap(a(piv, t), a(k, t));
      for (std::size_t t = 0; t < n; ++t) std::swap(a(t, piv), a(t, k));
    }
    const Rational d = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a(i, k))) continue;
      Rational f = a(i, k) / d;
      for (std::size_t t = 0; t < n; ++t) a(i, t) -= f * a(k, t);
      for (std::size_t t = 0; t < n; ++t) a(t, i) -= f * a(t, k);
    }
    if (sgn(d) > 0) ++s.positive; else ++s.negative;
    ++done;
  }
  s.zero = n - done;
  return s;
}

}  // namespace spincent
