#pragma once

// Dense matrices over the rationals and the handful of exact elimination
// routines the rest of the library is built on.

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "kwk/error.hpp"
#include "kwk/rational.hpp"

namespace kwk {

using QVector = std::vector<Rational>;

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("QMatrix: ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static QMatrix from_columns(std::size_t rows, std::span<const QVector> columns) {
    QMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      assert(columns[j].size() == rows);
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QVector row(std::size_t r) const {
    return QVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  QVector column(std::size_t c) const {
    QVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Copies the sub-block starting at (r0, c0) of the given size.
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    QMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const QMatrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
    QMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
      }
    return p;
  }
  friend QVector operator*(const QMatrix& a, const QVector& x) {
    if (a.cols_ != x.size()) throw std::invalid_argument("QMatrix: shape mismatch in product");
    QVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !x[k].is_zero()) y[i] += a(i, k) * x[k];
    return y;
  }
  friend QMatrix operator+(QMatrix a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("QMatrix: shape mismatch in sum");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend QMatrix operator*(const Rational& s, QMatrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }
  friend bool operator==(const QMatrix& a, const QMatrix& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ", [" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << m(r, c);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  QMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  std::vector<QVector> kernel;  // basis of the right null space
};

/// Reduced row echelon form with pivot columns, rank and a right-kernel basis.
/// The kernel vector attached to free column f has a 1 in position f.
inline RrefResult rref(QMatrix m) {
  RrefResult out;
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t prow = 0;
  for (std::size_t c = 0; c < C && prow < R; ++c) {
    std::size_t sel = R;
    for (std::size_t r = prow; r < R; ++r)
      if (!m(r, c).is_zero()) {
        sel = r;
        break;
      }
    if (sel == R) continue;
    if (sel != prow)
      for (std::size_t k = 0; k < C; ++k) std::swap(m(sel, k), m(prow, k));
    Rational inv = m(prow, c).inverse();
    for (std::size_t k = c; k < C; ++k)
      if (!m(prow, k).is_zero()) m(prow, k) *= inv;
    for (std::size_t r = 0; r < R; ++r) {
      if (r == prow || m(r, c).is_zero()) continue;
      Rational f = m(r, c);
      for (std::size_t k = c; k < C; ++k)
        if (!m(prow, k).is_zero()) m(r, k) -= f * m(prow, k);
    }
    out.pivots.push_back(c);
    ++prow;
  }
  out.rank = out.pivots.size();
  std::vector<bool> is_pivot(C, false);
  for (auto p : out.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    QVector k(C);
    k[f] = 1;
    for (std::size_t i = 0; i < out.pivots.size(); ++i) k[out.pivots[i]] = -m(i, f);
    out.kernel.push_back(std::move(k));
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const QMatrix& m) { return rref(m).rank; }

inline std::vector<QVector> kernel(const QMatrix& m) { return rref(m).kernel; }

/// Exact inverse; throws ErrorKind::Singular when the matrix is not invertible.
inline QMatrix invert(const QMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::Singular, "invert: matrix is not square");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, QMatrix::identity(n));
  auto r = rref(std::move(aug));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1))
    throw Error(ErrorKind::Singular, "invert: rank deficient");
  return r.reduced.block(0, n, n, n);
}

inline bool is_invertible(const QMatrix& m) { return m.square() && rank(m) == m.rows(); }

inline Rational determinant(QMatrix m) {
  if (!m.square()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t r = c; r < n; ++r)
      if (!m(r, c).is_zero()) {
        sel = r;
        break;
      }
    if (sel == n) return 0;
    if (sel != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(sel, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Rational f = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k)
        if (!m(c, k).is_zero()) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

/// Solves M x = b; returns nullopt when inconsistent. Free variables are set to 0.
inline std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  const std::size_t R = m.rows(), C = m.cols();
  QMatrix aug(R, C + 1);
  aug.set_block(0, 0, m);
  for (std::size_t r = 0; r < R; ++r) aug(r, C) = b[r];
  auto res = rref(std::move(aug));
  if (!res.pivots.empty() && res.pivots.back() == C) return std::nullopt;
  QVector x(C);
  for (std::size_t i = 0; i < res.pivots.size(); ++i) x[res.pivots[i]] = res.reduced(i, C);
  return x;
}

/// Indices of standard basis vectors completing the columns of `basis`
/// (rows x k, full column rank) to a basis of Q^rows.
inline std::vector<std::size_t> complement_indices(const QMatrix& basis) {
  const std::size_t n = basis.rows();
  QMatrix aug(n, basis.cols() + n);
  aug.set_block(0, 0, basis);
  aug.set_block(0, basis.cols(), QMatrix::identity(n));
  auto r = rref(std::move(aug));
  std::vector<std::size_t> out;
  for (auto p : r.pivots)
    if (p >= basis.cols()) out.push_back(p - basis.cols());
  return out;
}

}  // namespace kwk
