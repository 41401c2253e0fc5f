#pragma once

// 2 x e matrices of linear forms and the matrix pencils they define.
//
// Row r of the matrix X becomes an e x n coefficient matrix: entry (j, i) is
// the coefficient of variable i in the j-th entry of that row. The first row
// gives A, the second B, and the pencil is A + vB.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kwk/error.hpp"
#include "kwk/qmatrix.hpp"

namespace kwk {

/// Coefficient vector over the ambient variable list.
using LinearForm = QVector;

struct LinearFormMatrix {
  std::vector<std::string> variables;
  // entries[row][col], row in {0,1}, each of length variables.size()
  std::array<std::vector<LinearForm>, 2> entries;

  std::size_t num_vars() const { return variables.size(); }
  std::size_t num_cols() const { return entries[0].size(); }

  void validate() const {
    if (entries[0].size() != entries[1].size())
      throw Error(ErrorKind::InvalidForm, "matrix rows have different lengths");
    if (entries[0].empty()) throw Error(ErrorKind::InvalidForm, "matrix has no columns");
    for (const auto& row : entries)
      for (const auto& f : row)
        if (f.size() != variables.size())
          throw Error(ErrorKind::InvalidForm, "linear form length differs from the variable count");
  }

  friend bool operator==(const LinearFormMatrix&, const LinearFormMatrix&) = default;
};

struct Pencil {
  QMatrix A;
  QMatrix B;

  std::size_t rows() const { return A.rows(); }
  std::size_t cols() const { return A.cols(); }

  Pencil transpose() const { return {A.transpose(), B.transpose()}; }
  /// Strict equivalence (A, B) -> (C A C', C B C').
  Pencil transform(const QMatrix& c, const QMatrix& cprime) const { return {c * A * cprime, c * B * cprime}; }
  /// A + t B for a scalar t.
  QMatrix at(const Rational& t) const { return A + t * B; }

  friend bool operator==(const Pencil&, const Pencil&) = default;
};

inline Pencil matrix_to_pencil(const LinearFormMatrix& x) {
  x.validate();
  const std::size_t e = x.num_cols(), n = x.num_vars();
  Pencil p{QMatrix(e, n), QMatrix(e, n)};
  for (std::size_t j = 0; j < e; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      p.A(j, i) = x.entries[0][j][i];
      p.B(j, i) = x.entries[1][j][i];
    }
  return p;
}

inline LinearFormMatrix pencil_to_matrix(const Pencil& p, std::vector<std::string> variables) {
  LinearFormMatrix x;
  x.variables = std::move(variables);
  for (std::size_t j = 0; j < p.rows(); ++j) {
    x.entries[0].push_back(p.A.row(j));
    x.entries[1].push_back(p.B.row(j));
  }
  return x;
}

/// Rank of A + vB over Q(v). A nonzero minor of size r is a polynomial of
/// degree at most r in v, so it cannot vanish at min(e, n) + 1 distinct points.
inline std::size_t pencil_rank(const Pencil& p) {
  const std::size_t points = std::min(p.rows(), p.cols()) + 1;
  std::size_t best = 0;
  for (std::size_t k = 0; k < points; ++k) best = std::max(best, rank(p.at(Rational(static_cast<long long>(k)))));
  return best;
}

/// True when the two rows of the source matrix are linearly dependent, i.e.
/// A and B span a space of dimension at most one.
inline bool is_degenerate(const Pencil& p) {
  QMatrix flat(2, p.rows() * p.cols());
  for (std::size_t j = 0; j < p.rows(); ++j)
    for (std::size_t i = 0; i < p.cols(); ++i) {
      flat(0, j * p.cols() + i) = p.A(j, i);
      flat(1, j * p.cols() + i) = p.B(j, i);
    }
  return rank(flat) < 2;
}

namespace detail {

// The stacked system A w0 = 0, A w_k = B w_{k-1} (1 <= k <= s), B w_s = 0
// in the unknown (w_0, ..., w_s).
inline QMatrix chain_system(const Pencil& p, std::size_t s) {
  const std::size_t e = p.rows(), n = p.cols();
  QMatrix sys(e * (s + 2), n * (s + 1));
  for (std::size_t j = 0; j < e; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      sys(j, i) = p.A(j, i);
      for (std::size_t k = 1; k <= s; ++k) {
        sys(k * e + j, k * n + i) = p.A(j, i);
        sys(k * e + j, (k - 1) * n + i) = -p.B(j, i);
      }
      sys((s + 1) * e + j, s * n + i) = p.B(j, i);
    }
  return sys;
}

inline std::vector<QVector> split_chain(const QVector& flat, std::size_t n, std::size_t s) {
  std::vector<QVector> w(s + 1);
  for (std::size_t k = 0; k <= s; ++k) w[k].assign(flat.begin() + static_cast<std::ptrdiff_t>(k * n),
                                                    flat.begin() + static_cast<std::ptrdiff_t>((k + 1) * n));
  return w;
}

inline bool independent(const std::vector<QVector>& vs, std::size_t n) {
  if (vs.size() > n) return false;
  return rank(QMatrix::from_columns(n, vs)) == vs.size();
}

}  // namespace detail

/// Kernel basis of the stacked chain system of length s.
inline std::vector<QVector> chain_space(const Pencil& p, std::size_t s) { return kernel(detail::chain_system(p, s)); }

/// Searches for linearly independent w_0..w_s with A w0 = 0, B w_{k-1} = A w_k,
/// B w_s = 0. Kernel basis vectors are tried first, then seeded random
/// combinations of them; independence is an open condition on the solution
/// space, so a generic combination succeeds whenever any solution does.
inline std::optional<std::vector<QVector>> scroll_chain(const Pencil& p, std::size_t s, std::uint64_t seed = 0x5eed) {
  const std::size_t n = p.cols();
  auto basis = chain_space(p, s);
  if (basis.empty()) return std::nullopt;
  for (const auto& b : basis) {
    auto w = detail::split_chain(b, n, s);
    if (detail::independent(w, n)) return w;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-7, 7);
  for (int attempt = 0; attempt < 32; ++attempt) {
    QVector flat(basis[0].size());
    for (const auto& b : basis) {
      Rational c(coef(rng));
      for (std::size_t k = 0; k < flat.size(); ++k)
        if (!b[k].is_zero()) flat[k] += c * b[k];
    }
    auto w = detail::split_chain(flat, n, s);
    if (detail::independent(w, n)) return w;
  }
  return std::nullopt;
}

/// Substitutes the given independent linear forms to zero. The forms are put
/// in reduced echelon shape first, so each reads x_i = sum_{j>i} a_j x_j with
/// x_i the lowest-index variable it involves; every such x_i is replaced and
/// removed from the variable list.
inline LinearFormMatrix section(const LinearFormMatrix& x, const std::vector<LinearForm>& forms) {
  x.validate();
  if (forms.empty()) return x;
  const std::size_t n = x.num_vars();
  QMatrix f(forms.size(), n);
  for (std::size_t r = 0; r < forms.size(); ++r) {
    if (forms[r].size() != n) throw Error(ErrorKind::InvalidForm, "section form has wrong length");
    for (std::size_t i = 0; i < n; ++i) f(r, i) = forms[r][i];
  }
  auto red = rref(f);
  if (red.rank < forms.size()) throw Error(ErrorKind::DependentForms, "section forms are linearly dependent");

  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) keep.push_back(i);

  LinearFormMatrix out;
  for (auto i : keep) out.variables.push_back(x.variables[i]);
  for (int row = 0; row < 2; ++row)
    for (const auto& entry : x.entries[row]) {
      LinearForm g(keep.size());
      for (std::size_t k = 0; k < keep.size(); ++k) {
        Rational c = entry[keep[k]];
        // x_p = -sum_{j non-pivot} red(r, j) x_j
        for (std::size_t r = 0; r < red.pivots.size(); ++r) {
          const Rational& ap = entry[red.pivots[r]];
          if (!ap.is_zero() && !red.reduced(r, keep[k]).is_zero()) c -= ap * red.reduced(r, keep[k]);
        }
        g[k] = c;
      }
      out.entries[row].push_back(std::move(g));
    }
  return out;
}

/// Unit linear form for the variable at `index`.
inline LinearForm coordinate(std::size_t n, std::size_t index) {
  LinearForm f(n);
  f.at(index) = 1;
  return f;
}

inline std::optional<std::size_t> variable_index(const LinearFormMatrix& x, const std::string& name) {
  for (std::size_t i = 0; i < x.variables.size(); ++i)
    if (x.variables[i] == name) return i;
  return std::nullopt;
}

}  // namespace kwk
