#pragma once

// Kronecker-Weierstrass normal forms of 2 x e matrices of linear forms.
//
// The canonical pencil of a form is block diagonal with, in order:
//   nilpotent block of length m  ->  L^T_{m-1}  (m x (m-1)),  [I;0] + v[0;I]
//   scroll block of length n     ->  L_n        (n x (n+1)),  [I|0] + v[0|I]
//   Jordan block (p, lambda)     ->  J_{p,lambda} (p x p),    I + v(lambda I + N)
// followed by one zero column per free variable (a variable that occurs in no
// entry of the matrix). N is the upper shift.
//
// The reduction is a staircase: column minimal indices are peeled off one at a
// time from shortest polynomial kernel vectors, then row minimal indices the
// same way on the transpose, and what remains is regular. The regular part is
// brought to Jordan form through A_r^{-1} B_r. When A_r is singular no strict
// equivalence can fix that, so the two rows of the matrix are mixed first
// (r1 <- r1 + c r2); the certificate records that 2 x 2 row operation.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kwk/error.hpp"
#include "kwk/pencil.hpp"
#include "kwk/qmatrix.hpp"
#include "kwk/qpoly.hpp"

namespace kwk {

enum class BlockKind { Nilpotent, Scroll, Jordan };

inline std::string_view to_string(BlockKind k) {
  switch (k) {
    case BlockKind::Nilpotent: return "nilpotent";
    case BlockKind::Scroll: return "scroll";
    case BlockKind::Jordan: return "jordan";
  }
  return "?";
}

struct KWBlock {
  BlockKind kind = BlockKind::Scroll;
  std::size_t length = 1;
  Rational eigenvalue;  // meaningful for Jordan blocks only

  static KWBlock nilpotent(std::size_t m) { return {BlockKind::Nilpotent, m, {}}; }
  static KWBlock scroll(std::size_t n) { return {BlockKind::Scroll, n, {}}; }
  static KWBlock jordan(std::size_t p, Rational lambda) { return {BlockKind::Jordan, p, std::move(lambda)}; }

  std::size_t pencil_rows() const { return length; }
  std::size_t pencil_cols() const {
    switch (kind) {
      case BlockKind::Nilpotent: return length - 1;
      case BlockKind::Scroll: return length + 1;
      case BlockKind::Jordan: return length;
    }
    return 0;
  }

  friend bool operator==(const KWBlock& a, const KWBlock& b) {
    return a.kind == b.kind && a.length == b.length && (a.kind != BlockKind::Jordan || a.eigenvalue == b.eigenvalue);
  }
};

/// Strict weak order realising the canonical block sequence.
inline bool canonical_less(const KWBlock& a, const KWBlock& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  if (a.kind == BlockKind::Jordan) {
    if (a.eigenvalue != b.eigenvalue) return a.eigenvalue < b.eigenvalue;
    return a.length > b.length;
  }
  return a.length < b.length;
}

struct KWForm {
  std::vector<KWBlock> blocks;
  std::size_t free_variables = 0;

  void validate() const {
    for (const auto& b : blocks)
      if (b.length < 1) throw Error(ErrorKind::InvalidForm, "block lengths must be positive");
  }

  KWForm canonical() const {
    KWForm f = *this;
    std::stable_sort(f.blocks.begin(), f.blocks.end(), canonical_less);
    return f;
  }
  bool is_canonical() const {
    return std::is_sorted(blocks.begin(), blocks.end(), canonical_less);
  }

  std::vector<std::size_t> lengths(BlockKind k) const {
    std::vector<std::size_t> out;
    for (const auto& b : blocks)
      if (b.kind == k) out.push_back(b.length);
    return out;
  }
  bool has(BlockKind k) const {
    return std::any_of(blocks.begin(), blocks.end(), [k](const KWBlock& b) { return b.kind == k; });
  }
  /// Distinct Jordan eigenvalues in block order.
  std::vector<Rational> eigenvalues() const {
    std::vector<Rational> out;
    for (const auto& b : blocks)
      if (b.kind == BlockKind::Jordan && std::find(out.begin(), out.end(), b.eigenvalue) == out.end())
        out.push_back(b.eigenvalue);
    return out;
  }

  std::size_t pencil_rows() const {
    std::size_t r = 0;
    for (const auto& b : blocks) r += b.pencil_rows();
    return r;
  }
  std::size_t pencil_cols() const {
    std::size_t c = free_variables;
    for (const auto& b : blocks) c += b.pencil_cols();
    return c;
  }

  /// Same blocks as multisets (order ignored) and the same free-variable count.
  bool same_multiset(const KWForm& other) const {
    auto a = canonical(), b = other.canonical();
    return a.blocks == b.blocks && a.free_variables == b.free_variables;
  }

  friend bool operator==(const KWForm&, const KWForm&) = default;
};

struct EquivalenceCertificate {
  QMatrix C;
  QMatrix Cprime;
  QMatrix row_mix = QMatrix::identity(2);
};

/// Block-diagonal canonical pencil of F in F's block order.
inline Pencil canonical_pencil(const KWForm& f) {
  const std::size_t e = f.pencil_rows(), n = f.pencil_cols();
  Pencil p{QMatrix(e, n), QMatrix(e, n)};
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : f.blocks) {
    const std::size_t len = b.length;
    switch (b.kind) {
      case BlockKind::Nilpotent:
        for (std::size_t k = 0; k + 1 < len; ++k) {
          p.A(r0 + k, c0 + k) = 1;
          p.B(r0 + k + 1, c0 + k) = 1;
        }
        break;
      case BlockKind::Scroll:
        for (std::size_t k = 0; k < len; ++k) {
          p.A(r0 + k, c0 + k) = 1;
          p.B(r0 + k, c0 + k + 1) = 1;
        }
        break;
      case BlockKind::Jordan:
        for (std::size_t k = 0; k < len; ++k) {
          p.A(r0 + k, c0 + k) = 1;
          p.B(r0 + k, c0 + k) = b.eigenvalue;
          if (k + 1 < len) p.B(r0 + k, c0 + k + 1) = 1;
        }
        break;
    }
    r0 += b.pencil_rows();
    c0 += b.pencil_cols();
  }
  return p;
}

/// Variable indices (into blocks_to_matrix(F).variables) for each block of F.
inline std::vector<std::vector<std::size_t>> block_variables(const KWForm& f) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t next = 0;
  for (const auto& b : f.blocks) {
    std::size_t count = b.kind == BlockKind::Nilpotent ? b.length - 1 : (b.kind == BlockKind::Scroll ? b.length + 1 : b.length);
    std::vector<std::size_t> ids(count);
    for (auto& id : ids) id = next++;
    out.push_back(std::move(ids));
  }
  return out;
}

/// The concatenated matrix in natural coordinates: nilpotent blocks in the
/// reversed display (0, x_1, ..., x_{m-1} ; x_1, ..., x_{m-1}, 0), scroll blocks
/// (y_1..y_n ; y_2..y_{n+1}), Jordan blocks (z_1..z_p ; z_2 + l z_1, ..., l z_p).
/// Variables are named x<i>_<r>, y<j>_<s>, z<i>_<j>_<r> (Jordan group i by
/// order of first appearance, block j within the group) and w<k> for free ones.
inline LinearFormMatrix blocks_to_matrix(const KWForm& f) {
  f.validate();
  if (f.blocks.empty() && f.free_variables == 0) throw Error(ErrorKind::InvalidForm, "empty normal form");
  LinearFormMatrix x;
  std::size_t nil = 0, sc = 0;
  std::vector<Rational> groups;
  std::vector<std::size_t> group_counts;
  struct Pending {
    const KWBlock* block;
    std::size_t first;
  };
  std::vector<Pending> pending;
  for (const auto& b : f.blocks) {
    std::size_t first = x.variables.size();
    switch (b.kind) {
      case BlockKind::Nilpotent:
        ++nil;
        for (std::size_t r = 1; r < b.length; ++r) x.variables.push_back("x" + std::to_string(nil) + "_" + std::to_string(r));
        break;
      case BlockKind::Scroll:
        ++sc;
        for (std::size_t s = 1; s <= b.length + 1; ++s) x.variables.push_back("y" + std::to_string(sc) + "_" + std::to_string(s));
        break;
      case BlockKind::Jordan: {
        auto it = std::find(groups.begin(), groups.end(), b.eigenvalue);
        std::size_t gi = static_cast<std::size_t>(it - groups.begin());
        if (it == groups.end()) {
          groups.push_back(b.eigenvalue);
          group_counts.push_back(0);
        }
        std::size_t bj = ++group_counts[gi];
        for (std::size_t r = 1; r <= b.length; ++r)
          x.variables.push_back("z" + std::to_string(gi + 1) + "_" + std::to_string(bj) + "_" + std::to_string(r));
        break;
      }
    }
    pending.push_back({&b, first});
  }
  for (std::size_t k = 1; k <= f.free_variables; ++k) x.variables.push_back("w" + std::to_string(k));

  const std::size_t n = x.variables.size();
  auto unit = [n](std::size_t i) { return coordinate(n, i); };
  for (const auto& [b, first] : pending) {
    const std::size_t len = b->length;
    switch (b->kind) {
      case BlockKind::Nilpotent:
        for (std::size_t k = 0; k < len; ++k) {
          x.entries[0].push_back(k == 0 ? LinearForm(n) : unit(first + k - 1));
          x.entries[1].push_back(k + 1 == len ? LinearForm(n) : unit(first + k));
        }
        break;
      case BlockKind::Scroll:
        for (std::size_t k = 0; k < len; ++k) {
          x.entries[0].push_back(unit(first + k));
          x.entries[1].push_back(unit(first + k + 1));
        }
        break;
      case BlockKind::Jordan:
        for (std::size_t k = 0; k < len; ++k) {
          x.entries[0].push_back(unit(first + k));
          LinearForm g(n);
          if (k + 1 < len) g[first + k + 1] = 1;
          g[first + k] = b->eigenvalue;
          x.entries[1].push_back(std::move(g));
        }
        break;
    }
  }
  if (x.entries[0].empty()) throw Error(ErrorKind::InvalidForm, "normal form has no columns");
  return x;
}

namespace detail {

inline QMatrix block_diag(const QMatrix& a, const QMatrix& b) {
  QMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

struct Extraction {
  std::size_t index;  // minimal index eps of the extracted L_eps
  QMatrix C, Cprime;  // local transforms on the active pencil
  Pencil rest;        // remaining lower-right pencil
};

// Peels one L_eps (eps minimal) off the active pencil q, if it has a column
// minimal index at all.
inline std::optional<Extraction> extract_column_block(const Pencil& q) {
  const std::size_t rows = q.rows(), cols = q.cols();
  if (cols == 0) return std::nullopt;
  if (pencil_rank(q) == cols) return std::nullopt;

  for (std::size_t eps = 0; eps <= rows; ++eps) {
    auto sols = chain_space(q, eps);
    if (sols.empty()) continue;
    auto w = split_chain(sols.front(), cols, eps);

    // Columns c'_k = w_{eps+1-k}; the images u_k = A c'_k span the new rows.
    std::vector<QVector> cp_cols;
    for (std::size_t k = 0; k <= eps; ++k) cp_cols.push_back(w[eps - k]);
    QMatrix cp_head = QMatrix::from_columns(cols, cp_cols);
    if (rank(cp_head) != eps + 1) throw Error(ErrorKind::Internal, "minimal chain is not independent");
    for (auto idx : complement_indices(cp_head)) cp_cols.push_back(coordinate(cols, idx));
    QMatrix cp0 = QMatrix::from_columns(cols, cp_cols);

    std::vector<QVector> u_cols;
    for (std::size_t k = 0; k < eps; ++k) u_cols.push_back(q.A * cp_cols[k]);
    QMatrix c0;
    if (eps > 0) {
      QMatrix u_head = QMatrix::from_columns(rows, u_cols);
      if (rank(u_head) != eps) throw Error(ErrorKind::Internal, "chain images are not independent");
      for (auto idx : complement_indices(u_head)) u_cols.push_back(coordinate(rows, idx));
      c0 = invert(QMatrix::from_columns(rows, u_cols));
    } else {
      c0 = QMatrix::identity(rows);
    }

    Pencil t = q.transform(c0, cp0);
    const std::size_t s = cols - eps - 1, r = rows - eps;
    for (std::size_t i = eps; i < rows; ++i)
      for (std::size_t j = 0; j <= eps; ++j)
        if (!t.A(i, j).is_zero() || !t.B(i, j).is_zero()) throw Error(ErrorKind::Internal, "staircase step left a nonzero below the block");

    // Decouple: find X, Y with L X + Y P* = -D for both coefficient matrices.
    QMatrix X(eps + 1, s), Y(eps, r);
    if (eps > 0 && s > 0) {
      const std::size_t nx = (eps + 1) * s, ny = eps * r;
      QMatrix sys(2 * eps * s, nx + ny);
      QVector rhs(2 * eps * s);
      for (int part = 0; part < 2; ++part) {
        const QMatrix& M = part == 0 ? t.A : t.B;
        for (std::size_t a = 0; a < eps; ++a)
          for (std::size_t b = 0; b < s; ++b) {
            std::size_t eq = static_cast<std::size_t>(part) * eps * s + a * s + b;
            for (std::size_t k = 0; k <= eps; ++k)
              if (!M(a, k).is_zero()) sys(eq, k * s + b) = M(a, k);
            for (std::size_t c = 0; c < r; ++c)
              if (!M(eps + c, eps + 1 + b).is_zero()) sys(eq, nx + a * r + c) = M(eps + c, eps + 1 + b);
            rhs[eq] = -M(a, eps + 1 + b);
          }
      }
      auto sol = solve(sys, rhs);
      if (!sol) throw Error(ErrorKind::Internal, "block decoupling has no solution");
      for (std::size_t k = 0; k <= eps; ++k)
        for (std::size_t b = 0; b < s; ++b) X(k, b) = (*sol)[k * s + b];
      for (std::size_t a = 0; a < eps; ++a)
        for (std::size_t c = 0; c < r; ++c) Y(a, c) = (*sol)[nx + a * r + c];
    }
    QMatrix left = QMatrix::identity(rows), right = QMatrix::identity(cols);
    left.set_block(0, eps, Y);
    right.set_block(0, eps + 1, X);

    Extraction ex;
    ex.index = eps;
    ex.C = left * c0;
    ex.Cprime = cp0 * right;
    Pencil full = q.transform(ex.C, ex.Cprime);
    ex.rest = {full.A.block(eps, eps + 1, r, s), full.B.block(eps, eps + 1, r, s)};
    return ex;
  }
  throw Error(ErrorKind::Internal, "column minimal index not found below the row count");
}

struct PlacedBlock {
  KWBlock block;  // for free variables: scroll of length 0 marker, see `free`
  bool free = false;
  std::size_t row0 = 0, col0 = 0;
};

struct Staircase {
  std::vector<PlacedBlock> placed;
  QMatrix C, Cprime;
  std::size_t reg_offset_row = 0, reg_offset_col = 0;
  Pencil regular;
};

inline void apply_local(Staircase& st, std::size_t r0, std::size_t c0, const QMatrix& cl, const QMatrix& cpl) {
  st.C = block_diag(QMatrix::identity(r0), cl) * st.C;
  st.Cprime = st.Cprime * block_diag(QMatrix::identity(c0), cpl);
}

inline Staircase staircase(const Pencil& p) {
  Staircase st;
  st.C = QMatrix::identity(p.rows());
  st.Cprime = QMatrix::identity(p.cols());
  std::size_t r0 = 0, c0 = 0;
  Pencil active = p;

  while (auto ex = extract_column_block(active)) {
    apply_local(st, r0, c0, ex->C, ex->Cprime);
    PlacedBlock pb;
    pb.row0 = r0;
    pb.col0 = c0;
    if (ex->index == 0) {
      pb.free = true;
    } else {
      pb.block = KWBlock::scroll(ex->index);
    }
    st.placed.push_back(pb);
    r0 += ex->index;
    c0 += ex->index + 1;
    active = ex->rest;
  }
  while (auto ex = extract_column_block(active.transpose())) {
    // C_T P^T C'_T = L ⊕ rest  <=>  C'_T^T P C_T^T = L^T ⊕ rest^T
    apply_local(st, r0, c0, ex->Cprime.transpose(), ex->C.transpose());
    PlacedBlock pb;
    pb.row0 = r0;
    pb.col0 = c0;
    pb.block = KWBlock::nilpotent(ex->index + 1);
    st.placed.push_back(pb);
    r0 += ex->index + 1;
    c0 += ex->index;
    active = ex->rest.transpose();
  }
  if (active.rows() != active.cols()) throw Error(ErrorKind::Internal, "regular remainder is not square");
  st.reg_offset_row = r0;
  st.reg_offset_col = c0;
  st.regular = active;
  return st;
}

struct JordanChain {
  Rational eigenvalue;
  std::vector<QVector> vectors;  // q_1 (eigenvector) ... q_p
};

// Jordan chains of M with superdiagonal convention: M q_k = l q_k + q_{k-1}.
inline std::vector<JordanChain> jordan_chains(const QMatrix& m) {
  const std::size_t n = m.rows();
  auto factors = rational_linear_factors(characteristic_polynomial(m));
  if (!factors.complete) throw Error(ErrorKind::IrrationalEigenvalues, "regular part has non-rational eigenvalues");
  std::vector<JordanChain> chains;
  for (const auto& [lambda, mult] : factors.roots) {
    QMatrix t = m;
    for (std::size_t i = 0; i < n; ++i) t(i, i) -= lambda;
    // Kernels of t^j until they reach the algebraic multiplicity.
    std::vector<std::vector<QVector>> kernels{{}};
    QMatrix power = QMatrix::identity(n);
    while (kernels.back().size() < mult) {
      power = power * t;
      kernels.push_back(kernel(power));
      if (kernels.size() > n + 1) throw Error(ErrorKind::Internal, "generalized eigenspace did not stabilise");
    }
    const std::size_t top = kernels.size() - 1;
    std::vector<std::vector<QVector>> started;  // chains as q_top, t q_top, ...
    for (std::size_t level = top; level >= 1; --level) {
      std::vector<QVector> covered = kernels[level - 1];
      for (const auto& ch : started) covered.push_back(ch[ch.size() - level]);
      std::size_t base_rank = covered.empty() ? 0 : rank(QMatrix::from_columns(n, covered));
      for (const auto& cand : kernels[level]) {
        covered.push_back(cand);
        std::size_t r = rank(QMatrix::from_columns(n, covered));
        if (r == base_rank) {
          covered.pop_back();
          continue;
        }
        base_rank = r;
        // Pad the new chain so that ch[ch.size() - level] indexing stays uniform.
        std::vector<QVector> ch;
        QVector v = cand;
        for (std::size_t k = 0; k < level; ++k) {
          ch.push_back(v);
          v = t * v;
        }
        started.push_back(std::move(ch));
      }
    }
    // started chains are stored top-first; emit q_1..q_p, longest first.
    std::stable_sort(started.begin(), started.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    for (auto& ch : started) {
      JordanChain jc{lambda, {}};
      jc.vectors.assign(ch.rbegin(), ch.rend());
      chains.push_back(std::move(jc));
    }
  }
  return chains;
}

}  // namespace detail

struct KWResult {
  KWForm form;
  EquivalenceCertificate certificate;
};

/// Minimal indices only (no eigenvalue computation): scroll lengths, nilpotent
/// lengths, free-variable count and the size of the regular part.
struct MinimalIndices {
  std::vector<std::size_t> scroll_lengths;
  std::vector<std::size_t> nilpotent_lengths;
  std::size_t free_variables = 0;
  std::size_t regular_size = 0;
};

inline MinimalIndices minimal_indices(const Pencil& p) {
  auto st = detail::staircase(p);
  MinimalIndices mi;
  for (const auto& pb : st.placed) {
    if (pb.free)
      ++mi.free_variables;
    else if (pb.block.kind == BlockKind::Scroll)
      mi.scroll_lengths.push_back(pb.block.length);
    else
      mi.nilpotent_lengths.push_back(pb.block.length);
  }
  std::sort(mi.scroll_lengths.begin(), mi.scroll_lengths.end());
  std::sort(mi.nilpotent_lengths.begin(), mi.nilpotent_lengths.end());
  mi.regular_size = st.regular.rows();
  return mi;
}

namespace detail {

// Normal form assuming the regular part (if any) has invertible A.
inline std::optional<KWResult> normal_form_unmixed(const Pencil& p, Rational* mix_hint) {
  auto st = staircase(p);
  const std::size_t k = st.regular.rows();
  std::vector<PlacedBlock> placed = st.placed;
  if (k > 0) {
    if (!is_invertible(st.regular.A)) {
      for (long c = 1;; c = c > 0 ? -c : -c + 1) {
        if (!determinant(st.regular.A + Rational(c) * st.regular.B).is_zero()) {
          *mix_hint = Rational(c);
          return std::nullopt;
        }
      }
    }
    QMatrix ainv = invert(st.regular.A);
    auto chains = jordan_chains(ainv * st.regular.B);
    std::vector<QVector> qcols;
    std::size_t r = st.reg_offset_row, c = st.reg_offset_col;
    for (const auto& ch : chains) {
      PlacedBlock pb;
      pb.block = KWBlock::jordan(ch.vectors.size(), ch.eigenvalue);
      pb.row0 = r;
      pb.col0 = c;
      placed.push_back(pb);
      r += ch.vectors.size();
      c += ch.vectors.size();
      qcols.insert(qcols.end(), ch.vectors.begin(), ch.vectors.end());
    }
    QMatrix q = QMatrix::from_columns(k, qcols);
    apply_local(st, st.reg_offset_row, st.reg_offset_col, invert(q) * ainv, q);
  }

  // Permute rows and columns into canonical block order, free columns last.
  std::vector<std::size_t> order(placed.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (placed[a].free != placed[b].free) return placed[b].free;
    if (placed[a].free) return false;
    return canonical_less(placed[a].block, placed[b].block);
  });
  KWResult res;
  std::vector<std::size_t> row_perm, col_perm;
  for (auto i : order) {
    const auto& pb = placed[i];
    std::size_t nr = pb.free ? 0 : pb.block.pencil_rows();
    std::size_t nc = pb.free ? 1 : pb.block.pencil_cols();
    for (std::size_t t = 0; t < nr; ++t) row_perm.push_back(pb.row0 + t);
    for (std::size_t t = 0; t < nc; ++t) col_perm.push_back(pb.col0 + t);
    if (pb.free)
      ++res.form.free_variables;
    else
      res.form.blocks.push_back(pb.block);
  }
  QMatrix cfin(p.rows(), p.rows()), cpfin(p.cols(), p.cols());
  for (std::size_t t = 0; t < row_perm.size(); ++t)
    for (std::size_t j = 0; j < p.rows(); ++j) cfin(t, j) = st.C(row_perm[t], j);
  for (std::size_t t = 0; t < col_perm.size(); ++t)
    for (std::size_t j = 0; j < p.cols(); ++j) cpfin(j, t) = st.Cprime(j, col_perm[t]);
  res.certificate.C = std::move(cfin);
  res.certificate.Cprime = std::move(cpfin);
  return res;
}

}  // namespace detail

inline Pencil apply_row_mix(const Pencil& p, const QMatrix& mix) {
  return {mix(0, 0) * p.A + mix(0, 1) * p.B, mix(1, 0) * p.A + mix(1, 1) * p.B};
}

/// Kronecker-Weierstrass normal form with an exact certificate:
/// C (A' + v B') C' equals canonical_pencil(form), where (A', B') is the
/// pencil after the certificate's row mix (the identity unless the regular
/// part has infinite eigenvalues).
inline KWResult kw_normal_form(const Pencil& p) {
  if (p.rows() == 0 || p.cols() == 0 || is_degenerate(p))
    throw Error(ErrorKind::DegeneratePencil, "the two rows of the matrix are linearly dependent");
  Rational c;
  if (auto r = detail::normal_form_unmixed(p, &c)) return *r;
  QMatrix mix = QMatrix::identity(2);
  mix(0, 1) = c;
  auto r = detail::normal_form_unmixed(apply_row_mix(p, mix), &c);
  if (!r) throw Error(ErrorKind::Internal, "row mix did not make the regular part invertible");
  r->certificate.row_mix = mix;
  return *r;
}

inline KWResult kw_normal_form(const LinearFormMatrix& x) { return kw_normal_form(matrix_to_pencil(x)); }

inline bool verify_certificate(const Pencil& p, const KWForm& f, const EquivalenceCertificate& cert) {
  if (!f.is_canonical()) return false;
  if (f.pencil_rows() != p.rows() || f.pencil_cols() != p.cols()) return false;
  if (cert.C.rows() != p.rows() || cert.C.cols() != p.rows()) return false;
  if (cert.Cprime.rows() != p.cols() || cert.Cprime.cols() != p.cols()) return false;
  if (cert.row_mix.rows() != 2 || cert.row_mix.cols() != 2) return false;
  if (!is_invertible(cert.C) || !is_invertible(cert.Cprime) || !is_invertible(cert.row_mix)) return false;
  return apply_row_mix(p, cert.row_mix).transform(cert.C, cert.Cprime) == canonical_pencil(f);
}

}  // namespace kwk
