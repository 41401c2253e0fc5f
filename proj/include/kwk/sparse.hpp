#pragma once

// Sparse row echelon forms over Q.
//
// Columns are indexed 0..ncols-1 and a row's pivot is its smallest nonzero
// column. Rows are stored normalised (pivot coefficient 1) but not mutually
// reduced; `reduce` nevertheless eliminates every pivot column from its
// argument, so the remainder is a canonical representative modulo the span.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "kwk/rational.hpp"

namespace kwk {

struct SparseEntry {
  std::uint32_t col;
  Rational val;
};

/// Entries sorted by column, no explicit zeros.
using SparseVec = std::vector<SparseEntry>;

inline SparseVec scaled(const SparseVec& v, const Rational& s) {
  SparseVec out;
  if (s.is_zero()) return out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back({e.col, e.val * s});
  return out;
}

/// Sorts by column and merges duplicates; drops zeros.
inline SparseVec normalized(SparseVec v) {
  std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  SparseVec out;
  for (auto& e : v) {
    if (!out.empty() && out.back().col == e.col)
      out.back().val += e.val;
    else
      out.push_back(std::move(e));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const SparseEntry& e) { return e.val.is_zero(); }), out.end());
  return out;
}

class Echelon {
 public:
  explicit Echelon(std::size_t ncols = 0) : ncols_(ncols), pivot_row_(ncols, -1), work_(ncols), mark_(ncols, 0) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }
  std::vector<std::uint32_t> pivots() const {
    std::vector<std::uint32_t> p;
    for (std::size_t c = 0; c < ncols_; ++c)
      if (pivot_row_[c] >= 0) p.push_back(static_cast<std::uint32_t>(c));
    return p;
  }

  /// Remainder of v after eliminating all pivot columns.
  SparseVec reduce(const SparseVec& v) const { return reduce_impl(v, ncols_); }

  /// Like reduce, but only pivots below `limit` are used and only entries
  /// below `limit` are eliminated; used for augmented (kernel-tracking) rows.
  SparseVec reduce_below(const SparseVec& v, std::size_t limit) const { return reduce_impl(v, limit); }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  /// Inserts v; returns true if the rank grew.
  bool insert(const SparseVec& v) { return insert_reduced(reduce(v)); }

  /// Inserts an already reduced vector (possibly empty).
  bool insert_reduced(SparseVec r) {
    if (r.empty()) return false;
    Rational inv = r.front().val.inverse();
    if (!inv.is_one())
      for (auto& e : r) e.val *= inv;
    pivot_row_[r.front().col] = static_cast<long>(rows_.size());
    rows_.push_back(std::move(r));
    return true;
  }

  /// Mutually reduced rows (reduced row echelon form), sorted by pivot.
  std::vector<SparseVec> reduced_rows() const {
    Echelon tmp(ncols_);
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows_[a].front().col > rows_[b].front().col; });
    // Process from the largest pivot down; each row is reduced against rows
    // with larger pivots, which are already final.
    std::vector<SparseVec> out(rows_.size());
    for (auto i : order) {
      const SparseVec& row = rows_[i];
      SparseVec head{row.front()};
      SparseVec tail(row.begin() + 1, row.end());
      SparseVec red = tmp.reduce(tail);
      head.insert(head.end(), red.begin(), red.end());
      tmp.insert_reduced(head);
    }
    out = tmp.rows_;
    std::sort(out.begin(), out.end(), [](const SparseVec& a, const SparseVec& b) { return a.front().col < b.front().col; });
    return out;
  }

 private:
  std::size_t ncols_;
  std::vector<long> pivot_row_;
  std::vector<SparseVec> rows_;
  // Scratch space for reduce; logically const.
  mutable std::vector<Rational> work_;
  mutable std::vector<char> mark_;

  SparseVec reduce_impl(const SparseVec& v, std::size_t limit) const {
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;
    std::vector<std::uint32_t> touched;
    auto touch = [&](std::uint32_t c) {
      if (!mark_[c]) {
        mark_[c] = 1;
        touched.push_back(c);
        if (c < limit && pivot_row_[c] >= 0) heap.push(c);
      }
    };
    for (const auto& e : v) {
      touch(e.col);
      work_[e.col] += e.val;
    }
    while (!heap.empty()) {
      std::uint32_t c = heap.top();
      heap.pop();
      if (work_[c].is_zero()) continue;
      Rational f = work_[c];
      for (const auto& e : rows_[static_cast<std::size_t>(pivot_row_[c])]) {
        touch(e.col);
        work_[e.col] -= f * e.val;
      }
    }
    std::sort(touched.begin(), touched.end());
    SparseVec out;
    for (auto c : touched) {
      if (!work_[c].is_zero()) out.push_back({c, std::move(work_[c])});
      work_[c] = Rational();
      mark_[c] = 0;
    }
    return out;
  }
};

/// Basis of {c : sum_k c_k rows[k] = 0} for vectors in `ncols` columns,
/// returned as sparse vectors over the row indices.
inline std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows, std::size_t ncols) {
  const std::size_t total = ncols + rows.size();
  Echelon ech(total);
  std::vector<SparseVec> out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    SparseVec aug = rows[k];
    aug.push_back({static_cast<std::uint32_t>(ncols + k), Rational(1)});
    SparseVec red = ech.reduce_below(aug, ncols);
    if (!red.empty() && red.front().col < ncols) {
      ech.insert_reduced(std::move(red));
    } else {
      SparseVec kv;
      for (auto& e : red) kv.push_back({static_cast<std::uint32_t>(e.col - ncols), e.val});
      out.push_back(std::move(kv));
    }
  }
  return out;
}

}  // namespace kwk
