#pragma once

// Closed-form invariants read off a length sequence.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kwk/error.hpp"
#include "kwk/kronecker.hpp"
#include "kwk/qpoly.hpp"

namespace kwk {

struct JordanGroup {
  Rational eigenvalue;
  std::vector<std::size_t> lengths;  // descending
};

struct LengthSequence {
  std::vector<std::size_t> nilpotent;  // ascending
  std::vector<std::size_t> scroll;     // ascending
  std::vector<JordanGroup> jordan;     // eigenvalues ascending

  static LengthSequence from_form(const KWForm& f) {
    KWForm g = f.canonical();
    LengthSequence ls;
    for (const auto& b : g.blocks) {
      switch (b.kind) {
        case BlockKind::Nilpotent: ls.nilpotent.push_back(b.length); break;
        case BlockKind::Scroll: ls.scroll.push_back(b.length); break;
        case BlockKind::Jordan:
          if (ls.jordan.empty() || ls.jordan.back().eigenvalue != b.eigenvalue) ls.jordan.push_back({b.eigenvalue, {}});
          ls.jordan.back().lengths.push_back(b.length);
          break;
      }
    }
    return ls;
  }

  KWForm to_form() const {
    KWForm f;
    for (auto m : nilpotent) f.blocks.push_back(KWBlock::nilpotent(m));
    for (auto n : scroll) f.blocks.push_back(KWBlock::scroll(n));
    for (const auto& g : jordan)
      for (auto p : g.lengths) f.blocks.push_back(KWBlock::jordan(p, g.eigenvalue));
    return f.canonical();
  }

  /// Longest nilpotent block, or 0 when there is none.
  std::size_t longest_nilpotent() const { return nilpotent.empty() ? 0 : *std::max_element(nilpotent.begin(), nilpotent.end()); }
  /// Shortest scroll block, or 0 when there is none.
  std::size_t shortest_scroll() const { return scroll.empty() ? 0 : *std::min_element(scroll.begin(), scroll.end()); }

  std::string to_string() const {
    auto join = [](const std::vector<std::size_t>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s;
    };
    std::string s = "(" + join(nilpotent) + " | " + join(scroll) + " |";
    for (const auto& g : jordan) s += " " + join(g.lengths) + "@" + g.eigenvalue.to_string();
    return s + ")";
  }
};

/// Koszulness of k[X]/I_2(X): the longest nilpotent block is at most twice the
/// shortest scroll block. Length-1 nilpotent blocks carry no variables and are
/// ignored; the condition holds vacuously without nilpotent or scroll blocks.
inline bool koszul_verdict(const LengthSequence& ls) {
  std::size_t m = ls.longest_nilpotent(), n = ls.shortest_scroll();
  if (m <= 1 || n == 0) return true;
  return m <= 2 * n;
}

/// Castelnuovo-Mumford regularity of k[X]/I_2(X) over the polynomial ring.
inline std::size_t regularity_formula(const LengthSequence& ls) {
  std::size_t m = ls.longest_nilpotent(), n = ls.shortest_scroll();
  if (m <= 1 || n == 0) return 1;
  return (m - 1 + n - 1) / n;
}

/// #{v in Z_{>=0}^d : sum n_j v_j <= b - 1, sum v_j = q - 1}.
inline std::size_t count_N(const std::vector<std::size_t>& ns, long b, long q) {
  if (q < 1 || b < 1) return 0;
  const long budget = b - 1;
  std::size_t count = 0;
  // v_j chosen in order; `left` copies of the total still to distribute.
  auto rec = [&](auto&& self, std::size_t j, long left, long weight) -> void {
    if (weight > budget) return;
    if (j == ns.size()) {
      if (left == 0) ++count;
      return;
    }
    for (long v = 0; v <= left; ++v) {
      long w = weight + static_cast<long>(ns[j]) * v;
      if (w > budget) break;
      self(self, j + 1, left - v, w);
    }
  };
  rec(rec, 0, q - 1, 0);
  return count;
}

/// H_R(v) - H_{R'}(v), where R' is the ring of the scroll and Jordan blocks
/// alone. The difference is a polynomial of degree at most the longest
/// nilpotent length.
inline QPoly hilbert_correction(const LengthSequence& ls) {
  if (ls.nilpotent.empty()) return {};
  std::vector<Rational> coeffs(ls.longest_nilpotent() + 1);
  long linear = 0;
  for (auto m : ls.nilpotent) linear += static_cast<long>(m) - 1;
  coeffs[1] = linear;
  const long m = static_cast<long>(ls.longest_nilpotent());
  for (long q = 2; q <= m; ++q) {
    std::size_t total = 0;
    for (auto mi : ls.nilpotent)
      for (long r = 0; r + 2 <= static_cast<long>(mi); ++r) total += count_N(ls.scroll, static_cast<long>(mi) - 1 - r, q);
    coeffs[static_cast<std::size_t>(q)] = static_cast<long>(total);
  }
  return QPoly(std::move(coeffs));
}

struct ScrollClassification {
  std::vector<std::size_t> type;
  bool balanced_regularity = false;   // reg R/(Y) <= reg R for natural coordinates Y
  bool linearly_koszul = false;       // R/(Y) Koszul for natural coordinates Y
  bool strongly_koszul = false;       // reg_R R/(Y) = 0 for natural coordinates Y
  bool ul_koszul = false;             // R/(Y) Koszul for every linear ideal
  bool universal_regularity = false;  // reg R/(Y) <= reg R for every linear ideal
};

inline ScrollClassification classify_scroll(std::vector<std::size_t> type) {
  if (type.empty()) throw Error(ErrorKind::InvalidForm, "scroll type is empty");
  for (auto n : type)
    if (n < 1) throw Error(ErrorKind::InvalidForm, "scroll lengths must be positive");
  std::sort(type.begin(), type.end());
  ScrollClassification c;
  const std::size_t t = type.size(), lo = type.front(), hi = type.back();
  c.type = type;
  c.balanced_regularity = hi <= lo + 1;
  c.linearly_koszul = hi <= 2 * lo;
  c.strongly_koszul = hi == lo;
  c.ul_koszul = t == 1 || (t == 2 && type[1] <= 2 * type[0]) || (t == 3 && hi == lo);
  c.universal_regularity = t == 1 || (t == 2 && type[1] <= type[0] + 1) || (t == 3 && hi == 1);
  return c;
}

}  // namespace kwk
