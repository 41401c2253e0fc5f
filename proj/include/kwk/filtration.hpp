#pragma once

// Koszul filtrations of k[X]/I_2(X) for X in normal form. Every member is
// generated by coordinates, so members are handled as variable sets.
//
// Index conventions are 1-based throughout, matching the block notation:
// x_{i,r} is variable r of nilpotent block i, y_{j,s} of scroll block j,
// z^i_{j,r} variable r of block j in Jordan group i (groups are the distinct
// eigenvalues).

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kwk/error.hpp"
#include "kwk/kronecker.hpp"
#include "kwk/ringmodel.hpp"

namespace kwk {

struct FiltrationBounds {
  std::size_t max_scroll_blocks = 3;
  std::size_t max_scroll_length = 4;
  std::size_t max_variables = 14;
};

/// Variable bookkeeping for a normal form prepared for the filtration
/// constructions: length-1 nilpotent blocks removed, blocks in canonical order.
struct FiltrationLayout {
  KWForm form;
  LinearFormMatrix matrix;
  GeneratorSet minors;
  std::vector<std::size_t> m, n;                   // nilpotent / scroll lengths, ascending
  std::vector<std::vector<std::size_t>> p;         // p[i][j]: Jordan lengths per group
  std::vector<std::vector<std::size_t>> x, y;      // x[i][r-1], y[j][s-1]
  std::vector<std::vector<std::vector<std::size_t>>> z;  // z[i][j][r-1]

  std::size_t c() const { return m.size(); }
  std::size_t d() const { return n.size(); }
  std::size_t t() const { return p.size(); }
  std::size_t num_vars() const { return matrix.num_vars(); }

  /// s_i = max(m_i - n_1, 1), or 1 without scroll blocks.
  std::size_t s_of(std::size_t i) const {
    std::size_t mi = m.at(i - 1);
    if (n.empty() || mi <= n[0] + 1) return 1;
    return mi - n[0];
  }

  std::size_t xv(std::size_t i, std::size_t r) const { return x.at(i - 1).at(r - 1); }
  std::size_t yv(std::size_t j, std::size_t s) const { return y.at(j - 1).at(s - 1); }
  std::size_t zv(std::size_t i, std::size_t j, std::size_t r) const { return z.at(i - 1).at(j - 1).at(r - 1); }
  const std::string& name(std::size_t v) const { return matrix.variables.at(v); }
};

inline FiltrationLayout make_layout(const KWForm& input) {
  input.validate();
  if (input.free_variables)
    throw Error(ErrorKind::InvalidForm, "filtrations are built for normal forms without free variables");
  FiltrationLayout L;
  for (const auto& b : input.canonical().blocks)
    if (!(b.kind == BlockKind::Nilpotent && b.length == 1)) L.form.blocks.push_back(b);
  if (L.form.blocks.empty()) throw Error(ErrorKind::InvalidForm, "normal form has no variables");
  L.matrix = blocks_to_matrix(L.form);
  L.minors = two_minors(L.matrix);
  auto vars = block_variables(L.form);
  std::optional<Rational> last;
  for (std::size_t k = 0; k < L.form.blocks.size(); ++k) {
    const auto& b = L.form.blocks[k];
    switch (b.kind) {
      case BlockKind::Nilpotent:
        L.m.push_back(b.length);
        L.x.push_back(vars[k]);
        break;
      case BlockKind::Scroll:
        L.n.push_back(b.length);
        L.y.push_back(vars[k]);
        break;
      case BlockKind::Jordan:
        if (!last || *last != b.eigenvalue) {
          L.p.emplace_back();
          L.z.emplace_back();
          last = b.eigenvalue;
        }
        L.p.back().push_back(b.length);
        L.z.back().push_back(vars[k]);
        break;
    }
  }
  return L;
}

struct FiltrationId {
  enum class Kind { Zero, Maximal, H, I, G };
  Kind kind = Kind::Zero;
  std::size_t i = 0, r = 0;           // H(i, r); for G: group i, variable r of block j
  std::size_t s = 0;                  // I: number of scroll blocks involved
  std::vector<std::size_t> a, b;      // I and G
  std::vector<std::size_t> U;         // G: Jordan groups taken in full, ascending
  std::size_t j = 0;                  // G: block within group i

  static FiltrationId zero() { return {}; }
  static FiltrationId maximal() {
    FiltrationId f;
    f.kind = Kind::Maximal;
    return f;
  }
  static FiltrationId H(std::size_t i, std::size_t r) {
    FiltrationId f;
    f.kind = Kind::H;
    f.i = i;
    f.r = r;
    return f;
  }
  static FiltrationId I(std::vector<std::size_t> a, std::vector<std::size_t> b) {
    FiltrationId f;
    f.kind = Kind::I;
    f.s = a.size();
    f.a = std::move(a);
    f.b = std::move(b);
    return f;
  }
  /// I(d; a, b) + Z^U + z^i_{1,*}, ..., z^i_{j-1,*}, z^i_{j,1..r}. With U empty
  /// this is the J-family, with U = {1..l} minus {i} the K-family.
  static FiltrationId G(std::vector<std::size_t> a, std::vector<std::size_t> b, std::vector<std::size_t> U, std::size_t i,
                        std::size_t j, std::size_t r) {
    FiltrationId f;
    f.kind = Kind::G;
    f.s = a.size();
    f.a = std::move(a);
    f.b = std::move(b);
    std::sort(U.begin(), U.end());
    f.U = std::move(U);
    f.i = i;
    f.j = j;
    f.r = r;
    return f;
  }

  friend bool operator==(const FiltrationId&, const FiltrationId&) = default;
};

namespace detail {

inline std::string join_indices(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

inline void check_ab(const FiltrationLayout& L, const FiltrationId& id, std::size_t len) {
  if (id.a.size() != len || id.b.size() != len) throw Error(ErrorKind::InvalidIndex, "a and b must have one entry per scroll block");
  for (std::size_t q = 0; q < len; ++q) {
    if (id.a[q] < 1 || id.a[q] + id.b[q] > L.n[q] + 1) throw Error(ErrorKind::InvalidIndex, "need 1 <= a_j <= n_j + 1 - b_j");
    if (q > 0 && id.b[q - 1] == 0 && id.b[q] != 0) throw Error(ErrorKind::InvalidIndex, "b has a gap");
  }
}

inline void add_scroll_part(const FiltrationLayout& L, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                            std::set<std::size_t>& out) {
  for (std::size_t q = 0; q < a.size(); ++q) {
    const std::size_t nj = L.n[q];
    for (std::size_t s = 1; s <= a[q]; ++s) out.insert(L.yv(q + 1, s));
    for (std::size_t s = nj + 2 - b[q]; s <= nj + 1; ++s) out.insert(L.yv(q + 1, s));
  }
}

inline void add_all_x(const FiltrationLayout& L, std::set<std::size_t>& out) {
  for (const auto& blk : L.x) out.insert(blk.begin(), blk.end());
}

inline void add_group(const FiltrationLayout& L, std::size_t g, std::set<std::size_t>& out) {
  for (const auto& blk : L.z.at(g - 1)) out.insert(blk.begin(), blk.end());
}

}  // namespace detail

/// Sorted variable indices generating the member `id`.
inline std::vector<std::size_t> ideal_variables(const FiltrationId& id, const FiltrationLayout& L) {
  using K = FiltrationId::Kind;
  std::set<std::size_t> out;
  switch (id.kind) {
    case K::Zero: break;
    case K::Maximal:
      for (std::size_t v = 0; v < L.num_vars(); ++v) out.insert(v);
      break;
    case K::H: {
      if (id.i < 1 || id.i > L.c() || id.r < 1 || id.r + 1 > L.m[id.i - 1]) throw Error(ErrorKind::InvalidIndex, "H index out of range");
      for (std::size_t q = 1; q < id.i; ++q)
        for (auto v : L.x[q - 1]) out.insert(v);
      const std::size_t si = L.s_of(id.i);
      if (id.r <= si) {
        for (std::size_t k = si + 1 - id.r; k <= si; ++k) out.insert(L.xv(id.i, k));
      } else {
        for (std::size_t k = 1; k <= id.r; ++k) out.insert(L.xv(id.i, k));
      }
      break;
    }
    case K::I:
      if (id.s < 1 || id.s > L.d()) throw Error(ErrorKind::InvalidIndex, "I needs 1 <= s <= d");
      detail::check_ab(L, id, id.s);
      detail::add_all_x(L, out);
      detail::add_scroll_part(L, id.a, id.b, out);
      break;
    case K::G: {
      detail::check_ab(L, id, L.d());
      if (id.i < 1 || id.i > L.t() || id.j < 1 || id.j > L.p[id.i - 1].size() || id.r < 1 || id.r > L.p[id.i - 1][id.j - 1])
        throw Error(ErrorKind::InvalidIndex, "Jordan index out of range");
      detail::add_all_x(L, out);
      detail::add_scroll_part(L, id.a, id.b, out);
      for (auto u : id.U) {
        if (u < 1 || u > L.t() || u == id.i) throw Error(ErrorKind::InvalidIndex, "U must avoid i and lie in 1..t");
        detail::add_group(L, u, out);
      }
      for (std::size_t q = 1; q < id.j; ++q)
        for (auto v : L.z[id.i - 1][q - 1]) out.insert(v);
      for (std::size_t k = 1; k <= id.r; ++k) out.insert(L.zv(id.i, id.j, k));
      break;
    }
  }
  return {out.begin(), out.end()};
}

/// Display name in the block notation: H_{i,r}, I_{s;a;b}, J^{i,j,r}_{a,b},
/// K^{l,i,j,r}_{a,b}, or G^{U;i,j,r}_{a,b} for the remaining Jordan members.
inline std::string display_name(const FiltrationId& id) {
  using K = FiltrationId::Kind;
  switch (id.kind) {
    case K::Zero: return "0";
    case K::Maximal: return "m";
    case K::H: return "H_{" + std::to_string(id.i) + "," + std::to_string(id.r) + "}";
    case K::I: return "I_{" + std::to_string(id.s) + ";" + detail::join_indices(id.a) + ";" + detail::join_indices(id.b) + "}";
    case K::G: {
      std::string sub = "_{" + detail::join_indices(id.a) + "," + detail::join_indices(id.b) + "}";
      std::string idx = std::to_string(id.i) + "," + std::to_string(id.j) + "," + std::to_string(id.r);
      if (id.U.empty()) return "J^{" + idx + "}" + sub;
      std::size_t l = std::max(id.U.back(), id.i);
      bool k_family = id.U.size() + 1 == l;
      if (k_family) return "K^{" + std::to_string(l) + "," + idx + "}" + sub;
      return "G^{" + detail::join_indices(id.U) + ";" + idx + "}" + sub;
    }
  }
  return "?";
}

struct Filtration {
  FiltrationLayout layout;
  std::vector<FiltrationId> members;  // members[0] is the zero ideal
  std::vector<std::vector<std::size_t>> variables;
  std::map<std::vector<std::size_t>, std::size_t> by_variables;
  std::size_t maximal_index = 0;

  std::optional<std::size_t> find(const std::vector<std::size_t>& vars) const {
    auto it = by_variables.find(vars);
    if (it == by_variables.end()) return std::nullopt;
    return it->second;
  }
};

namespace detail {

// All (a, b) pairs for the first `len` scroll blocks: b positive on a prefix
// and zero afterwards, 1 <= a_j <= n_j + 1 - b_j.
inline std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> ab_lattice(const std::vector<std::size_t>& n,
                                                                                           std::size_t len) {
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> out;
  std::vector<std::size_t> a(len), b(len);
  auto rec = [&](auto&& self, std::size_t q, bool b_open) -> void {
    if (q == len) {
      out.emplace_back(a, b);
      return;
    }
    for (std::size_t bq = 0; bq <= (b_open ? n[q] : 0); ++bq) {
      b[q] = bq;
      for (std::size_t aq = 1; aq + bq <= n[q] + 1; ++aq) {
        a[q] = aq;
        self(self, q + 1, b_open && bq > 0);
      }
    }
  };
  rec(rec, 0, true);
  return out;
}

inline std::vector<std::vector<std::size_t>> subsets_avoiding(std::size_t t, std::size_t avoid) {
  std::vector<std::size_t> pool;
  for (std::size_t u = 1; u <= t; ++u)
    if (u != avoid) pool.push_back(u);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << pool.size()); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < pool.size(); ++k)
      if (mask >> k & 1) s.push_back(pool[k]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

inline Filtration enumerate_filtration(const KWForm& form, const FiltrationBounds& bounds = {}) {
  Filtration F;
  F.layout = make_layout(form);
  const auto& L = F.layout;
  if (L.c() && L.d() && L.m.back() > 2 * L.n.front())
    throw Error(ErrorKind::LengthConditionViolated, "longest nilpotent block " + std::to_string(L.m.back()) +
                                                        " exceeds twice the shortest scroll block " + std::to_string(L.n.front()));
  if (L.d() > bounds.max_scroll_blocks) throw Error(ErrorKind::BoundsExceeded, "too many scroll blocks for enumeration");
  for (auto nj : L.n)
    if (nj > bounds.max_scroll_length) throw Error(ErrorKind::BoundsExceeded, "scroll block too long for enumeration");
  if (L.num_vars() > bounds.max_variables) throw Error(ErrorKind::BoundsExceeded, "too many variables for enumeration");

  auto add = [&](FiltrationId id) {
    auto vars = ideal_variables(id, L);
    if (F.by_variables.count(vars)) return;
    F.by_variables[vars] = F.members.size();
    F.members.push_back(std::move(id));
    F.variables.push_back(std::move(vars));
  };
  add(FiltrationId::zero());
  for (std::size_t i = 1; i <= L.c(); ++i)
    for (std::size_t r = 1; r + 1 <= L.m[i - 1]; ++r) add(FiltrationId::H(i, r));
  for (std::size_t s = 1; s <= L.d(); ++s)
    for (auto& [a, b] : detail::ab_lattice(L.n, s)) add(FiltrationId::I(a, b));
  if (L.t()) {
    auto lattice = detail::ab_lattice(L.n, L.d());
    for (auto& [a, b] : lattice)
      for (std::size_t i = 1; i <= L.t(); ++i)
        for (auto& U : detail::subsets_avoiding(L.t(), i))
          for (std::size_t j = 1; j <= L.p[i - 1].size(); ++j)
            for (std::size_t r = 1; r <= L.p[i - 1][j - 1]; ++r) add(FiltrationId::G(a, b, U, i, j, r));
  }
  auto all = ideal_variables(FiltrationId::maximal(), L);
  auto top = F.find(all);
  if (!top) throw Error(ErrorKind::Internal, "no member expands to the maximal ideal");
  F.maximal_index = *top;
  return F;
}

struct WitnessStep {
  FiltrationId target;
  FiltrationId smaller;
  std::size_t x = 0;  // the added variable
  FiltrationId colon;
};

namespace detail {

// H(c, m_c - 1), all nilpotent variables; the zero ideal without nilpotent blocks.
inline FiltrationId all_x(const FiltrationLayout& L) {
  return L.c() ? FiltrationId::H(L.c(), L.m.back() - 1) : FiltrationId::zero();
}

// I(s; a, b), or all_x when s = 0.
inline FiltrationId scroll_member(const FiltrationLayout& L, std::vector<std::size_t> a, std::vector<std::size_t> b) {
  if (a.empty()) return all_x(L);
  (void)L;
  return FiltrationId::I(std::move(a), std::move(b));
}

// I(d; a, b) together with the Jordan groups in W, each taken in full.
inline FiltrationId with_groups(const FiltrationLayout& L, std::vector<std::size_t> a, std::vector<std::size_t> b,
                                std::vector<std::size_t> W) {
  if (W.empty()) return scroll_member(L, std::move(a), std::move(b));
  std::sort(W.begin(), W.end());
  std::size_t u = W.back();
  W.pop_back();
  std::size_t g = L.p[u - 1].size();
  return FiltrationId::G(std::move(a), std::move(b), std::move(W), u, g, L.p[u - 1][g - 1]);
}

inline std::vector<std::size_t> all_groups_except(const FiltrationLayout& L, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t u = 1; u <= L.t(); ++u)
    if (u != skip) out.push_back(u);
  return out;
}

inline std::vector<std::size_t> full_a(const FiltrationLayout& L) {
  std::vector<std::size_t> a(L.d());
  for (std::size_t q = 0; q < L.d(); ++q) a[q] = L.n[q] + 1;
  return a;
}

}  // namespace detail

/// The step (smaller, x, claimed colon) certifying `id` in the filtration,
/// one case per family (H, I, and the Jordan families).
inline WitnessStep witness(const FiltrationId& id, const FiltrationLayout& L) {
  using K = FiltrationId::Kind;
  using detail::with_groups;
  ideal_variables(id, L);  // validates indices
  WitnessStep w;
  w.target = id;
  const std::size_t d = L.d();
  const std::vector<std::size_t> zeros_d(d, 0);

  switch (id.kind) {
    case K::Zero: throw Error(ErrorKind::InvalidIndex, "the zero ideal has no witness");
    case K::Maximal: throw Error(ErrorKind::InvalidIndex, "witness the concrete maximal member instead");

    case K::H: {
      const std::size_t si = L.s_of(id.i);
      if (id.r >= 2) {
        w.smaller = FiltrationId::H(id.i, id.r - 1);
        w.x = id.r <= si ? L.xv(id.i, si + 1 - id.r) : L.xv(id.i, id.r);
        w.colon = FiltrationId::maximal();
        return w;
      }
      w.smaller = id.i == 1 ? FiltrationId::zero() : FiltrationId::H(id.i - 1, L.m[id.i - 2] - 1);
      w.x = L.xv(id.i, si);
      std::vector<std::size_t> a(d), b(d);
      const std::size_t mi = L.m[id.i - 1];
      for (std::size_t q = 0; q < d; ++q) {
        a[q] = L.n[q] + 1 - si;
        b[q] = std::min(L.n[q] + 1 + si - mi, si);
      }
      w.colon = with_groups(L, a, b, detail::all_groups_except(L, 0));
      return w;
    }

    case K::I: {
      const std::size_t s = id.s;
      auto a = id.a, b = id.b;
      // some b_i >= 2: drop the first y of the tail
      for (std::size_t q = 0; q < s; ++q)
        if (b[q] >= 2) {
          w.x = L.yv(q + 1, L.n[q] + 2 - b[q]);
          --b[q];
          w.smaller = FiltrationId::I(a, b);
          w.colon = FiltrationId::maximal();
          return w;
        }
      // some a_i >= 2: drop y_{i,a_i}, preferring a block whose tail is nonempty
      std::optional<std::size_t> pick;
      for (std::size_t q = 0; q < s && !pick; ++q)
        if (a[q] >= 2 && b[q] == 1) pick = q;
      for (std::size_t q = 0; q < s && !pick; ++q)
        if (a[q] >= 2) pick = q;
      if (pick) {
        const std::size_t q = *pick;
        w.x = L.yv(q + 1, a[q]);
        auto smaller_a = a;
        --smaller_a[q];
        w.smaller = FiltrationId::I(smaller_a, b);
        if (b[q] == 1) {
          w.colon = FiltrationId::maximal();
          return w;
        }
        std::vector<std::size_t> ap(d);
        for (std::size_t k = 0; k < d; ++k) {
          const std::size_t ak = k < s ? a[k] : 0;
          if (k == q) {
            ap[k] = L.n[k];
          } else if (k < s && b[k] >= 1) {
            // y_{k,n_k+1} already lies in the smaller ideal
            ap[k] = L.n[k] + 1;
          } else {
            ap[k] = L.n[k] >= ak + L.n[q] + 1 - a[q] ? L.n[k] : L.n[k] + 1;
          }
        }
        w.colon = with_groups(L, ap, zeros_d, detail::all_groups_except(L, 0));
        return w;
      }
      // a = 1_s from here on
      std::optional<std::size_t> last_one;
      for (std::size_t q = 0; q < s; ++q)
        if (b[q] == 1) last_one = q;
      if (last_one) {
        const std::size_t q = *last_one;
        w.x = L.yv(q + 1, L.n[q] + 1);
        b[q] = 0;
        w.smaller = FiltrationId::I(a, b);
        std::vector<std::size_t> ap(d);
        for (std::size_t k = 0; k < d; ++k) ap[k] = k < q ? L.n[k] + 1 : (k == q ? 1 : L.n[k] - L.n[q] + 1);
        w.colon = with_groups(L, ap, zeros_d, detail::all_groups_except(L, 0));
        return w;
      }
      // a = 1_s, b = 0_s: y_{s,1} is regular modulo the previous blocks
      w.x = L.yv(s, 1);
      std::vector<std::size_t> ones(s - 1, 1), z0(s - 1, 0), fulls(s - 1);
      for (std::size_t k = 0; k + 1 < s; ++k) fulls[k] = L.n[k] + 1;
      w.smaller = detail::scroll_member(L, ones, z0);
      w.colon = detail::scroll_member(L, fulls, z0);
      return w;
    }

    case K::G: {
      w.x = L.zv(id.i, id.j, id.r);
      if (id.r >= 2) {
        w.smaller = FiltrationId::G(id.a, id.b, id.U, id.i, id.j, id.r - 1);
        w.colon = FiltrationId::maximal();
        return w;
      }
      auto others = detail::all_groups_except(L, id.i);
      if (id.j >= 2) {
        const std::size_t prev = L.p[id.i - 1][id.j - 2];
        w.smaller = FiltrationId::G(id.a, id.b, id.U, id.i, id.j - 1, prev);
        w.colon = FiltrationId::G(detail::full_a(L), zeros_d, others, id.i, id.j - 1, prev);
        return w;
      }
      w.smaller = with_groups(L, id.a, id.b, id.U);
      w.colon = with_groups(L, detail::full_a(L), zeros_d, others);
      return w;
    }
  }
  return w;
}

struct FiltrationStepReport {
  std::string ideal, smaller, x, colon;
  bool structure_ok = false;  // smaller + (x) = ideal, and smaller, colon are members
  Verdict colon_check;
  bool ok() const { return structure_ok && colon_check.ok; }
};

struct FiltrationReport {
  std::size_t members = 0;
  int max_degree = 0;
  std::vector<FiltrationStepReport> steps;
  bool verdict = true;
};

/// Checks that (J + I_2) : x equals (L + I_2) in degrees 1..D for J = smaller
/// and L = colon, plus the structural conditions, for one step.
inline FiltrationStepReport check_step(const Filtration& F, const WitnessStep& w, int max_degree) {
  const auto& L = F.layout;
  FiltrationStepReport rep;
  rep.ideal = display_name(w.target);
  rep.smaller = display_name(w.smaller);
  rep.x = L.name(w.x);
  rep.colon = display_name(w.colon);
  auto target = ideal_variables(w.target, L);
  auto smaller = ideal_variables(w.smaller, L);
  auto colon = ideal_variables(w.colon, L);
  auto grown = smaller;
  grown.push_back(w.x);
  std::sort(grown.begin(), grown.end());
  const bool fresh = !std::binary_search(smaller.begin(), smaller.end(), w.x);
  rep.structure_ok = fresh && grown == target && F.find(smaller) && F.find(colon);
  rep.colon_check = colon_equals_linear(PolyRing(L.matrix.variables), detail::variables_as_generators(smaller), Poly::variable(w.x),
                                        colon, L.minors, max_degree);
  return rep;
}

inline FiltrationReport verify_koszul_filtration(const Filtration& F, int max_degree) {
  FiltrationReport report;
  report.members = F.members.size();
  report.max_degree = max_degree;
  for (std::size_t k = 1; k < F.members.size(); ++k) {
    auto step = check_step(F, witness(F.members[k], F.layout), max_degree);
    report.verdict = report.verdict && step.ok();
    report.steps.push_back(std::move(step));
  }
  return report;
}

inline FiltrationReport verify_koszul_filtration(const KWForm& form, int max_degree, const FiltrationBounds& bounds = {}) {
  return verify_koszul_filtration(enumerate_filtration(form, bounds), max_degree);
}

/// Checks larger = smaller + (x) for a single variable x and
/// smaller : larger = claimed in degrees 1..D.
inline Verdict verify_colon_identity(const FiltrationLayout& L, const FiltrationId& smaller, const FiltrationId& larger,
                                     const FiltrationId& claimed, int max_degree) {
  auto sv = ideal_variables(smaller, L), lv = ideal_variables(larger, L);
  std::vector<std::size_t> added;
  std::set_difference(lv.begin(), lv.end(), sv.begin(), sv.end(), std::back_inserter(added));
  if (added.size() != 1 || lv.size() != sv.size() + 1) return Verdict{false, 0, 1};
  return colon_equals_linear(PolyRing(L.matrix.variables), detail::variables_as_generators(sv), Poly::variable(added[0]),
                             ideal_variables(claimed, L), L.minors, max_degree);
}

struct IdentityCheck {
  std::string item;     // "i" .. "vi", or "unasserted" for x*y products outside item (ii)
  std::string product;  // e.g. "x1_1*z1_1_1" or "z1_1_1*y1_2 in (y1_1)"
  bool asserted = true;
  bool holds = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool verdict = true;  // every asserted identity holds
};

/// The product identities among block coordinates in k[X]/I_2(X). Each
/// containment (a) ⊆ (b) : c is checked as a*c ∈ (b) + I_2.
inline IdentityReport verify_structural_identities(const KWForm& form) {
  auto L = make_layout(form);
  PolyRing ring(L.matrix.variables);
  IdentityReport rep;
  auto record = [&](std::string item, std::size_t u, std::size_t v, std::optional<std::size_t> modulo, bool asserted) {
    GeneratorSet gens = L.minors;
    if (modulo) gens.push_back(Poly::variable(*modulo));
    IdentityCheck c;
    c.item = std::move(item);
    c.product = L.name(u) + "*" + L.name(v) + (modulo ? " in (" + L.name(*modulo) + ")" : "");
    c.asserted = asserted;
    c.holds = membership(Poly::variable(u) * Poly::variable(v), ring, gens);
    if (asserted) rep.verdict = rep.verdict && c.holds;
    rep.checks.push_back(std::move(c));
  };
  std::vector<std::size_t> xs, zs;
  for (const auto& blk : L.x) xs.insert(xs.end(), blk.begin(), blk.end());
  for (const auto& g : L.z)
    for (const auto& blk : g) zs.insert(zs.end(), blk.begin(), blk.end());

  for (auto u : xs)
    for (auto v : zs) record("i", u, v, std::nullopt, true);
  for (std::size_t p = 0; p < xs.size(); ++p)
    for (std::size_t q = p; q < xs.size(); ++q) record("i", xs[p], xs[q], std::nullopt, true);

  for (std::size_t i = 1; i <= L.c(); ++i)
    for (std::size_t r = 1; r + 1 <= L.m[i - 1]; ++r)
      for (std::size_t j = 1; j <= L.d(); ++j)
        for (std::size_t s = 1; s <= L.n[j - 1] + 1; ++s) {
          bool covered = r + s >= L.m[i - 1] + 1 || r + s <= L.n[j - 1] + 1;
          record(covered ? "ii" : "unasserted", L.xv(i, r), L.yv(j, s), std::nullopt, covered);
        }

  for (std::size_t i = 1; i <= L.d(); ++i)
    for (std::size_t s = 2; s <= L.n[i - 1] + 1; ++s)
      for (std::size_t r = 1; r < s; ++r)
        for (auto z : zs) record("iii", z, L.yv(i, s), L.yv(i, r), true);

  for (std::size_t i = 1; i <= L.d(); ++i)
    for (std::size_t j = 1; j <= L.d(); ++j) {
      const std::size_t ni = L.n[i - 1], nj = L.n[j - 1];
      for (std::size_t r = 2; r <= ni + 1; ++r)
        for (std::size_t k = 1; k <= nj; ++k) record("iv", L.yv(j, k), L.yv(i, r), L.yv(i, r - 1), true);
      for (std::size_t r = 1; r <= ni; ++r)
        for (std::size_t k = 2; k <= nj + 1; ++k) record("v", L.yv(j, k), L.yv(i, r), L.yv(i, r + 1), true);
    }

  for (std::size_t g = 1; g <= L.t(); ++g)
    for (std::size_t h = g + 1; h <= L.t(); ++h)
      for (const auto& bg : L.z[g - 1])
        for (const auto& bh : L.z[h - 1])
          for (auto u : bg)
            for (auto v : bh) record("vi", u, v, std::nullopt, true);
  return rep;
}

}  // namespace kwk
