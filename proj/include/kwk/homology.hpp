#pragma once

// The monoid Lambda of the scroll R(m, n) inside N^4 = {x^g y^h s1^p s2^q},
// the order complexes of the open interval (0, mu) and relative simplicial
// homology over Q. Multigraded Betti numbers of k over
// T = k[Lambda]/(x^m s1, y^m s1) come from the Herzog-Reiner-Welker formula
// beta_{i,mu}(k) = dim H~_{i-2}(Delta_mu, Delta_{mu,J}).

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "kwk/error.hpp"
#include "kwk/sparse.hpp"

namespace kwk {

using MonoidElement = std::array<long, 4>;  // exponents of x, y, s1, s2

inline MonoidElement operator+(const MonoidElement& a, const MonoidElement& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline MonoidElement operator-(const MonoidElement& a, const MonoidElement& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

inline std::string to_string(const MonoidElement& e) {
  static const char* names[] = {"x", "y", "s1", "s2"};
  std::string s;
  for (int k = 0; k < 4; ++k) {
    if (e[k] == 0) continue;
    s += names[k];
    if (e[k] != 1) s += "^" + std::to_string(e[k]);
  }
  return s.empty() ? "1" : s;
}

struct ScrollMonoid {
  long m = 1, n = 1;

  ScrollMonoid(long m_, long n_) : m(m_), n(n_) {
    if (m < 1 || n < 1) throw Error(ErrorKind::InvalidForm, "scroll monoid needs m, n >= 1");
  }

  std::vector<MonoidElement> generators() const {
    std::vector<MonoidElement> g;
    for (long i = 0; i <= m; ++i) g.push_back({m - i, i, 1, 0});
    for (long i = 0; i <= n; ++i) g.push_back({n - i, i, 0, 1});
    return g;
  }

  /// x^g y^h s1^p s2^q is a product of generators iff the total x,y-degree
  /// matches: the p factors of type s1 and q of type s2 can split the
  /// x-exponent in any way between 0 and pm + qn.
  bool contains(const MonoidElement& e) const {
    for (auto v : e)
      if (v < 0) return false;
    return e[0] + e[1] == e[2] * m + e[3] * n;
  }
};

/// mu = x^{an} y^m s1 s2^a with a = ceil(m / n).
inline MonoidElement target_mu(long m, long n) {
  long a = (m + n - 1) / n;
  return {a * n, m, 1, a};
}

struct HomologyBounds {
  long max_degree = 6;            // s-degree of mu, a + 1
  std::size_t max_interval = 200;  // elements of (0, mu)
};

/// All alpha in Lambda with alpha != 0, mu and mu - alpha in Lambda.
inline std::vector<MonoidElement> interval_elements(const ScrollMonoid& M, const MonoidElement& mu) {
  if (!M.contains(mu)) throw Error(ErrorKind::InvalidForm, "mu is not in the monoid");
  std::vector<MonoidElement> out;
  const MonoidElement zero{0, 0, 0, 0};
  for (long g = 0; g <= mu[0]; ++g)
    for (long h = 0; h <= mu[1]; ++h)
      for (long p = 0; p <= mu[2]; ++p)
        for (long q = 0; q <= mu[3]; ++q) {
          MonoidElement a{g, h, p, q};
          if (a == zero || a == mu) continue;
          if (M.contains(a) && M.contains(mu - a)) out.push_back(a);
        }
  return out;
}

/// A simplicial complex closed under subsets, faces as sorted vertex lists;
/// the empty face is not stored.
struct Complex {
  std::size_t num_vertices = 0;
  std::vector<std::vector<std::size_t>> faces;
};

struct OrderComplexPair {
  std::vector<MonoidElement> vertices;
  std::vector<std::vector<std::size_t>> faces;  // chains, vertices in increasing order
  std::vector<bool> in_subcomplex;              // face lies in Delta_{mu,J}
  bool empty_face_in_subcomplex = false;        // the empty chain has the single gap mu

  Complex whole() const { return {vertices.size(), faces}; }
  Complex subcomplex() const {
    Complex c{vertices.size(), {}};
    for (std::size_t k = 0; k < faces.size(); ++k)
      if (in_subcomplex[k]) c.faces.push_back(faces[k]);
    return c;
  }
};

/// A gap lies in the ideal generated by J = <x^m s1, y^m s1> when removing
/// one of the two generators leaves an element of Lambda.
inline bool gap_in_J_ideal(const ScrollMonoid& M, const MonoidElement& gap) {
  return M.contains(gap - MonoidElement{M.m, 0, 1, 0}) || M.contains(gap - MonoidElement{0, M.m, 1, 0});
}

inline OrderComplexPair build_pair(const ScrollMonoid& M, const MonoidElement& mu, const HomologyBounds& bounds = {}) {
  if (mu[2] + mu[3] > bounds.max_degree) throw Error(ErrorKind::BoundsExceeded, "degree of mu exceeds the configured bound");
  OrderComplexPair P;
  P.vertices = interval_elements(M, mu);
  P.empty_face_in_subcomplex = gap_in_J_ideal(M, mu);
  if (P.vertices.size() > bounds.max_interval) throw Error(ErrorKind::BoundsExceeded, "interval (0, mu) has too many elements");
  auto& V = P.vertices;
  // sort by s-degree so that every chain is increasing in index order
  std::stable_sort(V.begin(), V.end(), [](const MonoidElement& a, const MonoidElement& b) { return a[2] + a[3] < b[2] + b[3]; });
  const std::size_t nv = V.size();
  std::vector<std::vector<std::size_t>> above(nv);
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t v = u + 1; v < nv; ++v)
      if (M.contains(V[v] - V[u])) above[u].push_back(v);

  std::vector<std::size_t> chain;
  auto emit = [&]() {
    bool j = gap_in_J_ideal(M, V[chain.front()]) || gap_in_J_ideal(M, mu - V[chain.back()]);
    for (std::size_t k = 0; !j && k + 1 < chain.size(); ++k) j = gap_in_J_ideal(M, V[chain[k + 1]] - V[chain[k]]);
    P.faces.push_back(chain);
    P.in_subcomplex.push_back(j);
  };
  auto rec = [&](auto&& self, std::size_t u) -> void {
    chain.push_back(u);
    emit();
    for (auto v : above[u]) self(self, v);
    chain.pop_back();
  };
  for (std::size_t u = 0; u < nv; ++u) rec(rec, u);
  return P;
}

/// Connected components of the 1-skeleton on the vertices used by some face.
inline std::size_t connected_components(const Complex& c) {
  std::vector<std::size_t> parent(c.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> used(c.num_vertices, false);
  for (const auto& f : c.faces) {
    for (auto v : f) used[v] = true;
    for (std::size_t k = 1; k < f.size(); ++k) parent[find(f[k])] = find(f[0]);
  }
  std::size_t count = 0;
  for (std::size_t v = 0; v < c.num_vertices; ++v)
    if (used[v] && find(v) == v) ++count;
  return count;
}

namespace detail {

// Rank of the boundary map between two consecutive relative chain groups;
// faces of the subcomplex are zero in the quotient and simply not indexed.
inline std::size_t relative_boundary_rank(const std::map<std::vector<std::size_t>, std::size_t>& lower,
                                          const std::vector<std::vector<std::size_t>>& upper) {
  Echelon e(lower.size());
  for (const auto& f : upper) {
    SparseVec row;
    for (std::size_t k = 0; k < f.size(); ++k) {
      auto g = f;
      g.erase(g.begin() + static_cast<long>(k));
      auto it = lower.find(g);
      if (it != lower.end()) row.push_back({static_cast<std::uint32_t>(it->second), Rational(k % 2 ? -1 : 1)});
    }
    e.insert(normalized(std::move(row)));
  }
  return e.rank();
}

}  // namespace detail

/// dim H~_i(Delta, Delta') over Q for a pair given by a face list and a
/// subcomplex flag per face. `empty_in_sub` says whether the empty face is in
/// the subcomplex (true unless the subcomplex is void).
inline std::size_t relative_homology_dim(const std::vector<std::vector<std::size_t>>& faces, const std::vector<bool>& in_sub,
                                         bool empty_in_sub, std::size_t i) {
  auto rel_faces = [&](std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t q = 0; q < faces.size(); ++q)
      if (!in_sub[q] && faces[q].size() == k) out.push_back(faces[q]);
    return out;
  };
  auto index = [](const std::vector<std::vector<std::size_t>>& v) {
    std::map<std::vector<std::size_t>, std::size_t> m;
    for (std::size_t k = 0; k < v.size(); ++k) m[v[k]] = k;
    return m;
  };
  // chains of dimension i have i + 1 vertices
  auto ci = rel_faces(i + 1);
  auto cup = rel_faces(i + 2);
  std::size_t rank_out = 0;
  if (i == 0) {
    // boundary to the empty face, present only if the empty face is relative
    rank_out = (!empty_in_sub && !ci.empty()) ? 1 : 0;
  } else {
    rank_out = detail::relative_boundary_rank(index(rel_faces(i)), ci);
  }
  std::size_t rank_in = detail::relative_boundary_rank(index(ci), cup);
  return ci.size() - rank_out - rank_in;
}

inline std::size_t relative_homology_dim(const OrderComplexPair& P, std::size_t i) {
  return relative_homology_dim(P.faces, P.in_subcomplex, P.empty_face_in_subcomplex, i);
}

/// Reduced homology of a single complex (relative to the void complex).
inline std::size_t reduced_homology_dim(const Complex& c, std::size_t i) {
  return relative_homology_dim(c.faces, std::vector<bool>(c.faces.size(), false), false, i);
}

/// beta^T_{i,mu}(k) = dim H~_{i-2}(Delta_mu, Delta_{mu,J}) for i >= 2.
inline std::size_t betti_hrw(const ScrollMonoid& M, const MonoidElement& mu, std::size_t i, const HomologyBounds& bounds = {}) {
  if (i < 2) throw Error(ErrorKind::InvalidIndex, "the relative homology formula needs i >= 2");
  return relative_homology_dim(build_pair(M, mu, bounds), i - 2);
}

struct WitnessReport {
  MonoidElement mu{};
  long a = 0;
  std::size_t interval_size = 0;
  std::size_t components_of_subcomplex = 0;
  std::size_t components_of_complex = 0;
  std::size_t betti3 = 0;
  bool witness = false;
};

/// beta^T_{3,mu}(k) for T = k[Lambda]/(x^m s1, y^m s1). mu has degree a + 1;
/// a nonzero value off the linear strand (a + 1 > 3) means T, and with it
/// R(m, n)/(x_1, x_{m+1}), is not Koszul. For a = 2 the value sits on the
/// linear strand and proves nothing.
inline WitnessReport nonkoszul_witness(long m, long n, const HomologyBounds& bounds = {}) {
  ScrollMonoid M(m, n);
  WitnessReport r;
  r.mu = target_mu(m, n);
  r.a = r.mu[3];
  auto P = build_pair(M, r.mu, bounds);
  r.interval_size = P.vertices.size();
  r.components_of_subcomplex = connected_components(P.subcomplex());
  r.components_of_complex = connected_components(P.whole());
  r.betti3 = relative_homology_dim(P, 1);
  r.witness = r.betti3 >= 1 && r.a + 1 > 3;
  return r;
}

}  // namespace kwk
