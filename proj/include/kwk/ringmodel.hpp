#pragma once

// Degreewise linear algebra on graded ideals: Hilbert functions, membership,
// colon ideals, initial ideals and small Betti-number computations.
//
// Everything here is truncated at an explicit degree. Results are exact in
// every degree that was examined and say nothing beyond it.

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kwk/error.hpp"
#include "kwk/kronecker.hpp"
#include "kwk/polynomial.hpp"
#include "kwk/sparse.hpp"

namespace kwk {

struct GradedPiece {
  int degree = 0;
  std::vector<Poly> basis;  // reduced row echelon form w.r.t. the term order
  std::size_t dimension() const { return basis.size(); }
};

struct Verdict {
  bool ok = true;
  int checked_to_degree = 0;
  std::optional<int> first_failure;
};

/// S / (generators), computed degree by degree on demand.
class GradedQuotient {
 public:
  GradedQuotient(PolyRing ring, GeneratorSet gens) : tables_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.is_zero()) throw Error(ErrorKind::InvalidForm, "zero generator");
  }

  const PolyRing& ring() const { return tables_.ring(); }
  std::size_t num_vars() const { return tables_.ring().size(); }
  MonomialTables& tables() { return tables_; }
  const GeneratorSet& generators() const { return gens_; }

  const Echelon& ideal(int d) {
    build(d);
    return levels_[static_cast<std::size_t>(d)]->ideal;
  }
  /// Monomial indices (degree-d coordinates) of the standard monomials.
  const std::vector<std::uint32_t>& standard(int d) {
    build(d);
    return levels_[static_cast<std::size_t>(d)]->standard;
  }
  std::size_t hilbert(int d) { return standard(d).size(); }

  /// Remainder modulo I_d, expressed in positions of standard(d).
  SparseVec normal_form(const SparseVec& v, int d) {
    build(d);
    const auto& lvl = *levels_[static_cast<std::size_t>(d)];
    SparseVec r = lvl.ideal.reduce(v);
    for (auto& e : r) e.col = static_cast<std::uint32_t>(lvl.position[e.col]);
    return r;
  }
  /// Normal form of the i-th standard monomial of degree d times monomial m.
  const SparseVec& standard_times(int d, std::size_t i, Monomial m) {
    build(d);
    int dd = d + monomial_degree(m);
    build(dd);
    auto key = std::make_pair(levels_[static_cast<std::size_t>(d)]->standard[i], m);
    auto& cache = levels_[static_cast<std::size_t>(d)]->products;
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Monomial prod = tables_.basis(d)[key.first] + m;
    SparseVec v{{tables_.basis(dd).index(prod), Rational(1)}};
    return cache.emplace(key, normal_form(v, dd)).first->second;
  }
  /// Standard-coordinate vector of degree d lifted to monomial coordinates.
  SparseVec lift(const SparseVec& std_vec, int d) {
    const auto& st = standard(d);
    SparseVec out;
    for (const auto& e : std_vec) out.push_back({st[e.col], e.val});
    return normalized(std::move(out));
  }
  /// Multiplies a standard-coordinate vector of degree d by a polynomial of degree e.
  SparseVec multiply(const SparseVec& std_vec, int d, const Poly& f) {
    SparseVec acc;
    for (const auto& e : std_vec)
      for (const auto& [m, c] : f.terms)
        for (const auto& t : standard_times(d, e.col, m)) acc.push_back({t.col, t.val * e.val * c});
    return normalized(std::move(acc));
  }

 private:
  struct Level {
    Echelon ideal;
    std::vector<std::uint32_t> standard;
    std::vector<int> position;
    std::map<std::pair<std::uint32_t, Monomial>, SparseVec> products;
  };
  MonomialTables tables_;
  GeneratorSet gens_;
  std::vector<std::unique_ptr<Level>> levels_;

  void build(int d) {
    if (d < 0) throw Error(ErrorKind::Internal, "negative degree");
    while (static_cast<int>(levels_.size()) <= d) {
      const int k = static_cast<int>(levels_.size());
      const auto& basis = tables_.basis(k);
      auto lvl = std::make_unique<Level>();
      lvl->ideal = Echelon(basis.size());
      for (const auto& g : gens_)
        if (g.degree() == k) lvl->ideal.insert(tables_.to_vec(g, k));
      if (k > 0) {
        const auto& prev = levels_[static_cast<std::size_t>(k - 1)]->ideal;
        for (const auto& row : prev.rows())
          for (std::size_t v = 0; v < num_vars(); ++v) lvl->ideal.insert(tables_.multiply_variable(row, k - 1, v));
      }
      lvl->position.assign(basis.size(), -1);
      for (std::uint32_t c = 0; c < basis.size(); ++c)
        if (!lvl->ideal.is_pivot(c)) {
          lvl->position[c] = static_cast<int>(lvl->standard.size());
          lvl->standard.push_back(c);
        }
      levels_.push_back(std::move(lvl));
    }
  }
};

namespace detail {

inline GradedPiece piece_from_echelon(MonomialTables& t, const Echelon& e, int d) {
  GradedPiece p;
  p.degree = d;
  for (const auto& row : e.reduced_rows()) p.basis.push_back(t.to_poly(row, d));
  return p;
}

inline bool same_span(const Echelon& a, const Echelon& b) {
  if (a.rank() != b.rank()) return false;
  for (const auto& r : b.rows())
    if (!a.contains(r)) return false;
  return true;
}

inline GeneratorSet variables_as_generators(const std::vector<std::size_t>& vars) {
  GeneratorSet g;
  for (auto v : vars) g.push_back(Poly::variable(v));
  return g;
}

// If every generator is a single variable (coefficient irrelevant), the set of them.
inline std::optional<std::vector<std::size_t>> as_variable_set(const GeneratorSet& gens) {
  std::vector<std::size_t> out;
  for (const auto& g : gens) {
    if (g.terms.size() != 1 || monomial_degree(g.terms.begin()->first) != 1) return std::nullopt;
    Monomial m = g.terms.begin()->first;
    std::size_t v = 0;
    while (exponent(m, v) == 0) ++v;
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline GeneratorSet concat(GeneratorSet a, const GeneratorSet& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace detail

inline GradedPiece ideal_piece(const PolyRing& ring, const GeneratorSet& gens, int d) {
  GradedQuotient q(ring, gens);
  return detail::piece_from_echelon(q.tables(), q.ideal(d), d);
}

inline std::size_t hilbert_function(const PolyRing& ring, const GeneratorSet& gens, int d) {
  GradedQuotient q(ring, gens);
  return q.hilbert(d);
}

inline bool membership(const Poly& f, const PolyRing& ring, const GeneratorSet& gens) {
  if (f.is_zero()) return true;
  GradedQuotient q(ring, gens);
  int d = f.degree();
  return q.ideal(d).contains(q.tables().to_vec(f, d));
}

/// Basis of (J : f)_d, computed as J_d plus lifts of the kernel of
/// multiplication by f on (S/J)_d.
inline GradedPiece colon_piece(const PolyRing& ring, const GeneratorSet& j, const Poly& f, int d) {
  GradedQuotient q(ring, j);
  const auto& st = q.standard(d);
  std::vector<SparseVec> images;
  for (std::size_t i = 0; i < st.size(); ++i) images.push_back(q.multiply({{static_cast<std::uint32_t>(i), Rational(1)}}, d, f));
  int dd = d + std::max(f.degree(), 0);
  auto ker = left_kernel(images, q.hilbert(dd));
  Echelon colon = q.ideal(d);
  for (const auto& k : ker) colon.insert(q.lift(k, d));
  return detail::piece_from_echelon(q.tables(), colon, d);
}

/// Checks (J + base) : f == (L + base) in each degree 1..D. L is a set of
/// variables. Variable-generated J is handled in the smaller ring where J's
/// variables are set to zero; other J go through full colon computations.
inline Verdict colon_equals_linear(const PolyRing& ring, const GeneratorSet& j, const Poly& f,
                                   const std::vector<std::size_t>& l, const GeneratorSet& base, int max_degree) {
  Verdict verdict;
  const std::size_t n = ring.size();
  auto fail = [&](int d) {
    verdict.ok = false;
    verdict.first_failure = d;
    verdict.checked_to_degree = d;
    return verdict;
  };
  std::vector<bool> in_l(n, false);
  for (auto v : l) in_l.at(v) = true;

  auto jvars = detail::as_variable_set(j);
  bool base_has_low = std::any_of(base.begin(), base.end(), [](const Poly& g) { return g.degree() <= 1; });
  if (jvars && !base_has_low) {
    if (max_degree < 1) return verdict;
    for (auto v : *jvars)
      if (!in_l[v]) return fail(1);
    std::vector<bool> killed(n, false);
    for (auto v : *jvars) killed[v] = true;
    std::vector<std::string> names;
    std::vector<int> newpos(n, -1);
    for (std::size_t v = 0; v < n; ++v)
      if (!killed[v]) {
        newpos[v] = static_cast<int>(names.size());
        names.push_back(ring.names[v]);
      }
    GradedQuotient q(PolyRing(names), restrict_to(base, n, killed));
    auto restricted_f = restrict_to({f}, n, killed);
    Poly fr = restricted_f.empty() ? Poly{} : restricted_f.front();
    std::vector<std::size_t> lr;
    for (std::size_t v = 0; v < n; ++v)
      if (in_l[v] && !killed[v]) lr.push_back(static_cast<std::size_t>(newpos[v]));

    for (int d = 1; d <= max_degree; ++d) {
      const std::size_t hd = q.hilbert(d);
      Echelon kernel_space(hd);
      if (fr.is_zero()) {
        for (std::size_t i = 0; i < hd; ++i) kernel_space.insert({{static_cast<std::uint32_t>(i), Rational(1)}});
      } else {
        std::vector<SparseVec> images;
        for (std::size_t i = 0; i < hd; ++i) images.push_back(q.multiply({{static_cast<std::uint32_t>(i), Rational(1)}}, d, fr));
        for (auto& k : left_kernel(images, q.hilbert(d + fr.degree()))) kernel_space.insert(k);
      }
      Echelon target(hd);
      const std::size_t hprev = q.hilbert(d - 1);
      for (auto v : lr)
        for (std::size_t i = 0; i < hprev; ++i) target.insert(q.standard_times(d - 1, i, variable_monomial(v)));
      if (!detail::same_span(kernel_space, target)) return fail(d);
      verdict.checked_to_degree = d;
    }
    return verdict;
  }

  GradedQuotient q(ring, detail::concat(j, base));
  GradedQuotient t(ring, detail::concat(detail::variables_as_generators(l), base));
  for (int d = 1; d <= max_degree; ++d) {
    const auto& st = q.standard(d);
    std::vector<SparseVec> images;
    for (std::size_t i = 0; i < st.size(); ++i) images.push_back(q.multiply({{static_cast<std::uint32_t>(i), Rational(1)}}, d, f));
    auto ker = left_kernel(images, q.hilbert(d + std::max(f.degree(), 0)));
    Echelon colon = q.ideal(d);
    for (const auto& k : ker) colon.insert(q.lift(k, d));
    if (!detail::same_span(colon, t.ideal(d))) return fail(d);
    verdict.checked_to_degree = d;
  }
  return verdict;
}

/// Variable order under which the 2-minors of a form without nilpotent blocks
/// are a Groebner basis: decreasing along the first row of
/// each block and each block's last variable above the next block's first.
/// For blocks_to_matrix(F) with F canonical this is the variable list order.
inline std::vector<std::size_t> scroll_term_order(const KWForm& f) {
  for (const auto& b : f.blocks)
    if (b.kind == BlockKind::Nilpotent && b.length >= 2)
      throw Error(ErrorKind::HasNilpotentBlock, "the Groebner order is defined only without nilpotent blocks");
  auto x = blocks_to_matrix(f);
  std::vector<std::size_t> ord(x.num_vars());
  for (std::size_t i = 0; i < ord.size(); ++i) ord[i] = i;
  return ord;
}

inline Monomial leading_monomial(const PolyRing& ring, const Poly& p) {
  if (p.is_zero()) throw Error(ErrorKind::Internal, "leading monomial of zero");
  Monomial best = p.terms.begin()->first;
  for (const auto& [m, c] : p.terms)
    if (ring.greater(m, best)) best = m;
  return best;
}

/// Compares in(I)_d with the degree-d part of the ideal generated by the
/// leading terms of the 2-minors, for d <= D.
struct GroebnerDegreeReport {
  int degree;
  std::size_t initial_dim;
  std::size_t leading_term_dim;
};

inline Verdict groebner_check_degreewise(const LinearFormMatrix& x, const std::vector<std::size_t>& ord, int max_degree,
                                         std::vector<GroebnerDegreeReport>* details = nullptr) {
  PolyRing ring(x.variables, ord);
  auto minors = two_minors(x);
  std::vector<Monomial> lts;
  for (const auto& m : minors) lts.push_back(leading_monomial(ring, m));
  GradedQuotient q(ring, minors);
  Verdict verdict;
  for (int d = 0; d <= max_degree; ++d) {
    const auto& basis = q.tables().basis(d);
    std::set<std::uint32_t> initial;
    for (auto p : q.ideal(d).pivots()) initial.insert(p);
    std::set<std::uint32_t> generated;
    for (std::uint32_t i = 0; i < basis.size(); ++i)
      for (auto lt : lts)
        if (divides(lt, basis[i])) {
          generated.insert(i);
          break;
        }
    if (details) details->push_back({d, initial.size(), generated.size()});
    if (initial != generated) {
      verdict.ok = false;
      verdict.first_failure = d;
      verdict.checked_to_degree = d;
      return verdict;
    }
    verdict.checked_to_degree = d;
  }
  return verdict;
}

struct ResolutionBounds {
  std::size_t max_vars = 8;
  int max_degree = 8;
};

namespace detail {

inline std::vector<unsigned> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (static_cast<std::size_t>(__builtin_popcount(m)) == k) out.push_back(m);
  return out;
}

// Rank of the Koszul differential K_i -> K_{i-1} in internal degree j, with
// coefficients in the quotient q. K_i in degree j has basis e_T (|T| = i)
// tensor standard monomials of degree j - i.
inline std::size_t koszul_rank(GradedQuotient& q, std::size_t i, int j) {
  const std::size_t n = q.num_vars();
  if (i == 0 || i > n) return 0;
  const int src_deg = j - static_cast<int>(i);
  if (src_deg < 0) return 0;
  auto src_sets = subsets_of_size(n, i);
  auto dst_sets = subsets_of_size(n, i - 1);
  std::map<unsigned, std::size_t> dst_index;
  for (std::size_t k = 0; k < dst_sets.size(); ++k) dst_index[dst_sets[k]] = k;
  const std::size_t hs = q.hilbert(src_deg), ht = q.hilbert(src_deg + 1);
  if (hs == 0 || ht == 0) return 0;
  Echelon ech(dst_sets.size() * ht);
  for (unsigned t : src_sets)
    for (std::size_t m = 0; m < hs; ++m) {
      SparseVec img;
      int sign = 1;
      for (std::size_t v = 0; v < n; ++v) {
        if (!(t & (1u << v))) continue;
        std::size_t base = dst_index[t & ~(1u << v)] * ht;
        for (const auto& e : q.standard_times(src_deg, m, variable_monomial(v)))
          img.push_back({static_cast<std::uint32_t>(base + e.col), sign > 0 ? e.val : -e.val});
        sign = -sign;
      }
      ech.insert(normalized(std::move(img)));
    }
  return ech.rank();
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline void check_bounds(const PolyRing& ring, int j, const ResolutionBounds& b) {
  if (ring.size() > b.max_vars) throw Error(ErrorKind::BoundsExceeded, "too many variables for the Betti computation");
  if (j > b.max_degree) throw Error(ErrorKind::BoundsExceeded, "internal degree exceeds the configured bound");
}

}  // namespace detail

/// beta^S_{i,j}(S/G) as the homology of the Koszul complex on all variables
/// with coefficients in S/G.
inline std::size_t koszul_homology_betti(const PolyRing& ring, const GeneratorSet& gens, std::size_t i, int j,
                                         const ResolutionBounds& bounds = {}) {
  detail::check_bounds(ring, j, bounds);
  if (i > ring.size()) return 0;
  GradedQuotient q(ring, gens);
  if (j < static_cast<int>(i)) return 0;
  std::size_t dim = detail::binomial(ring.size(), i) * q.hilbert(j - static_cast<int>(i));
  return dim - detail::koszul_rank(q, i, j) - detail::koszul_rank(q, i + 1, j);
}

/// All beta^S_{i,j}(S/G) with j <= jmax, keyed by (i, j); zeros omitted.
inline std::map<std::pair<std::size_t, int>, std::size_t> koszul_betti_table(const PolyRing& ring, const GeneratorSet& gens, int jmax,
                                                                               const ResolutionBounds& bounds = {}) {
  detail::check_bounds(ring, jmax, bounds);
  GradedQuotient q(ring, gens);
  const std::size_t n = ring.size();
  std::map<std::pair<std::size_t, int>, std::size_t> table;
  for (int j = 0; j <= jmax; ++j) {
    std::vector<std::size_t> ranks(n + 2, 0);
    for (std::size_t i = 1; i <= n && static_cast<int>(i) <= j; ++i) ranks[i] = detail::koszul_rank(q, i, j);
    for (std::size_t i = 0; i <= n && static_cast<int>(i) <= j; ++i) {
      std::size_t dim = detail::binomial(n, i) * q.hilbert(j - static_cast<int>(i));
      std::size_t b = dim - ranks[i] - ranks[i + 1];
      if (b) table[{i, j}] = b;
    }
  }
  return table;
}

/// max{j - i : beta_{i,j} != 0, j <= jmax}.
inline int regularity_oracle(const PolyRing& ring, const GeneratorSet& gens, int jmax, const ResolutionBounds& bounds = {}) {
  int reg = 0;
  for (const auto& [ij, b] : koszul_betti_table(ring, gens, jmax, bounds)) reg = std::max(reg, ij.second - static_cast<int>(ij.first));
  return reg;
}

using BettiTable = std::map<std::pair<int, int>, std::size_t>;

/// Graded Betti numbers beta^R_{i,j}(k) of the residue field over R = S/G for
/// i <= imax, j <= jmax, from a minimal free resolution built degree by degree:
/// generators of each syzygy module in degree j are a complement of
/// R_1 * Z_{j-1} inside the kernel Z_j.
inline BettiTable quotient_res_betti(const PolyRing& ring, const GeneratorSet& gens, int imax, int jmax,
                                     const ResolutionBounds& bounds = {6, 6}) {
  if (imax > 3) throw Error(ErrorKind::BoundsExceeded, "homological degree above 3");
  detail::check_bounds(ring, jmax, bounds);
  GradedQuotient q(ring, gens);
  BettiTable table;
  table[{0, 0}] = 1;
  if (imax < 1 || jmax < 1) return table;

  // A free module is a list of generator degrees; a degree-j element has
  // coordinates (generator k, standard monomial of degree j - a_k).
  struct Module {
    std::vector<int> degrees;
    std::vector<SparseVec> images;  // image of generator k in the previous module, degree a_k
  };
  auto offsets = [&](const Module& m, int j) {
    std::vector<std::size_t> off(m.degrees.size() + 1, 0);
    for (std::size_t k = 0; k < m.degrees.size(); ++k)
      off[k + 1] = off[k] + (m.degrees[k] <= j ? q.hilbert(j - m.degrees[k]) : 0);
    return off;
  };
  // Multiply a degree-j element of module m by the monomial `mono` of degree e.
  auto times = [&](const Module& m, const SparseVec& el, int j, Monomial mono) {
    int e = monomial_degree(mono);
    auto src = offsets(m, j), dst = offsets(m, j + e);
    SparseVec out;
    std::size_t k = 0;
    for (const auto& ent : el) {
      while (ent.col >= src[k + 1]) ++k;
      std::size_t local = ent.col - src[k];
      for (const auto& t : q.standard_times(j - m.degrees[k], local, mono))
        out.push_back({static_cast<std::uint32_t>(dst[k] + t.col), t.val * ent.val});
    }
    return normalized(std::move(out));
  };
  // Image under the differential of basis element (k, standard monomial idx) in degree j.
  auto apply_d = [&](const Module& m, const Module& prev, std::size_t k, std::size_t idx, int j) {
    int base = m.degrees[k];
    Monomial mono = q.tables().basis(j - base)[q.standard(j - base)[idx]];
    return times(prev, m.images[k], base, mono);
  };

  Module f0{{0}, {}};
  Module f1;
  const std::size_t h1 = q.hilbert(1);
  for (std::size_t k = 0; k < h1; ++k) {
    f1.degrees.push_back(1);
    f1.images.push_back({{static_cast<std::uint32_t>(k), Rational(1)}});
  }
  if (h1) table[{1, 1}] = h1;

  Module prev = f0, cur = f1;
  for (int i = 1; i < imax; ++i) {
    Module next;
    std::vector<SparseVec> z_prev;  // kernel basis in degree j-1
    for (int j = i; j <= jmax; ++j) {
      auto src = offsets(cur, j);
      auto dst = offsets(prev, j);
      std::vector<SparseVec> images;
      for (std::size_t k = 0; k < cur.degrees.size(); ++k) {
        if (cur.degrees[k] > j) continue;
        for (std::size_t idx = 0; idx < src[k + 1] - src[k]; ++idx) images.push_back(apply_d(cur, prev, k, idx, j));
      }
      auto z = left_kernel(images, dst.back());
      Echelon decomposable(src.back());
      for (const auto& zz : z_prev)
        for (std::size_t v = 0; v < q.num_vars(); ++v) decomposable.insert(times(cur, zz, j - 1, variable_monomial(v)));
      std::size_t fresh = 0;
      for (const auto& zz : z) {
        if (!decomposable.insert(zz)) continue;
        // Minimality: no unit entries against generators of the same degree.
        for (const auto& e : zz) {
          std::size_t k = 0;
          while (e.col >= src[k + 1]) ++k;
          if (cur.degrees[k] == j) throw Error(ErrorKind::Internal, "non-minimal syzygy generator");
        }
        next.degrees.push_back(j);
        next.images.push_back(zz);
        ++fresh;
      }
      if (fresh) table[{i + 1, j}] = fresh;
      z_prev = std::move(z);
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return table;
}

}  // namespace kwk
