#pragma once

// Monomials, homogeneous polynomials and degree-d monomial bases.
//
// A monomial is packed into 64 bits, four bits per variable, which limits
// rings to 16 variables and degrees to 15. Multiplication of monomials is
// integer addition as long as the total degree stays within that bound.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "kwk/error.hpp"
#include "kwk/pencil.hpp"
#include "kwk/rational.hpp"
#include "kwk/sparse.hpp"

namespace kwk {

using Monomial = std::uint64_t;

constexpr std::size_t kMaxVariables = 16;
constexpr int kMaxDegree = 15;

inline unsigned exponent(Monomial m, std::size_t v) { return static_cast<unsigned>((m >> (4 * v)) & 0xF); }
inline Monomial variable_monomial(std::size_t v) { return Monomial(1) << (4 * v); }
inline int monomial_degree(Monomial m) {
  int d = 0;
  for (; m; m >>= 4) d += static_cast<int>(m & 0xF);
  return d;
}
inline bool divides(Monomial a, Monomial b) {
  for (std::size_t v = 0; v < kMaxVariables; ++v)
    if (exponent(a, v) > exponent(b, v)) return false;
  return true;
}

/// Exponent vector rendered as "e0,e1,...".
inline std::string exponent_string(Monomial m, std::size_t n) {
  std::string s;
  for (std::size_t v = 0; v < n; ++v) {
    if (v) s += ',';
    s += std::to_string(exponent(m, v));
  }
  return s;
}

inline std::string monomial_to_string(Monomial m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t v = 0; v < names.size(); ++v) {
    unsigned e = exponent(m, v);
    if (!e) continue;
    if (!s.empty()) s += '*';
    s += names[v];
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

/// Homogeneous polynomial as a sparse monomial -> coefficient map.
struct Poly {
  std::map<Monomial, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  int degree() const { return terms.empty() ? -1 : monomial_degree(terms.begin()->first); }

  void add(Monomial m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  static Poly variable(std::size_t v) {
    Poly p;
    p.add(variable_monomial(v), 1);
    return p;
  }
  static Poly from_linear(const LinearForm& f) {
    if (f.size() > kMaxVariables) throw Error(ErrorKind::BoundsExceeded, "too many variables for the monomial encoding");
    Poly p;
    for (std::size_t v = 0; v < f.size(); ++v) p.add(variable_monomial(v), f[v]);
    return p;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms)
      for (const auto& [mb, cb] : b.terms) r.add(ma + mb, ca * cb);
    return r;
  }
  friend Poly operator+(Poly a, const Poly& b) {
    for (const auto& [m, c] : b.terms) a.add(m, c);
    return a;
  }
  friend Poly operator-(Poly a, const Poly& b) {
    for (const auto& [m, c] : b.terms) a.add(m, -c);
    return a;
  }
  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms.empty()) return "0";
    std::string s;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      const auto& [m, c] = *it;
      bool neg = c.sign() < 0;
      Rational mag = neg ? -c : c;
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (!mag.is_one()) s += mag.to_string() + (monomial_degree(m) ? "*" : "");
      if (monomial_degree(m) || mag.is_one()) s += monomial_to_string(m, names);
    }
    return s;
  }
};

using GeneratorSet = std::vector<Poly>;

/// A polynomial ring with named variables and a term order: `order[k]` is the
/// variable of k-th highest significance for graded reverse lexicographic
/// comparison (the identity by default).
struct PolyRing {
  std::vector<std::string> names;
  std::vector<std::size_t> order;

  PolyRing() = default;
  explicit PolyRing(std::vector<std::string> vars) : names(std::move(vars)) {
    if (names.size() > kMaxVariables) throw Error(ErrorKind::BoundsExceeded, "at most 16 variables are supported");
    order.resize(names.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  }
  PolyRing(std::vector<std::string> vars, std::vector<std::size_t> ord) : PolyRing(std::move(vars)) {
    std::vector<std::size_t> check = ord;
    std::sort(check.begin(), check.end());
    if (check != order) throw Error(ErrorKind::InvalidForm, "term order is not a permutation of the variables");
    order = std::move(ord);
  }

  std::size_t size() const { return names.size(); }

  /// Graded reverse lexicographic comparison of equal-degree monomials.
  bool greater(Monomial a, Monomial b) const {
    for (std::size_t k = order.size(); k-- > 0;) {
      unsigned ea = exponent(a, order[k]), eb = exponent(b, order[k]);
      if (ea != eb) return ea < eb;
    }
    return false;
  }
};

/// All monomials of degree d, largest first in the ring's term order, with a
/// reverse index. Column 0 of every degree-d coordinate vector is therefore
/// the largest monomial and a row's pivot is its leading monomial.
class DegreeBasis {
 public:
  DegreeBasis(const PolyRing& ring, int d) : degree_(d) {
    if (d < 0 || d > kMaxDegree) throw Error(ErrorKind::BoundsExceeded, "degree outside the monomial encoding");
    const std::size_t n = ring.size();
    // Enumerate compositions of d into n parts.
    std::function<void(std::size_t, int, Monomial)> rec = [&](std::size_t v, int left, Monomial acc) {
      if (v + 1 == n) {
        monos_.push_back(acc + Monomial(left) * variable_monomial(v));
        return;
      }
      for (int k = left; k >= 0; --k) rec(v + 1, left - k, acc + Monomial(k) * variable_monomial(v));
    };
    if (n == 0) {
      if (d == 0) monos_.push_back(0);
    } else {
      rec(0, d, 0);
    }
    std::sort(monos_.begin(), monos_.end(), [&](Monomial a, Monomial b) { return ring.greater(a, b); });
    index_.reserve(monos_.size() * 2);
    for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], static_cast<std::uint32_t>(i));
  }

  int degree() const { return degree_; }
  std::size_t size() const { return monos_.size(); }
  Monomial operator[](std::size_t i) const { return monos_[i]; }
  const std::vector<Monomial>& monomials() const { return monos_; }
  std::uint32_t index(Monomial m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw Error(ErrorKind::Internal, "monomial not in degree basis");
    return it->second;
  }

 private:
  int degree_;
  std::vector<Monomial> monos_;
  std::unordered_map<Monomial, std::uint32_t> index_;
};

/// Lazily built degree bases for one ring.
class MonomialTables {
 public:
  explicit MonomialTables(PolyRing ring) : ring_(std::move(ring)) {}
  const PolyRing& ring() const { return ring_; }
  const DegreeBasis& basis(int d) {
    if (d < 0) throw Error(ErrorKind::Internal, "negative degree");
    while (static_cast<int>(by_degree_.size()) <= d) by_degree_.push_back(nullptr);
    auto& slot = by_degree_[static_cast<std::size_t>(d)];
    if (!slot) slot = std::make_unique<DegreeBasis>(ring_, d);
    return *slot;
  }

  SparseVec to_vec(const Poly& p, int d) {
    const auto& b = basis(d);
    SparseVec v;
    for (const auto& [m, c] : p.terms) {
      if (monomial_degree(m) != d) throw Error(ErrorKind::InvalidForm, "polynomial is not homogeneous of the expected degree");
      v.push_back({b.index(m), c});
    }
    return normalized(std::move(v));
  }
  Poly to_poly(const SparseVec& v, int d) {
    const auto& b = basis(d);
    Poly p;
    for (const auto& e : v) p.add(b[e.col], e.val);
    return p;
  }
  /// Multiplies a degree-d coordinate vector by a homogeneous polynomial.
  SparseVec multiply(const SparseVec& v, int d, const Poly& f) {
    const auto& src = basis(d);
    const auto& dst = basis(d + f.degree());
    SparseVec out;
    out.reserve(v.size() * f.terms.size());
    for (const auto& e : v)
      for (const auto& [m, c] : f.terms) out.push_back({dst.index(src[e.col] + m), e.val * c});
    return normalized(std::move(out));
  }
  SparseVec multiply_variable(const SparseVec& v, int d, std::size_t var) {
    const auto& src = basis(d);
    const auto& dst = basis(d + 1);
    SparseVec out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back({dst.index(src[e.col] + variable_monomial(var)), e.val});
    return normalized(std::move(out));
  }

 private:
  PolyRing ring_;
  std::vector<std::unique_ptr<DegreeBasis>> by_degree_;
};

/// The 2-minors of X as quadrics; zero minors are dropped.
inline GeneratorSet two_minors(const LinearFormMatrix& x) {
  x.validate();
  GeneratorSet out;
  const std::size_t e = x.num_cols();
  for (std::size_t j = 0; j < e; ++j)
    for (std::size_t k = j + 1; k < e; ++k) {
      Poly m = Poly::from_linear(x.entries[0][j]) * Poly::from_linear(x.entries[1][k]) -
               Poly::from_linear(x.entries[0][k]) * Poly::from_linear(x.entries[1][j]);
      if (!m.is_zero()) out.push_back(std::move(m));
    }
  return out;
}

/// Substitutes zero for the given variables and drops them from the ring:
/// the returned generators live in the ring of the remaining variables.
inline GeneratorSet restrict_to(const GeneratorSet& gens, std::size_t n, const std::vector<bool>& killed) {
  std::vector<int> newpos(n, -1);
  int next = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!killed[v]) newpos[v] = next++;
  GeneratorSet out;
  for (const auto& g : gens) {
    Poly r;
    for (const auto& [m, c] : g.terms) {
      Monomial nm = 0;
      bool dead = false;
      for (std::size_t v = 0; v < n && !dead; ++v) {
        unsigned e = exponent(m, v);
        if (!e) continue;
        if (killed[v])
          dead = true;
        else
          nm += Monomial(e) * variable_monomial(static_cast<std::size_t>(newpos[v]));
      }
      if (!dead) r.add(nm, c);
    }
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace kwk
