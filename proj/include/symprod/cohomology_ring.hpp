#pragma once

// H*(C^(n); Z) in MacDonald's presentation: generated by e*_1..e*_2g (degree
// 1) and b* (degree 2). Elements are integer combinations of monomials
// e*_S (b*)^q in the free graded-commutative algebra; two elements are equal
// in the quotient iff their Kronecker pairings with the homology basis agree.
// Pairings are computed through the injective pullback into H*(C)^{(x) n}.
//
// The monomials e*_S (b*)^q with |S| + q <= n form a Z-basis; `reduce`
// rewrites any element in that basis.

#include "symprod/algebra_core.hpp"
#include "symprod/homology_ring.hpp"
#include "symprod/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace symprod {

/// e*_S (b*)^q.
struct CohomologyMonomial {
  std::uint64_t e_mask = 0;
  int bstar = 0;

  static CohomologyMonomial make(const std::vector<int>& indices, int q = 0) {
    if (q < 0) throw InvalidArgument("exponent of b* must be non-negative");
    return {detail::mask_from_indices(indices), q};
  }

  int exterior_size() const { return std::popcount(e_mask); }
  int degree() const { return exterior_size() + 2 * bstar; }
  int length() const { return exterior_size() + bstar; }
  std::vector<int> indices() const { return detail::indices_from_mask(e_mask); }

  std::string label() const {
    std::string s;
    for (int i : indices()) {
      if (!s.empty()) s += "*";
      s += "e" + std::to_string(i) + "'";
    }
    if (bstar > 0) {
      if (!s.empty()) s += "*";
      s += "b'";
      if (bstar > 1) s += "^" + std::to_string(bstar);
    }
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const CohomologyMonomial&, const CohomologyMonomial&) = default;
  friend bool operator<(const CohomologyMonomial& a, const CohomologyMonomial& b) {
    return detail::basis_less(a.degree(), a.bstar, a.e_mask, b.degree(), b.bstar, b.e_mask);
  }
};

/// Integer combination of generator monomials for a fixed (g, n). The
/// representation is a spanning-set combination and need not be unique;
/// use CohomologyRing::reduce or coordinates to compare.
class CohomologyClass {
 public:
  using Terms = std::map<CohomologyMonomial, Integer>;

  explicit CohomologyClass(CurveContext ctx) : ctx_(ctx) {}
  CohomologyClass(CurveContext ctx, const CohomologyMonomial& m, Integer c = 1) : ctx_(ctx) {
    detail::validate_mask(m.e_mask, ctx_);
    add(m, c);
  }

  static CohomologyClass unit(CurveContext ctx) { return {ctx, CohomologyMonomial{}}; }
  static CohomologyClass bstar(CurveContext ctx) { return {ctx, CohomologyMonomial::make({}, 1)}; }
  static CohomologyClass estar(CurveContext ctx, int i) {
    if (i < 1 || i > 2 * ctx.g) throw InvalidArgument("e*_" + std::to_string(i) + " out of range");
    return {ctx, CohomologyMonomial::make({i}, 0)};
  }

  const CurveContext& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero_representative() const { return terms_.empty(); }

  Integer coefficient(const CohomologyMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const CohomologyMonomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  CohomologyClass& operator+=(const CohomologyClass& o) {
    require_same_context(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  CohomologyClass& operator-=(const CohomologyClass& o) {
    require_same_context(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  CohomologyClass& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }
  friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
  friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }
  friend CohomologyClass operator*(const Integer& s, CohomologyClass a) { return a *= s; }
  friend CohomologyClass operator-(CohomologyClass a) { return a *= -1; }

  /// Equality of representatives (not of classes).
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

  void require_same_context(const CohomologyClass& o) const {
    if (!(o.ctx_ == ctx_)) throw InvalidArgument("cohomology classes from different (g, n)");
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.str() + "*" + m.label();
    }
    return s;
  }

 private:
  CurveContext ctx_;
  Terms terms_;
};

/// Product in the free algebra E(e*) (x) Z[b*], without reduction.
inline CohomologyClass free_mul(const CohomologyClass& x, const CohomologyClass& y) {
  x.require_same_context(y);
  CohomologyClass out(x.context());
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      if (mx.e_mask & my.e_mask) continue;
      Integer c = cx * cy;
      if (detail::exterior_sign(mx.e_mask, my.e_mask) < 0) c = -c;
      out.add({mx.e_mask | my.e_mask, mx.bstar + my.bstar}, c);
    }
  }
  return out;
}

inline CohomologyClass free_pow(const CohomologyClass& x, int k) {
  CohomologyClass r = CohomologyClass::unit(x.context());
  for (int i = 0; i < k; ++i) r = free_mul(r, x);
  return r;
}

/// theta = sum_{i <= g} e*_{2i-1} e*_{2i}; zero when g = 0.
inline CohomologyClass theta(const CurveContext& ctx) {
  CohomologyClass t(ctx);
  for (int i = 1; i <= ctx.g; ++i) t.add(CohomologyMonomial::make({2 * i - 1, 2 * i}), 1);
  return t;
}

/// e*_{2k-1} e*_{2k} - b*.
inline CohomologyClass pair_minus_bstar(const CurveContext& ctx, int k) {
  if (k < 1 || k > ctx.g) throw InvalidArgument("pair index out of range [1, g]");
  return CohomologyClass(ctx, CohomologyMonomial::make({2 * k - 1, 2 * k})) - CohomologyClass::bstar(ctx);
}

/// The relation e*_{2i-1}.. (I) e*_{2j}.. (J) prod_{k in K}(e*_{2k-1}e*_{2k} - b*) (b*)^q,
/// unreduced. I, J, K must be pairwise disjoint subsets of [1, g].
inline CohomologyClass macdonald_relation(const CurveContext& ctx, const std::vector<int>& odd,
                                          const std::vector<int>& even, const std::vector<int>& pairs,
                                          int q) {
  if (q < 0) throw InvalidArgument("macdonald_relation: q must be non-negative");
  std::set<int> seen;
  for (const auto* family : {&odd, &even, &pairs}) {
    for (int i : *family) {
      if (i < 1 || i > ctx.g) throw InvalidArgument("macdonald_relation: index out of range [1, g]");
      if (!seen.insert(i).second)
        throw InvalidArgument("macdonald_relation: index " + std::to_string(i) + " appears twice");
    }
  }
  CohomologyClass r = CohomologyClass::unit(ctx);
  for (int i : odd) r = free_mul(r, CohomologyClass::estar(ctx, 2 * i - 1));
  for (int j : even) r = free_mul(r, CohomologyClass::estar(ctx, 2 * j));
  for (int k : pairs) r = free_mul(r, pair_minus_bstar(ctx, k));
  return free_mul(r, free_pow(CohomologyClass::bstar(ctx), q));
}

/// Pullback, pairing and reduction machinery for one (g, n). Caches are
/// filled on first use and never invalidated; all public members are safe to
/// call concurrently.
class CohomologyRing {
 public:
  explicit CohomologyRing(CurveContext ctx) : ctx_(ctx), cache_(std::make_unique<Cache>()) {
    if (ctx.n > TensorKey::kMaxArity)
      throw InvalidArgument("cohomology engine supports n <= " + std::to_string(TensorKey::kMaxArity));
  }

  const CurveContext& context() const { return ctx_; }

  /// pi^* of a monomial: the ordered product of the spread generators.
  const TensorClass& pullback(const CohomologyMonomial& m) const {
    {
      std::lock_guard lock(cache_->mutex);
      auto it = cache_->pullbacks.find(m);
      if (it != cache_->pullbacks.end()) return it->second;
    }
    detail::validate_mask(m.e_mask, ctx_);
    TensorClass value(ctx_.n);
    if (m.bstar > 0) {
      value = tensor_mul(pullback({m.e_mask, m.bstar - 1}), TensorClass::spread(ctx_.n, SurfaceBasisElement::b()));
    } else if (m.e_mask != 0) {
      const int top = 63 - std::countl_zero(m.e_mask);
      const std::uint64_t rest = m.e_mask & ~(std::uint64_t{1} << top);
      value = tensor_mul(pullback({rest, 0}), TensorClass::spread(ctx_.n, SurfaceBasisElement::e(top + 1)));
    } else {
      value = TensorClass::one(ctx_.n);
    }
    std::lock_guard lock(cache_->mutex);
    return cache_->pullbacks.try_emplace(m, std::move(value)).first->second;
  }

  TensorClass pullback(const CohomologyClass& x) const {
    check(x);
    TensorClass out(ctx_.n);
    for (const auto& [m, c] : x.terms()) out += c * pullback(m);
    return out;
  }

  /// e(i_1) (x) .. (x) e(i_k) (x) b^{(x) j} (x) 1 .. 1, the tensor whose
  /// pushforward is j! e_S gamma_j.
  TensorKey representative_key(const HomologyMonomial& h) const {
    if (h.length() > ctx_.n)
      throw InvalidArgument("homology monomial " + h.label() + " has length above n = " + std::to_string(ctx_.n));
    detail::validate_mask(h.e_mask, ctx_);
    TensorKey k;
    int slot = 0;
    for (int i : h.indices()) k = k.with(slot++, SurfaceBasisElement::e(i));
    for (int t = 0; t < h.gamma; ++t) k = k.with(slot++, SurfaceBasisElement::b());
    return k;
  }

  /// Coefficient of pi^*(m) at `target`. Expands the same ordered product of
  /// spread generators as pullback(m), discarding partial terms whose slots
  /// can no longer reach the target slot contents.
  Integer pullback_coefficient(const CohomologyMonomial& m, TensorKey target) const {
    detail::validate_mask(m.e_mask, ctx_);
    const int n = ctx_.n;
    auto reachable = [](SurfaceBasisElement cur, SurfaceBasisElement tgt) {
      return cur == tgt || cur.is_unit() || (tgt.is_b() && cur.is_e());
    };
    std::vector<SurfaceBasisElement> generators;
    for (int i : m.indices()) generators.push_back(SurfaceBasisElement::e(i));
    for (int t = 0; t < m.bstar; ++t) generators.push_back(SurfaceBasisElement::b());

    std::map<TensorKey, Integer> states{{TensorKey{}, Integer(1)}};
    for (const auto gen : generators) {
      std::map<TensorKey, Integer> next;
      for (const auto& [key, c] : states) {
        for (int p = 0; p < n; ++p) {
          const SurfaceBasisElement tgt = target.at(p);
          if (tgt.is_unit() || (tgt.is_e() && !(gen == tgt))) continue;
          const auto [sign, k] = detail::key_product(key, TensorKey{}.with(p, gen), n);
          if (sign == 0 || !reachable(k.at(p), tgt)) continue;
          auto [it, inserted] = next.try_emplace(k, sign > 0 ? c : Integer(-c));
          if (!inserted) {
            if (sign > 0) it->second += c; else it->second -= c;
          }
        }
      }
      std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
      states = std::move(next);
      if (states.empty()) return 0;
    }
    auto it = states.find(target);
    return it == states.end() ? Integer(0) : it->second;
  }

  /// <m, h> = (1/j!) <pi^* m, e(i_1) (x)..(x) e(i_k) (x) b^{(x) j} (x) 1..1>.
  Integer kronecker(const CohomologyMonomial& m, const HomologyMonomial& h) const {
    const TensorKey key = representative_key(h);
    if (m.degree() != h.degree()) return 0;
    // Each e(t) slot needs its own e*_t; each b slot takes at most one b*.
    if ((h.e_mask & ~m.e_mask) != 0 || m.bstar > h.gamma) return 0;
    return exact_div(pullback_coefficient(m, key), factorial(static_cast<unsigned>(h.gamma)),
                     "kronecker pairing");
  }

  Integer kronecker(const CohomologyClass& x, const HomologyMonomial& h) const {
    check(x);
    Integer total = 0;
    for (const auto& [m, c] : x.terms()) total += c * kronecker(m, h);
    return total;
  }

  Integer kronecker(const CohomologyClass& x, const HomologyClass& y) const {
    Integer total = 0;
    for (const auto& [h, c] : y.terms()) total += c * kronecker(x, h);
    return total;
  }

  /// Homology basis of degree m, in basis order.
  const std::vector<HomologyMonomial>& homology_basis(int m) const {
    return cached(cache_->homology_bases, m, [&] { return symprod::homology_basis(ctx_, m); });
  }

  /// Spanning monomials e*_S (b*)^q with |S| + 2q = m and |S| + q <= n.
  const std::vector<CohomologyMonomial>& spanning_monomials(int m) const {
    return cached(cache_->spanning, m, [&] {
      std::vector<CohomologyMonomial> out;
      for (const auto& h : homology_basis(m)) out.push_back({h.e_mask, h.gamma});
      return out;
    });
  }

  /// Pairing vector of a monomial against homology_basis(m).
  const IntVector& monomial_coordinates(const CohomologyMonomial& mono, int m) const {
    {
      std::lock_guard lock(cache_->mutex);
      auto it = cache_->monomial_coords.find({mono, m});
      if (it != cache_->monomial_coords.end()) return it->second;
    }
    const auto& basis = homology_basis(m);
    IntVector v(basis.size());
    if (mono.degree() == m)
      for (std::size_t i = 0; i < basis.size(); ++i) v[i] = kronecker(mono, basis[i]);
    std::lock_guard lock(cache_->mutex);
    return cache_->monomial_coords.try_emplace({mono, m}, std::move(v)).first->second;
  }

  /// Kronecker pairings of x against homology_basis(m): the canonical form
  /// of the degree-m part of x.
  IntVector coordinates(const CohomologyClass& x, int m) const {
    check(x);
    IntVector v(homology_basis(m).size());
    for (const auto& [mono, c] : x.terms()) {
      if (mono.degree() != m) continue;
      const IntVector& mv = monomial_coordinates(mono, m);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (mv[i] != 0) v[i] += c * mv[i];
    }
    return v;
  }

  /// M[a][b] = <spanning_monomials(m)[a], homology_basis(m)[b]>.
  const IntMatrix& pairing_matrix(int m) const {
    return cached(cache_->pairing, m, [&] {
      IntMatrix a;
      for (const auto& mono : spanning_monomials(m)) a.push_back(monomial_coordinates(mono, m));
      return a;
    });
  }

  /// Integral inverse of pairing_matrix(m); throws IntegralityError if the
  /// spanning monomials fail to be a Z-basis.
  const IntMatrix& pairing_inverse(int m) const {
    return cached(cache_->pairing_inv, m, [&] {
      return integral_inverse(pairing_matrix(m), "pairing matrix in degree " + std::to_string(m));
    });
  }

  /// Combination over spanning_monomials(m) with the given pairing vector.
  CohomologyClass from_coordinates(const IntVector& v, int m) const {
    const IntVector c = row_times(v, pairing_inverse(m));
    const auto& span = spanning_monomials(m);
    CohomologyClass out(ctx_);
    for (std::size_t i = 0; i < c.size(); ++i) out.add(span[i], c[i]);
    return out;
  }

  /// Canonical representative over the Z-basis of spanning monomials.
  CohomologyClass reduce(const CohomologyClass& x) const {
    check(x);
    std::set<int> degrees;
    for (const auto& [m, c] : x.terms()) degrees.insert(m.degree());
    CohomologyClass out(ctx_);
    for (int d : degrees) {
      if (d > 2 * ctx_.n) continue;
      out += from_coordinates(coordinates(x, d), d);
    }
    return out;
  }

  /// Zero in the quotient ring iff every pairing vanishes.
  bool is_zero(const CohomologyClass& x) const {
    check(x);
    std::set<int> degrees;
    for (const auto& [m, c] : x.terms()) degrees.insert(m.degree());
    for (int d : degrees) {
      if (d > 2 * ctx_.n) continue;
      for (const auto& v : coordinates(x, d))
        if (v != 0) return false;
    }
    return true;
  }

  bool equivalent(const CohomologyClass& x, const CohomologyClass& y) const { return is_zero(x - y); }

  /// Cup product, returned in canonical form. pi^* is a ring map, so the
  /// free-algebra product of representatives pulls back to the tensor
  /// product of the pullbacks.
  CohomologyClass cup(const CohomologyClass& x, const CohomologyClass& y) const {
    check(x);
    check(y);
    return reduce(free_mul(x, y));
  }

  /// Evaluation on the fundamental class gamma_n.
  Integer evaluate_top(const CohomologyClass& x) const {
    return kronecker(x, HomologyMonomial::make({}, ctx_.n));
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<CohomologyMonomial, TensorClass> pullbacks;
    std::map<std::pair<CohomologyMonomial, int>, IntVector> monomial_coords;
    std::map<int, std::vector<HomologyMonomial>> homology_bases;
    std::map<int, std::vector<CohomologyMonomial>> spanning;
    std::map<int, IntMatrix> pairing;
    std::map<int, IntMatrix> pairing_inv;
  };

  template <class Map, class Make>
  const typename Map::mapped_type& cached(Map& map, int key, Make make) const {
    {
      std::lock_guard lock(cache_->mutex);
      auto it = map.find(key);
      if (it != map.end()) return it->second;
    }
    auto value = make();
    std::lock_guard lock(cache_->mutex);
    return map.try_emplace(key, std::move(value)).first->second;
  }

  void check(const CohomologyClass& x) const {
    if (!(x.context() == ctx_)) throw InvalidArgument("cohomology class belongs to a different (g, n)");
  }

  CurveContext ctx_;
  std::unique_ptr<Cache> cache_;
};

}  // namespace symprod
