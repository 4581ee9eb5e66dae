#pragma once

// The stable Pontryagin ring E(e_1..e_2g) (x) Gamma[b] of the infinite
// symmetric product, its Hopf coproduct and primitives, and the length <= n
// subspace that is the integral homology of C^(n).
//
// The ring is not internal to a fixed n: concatenation maps C^(r) x C^(s)
// into C^(r+s). restrict_to_n is a projection, not a ring map.

#include "symprod/algebra_core.hpp"
#include "symprod/linalg.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symprod {

namespace detail {

inline std::uint64_t mask_from_indices(const std::vector<int>& indices) {
  std::uint64_t m = 0;
  for (int i : indices) {
    if (i < 1 || i > 2 * CurveContext::kMaxGenus) throw InvalidArgument("generator index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if (m & bit) throw InvalidArgument("repeated generator index " + std::to_string(i));
    m |= bit;
  }
  return m;
}

inline std::vector<int> indices_from_mask(std::uint64_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

// Sign of e_S * e_T after sorting: (-1)^#{(s, t) : s in S, t in T, s > t}.
inline int exterior_sign(std::uint64_t s, std::uint64_t t) {
  int inversions = 0;
  while (t) {
    const int bit = std::countr_zero(t);
    inversions += std::popcount(bit >= 63 ? 0 : (s >> (bit + 1)));
    t &= t - 1;
  }
  return inversions % 2 ? -1 : 1;
}

// Lexicographic comparison of sorted index lists of equal cardinality.
inline bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (!diff) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

// Basis order used everywhere: degree ascending, then exponent of the even
// generator descending, then lexicographic on the exterior part.
inline bool basis_less(int deg_a, int pow_a, std::uint64_t mask_a, int deg_b, int pow_b,
                       std::uint64_t mask_b) {
  if (deg_a != deg_b) return deg_a < deg_b;
  if (pow_a != pow_b) return pow_a > pow_b;
  return lex_less(mask_a, mask_b);
}

inline void validate_mask(std::uint64_t mask, const CurveContext& ctx) {
  const int top = 2 * ctx.g;
  if (top < 64 && (mask >> top) != 0)
    throw InvalidArgument("generator index exceeds 2g = " + std::to_string(top));
}

}  // namespace detail

/// e_S . gamma_j with S a strictly increasing index set.
struct HomologyMonomial {
  std::uint64_t e_mask = 0;
  int gamma = 0;

  static HomologyMonomial make(const std::vector<int>& indices, int j = 0) {
    if (j < 0) throw InvalidArgument("divided power exponent must be non-negative");
    return {detail::mask_from_indices(indices), j};
  }
  static HomologyMonomial unit() { return {}; }

  int exterior_size() const { return std::popcount(e_mask); }
  int degree() const { return exterior_size() + 2 * gamma; }
  int length() const { return exterior_size() + gamma; }
  std::vector<int> indices() const { return detail::indices_from_mask(e_mask); }

  std::string label() const {
    std::string s;
    for (int i : indices()) {
      if (!s.empty()) s += "*";
      s += "e" + std::to_string(i);
    }
    if (gamma > 0) {
      if (!s.empty()) s += "*";
      s += "gamma" + std::to_string(gamma);
    }
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const HomologyMonomial&, const HomologyMonomial&) = default;
  friend bool operator<(const HomologyMonomial& a, const HomologyMonomial& b) {
    return detail::basis_less(a.degree(), a.gamma, a.e_mask, b.degree(), b.gamma, b.e_mask);
  }
};

/// Integer combination of Pontryagin monomials.
class HomologyClass {
 public:
  using Terms = std::map<HomologyMonomial, Integer>;

  HomologyClass() = default;
  HomologyClass(const HomologyMonomial& m, Integer c = 1) { add(m, c); }

  static HomologyClass e(int i) { return HomologyClass(HomologyMonomial::make({i}, 0)); }
  static HomologyClass gamma(int j) { return HomologyClass(HomologyMonomial::make({}, j)); }
  static HomologyClass unit() { return gamma(0); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const HomologyMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const HomologyMonomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  HomologyClass& operator+=(const HomologyClass& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  HomologyClass& operator-=(const HomologyClass& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  HomologyClass& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }
  friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
  friend HomologyClass operator-(HomologyClass a, const HomologyClass& b) { return a -= b; }
  friend HomologyClass operator*(const Integer& s, HomologyClass a) { return a *= s; }
  friend HomologyClass operator-(HomologyClass a) { return a *= -1; }
  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

  std::optional<int> homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
      if (d && *d != m.degree()) return std::nullopt;
      d = m.degree();
    }
    return d;
  }

  int max_length() const {
    int l = 0;
    for (const auto& [m, c] : terms_) l = std::max(l, m.length());
    return l;
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
  Terms terms_;
};

namespace detail {

// Signed product of monomials; coefficient 0 means the product vanishes.
inline std::pair<Integer, HomologyMonomial> monomial_product(const HomologyMonomial& a,
                                                             const HomologyMonomial& b) {
  if (a.e_mask & b.e_mask) return {0, {}};
  Integer c = binomial(static_cast<unsigned>(a.gamma + b.gamma), static_cast<unsigned>(a.gamma));
  if (exterior_sign(a.e_mask, b.e_mask) < 0) c = -c;
  return {c, {a.e_mask | b.e_mask, a.gamma + b.gamma}};
}

}  // namespace detail

/// Pontryagin product: exterior on the e_i (shuffle sign), binomial on the
/// divided powers gamma_i gamma_j = C(i+j, i) gamma_{i+j}.
inline HomologyClass pontryagin_mul(const HomologyClass& x, const HomologyClass& y) {
  HomologyClass out;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      auto [c, m] = detail::monomial_product(mx, my);
      if (c != 0) out.add(m, c * cx * cy);
    }
  }
  return out;
}

/// Projection onto the span of monomials of length <= n.
inline HomologyClass restrict_to_n(const HomologyClass& x, const CurveContext& ctx) {
  HomologyClass out;
  for (const auto& [m, c] : x.terms())
    if (m.length() <= ctx.n) out.add(m, c);
  return out;
}

/// Monomial basis of H_m(C^(n)) in basis order.
inline std::vector<HomologyMonomial> homology_basis(const CurveContext& ctx, int m) {
  std::vector<HomologyMonomial> out;
  if (m < 0 || m > 2 * ctx.n) return out;
  for (int j = m / 2; j >= 0; --j) {
    const int k = m - 2 * j;
    if (k > 2 * ctx.g || k + j > ctx.n) continue;
    // Enumerate k-subsets of [1, 2g] in lexicographic order.
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) idx[static_cast<std::size_t>(t)] = t + 1;
    for (;;) {
      out.push_back(HomologyMonomial::make(idx, j));
      int t = k - 1;
      while (t >= 0 && idx[static_cast<std::size_t>(t)] == 2 * ctx.g - (k - 1 - t)) --t;
      if (t < 0) break;
      ++idx[static_cast<std::size_t>(t)];
      for (int u = t + 1; u < k; ++u) idx[static_cast<std::size_t>(u)] = idx[static_cast<std::size_t>(u - 1)] + 1;
    }
  }
  return out;
}

/// Rank of H_m(C^(n); Z): sum over k + 2j = m, k + j <= n of C(2g, k).
inline std::uint64_t betti(const CurveContext& ctx, int m) {
  if (m < 0 || m > 2 * ctx.n) return 0;
  std::uint64_t total = 0;
  for (int j = 0; 2 * j <= m; ++j) {
    const int k = m - 2 * j;
    if (k + j <= ctx.n && k <= 2 * ctx.g)
      total += binomial_u64(static_cast<unsigned>(2 * ctx.g), static_cast<unsigned>(k));
  }
  return total;
}

inline std::vector<std::uint64_t> betti_numbers(const CurveContext& ctx) {
  std::vector<std::uint64_t> out;
  for (int m = 0; m <= 2 * ctx.n; ++m) out.push_back(betti(ctx, m));
  return out;
}

/// Element of H_* (x) H_*, the target of the coproduct. Multiplication uses
/// (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
class HomologyTensor {
 public:
  using Key = std::pair<HomologyMonomial, HomologyMonomial>;
  using Terms = std::map<Key, Integer>;

  static HomologyTensor pure(const HomologyMonomial& a, const HomologyMonomial& b, Integer c = 1) {
    HomologyTensor t;
    t.add({a, b}, c);
    return t;
  }
  static HomologyTensor one() { return pure({}, {}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer coefficient(const HomologyMonomial& a, const HomologyMonomial& b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const Key& k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  HomologyTensor& operator+=(const HomologyTensor& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  HomologyTensor& operator-=(const HomologyTensor& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  HomologyTensor& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }
  friend HomologyTensor operator+(HomologyTensor a, const HomologyTensor& b) { return a += b; }
  friend HomologyTensor operator-(HomologyTensor a, const HomologyTensor& b) { return a -= b; }
  friend HomologyTensor operator*(const Integer& s, HomologyTensor a) { return a *= s; }
  friend bool operator==(const HomologyTensor&, const HomologyTensor&) = default;

  friend HomologyTensor operator*(const HomologyTensor& x, const HomologyTensor& y) {
    HomologyTensor out;
    for (const auto& [kx, cx] : x.terms_) {
      for (const auto& [ky, cy] : y.terms_) {
        auto [c1, left] = detail::monomial_product(kx.first, ky.first);
        if (c1 == 0) continue;
        auto [c2, right] = detail::monomial_product(kx.second, ky.second);
        if (c2 == 0) continue;
        Integer c = c1 * c2 * cx * cy;
        if ((kx.second.degree() * ky.first.degree()) % 2) c = -c;
        out.add({left, right}, c);
      }
    }
    return out;
  }

  /// Divides every coefficient, asserting exactness.
  HomologyTensor divided_by(const Integer& d) const {
    HomologyTensor out;
    for (const auto& [k, c] : terms_) out.add(k, exact_div(c, d, "divided-power coproduct"));
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.str() + "*" + k.first.label() + "(x)" + k.second.label();
    }
    return s;
  }

 private:
  Terms terms_;
};

/// Coproduct of the divided power gamma_1 = b = [C]:
/// b (x) 1 + sum_i (e_{2i-1} (x) e_{2i} - e_{2i} (x) e_{2i-1}) + 1 (x) b.
inline HomologyTensor coproduct_of_b(const CurveContext& ctx) {
  const HomologyMonomial b = HomologyMonomial::make({}, 1);
  const HomologyMonomial one{};
  HomologyTensor t = HomologyTensor::pure(b, one) + HomologyTensor::pure(one, b);
  for (int i = 1; i <= ctx.g; ++i) {
    const auto odd = HomologyMonomial::make({2 * i - 1});
    const auto even = HomologyMonomial::make({2 * i});
    t += HomologyTensor::pure(odd, even);
    t -= HomologyTensor::pure(even, odd);
  }
  return t;
}

/// Coproduct of gamma_j, forced by multiplicativity: (Delta b)^j / j!.
inline HomologyTensor coproduct_of_gamma(int j, const CurveContext& ctx) {
  HomologyTensor power = HomologyTensor::one();
  const HomologyTensor db = coproduct_of_b(ctx);
  for (int t = 0; t < j; ++t) power = power * db;
  return power.divided_by(factorial(static_cast<unsigned>(j)));
}

/// Multiplicative extension of Delta e_i = e_i (x) 1 + 1 (x) e_i and of the
/// divided-power coproduct above.
inline HomologyTensor coproduct(const HomologyClass& x, const CurveContext& ctx) {
  std::map<int, HomologyTensor> gamma_cache;
  HomologyTensor out;
  for (const auto& [m, c] : x.terms()) {
    detail::validate_mask(m.e_mask, ctx);
    HomologyTensor t = HomologyTensor::one();
    for (int i : m.indices()) {
      const auto e = HomologyMonomial::make({i});
      t = t * (HomologyTensor::pure(e, {}) + HomologyTensor::pure({}, e));
    }
    if (m.gamma > 0) {
      auto it = gamma_cache.find(m.gamma);
      if (it == gamma_cache.end()) it = gamma_cache.emplace(m.gamma, coproduct_of_gamma(m.gamma, ctx)).first;
      t = t * it->second;
    }
    out += c * t;
  }
  return out;
}

/// Delta(x) - x (x) 1 - 1 (x) x.
inline HomologyTensor reduced_coproduct(const HomologyClass& x, const CurveContext& ctx) {
  HomologyTensor out = coproduct(x, ctx);
  for (const auto& [m, c] : x.terms()) {
    out.add({m, HomologyMonomial{}}, -c);
    out.add({HomologyMonomial{}, m}, -c);
  }
  return out;
}

/// Integral basis (Hermite-normalized, leading coefficient positive) of the
/// primitives in the degree-m part of H_*(C^(n)).
inline std::vector<HomologyClass> primitive_basis(const CurveContext& ctx, int m) {
  if (m < 1) throw InvalidArgument("primitive_basis: degree must be at least 1");
  const auto basis = homology_basis(ctx, m);
  std::map<HomologyTensor::Key, std::size_t> row_of;
  std::vector<HomologyTensor> images;
  images.reserve(basis.size());
  for (const auto& mono : basis) {
    images.push_back(reduced_coproduct(HomologyClass(mono), ctx));
    for (const auto& [k, c] : images.back().terms()) row_of.try_emplace(k, row_of.size());
  }
  IntMatrix a(row_of.size(), IntVector(basis.size()));
  for (std::size_t col = 0; col < basis.size(); ++col)
    for (const auto& [k, c] : images[col].terms()) a[row_of[k]][col] = c;
  const IntMatrix kernel = integer_kernel(a, basis.size());
  std::vector<HomologyClass> out;
  for (const auto& v : kernel) {
    HomologyClass p;
    for (std::size_t i = 0; i < v.size(); ++i) p.add(basis[i], v[i]);
    out.push_back(std::move(p));
  }
  return out;
}

/// l = sum_{i <= g} e_{2i-1} e_{2i}.
inline HomologyClass ell_class(const CurveContext& ctx) {
  HomologyClass l;
  for (int i = 1; i <= ctx.g; ++i) l.add(HomologyMonomial::make({2 * i - 1, 2 * i}), 1);
  return l;
}

/// The spherical class u = b - l in H_2(C^(n)); needs n >= 2.
inline HomologyClass spherical_class(const CurveContext& ctx) {
  if (ctx.n < 2) throw InvalidArgument("spherical class requires n >= 2");
  return HomologyClass::gamma(1) - ell_class(ctx);
}

}  // namespace symprod
