#pragma once

// Graded-commutative arithmetic on H*(C) for a closed genus-g surface C, its
// n-fold tensor power, and the factor-wise Kronecker pairing between
// tensor-power cohomology and homology.
//
// Basis of H*(C): the unit (degree 0), e(1)..e(2g) (degree 1) and the
// orientation class b (degree 2). Symplectic pairs are (e(2i-1), e(2i)):
// e(2i-1)e(2i) = b.

#include "symprod/integer.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symprod {

/// Genus g of the curve and the symmetric power n under study.
struct CurveContext {
  int g = 0;
  int n = 1;

  static constexpr int kMaxGenus = 32;

  CurveContext() = default;
  CurveContext(int genus, int power) : g(genus), n(power) {
    if (g < 0) throw InvalidArgument("genus must be non-negative, got " + std::to_string(g));
    if (n < 1) throw InvalidArgument("symmetric power must be positive, got " + std::to_string(n));
    if (g > kMaxGenus) throw InvalidArgument("genus above " + std::to_string(kMaxGenus) + " unsupported");
  }

  int generator_count() const { return 2 * g; }

  friend bool operator==(const CurveContext&, const CurveContext&) = default;
};

/// Maps the transverse labelling (e_i, e_{i+g}) onto the symplectic-pair
/// labelling (e_{2i-1}, e_{2i}) used throughout the library.
inline int symplectic_index_from_transverse(int i, int g) {
  if (i < 1 || i > 2 * g) throw InvalidArgument("transverse index out of range");
  return i <= g ? 2 * i - 1 : 2 * (i - g);
}

/// One of {unit, e(i), b}, packed into a byte: 0 = unit, i = e(i), 0xFF = b.
class SurfaceBasisElement {
 public:
  constexpr SurfaceBasisElement() = default;

  static constexpr SurfaceBasisElement unit() { return SurfaceBasisElement(0); }
  static constexpr SurfaceBasisElement b() { return SurfaceBasisElement(kB); }
  static SurfaceBasisElement e(int i) {
    if (i < 1 || i > 2 * CurveContext::kMaxGenus) throw InvalidArgument("e(i): index out of range");
    return SurfaceBasisElement(static_cast<std::uint8_t>(i));
  }
  static constexpr SurfaceBasisElement from_code(std::uint8_t c) { return SurfaceBasisElement(c); }

  constexpr std::uint8_t code() const { return code_; }
  constexpr bool is_unit() const { return code_ == 0; }
  constexpr bool is_b() const { return code_ == kB; }
  constexpr bool is_e() const { return code_ != 0 && code_ != kB; }
  constexpr int index() const { return is_e() ? code_ : 0; }
  constexpr int degree() const { return is_unit() ? 0 : (is_b() ? 2 : 1); }

  void validate(const CurveContext& ctx) const {
    if (is_e() && index() > ctx.generator_count())
      throw InvalidArgument("e(" + std::to_string(index()) + ") out of range [1, " +
                            std::to_string(ctx.generator_count()) + "]");
  }

  std::string label() const {
    if (is_unit()) return "1";
    if (is_b()) return "b";
    return "e" + std::to_string(index());
  }

  friend constexpr auto operator<=>(const SurfaceBasisElement&, const SurfaceBasisElement&) = default;

 private:
  static constexpr std::uint8_t kB = 0xFF;
  constexpr explicit SurfaceBasisElement(std::uint8_t c) : code_(c) {}
  std::uint8_t code_ = 0;
};

/// A basis element with a sign in {-1, +1}.
struct SignedElement {
  int sign = 1;
  SurfaceBasisElement element;
  friend bool operator==(const SignedElement&, const SignedElement&) = default;
};

namespace detail {

// Product in H*(C) without range checks. sign == 0 means the product vanishes.
inline SignedElement basis_product(SurfaceBasisElement a, SurfaceBasisElement c) {
  if (a.is_unit()) return {1, c};
  if (c.is_unit()) return {1, a};
  if (a.is_b() || c.is_b()) return {0, {}};
  const int i = a.index();
  const int j = c.index();
  if (i % 2 == 1 && j == i + 1) return {1, SurfaceBasisElement::b()};
  if (j % 2 == 1 && i == j + 1) return {-1, SurfaceBasisElement::b()};
  return {0, {}};
}

}  // namespace detail

/// Product of two basis elements of H*(C); nullopt when it vanishes.
inline std::optional<SignedElement> surface_mul(SurfaceBasisElement a, SurfaceBasisElement c,
                                                const CurveContext& ctx) {
  a.validate(ctx);
  c.validate(ctx);
  const SignedElement r = detail::basis_product(a, c);
  if (r.sign == 0) return std::nullopt;
  return r;
}

/// Tensor monomial key: up to kMaxArity slots, one byte per slot.
class TensorKey {
 public:
  static constexpr int kMaxArity = 16;

  constexpr TensorKey() = default;

  static TensorKey from(const std::vector<SurfaceBasisElement>& slots) {
    if (slots.size() > kMaxArity) throw InvalidArgument("tensor arity above 16 unsupported");
    TensorKey k;
    for (std::size_t p = 0; p < slots.size(); ++p) k = k.with(static_cast<int>(p), slots[p]);
    return k;
  }

  constexpr SurfaceBasisElement at(int p) const {
    const std::uint64_t w = p < 8 ? lo_ : hi_;
    return SurfaceBasisElement::from_code(static_cast<std::uint8_t>((w >> (8 * (p % 8))) & 0xFF));
  }
  constexpr TensorKey with(int p, SurfaceBasisElement e) const {
    TensorKey k = *this;
    std::uint64_t& w = p < 8 ? k.lo_ : k.hi_;
    const int shift = 8 * (p % 8);
    w = (w & ~(std::uint64_t{0xFF} << shift)) | (std::uint64_t{e.code()} << shift);
    return k;
  }

  int degree(int arity) const {
    int d = 0;
    for (int p = 0; p < arity; ++p) d += at(p).degree();
    return d;
  }

  std::string label(int arity) const {
    std::string s;
    for (int p = 0; p < arity; ++p) {
      if (p) s += "(x)";
      s += at(p).label();
    }
    return s;
  }

  friend constexpr auto operator<=>(const TensorKey&, const TensorKey&) = default;

 private:
  std::uint64_t hi_ = 0;
  std::uint64_t lo_ = 0;
};

/// Exact integer combination of n-fold tensor monomials over {1, e(i), b}.
/// Used for both tensor-power cohomology and homology; the pairing decides
/// the interpretation.
class TensorClass {
 public:
  using Terms = std::map<TensorKey, Integer>;

  explicit TensorClass(int arity = 1) : arity_(arity) {
    if (arity < 1 || arity > TensorKey::kMaxArity)
      throw InvalidArgument("tensor arity must lie in [1, 16], got " + std::to_string(arity));
  }

  static TensorClass monomial(const std::vector<SurfaceBasisElement>& slots, Integer coeff = 1) {
    TensorClass t(static_cast<int>(slots.size()));
    t.add(TensorKey::from(slots), coeff);
    return t;
  }

  /// 1 (x) .. (x) e (x) .. (x) 1 with e in slot p (0-based).
  static TensorClass placement(int arity, int p, SurfaceBasisElement e) {
    TensorClass t(arity);
    t.add(TensorKey{}.with(p, e), 1);
    return t;
  }

  /// Sum over all slots of the placement of e.
  static TensorClass spread(int arity, SurfaceBasisElement e) {
    TensorClass t(arity);
    for (int p = 0; p < arity; ++p) t.add(TensorKey{}.with(p, e), 1);
    return t;
  }

  static TensorClass one(int arity) {
    TensorClass t(arity);
    t.add(TensorKey{}, 1);
    return t;
  }

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(TensorKey k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(TensorKey k, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TensorClass& operator+=(const TensorClass& o) {
    require_same_arity(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  TensorClass& operator-=(const TensorClass& o) {
    require_same_arity(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  TensorClass& operator*=(const Integer& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend TensorClass operator+(TensorClass a, const TensorClass& b) { return a += b; }
  friend TensorClass operator-(TensorClass a, const TensorClass& b) { return a -= b; }
  friend TensorClass operator*(const Integer& s, TensorClass a) { return a *= s; }
  friend TensorClass operator-(TensorClass a) { return a *= -1; }

  friend bool operator==(const TensorClass&, const TensorClass&) = default;

  /// Degree of the term if all terms share it; nullopt for zero or mixed.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [k, c] : terms_) {
      const int kd = k.degree(arity_);
      if (d && *d != kd) return std::nullopt;
      d = kd;
    }
    return d;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += c.str() + "*" + k.label(arity_);
    }
    return s;
  }

  void require_same_arity(const TensorClass& o) const {
    if (o.arity_ != arity_)
      throw InvalidArgument("tensor arity mismatch: " + std::to_string(arity_) + " vs " +
                            std::to_string(o.arity_));
  }

 private:
  int arity_;
  Terms terms_;
};

namespace detail {

// Product of two tensor monomials with the Koszul sign from moving each
// right factor c_p past a_{p+1}, ..., a_n. sign == 0 means zero.
inline std::pair<int, TensorKey> key_product(TensorKey a, TensorKey c, int arity) {
  int suffix_degree = 0;  // sum of deg a_q over q > p
  int sign_exponent = 0;
  TensorKey out;
  int sign = 1;
  for (int p = arity - 1; p >= 0; --p) {
    const SurfaceBasisElement ap = a.at(p);
    const SurfaceBasisElement cp = c.at(p);
    sign_exponent += cp.degree() * suffix_degree;
    suffix_degree += ap.degree();
    const SignedElement prod = basis_product(ap, cp);
    if (prod.sign == 0) return {0, {}};
    sign *= prod.sign;
    out = out.with(p, prod.element);
  }
  if (sign_exponent % 2) sign = -sign;
  return {sign, out};
}

}  // namespace detail

/// Bilinear, Koszul-signed product in H*(C)^{(x) n}.
inline TensorClass tensor_mul(const TensorClass& x, const TensorClass& y) {
  x.require_same_arity(y);
  TensorClass out(x.arity());
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const auto [sign, k] = detail::key_product(kx, ky, x.arity());
      if (sign == 0) continue;
      out.add(k, sign > 0 ? Integer(cx * cy) : Integer(-(cx * cy)));
    }
  }
  return out;
}

/// Factor-wise Kronecker pairing <a*_1 (x)..(x) a*_n, c_1 (x)..(x) c_n> =
/// prod_p <a*_p, c_p> on the dual bases, extended bilinearly. No global sign.
inline Integer tensor_pair(const TensorClass& cohomology, const TensorClass& homology) {
  cohomology.require_same_arity(homology);
  const auto& small = cohomology.size() <= homology.size() ? cohomology : homology;
  const auto& large = cohomology.size() <= homology.size() ? homology : cohomology;
  Integer total = 0;
  for (const auto& [k, c] : small.terms()) {
    auto it = large.terms().find(k);
    if (it != large.terms().end()) total += c * it->second;
  }
  return total;
}

}  // namespace symprod
