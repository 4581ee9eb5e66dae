#pragma once

// Brute-force verifier. Works with an arbitrary finite graded-commutative
// ring given by structure constants, forms its n-fold tensor power with the
// Koszul-signed symmetric group action, and counts invariants by
// symmetrizing a spanning set and row-reducing over Q. Nothing here reuses
// the product, pairing or basis code of the main engine; only the value
// types at the boundary are shared.

#include "symprod/algebra_core.hpp"
#include "symprod/homology_ring.hpp"
#include "symprod/integer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace symprod::oracle {

/// Finite graded ring: labelled basis with degrees and a multiplication
/// table of exact structure constants. Missing table entries are zero.
class GradedRingSpec {
 public:
  struct Term {
    Rational coeff;
    int index;
  };
  using Product = std::vector<Term>;

  int add_basis(std::string label, int degree) {
    if (degree < 0) throw InvalidArgument("basis degree must be non-negative");
    for (const auto& l : labels_)
      if (l == label) throw InvalidArgument("duplicate basis label " + label);
    labels_.push_back(std::move(label));
    degrees_.push_back(degree);
    return static_cast<int>(labels_.size()) - 1;
  }

  void set_product(int left, int right, Product result) {
    check_index(left);
    check_index(right);
    for (const auto& t : result) {
      check_index(t.index);
      if (degrees_[static_cast<std::size_t>(t.index)] != degree(left) + degree(right))
        throw InvalidArgument("product " + label(left) + "*" + label(right) + " is not homogeneous");
    }
    std::erase_if(result, [](const Term& t) { return t.coeff == 0; });
    table_[{left, right}] = std::move(result);
  }

  int size() const { return static_cast<int>(labels_.size()); }
  int degree(int i) const { return degrees_.at(static_cast<std::size_t>(i)); }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }

  int index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return static_cast<int>(i);
    throw InvalidArgument("unknown basis label " + label);
  }

  const Product& product(int left, int right) const {
    static const Product kZero;
    auto it = table_.find({left, right});
    return it == table_.end() ? kZero : it->second;
  }

  /// Exhaustive associativity and graded-commutativity check. Throws
  /// InvalidArgument naming the first failing triple or pair.
  void validate() const {
    const int n = size();
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        auto ab = as_map(product(a, b));
        auto ba = as_map(product(b, a));
        const bool odd = (degree(a) * degree(b)) % 2 == 1;
        for (auto& [k, v] : ba) v = odd ? Rational(-v) : v;
        if (ab != ba)
          throw InvalidArgument("not graded-commutative: " + label(a) + ", " + label(b));
        for (int c = 0; c < n; ++c) {
          if (left_assoc(a, b, c) != right_assoc(a, b, c))
            throw InvalidArgument("not associative: " + label(a) + ", " + label(b) + ", " + label(c));
        }
      }
    }
  }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= size()) throw InvalidArgument("basis index out of range");
  }

  static std::map<int, Rational> as_map(const Product& p) {
    std::map<int, Rational> m;
    for (const auto& t : p) m[t.index] += t.coeff;
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return m;
  }

  std::map<int, Rational> left_assoc(int a, int b, int c) const {
    std::map<int, Rational> out;
    for (const auto& t : product(a, b))
      for (const auto& u : product(t.index, c)) out[u.index] += t.coeff * u.coeff;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  std::map<int, Rational> right_assoc(int a, int b, int c) const {
    std::map<int, Rational> out;
    for (const auto& t : product(b, c))
      for (const auto& u : product(a, t.index)) out[u.index] += t.coeff * u.coeff;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::map<std::pair<int, int>, Product> table_;
};

/// H*(C) for a genus-g surface: labels "1", "e1".."e2g", "b";
/// e_{2i-1} e_{2i} = b = -e_{2i} e_{2i-1}.
inline GradedRingSpec surface_ring(int g) {
  GradedRingSpec r;
  const int one = r.add_basis("1", 0);
  std::vector<int> e;
  for (int i = 1; i <= 2 * g; ++i) e.push_back(r.add_basis("e" + std::to_string(i), 1));
  const int b = r.add_basis("b", 2);
  for (int x = 0; x < r.size(); ++x) {
    r.set_product(one, x, {{1, x}});
    r.set_product(x, one, {{1, x}});
  }
  for (int i = 1; i <= g; ++i) {
    r.set_product(e[static_cast<std::size_t>(2 * i - 2)], e[static_cast<std::size_t>(2 * i - 1)], {{1, b}});
    r.set_product(e[static_cast<std::size_t>(2 * i - 1)], e[static_cast<std::size_t>(2 * i - 2)], {{-1, b}});
  }
  return r;
}

/// H*(wedge of k circles): unit plus k degree-1 classes, all products zero.
inline GradedRingSpec wedge_of_circles(int k) {
  GradedRingSpec r;
  const int one = r.add_basis("1", 0);
  for (int i = 1; i <= k; ++i) r.add_basis("s" + std::to_string(i), 1);
  for (int x = 0; x < r.size(); ++x) {
    r.set_product(one, x, {{1, x}});
    r.set_product(x, one, {{1, x}});
  }
  return r;
}

/// H*(S^2).
inline GradedRingSpec sphere2() {
  GradedRingSpec r;
  const int one = r.add_basis("1", 0);
  const int s = r.add_basis("s", 2);
  r.set_product(one, one, {{1, one}});
  r.set_product(one, s, {{1, s}});
  r.set_product(s, one, {{1, s}});
  return r;
}

/// Tensor over the ring basis: index tuple -> rational coefficient.
using Tuple = std::vector<int>;
using Tensor = std::map<Tuple, Rational>;

namespace detail {

inline void accumulate(Tensor& t, const Tuple& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = t.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

// Image of a tuple under the permutation sending position i to position
// perm[i], with the Koszul sign (-1)^{|a||c|} for every pair of factors
// whose relative order is reversed.
inline std::pair<int, Tuple> permute(const GradedRingSpec& spec, const Tuple& t, const std::vector<int>& perm) {
  Tuple out(t.size());
  int sign = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    out[static_cast<std::size_t>(perm[i])] = t[i];
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (perm[i] > perm[j] && (spec.degree(t[i]) * spec.degree(t[j])) % 2 == 1) sign = -sign;
  }
  return {sign, out};
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Every tuple of length n with the given total degree.
inline std::vector<Tuple> tuples_of_degree(const GradedRingSpec& spec, int n, int m) {
  std::vector<Tuple> out;
  Tuple cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (static_cast<int>(cur.size()) == n) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int i = 0; i < spec.size(); ++i) {
      if (spec.degree(i) > remaining) continue;
      cur.push_back(i);
      self(self, remaining - spec.degree(i));
      cur.pop_back();
    }
  };
  rec(rec, m);
  return out;
}

}  // namespace detail

/// Sum over the symmetric group of the Koszul-signed images of t.
inline Tensor symmetrize(const GradedRingSpec& spec, const Tensor& t, int n) {
  Tensor out;
  for (const auto& perm : detail::all_permutations(n)) {
    for (const auto& [k, c] : t) {
      auto [sign, img] = detail::permute(spec, k, perm);
      detail::accumulate(out, img, sign > 0 ? c : Rational(-c));
    }
  }
  return out;
}

/// Whether every adjacent transposition fixes t.
inline bool is_invariant(const GradedRingSpec& spec, const Tensor& t, int n) {
  for (int p = 0; p + 1 < n; ++p) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<std::size_t>(p)], perm[static_cast<std::size_t>(p + 1)]);
    Tensor img;
    for (const auto& [k, c] : t) {
      auto [sign, k2] = detail::permute(spec, k, perm);
      detail::accumulate(img, k2, sign > 0 ? c : Rational(-c));
    }
    if (img != t) return false;
  }
  return true;
}

/// Rank over Q of the subspace of degree-m invariants in the n-fold tensor
/// power of spec.
inline std::size_t invariant_rank(const GradedRingSpec& spec, int n, int m) {
  if (n < 1) throw InvalidArgument("invariant_rank: n must be positive");
  // Sparse Gaussian elimination keyed by leading tuple.
  std::map<Tuple, Tensor> pivots;
  for (const auto& tuple : detail::tuples_of_degree(spec, n, m)) {
    Tensor v = symmetrize(spec, Tensor{{tuple, Rational(1)}}, n);
    while (!v.empty()) {
      auto lead = v.begin();
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) {
        pivots.emplace(lead->first, std::move(v));
        break;
      }
      const Rational f = lead->second / it->second.begin()->second;
      for (const auto& [k, c] : it->second) detail::accumulate(v, k, -f * c);
    }
  }
  return pivots.size();
}

/// Koszul-signed product in the tensor power, from the structure constants.
inline Tensor tensor_product(const GradedRingSpec& spec, const Tensor& x, const Tensor& y) {
  Tensor out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      // Moving y_p past x_q for q > p.
      int exponent = 0;
      for (std::size_t p = 0; p < ky.size(); ++p)
        for (std::size_t q = p + 1; q < kx.size(); ++q) exponent += spec.degree(ky[p]) * spec.degree(kx[q]);
      std::vector<std::pair<Rational, Tuple>> partial{{(exponent % 2 ? Rational(-1) : Rational(1)) * cx * cy, {}}};
      for (std::size_t p = 0; p < kx.size() && !partial.empty(); ++p) {
        std::vector<std::pair<Rational, Tuple>> next;
        for (const auto& [c, prefix] : partial) {
          for (const auto& term : spec.product(kx[p], ky[p])) {
            Tuple k = prefix;
            k.push_back(term.index);
            next.emplace_back(c * term.coeff, std::move(k));
          }
        }
        partial = std::move(next);
      }
      for (const auto& [c, k] : partial) detail::accumulate(out, k, c);
    }
  }
  return out;
}

/// Converts an engine tensor over {1, e(i), b} to the surface_ring(g) basis.
inline Tensor from_engine(const GradedRingSpec& surface, const TensorClass& t) {
  Tensor out;
  for (const auto& [key, c] : t.terms()) {
    Tuple k;
    for (int p = 0; p < t.arity(); ++p) k.push_back(surface.index_of(key.at(p).label()));
    detail::accumulate(out, k, Rational(c));
  }
  return out;
}

/// Checks the engine's tensor_mul against the oracle product of the
/// symmetrized (averaged) representatives of x and y. True iff they agree.
inline bool invariant_cup_check(const GradedRingSpec& spec, int n, const TensorClass& x, const TensorClass& y) {
  const Rational nfact(factorial(static_cast<unsigned>(n)));
  auto average = [&](const TensorClass& t) {
    Tensor s = symmetrize(spec, from_engine(spec, t), n);
    for (auto& [k, c] : s) c /= nfact;
    return s;
  };
  const Tensor expected = tensor_product(spec, average(x), average(y));
  return expected == from_engine(spec, tensor_mul(x, y));
}

/// Pontryagin product of the factors of each tensor monomial (units act as
/// the identity); e.g. b^{(x) j} (x) 1.. maps to j! gamma_j. Linear in t.
inline HomologyClass pushforward(const TensorClass& t) {
  HomologyClass out;
  for (const auto& [key, c] : t.terms()) {
    HomologyClass prod = HomologyClass::unit();
    for (int p = 0; p < t.arity(); ++p) {
      const SurfaceBasisElement e = key.at(p);
      if (e.is_unit()) continue;
      prod = pontryagin_mul(prod, e.is_b() ? HomologyClass::gamma(1) : HomologyClass::e(e.index()));
    }
    out += c * prod;
  }
  return out;
}

}  // namespace symprod::oracle
