#pragma once

// Poincare duality on C^(n) and the intersection form.
//
// The dual of a degree-m homology class y is the unique z of degree 2n - m
// with <z u w, gamma_n> = <w, y> for every w of degree m. Everything is
// solved from this equation; no closed-form tables are used.

#include "symprod/cohomology_ring.hpp"
#include "symprod/homology_ring.hpp"
#include "symprod/linalg.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace symprod {

/// Square intersection matrix over an ordered monomial basis.
struct IntersectionMatrix {
  CurveContext context;
  std::vector<HomologyMonomial> basis;
  IntMatrix entries;

  std::size_t size() const { return basis.size(); }
  bool is_symmetric() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (entries[i][j] != entries[j][i]) return false;
    return true;
  }
};

class PoincareDuality {
 public:
  explicit PoincareDuality(const CohomologyRing& ring) : ring_(ring), cache_(std::make_unique<Cache>()) {}

  const CohomologyRing& ring() const { return ring_; }
  const CurveContext& context() const { return ring_.context(); }

  /// D[a][b] = <w'_a u w_b, gamma_n> with w' spanning degree 2n - m and w
  /// spanning degree m.
  const IntMatrix& duality_matrix(int m) const {
    return cached(cache_->matrix, m, [&] {
      const int n = context().n;
      const auto& left = ring_.spanning_monomials(2 * n - m);
      const auto& right = ring_.spanning_monomials(m);
      IntMatrix d(left.size(), IntVector(right.size()));
      for (std::size_t a = 0; a < left.size(); ++a)
        for (std::size_t b = 0; b < right.size(); ++b)
          d[a][b] = ring_.evaluate_top(free_mul(CohomologyClass(context(), left[a]),
                                                CohomologyClass(context(), right[b])));
      return d;
    });
  }

  const IntMatrix& duality_inverse(int m) const {
    return cached(cache_->inverse, m, [&] {
      return integral_inverse(duality_matrix(m), "Poincare duality matrix in degree " + std::to_string(m));
    });
  }

  /// y^perp for homogeneous y supported on monomials of length <= n.
  CohomologyClass dual(const HomologyClass& y) const {
    const CurveContext& ctx = context();
    if (y.is_zero()) return CohomologyClass(ctx);
    const auto deg = y.homogeneous_degree();
    if (!deg) throw InvalidArgument("poincare_dual: class is not homogeneous");
    if (y.max_length() > ctx.n) throw InvalidArgument("poincare_dual: class has monomials of length above n");
    const int m = *deg;
    // r_b = <w_b, y> = (M y)_b where M is the cohomology/homology pairing.
    const auto& hb = ring_.homology_basis(m);
    IntVector ycoord(hb.size());
    for (std::size_t i = 0; i < hb.size(); ++i) ycoord[i] = y.coefficient(hb[i]);
    const IntVector r = times_col(ring_.pairing_matrix(m), ycoord);
    // c D = r.
    const IntVector c = row_times(r, duality_inverse(m));
    const auto& span = ring_.spanning_monomials(2 * ctx.n - m);
    CohomologyClass z(ctx);
    for (std::size_t i = 0; i < c.size(); ++i) z.add(span[i], c[i]);
    return z;
  }

  /// The homology class whose dual is z (z homogeneous).
  HomologyClass inverse_dual(const CohomologyClass& z) const {
    const CurveContext& ctx = context();
    const CohomologyClass zr = ring_.reduce(z);
    if (zr.is_zero_representative()) return {};
    int zdeg = -1;
    for (const auto& [mono, c] : zr.terms()) {
      if (zdeg >= 0 && mono.degree() != zdeg) throw InvalidArgument("inverse_poincare_dual: class is not homogeneous");
      zdeg = mono.degree();
    }
    const int m = 2 * ctx.n - zdeg;
    const auto& span = ring_.spanning_monomials(zdeg);
    IntVector c(span.size());
    for (std::size_t i = 0; i < span.size(); ++i) c[i] = zr.coefficient(span[i]);
    const IntVector r = row_times(c, duality_matrix(m));
    const IntVector ycoord = times_col(ring_.pairing_inverse(m), r);
    const auto& hb = ring_.homology_basis(m);
    HomologyClass y;
    for (std::size_t i = 0; i < hb.size(); ++i) y.add(hb[i], ycoord[i]);
    return y;
  }

  /// x . y = <x^perp u y^perp, gamma_n>; requires deg x + deg y = 2n.
  Integer intersection(const HomologyClass& x, const HomologyClass& y) const {
    if (x.is_zero() || y.is_zero()) return 0;
    const auto dx = x.homogeneous_degree();
    const auto dy = y.homogeneous_degree();
    if (!dx || !dy) throw InvalidArgument("intersection: classes must be homogeneous");
    if (*dx + *dy != 2 * context().n)
      throw InvalidArgument("intersection: degrees " + std::to_string(*dx) + " + " + std::to_string(*dy) +
                            " do not sum to 2n = " + std::to_string(2 * context().n));
    return ring_.evaluate_top(ring_.cup(dual(x), dual(y)));
  }

  /// Pairwise intersections of all middle-degree basis monomials.
  IntersectionMatrix intersection_matrix() const {
    const CurveContext& ctx = context();
    IntersectionMatrix im{ctx, ring_.homology_basis(ctx.n), {}};
    std::vector<CohomologyClass> duals;
    duals.reserve(im.basis.size());
    for (const auto& h : im.basis) duals.push_back(dual(HomologyClass(h)));
    const std::size_t k = im.basis.size();
    im.entries.assign(k, IntVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) im.entries[i][j] = ring_.evaluate_top(free_mul(duals[i], duals[j]));
    return im;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<int, IntMatrix> matrix;
    std::map<int, IntMatrix> inverse;
  };

  template <class Make>
  const IntMatrix& cached(std::map<int, IntMatrix>& map, int key, Make make) const {
    {
      std::lock_guard lock(cache_->mutex);
      auto it = map.find(key);
      if (it != map.end()) return it->second;
    }
    IntMatrix value = make();
    std::lock_guard lock(cache_->mutex);
    return map.try_emplace(key, std::move(value)).first->second;
  }

  const CohomologyRing& ring_;
  std::unique_ptr<Cache> cache_;
};

/// Signature of a symmetric nondegenerate integer matrix by exact
/// congruence diagonalization over Q.
inline int signature(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InvalidArgument("signature: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) throw InvalidArgument("signature: matrix is not symmetric");

  int positive = 0;
  int negative = 0;
  for (std::size_t k = 0; k < n; ++k) {
    // Bring a nonzero diagonal entry to position k.
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      // All remaining diagonal entries vanish; use an off-diagonal entry
      // a[k][q] != 0 and replace row/column k by row/column k + q, which
      // puts 2 a[k][q] on the diagonal.
      std::size_t r = n, q = n;
      for (std::size_t i = k; i < n && r == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            r = i;
            q = j;
            break;
          }
      if (r == n) throw InvalidArgument("signature: matrix is degenerate");
      for (std::size_t j = k; j < n; ++j) a[r][j] += a[q][j];
      for (std::size_t i = k; i < n; ++i) a[i][r] += a[i][q];
      p = r;
    }
    if (p != k) {
      std::swap(a[p], a[k]);
      for (auto& row : a) std::swap(row[p], row[k]);
    }
    const Rational pivot = a[k][k];
    if (pivot > 0) ++positive; else ++negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t j = k + 1; j < n; ++j) a[k][j] = 0;
    for (std::size_t i = k + 1; i < n; ++i) a[i][k] = 0;
  }
  return positive - negative;
}

inline int signature(const IntersectionMatrix& im) {
  if (!im.is_symmetric()) throw InvalidArgument("signature: intersection form is not symmetric");
  return signature(im.entries);
}

inline Integer determinant(const IntersectionMatrix& im) { return determinant(im.entries); }

// Free-function spellings over a throwaway engine, for one-off calls.

inline CohomologyClass poincare_dual(const HomologyClass& y, const CurveContext& ctx) {
  CohomologyRing ring(ctx);
  return PoincareDuality(ring).dual(y);
}

inline Integer intersection(const HomologyClass& x, const HomologyClass& y, const CurveContext& ctx) {
  CohomologyRing ring(ctx);
  return PoincareDuality(ring).intersection(x, y);
}

inline IntersectionMatrix intersection_matrix(const CurveContext& ctx) {
  CohomologyRing ring(ctx);
  return PoincareDuality(ring).intersection_matrix();
}

}  // namespace symprod
