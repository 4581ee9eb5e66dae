#pragma once

// Characteristic classes, Euler characteristic, the Clifford bound, the
// adjunction scan for rational curves, and the Kervaire-Milnor test for
// spheres representing multiples of u in C^(2).

#include "symprod/cohomology_ring.hpp"
#include "symprod/duality.hpp"
#include "symprod/homology_ring.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace symprod {

struct ChernClasses {
  CohomologyClass c1;
  CohomologyClass c2;
};

/// c1 = (n-g+1) b* - theta,
/// c2 = (n-g+1)(n-g)/2 (b*)^2 - (n-g) b* theta + theta^2/2.
/// Halving is done on integral coefficients after expansion.
inline ChernClasses chern_classes(const CohomologyRing& ring) {
  const CurveContext& ctx = ring.context();
  const Integer s = ctx.n - ctx.g;
  const CohomologyClass b = CohomologyClass::bstar(ctx);
  const CohomologyClass th = theta(ctx);

  CohomologyClass c1 = (s + 1) * b - th;

  CohomologyClass theta_sq = free_mul(th, th);
  CohomologyClass half_theta_sq(ctx);
  for (const auto& [m, c] : theta_sq.terms()) half_theta_sq.add(m, exact_div(c, 2, "theta^2 / 2"));

  CohomologyClass c2 = exact_div((s + 1) * s, 2, "(n-g+1)(n-g)/2") * free_mul(b, b);
  c2 -= s * free_mul(b, th);
  c2 += half_theta_sq;
  return {ring.reduce(c1), ring.reduce(c2)};
}

/// (1/3) <c1^2 - 2 c2, [C^(2)]>.
inline Integer hirzebruch_signature(int g) {
  const CurveContext ctx(g, 2);
  CohomologyRing ring(ctx);
  const auto [c1, c2] = chern_classes(ring);
  const Integer c1sq = ring.evaluate_top(ring.cup(c1, c1));
  const Integer c2n = ring.evaluate_top(c2);
  return exact_div(c1sq - 2 * c2n, 3, "Hirzebruch signature");
}

struct CanonicalClass {
  CohomologyClass cohomology;  // (g - n - 1) b* + theta
  HomologyClass homology;      // its inverse Poincare dual
};

inline CanonicalClass canonical_class(const PoincareDuality& pd) {
  const CurveContext& ctx = pd.context();
  CohomologyClass k = Integer(ctx.g - ctx.n - 1) * CohomologyClass::bstar(ctx) + theta(ctx);
  HomologyClass kh = pd.inverse_dual(k);
  return {std::move(k), std::move(kh)};
}

/// Alternating sum of the Betti numbers of C^(n).
inline Integer euler_characteristic(const CurveContext& ctx) {
  Integer chi = 0;
  for (int m = 0; m <= 2 * ctx.n; ++m) {
    const Integer b = betti(ctx, m);
    chi += (m % 2 == 0) ? b : Integer(-b);
  }
  return chi;
}

struct CliffordBound {
  int g = 0;
  int n = 0;
  int m_max = 0;
  bool below_2g = true;       // which bound applies: floor(n/2) or n - g
  std::string certificate;    // human-readable form of the vanishing product
  bool certificate_vanishes = false;
  bool sharp_product_nonzero = false;  // length-m_max analogue keeps (b*)^m_max
};

/// Largest m for which an essential P^m -> C^(n) can be nonzero on H_2,
/// together with the ring-level certificate for the bound.
inline CliffordBound clifford_bound(const CohomologyRing& ring) {
  const CurveContext& ctx = ring.context();
  if (ctx.g < 1) throw InvalidArgument("clifford_bound requires g >= 1");
  CliffordBound out;
  out.g = ctx.g;
  out.n = ctx.n;
  out.below_2g = ctx.n < 2 * ctx.g;
  out.m_max = out.below_2g ? ctx.n / 2 : ctx.n - ctx.g;

  const CohomologyClass b = CohomologyClass::bstar(ctx);
  // Certificate with `factors` factors of the form b* - e*e* (padded by
  // powers of b* once the g symplectic pairs run out).
  auto certificate = [&](int factors) {
    CohomologyClass r = CohomologyClass::unit(ctx);
    const int pairs = std::min(factors, ctx.g);
    for (int k = 1; k <= pairs; ++k) r = free_mul(r, -pair_minus_bstar(ctx, k));
    return free_mul(r, free_pow(b, factors - pairs));
  };

  if (out.below_2g) {
    out.certificate = "prod_{k=1}^{" + std::to_string(out.m_max + 1) + "} (b* - e*_{2k-1} e*_{2k})";
  } else {
    out.certificate = "(b*)^{" + std::to_string(ctx.n - 2 * ctx.g + 1) + "} prod_{k=1}^{" +
                      std::to_string(ctx.g) + "} (b* - e*_{2k-1} e*_{2k})";
  }
  out.certificate_vanishes = ring.is_zero(certificate(out.m_max + 1));
  const CohomologyClass sharp = ring.reduce(certificate(out.m_max));
  out.sharp_product_nonzero = sharp.coefficient(CohomologyMonomial::make({}, out.m_max)) != 0;
  return out;
}

/// Positive k with k(g-1)(1-k) = 2(k-1), by exact scan over
/// |k| <= 2 + 2|g-1|.
inline std::vector<int> rational_curve_degrees(int g) {
  if (g < 2) throw InvalidArgument("rational_curve_degrees requires g >= 2");
  const int bound = 2 + 2 * std::abs(g - 1);
  std::vector<int> out;
  for (int k = 1; k <= bound; ++k) {
    const Integer lhs = Integer(k) * (g - 1) * (1 - k);
    const Integer rhs = Integer(2) * (k - 1);
    if (lhs == rhs) out.push_back(k);
  }
  return out;
}

/// Whether k u is characteristic in C^(2): (k u) . t == t . t mod 2 for
/// every basis monomial t of H_2.
inline bool characteristic_test(const PoincareDuality& pd, const Integer& k) {
  const CurveContext& ctx = pd.context();
  if (ctx.n != 2) throw InvalidArgument("characteristic_test is defined on C^(2)");
  const HomologyClass beta = k * spherical_class(ctx);
  for (const auto& t : pd.ring().homology_basis(2)) {
    const HomologyClass tau(t);
    const Integer lhs = pd.intersection(beta, tau);
    const Integer rhs = pd.intersection(tau, tau);
    if (((lhs - rhs) % 2) != 0) return false;
  }
  return true;
}

struct ObstructionReport {
  int g = 0;
  int n = 2;
  Integer k = 0;
  bool is_characteristic = false;
  Integer self_intersection = 0;
  Integer signature = 0;
  bool km_congruent = false;
  std::vector<std::string> notes;
};

/// Kervaire-Milnor test for a sphere representing k u in C^(2).
/// km_congruent is the raw congruence self_intersection == signature mod 16;
/// it is only an embedding obstruction when k u is characteristic.
inline ObstructionReport km_admissible(const PoincareDuality& pd, const Integer& k) {
  const CurveContext& ctx = pd.context();
  if (ctx.n != 2) throw InvalidArgument("km_admissible is defined on C^(2)");
  ObstructionReport r;
  r.g = ctx.g;
  r.n = 2;
  r.k = k;
  r.is_characteristic = characteristic_test(pd, k);
  const HomologyClass beta = k * spherical_class(ctx);
  r.self_intersection = pd.intersection(beta, beta);
  r.signature = signature(pd.intersection_matrix());
  Integer diff = (r.self_intersection - r.signature) % 16;
  r.km_congruent = diff == 0;

  if (r.self_intersection != k * k * (1 - ctx.g))
    throw IntegralityError("self-intersection of k u differs from k^2 (1 - g)");
  if (!r.is_characteristic) {
    r.notes.push_back("k u is not characteristic; the Kervaire-Milnor congruence is not an obstruction here");
  } else if (r.km_congruent) {
    r.notes.push_back("congruence k^2 (1-g) = 1-g mod 16 holds; no obstruction to a smoothly embedded sphere");
  } else {
    r.notes.push_back("congruence fails: k u is not represented by a smoothly embedded sphere");
  }
  if (ctx.g == 0) {
    r.notes.push_back(
        "g = 0: C^(2) is CP^2, where k u is represented by an embedded sphere iff |k| < 3 "
        "(consequence of the Thom conjecture); the congruence alone does not exclude odd |k| >= 7");
  } else if (ctx.g % 2 == 0 && r.is_characteristic && k > 1) {
    r.notes.push_back("even g > 0 and odd k > 1: the congruence holds iff k = +-1 mod 8");
  }
  if (r.is_characteristic && (k == 1 || k == -1)) {
    r.notes.push_back("k = +-1: u itself is realized by the spherical class of C^(2)");
  }
  return r;
}

}  // namespace symprod
