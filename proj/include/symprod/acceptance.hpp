#pragma once

// The twelve acceptance criteria, each run as an exhaustive exact check
// that counts individual comparisons and records the first few failures.

#include "symprod/cohomology_ring.hpp"
#include "symprod/duality.hpp"
#include "symprod/homology_ring.hpp"
#include "symprod/invariants.hpp"
#include "symprod/oracle.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace symprod::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::string detail;
  double seconds = 0;
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(CriterionResult& r) : r_(r) {}

  void expect(bool ok, const std::string& what) {
    ++r_.checks;
    if (ok) return;
    r_.passed = false;
    if (r_.failures.size() < 20) r_.failures.push_back(what);
  }

  template <class A, class B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (got == want) return expect(true, what);
    std::ostringstream os;
    os << what << ": got " << got << ", expected " << want;
    expect(false, os.str());
  }

 private:
  CriterionResult& r_;
};

inline std::string at(int g, int n) { return "g=" + std::to_string(g) + " n=" + std::to_string(n); }

// A positive budget (seconds) turns the runtime into one more check.
inline CriterionResult timed(int id, std::string name, const std::function<void(CriterionResult&, Recorder&)>& body,
                             double budget = 0) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  Recorder rec(r);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r, rec);
  } catch (const std::exception& e) {
    rec.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget > 0) rec.expect(r.seconds < budget, "runtime " + std::to_string(r.seconds) + " s over budget " +
                                                      std::to_string(budget) + " s");
  return r;
}

}  // namespace detail

struct MacdonaldSummary {
  std::size_t relations_checked = 0;
  std::size_t failures = 0;
  std::vector<std::string> failed;
};

/// Every relation instance with a + b + 2c + q = n + 1 for one (g, n): each
/// index in [1, g] is unused, odd, even or a pair, and q is determined.
inline MacdonaldSummary verify_macdonald(int g, int n) {
  const CurveContext ctx(g, n);
  const CohomologyRing ring(ctx);
  MacdonaldSummary s;
  std::size_t states = 1;
  for (int i = 0; i < g; ++i) states *= 4;
  for (std::size_t code = 0; code < states; ++code) {
    std::vector<int> odd, even, pairs;
    std::size_t c = code;
    for (int i = 1; i <= g; ++i, c /= 4) {
      if (c % 4 == 1) odd.push_back(i);
      if (c % 4 == 2) even.push_back(i);
      if (c % 4 == 3) pairs.push_back(i);
    }
    const int q = n + 1 - static_cast<int>(odd.size() + even.size() + 2 * pairs.size());
    if (q < 0) continue;
    ++s.relations_checked;
    const CohomologyClass rel = macdonald_relation(ctx, odd, even, pairs, q);
    if (!ring.is_zero(rel)) {
      ++s.failures;
      if (s.failed.size() < 10) s.failed.push_back(rel.to_string());
    }
  }
  return s;
}

/// (b*)^{n-2g+1} prod_{i=1}^g (e*_{2i-1} e*_{2i} - b*).
inline CohomologyClass single_relation(const CurveContext& ctx) {
  if (ctx.n < 2 * ctx.g - 1) throw InvalidArgument("single relation needs n > 2g - 2");
  CohomologyClass r = free_pow(CohomologyClass::bstar(ctx), ctx.n - 2 * ctx.g + 1);
  for (int i = 1; i <= ctx.g; ++i) r = free_mul(r, pair_minus_bstar(ctx, i));
  return r;
}

inline CriterionResult signature_criterion() {
  return detail::timed(1, "signature of C^(2) equals 1 - g, g = 1..6", [](CriterionResult& r, detail::Recorder& rec) {
    for (int g = 1; g <= 6; ++g)
      rec.expect_eq(signature(intersection_matrix(CurveContext(g, 2))), 1 - g, "signature " + detail::at(g, 2));
    r.detail = "6 intersection forms diagonalized";
  }, 30);
}

inline CriterionResult hirzebruch_criterion() {
  return detail::timed(2, "Hirzebruch signature from Chern classes, g = 1..6", [](CriterionResult& r, detail::Recorder& rec) {
    for (int g = 1; g <= 6; ++g) rec.expect_eq(hirzebruch_signature(g), Integer(1 - g), "(c1^2 - 2c2)/3 at g=" + std::to_string(g));
    r.detail = "exact division by 3 in every case";
  });
}

inline CriterionResult oracle_betti_criterion() {
  return detail::timed(3, "Betti numbers equal oracle invariant ranks, g <= 3, n <= 4",
                       [](CriterionResult& r, detail::Recorder& rec) {
                         for (int g = 0; g <= 3; ++g) {
                           const auto spec = oracle::surface_ring(g);
                           spec.validate();
                           for (int n = 1; n <= 4; ++n)
                             for (int m = 0; m <= 2 * n; ++m)
                               rec.expect_eq(static_cast<std::uint64_t>(oracle::invariant_rank(spec, n, m)),
                                             betti(CurveContext(g, n), m),
                                             "rank " + detail::at(g, n) + " m=" + std::to_string(m));
                         }
                         r.detail = "symmetrized tensor power row-reduced over Q";
                       }, 120);
}

inline CriterionResult euler_criterion() {
  return detail::timed(4, "Euler characteristic of C^(2) is (g-1)(2g-3), g = 1..8",
                       [](CriterionResult& r, detail::Recorder& rec) {
                         for (int g = 1; g <= 8; ++g)
                           rec.expect_eq(euler_characteristic(CurveContext(g, 2)), Integer((g - 1) * (2 * g - 3)),
                                         "chi at g=" + std::to_string(g));
                         r.detail = "alternating Betti sums";
                       });
}

inline CriterionResult macdonald_criterion() {
  return detail::timed(5, "MacDonald relations vanish", [](CriterionResult& r, detail::Recorder& rec) {
    std::size_t total = 0;
    for (int g = 0; g <= 2; ++g)
      for (int n = 1; n <= 3; ++n) {
        const auto s = verify_macdonald(g, n);
        total += s.relations_checked;
        rec.expect(s.failures == 0, "relation failures at " + detail::at(g, n) +
                                        (s.failed.empty() ? std::string() : ": " + s.failed.front()));
      }

    // g = 3, n = 4 has only 63 instances, so all are checked, and the
    // random draws multiply an instance by a random monomial, which must
    // also vanish.
    const CurveContext ctx(3, 4);
    const CohomologyRing ring(ctx);
    const auto all = verify_macdonald(3, 4);
    total += all.relations_checked;
    rec.expect(all.failures == 0, "relation failures at g=3 n=4");

    std::mt19937 rng(20261015);
    std::size_t random_checked = 0;
    while (random_checked < 128) {
      std::vector<int> odd, even, pairs;
      for (int i = 1; i <= 3; ++i) {
        const unsigned s = rng() % 4;
        if (s == 1) odd.push_back(i);
        if (s == 2) even.push_back(i);
        if (s == 3) pairs.push_back(i);
      }
      const int q = 5 - static_cast<int>(odd.size() + even.size() + 2 * pairs.size());
      if (q < 0) continue;
      std::vector<int> extra;
      for (int i = 1; i <= 6; ++i)
        if (rng() % 3 == 0) extra.push_back(i);
      const int extra_b = static_cast<int>(rng() % 3);
      const CohomologyClass rel = free_mul(macdonald_relation(ctx, odd, even, pairs, q),
                                           CohomologyClass(ctx, CohomologyMonomial::make(extra, extra_b)));
      rec.expect(ring.is_zero(rel), "random multiple of a relation at g=3 n=4: " + rel.to_string());
      ++random_checked;
    }

    std::size_t single = 0;
    for (int g = 0; g <= 3; ++g)
      for (int n = std::max(1, 2 * g - 1); n <= 2 * g + 1; ++n) {
        const CurveContext c(g, n);
        rec.expect(CohomologyRing(c).is_zero(single_relation(c)), "single relation at " + detail::at(g, n));
        ++single;
      }
    r.detail = std::to_string(total) + " exhaustive instances, " + std::to_string(random_checked) +
               " random multiples at g=3 n=4, " + std::to_string(single) + " single-relation cases";
  });
}

inline CriterionResult unimodularity_criterion() {
  return detail::timed(6, "pairing matrices are unimodular, g <= 3, n <= 4", [](CriterionResult& r, detail::Recorder& rec) {
    for (int g = 0; g <= 3; ++g)
      for (int n = 1; n <= 4; ++n) {
        const CohomologyRing ring(CurveContext(g, n));
        for (int m = 0; m <= 2 * n; ++m) {
          const Integer d = determinant(ring.pairing_matrix(m));
          rec.expect(d == 1 || d == -1, "det in degree " + std::to_string(m) + " at " + detail::at(g, n) + " is " + d.str());
        }
      }
    r.detail = "Bareiss determinants";
  });
}

inline CriterionResult spherical_criterion() {
  return detail::timed(7, "spherical class u = b - l, its dual and self-intersection",
                       [](CriterionResult& r, detail::Recorder& rec) {
                         for (int g = 1; g <= 3; ++g) {
                           for (int n = 2; n <= 3; ++n) {
                             const CurveContext ctx(g, n);
                             const auto prim = primitive_basis(ctx, 2);
                             rec.expect_eq(prim.size(), std::size_t{1}, "primitive rank " + detail::at(g, n));
                             if (prim.size() == 1)
                               rec.expect(prim.front() == spherical_class(ctx),
                                          "primitive generator at " + detail::at(g, n) + " is " + prim.front().to_string());
                           }
                           const CurveContext ctx(g, 2);
                           const CohomologyRing ring(ctx);
                           const PoincareDuality pd(ring);
                           const HomologyClass u = spherical_class(ctx);
                           const CohomologyClass expected = Integer(1 - g) * CohomologyClass::bstar(ctx) + theta(ctx);
                           rec.expect(ring.equivalent(pd.dual(u), expected), "u dual at g=" + std::to_string(g));
                           rec.expect_eq(pd.intersection(u, u), Integer(1 - g), "u.u at g=" + std::to_string(g));
                         }
                         r.detail = "primitives from the integer kernel of the reduced coproduct";
                       });
}

inline CriterionResult canonical_criterion() {
  return detail::timed(8, "canonical class of C^(2) is (2g-4) gamma1 + u, g = 1..5",
                       [](CriterionResult& r, detail::Recorder& rec) {
                         for (int g = 1; g <= 5; ++g) {
                           const CurveContext ctx(g, 2);
                           const CohomologyRing ring(ctx);
                           const PoincareDuality pd(ring);
                           const auto k = canonical_class(pd);
                           const HomologyClass expected = Integer(2 * g - 4) * HomologyClass::gamma(1) + spherical_class(ctx);
                           rec.expect(k.homology == expected, "K at g=" + std::to_string(g) + " is " + k.homology.to_string());
                           rec.expect(ring.equivalent(pd.dual(k.homology), k.cohomology),
                                      "K round trip at g=" + std::to_string(g));
                         }
                         r.detail = "inverse Poincare dual of (g-n-1) b* + theta";
                       });
}

inline CriterionResult clifford_criterion() {
  return detail::timed(9, "Clifford bound with vanishing certificates, g <= 4, n <= 2g+1",
                       [](CriterionResult& r, detail::Recorder& rec) {
                         for (int g = 1; g <= 4; ++g)
                           for (int n = 1; n <= 2 * g + 1; ++n) {
                             const CohomologyRing ring(CurveContext(g, n));
                             const auto c = clifford_bound(ring);
                             rec.expect_eq(c.m_max, n < 2 * g ? n / 2 : n - g, "m_max at " + detail::at(g, n));
                             rec.expect(c.certificate_vanishes, "certificate nonzero at " + detail::at(g, n));
                             rec.expect(c.sharp_product_nonzero, "bound not sharp at " + detail::at(g, n));
                           }
                         r.detail = "products reduced to canonical coordinates";
                       });
}

inline CriterionResult obstruction_criterion() {
  return detail::timed(10, "characteristic classes, Kervaire-Milnor congruence, rational curves",
                       [](CriterionResult& r, detail::Recorder& rec) {
                         for (int g = 0; g <= 4; ++g) {
                           const CohomologyRing ring(CurveContext(g, 2));
                           const PoincareDuality pd(ring);
                           for (int k = -9; k <= 9; ++k)
                             rec.expect_eq(characteristic_test(pd, k), k % 2 != 0,
                                           "characteristic g=" + std::to_string(g) + " k=" + std::to_string(k));
                         }
                         for (int g : {2, 4}) {
                           const CohomologyRing ring(CurveContext(g, 2));
                           const PoincareDuality pd(ring);
                           for (int k = -33; k <= 33; k += 2) {
                             const int r8 = ((k % 8) + 8) % 8;
                             rec.expect_eq(km_admissible(pd, k).km_congruent, r8 == 1 || r8 == 7,
                                           "km g=" + std::to_string(g) + " k=" + std::to_string(k));
                           }
                         }
                         for (int g = 2; g <= 6; ++g)
                           rec.expect(rational_curve_degrees(g) == std::vector<int>{1},
                                      "rational curve degrees at g=" + std::to_string(g));
                         r.detail = "intersections through Poincare duality";
                       });
}

inline CriterionResult wedge_criterion() {
  return detail::timed(11, "symmetric powers of a wedge of k circles have total rank 2^k",
                       [](CriterionResult& r, detail::Recorder& rec) {
                         for (int k = 0; k <= 4; ++k) {
                           const auto spec = oracle::wedge_of_circles(k);
                           spec.validate();
                           for (int n = std::max(k, 1); n <= 5; ++n) {
                             std::size_t total = 0;
                             for (int m = 0; m <= n; ++m) total += oracle::invariant_rank(spec, n, m);
                             rec.expect_eq(total, std::size_t{1} << k,
                                           "total rank k=" + std::to_string(k) + " n=" + std::to_string(n));
                           }
                         }
                         r.detail = "oracle ranks over Q";
                       });
}

inline CriterionResult stability_criterion() {
  return detail::timed(12, "Betti numbers stabilize: b_m(C^(n)) = b_m(C^(n+1)) for m <= n",
                       [](CriterionResult& r, detail::Recorder& rec) {
                         for (int g = 0; g <= 3; ++g)
                           for (int n = 1; n <= 4; ++n)
                             for (int m = 0; m <= n; ++m)
                               rec.expect_eq(betti(CurveContext(g, n), m), betti(CurveContext(g, n + 1), m),
                                             "b_" + std::to_string(m) + " at " + detail::at(g, n));
                         r.detail = "monomial basis counts";
                       });
}

inline std::vector<std::function<CriterionResult()>> all_criteria() {
  return {signature_criterion, hirzebruch_criterion,     oracle_betti_criterion, euler_criterion,
          macdonald_criterion, unimodularity_criterion,  spherical_criterion,    canonical_criterion,
          clifford_criterion,  obstruction_criterion,    wedge_criterion,        stability_criterion};
}

/// Runs one criterion by id (1..12), or all of them for id 0.
inline std::vector<CriterionResult> run(int id = 0) {
  const auto all = all_criteria();
  if (id < 0 || id > static_cast<int>(all.size())) throw InvalidArgument("no acceptance criterion " + std::to_string(id));
  std::vector<CriterionResult> out;
  for (int i = 1; i <= static_cast<int>(all.size()); ++i)
    if (id == 0 || id == i) out.push_back(all[static_cast<std::size_t>(i - 1)]());
  return out;
}

}  // namespace symprod::acceptance
