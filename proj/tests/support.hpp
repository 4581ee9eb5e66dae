#pragma once

#include "symprod/symprod.hpp"

#include <random>
#include <vector>

namespace test_support {

using namespace symprod;

inline std::mt19937& rng() {
  static std::mt19937 r(977);
  return r;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline SurfaceBasisElement random_element(int g) {
  const int pick = uniform(0, 2 * g + 1);
  if (pick == 0) return SurfaceBasisElement::unit();
  if (pick == 2 * g + 1) return SurfaceBasisElement::b();
  return SurfaceBasisElement::e(pick);
}

inline TensorClass random_tensor(int g, int arity, int terms = 3) {
  TensorClass t(arity);
  for (int i = 0; i < terms; ++i) {
    std::vector<SurfaceBasisElement> slots;
    for (int p = 0; p < arity; ++p) slots.push_back(random_element(g));
    t += TensorClass::monomial(slots, uniform(-3, 3));
  }
  return t;
}

// Homogeneous random tensor of degree d (may come out zero if d is unreachable).
inline TensorClass random_homogeneous_tensor(int g, int arity, int d, int terms = 3) {
  TensorClass t(arity);
  for (int tries = 0; tries < 200 && static_cast<int>(t.size()) < terms; ++tries) {
    std::vector<SurfaceBasisElement> slots;
    for (int p = 0; p < arity; ++p) slots.push_back(random_element(g));
    auto m = TensorClass::monomial(slots, uniform(1, 3));
    if (m.homogeneous_degree() == d) t += m;
  }
  return t;
}

inline std::vector<int> random_subset(int top, int odds = 3) {
  std::vector<int> s;
  for (int i = 1; i <= top; ++i)
    if (uniform(0, odds - 1) == 0) s.push_back(i);
  return s;
}

inline HomologyMonomial random_homology_monomial(int g, int max_length) {
  while (true) {
    auto s = random_subset(2 * g);
    const int j = uniform(0, max_length);
    auto m = HomologyMonomial::make(s, j);
    if (m.length() <= max_length) return m;
  }
}

inline HomologyClass random_homology(int g, int max_length, int terms = 3) {
  HomologyClass x;
  for (int i = 0; i < terms; ++i) x.add(random_homology_monomial(g, max_length), uniform(-3, 3));
  return x;
}

inline HomologyClass random_homogeneous_homology(const CurveContext& ctx, int m, int terms = 3) {
  HomologyClass x;
  const auto basis = homology_basis(ctx, m);
  if (basis.empty()) return x;
  for (int i = 0; i < terms; ++i)
    x.add(basis[static_cast<std::size_t>(uniform(0, static_cast<int>(basis.size()) - 1))], uniform(-3, 3));
  return x;
}

inline CohomologyMonomial random_cohomology_monomial(int g, int max_q) {
  return CohomologyMonomial::make(random_subset(2 * g), uniform(0, max_q));
}

inline CohomologyClass random_cohomology(const CurveContext& ctx, int terms = 3) {
  CohomologyClass x(ctx);
  for (int i = 0; i < terms; ++i) x.add(random_cohomology_monomial(ctx.g, ctx.n), uniform(-3, 3));
  return x;
}

// Homogeneous of degree m, built from spanning and non-spanning monomials alike.
inline CohomologyClass random_homogeneous_cohomology(const CurveContext& ctx, int m, int terms = 3) {
  CohomologyClass x(ctx);
  for (int tries = 0; tries < 500 && static_cast<int>(x.terms().size()) < terms; ++tries) {
    auto mono = random_cohomology_monomial(ctx.g, m / 2);
    if (mono.degree() == m) x.add(mono, uniform(1, 3) * (uniform(0, 1) ? 1 : -1));
  }
  return x;
}

inline TensorClass tensor(std::initializer_list<SurfaceBasisElement> slots, Integer c = 1) {
  return TensorClass::monomial(std::vector<SurfaceBasisElement>(slots), c);
}

inline HomologyClass hmono(std::vector<int> s, int j = 0) { return HomologyClass(HomologyMonomial::make(s, j)); }

inline CohomologyClass cmono(const CurveContext& ctx, std::vector<int> s, int q = 0) {
  return CohomologyClass(ctx, CohomologyMonomial::make(s, q));
}

}  // namespace test_support
