#include "catch_amalgamated.hpp"
#include "support.hpp"

#include "symprod/serialize.hpp"

using namespace symprod;
using namespace test_support;

namespace {
const auto U = SurfaceBasisElement::unit();
const auto B = SurfaceBasisElement::b();
SurfaceBasisElement E(int i) { return SurfaceBasisElement::e(i); }
}  // namespace

TEST_CASE("built-in ring specs are valid", "[oracle]") {
  for (int g = 0; g <= 3; ++g) CHECK_NOTHROW(oracle::surface_ring(g).validate());
  for (int k = 0; k <= 4; ++k) CHECK_NOTHROW(oracle::wedge_of_circles(k).validate());
  CHECK_NOTHROW(oracle::sphere2().validate());
  CHECK(oracle::surface_ring(2).size() == 6);
}

TEST_CASE("invalid ring specs are rejected", "[oracle]") {
  oracle::GradedRingSpec bad;
  const int one = bad.add_basis("1", 0);
  const int x = bad.add_basis("x", 1);
  const int y = bad.add_basis("y", 1);
  const int z = bad.add_basis("z", 2);
  bad.set_product(one, x, {{1, x}});
  bad.set_product(x, one, {{1, x}});
  bad.set_product(one, y, {{1, y}});
  bad.set_product(y, one, {{1, y}});
  bad.set_product(x, y, {{1, z}});
  bad.set_product(y, x, {{1, z}});  // odd classes must anticommute
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  CHECK_THROWS_AS(bad.set_product(x, x, {{1, x}}), InvalidArgument);
  CHECK_THROWS_AS(bad.add_basis("x", 1), InvalidArgument);
  CHECK_THROWS_AS(bad.index_of("w"), InvalidArgument);
}

TEST_CASE("invariant ranks", "[oracle]") {
  CHECK(oracle::invariant_rank(oracle::surface_ring(2), 2, 2) == 7);
  CHECK(oracle::invariant_rank(oracle::wedge_of_circles(3), 3, 2) == 3);
  CHECK(oracle::invariant_rank(oracle::sphere2(), 3, 4) == 1);
  CHECK_THROWS_AS(oracle::invariant_rank(oracle::sphere2(), 0, 0), InvalidArgument);
}

TEST_CASE("invariant ranks equal Betti numbers", "[oracle]") {
  for (int g = 0; g <= 3; ++g) {
    const auto spec = oracle::surface_ring(g);
    for (int n = 1; n <= 4; ++n)
      for (int m = 0; m <= 2 * n; ++m)
        CHECK(oracle::invariant_rank(spec, n, m) == betti(CurveContext(g, n), m));
  }
}

TEST_CASE("symmetric powers of the 2-sphere", "[oracle]") {
  const auto s = oracle::sphere2();
  for (int n = 1; n <= 5; ++n)
    for (int m = 0; m <= 2 * n + 1; ++m) CHECK(oracle::invariant_rank(s, n, m) == (m % 2 == 0 ? 1u : 0u));
}

TEST_CASE("wedge of circles ranks", "[oracle]") {
  for (int k = 0; k <= 4; ++k) {
    const auto spec = oracle::wedge_of_circles(k);
    for (int n = std::max(k, 1); n <= 5; ++n) {
      std::size_t total = 0;
      for (int m = 0; m <= n; ++m) {
        const auto r = oracle::invariant_rank(spec, n, m);
        CHECK(r == static_cast<std::size_t>(binomial_u64(k, m)));
        total += r;
      }
      CHECK(total == (std::size_t{1} << k));
    }
  }
}

TEST_CASE("pullbacks are invariant", "[oracle]") {
  for (int trial = 0; trial < 40; ++trial) {
    const int g = uniform(0, 2);
    const int n = uniform(1, 3);
    const CurveContext ctx(g, n);
    const CohomologyRing ring(ctx);
    const auto spec = oracle::surface_ring(g);
    CHECK(oracle::is_invariant(spec, oracle::from_engine(spec, ring.pullback(random_cohomology(ctx))), n));
  }
  const auto spec = oracle::surface_ring(1);
  CHECK_FALSE(oracle::is_invariant(spec, oracle::from_engine(spec, TensorClass::monomial({E(1), U})), 2));
}

TEST_CASE("invariant cup check", "[oracle]") {
  {
    const CurveContext ctx(2, 2);
    const CohomologyRing ring(ctx);
    const auto spec = oracle::surface_ring(2);
    CHECK(oracle::invariant_cup_check(spec, 2, ring.pullback(CohomologyClass::bstar(ctx)), ring.pullback(theta(ctx))));
  }
  {
    // A relation instance: the oracle product vanishes too.
    const CurveContext ctx(1, 2);
    const CohomologyRing ring(ctx);
    const auto spec = oracle::surface_ring(1);
    const auto x = ring.pullback(CohomologyClass::bstar(ctx));
    const auto y = ring.pullback(pair_minus_bstar(ctx, 1));
    CHECK(oracle::invariant_cup_check(spec, 2, x, y));
    CHECK(oracle::tensor_product(spec, oracle::from_engine(spec, x), oracle::from_engine(spec, y)).empty());
  }
  for (int trial = 0; trial < 60; ++trial) {
    const int g = uniform(0, 2);
    const int n = uniform(1, 3);
    const CurveContext ctx(g, n);
    const CohomologyRing ring(ctx);
    const auto spec = oracle::surface_ring(g);
    const auto x = ring.pullback(CohomologyClass(ctx, random_cohomology_monomial(g, n)));
    const auto y = ring.pullback(CohomologyClass(ctx, random_cohomology_monomial(g, n)));
    CHECK(oracle::invariant_cup_check(spec, n, x, y));
  }
}

TEST_CASE("oracle tensor product matches the engine on arbitrary tensors", "[oracle][property]") {
  for (int trial = 0; trial < 100; ++trial) {
    const int g = uniform(0, 3);
    const int n = uniform(1, 4);
    const auto spec = oracle::surface_ring(g);
    const auto x = random_tensor(g, n);
    const auto y = random_tensor(g, n);
    CHECK(oracle::tensor_product(spec, oracle::from_engine(spec, x), oracle::from_engine(spec, y)) ==
          oracle::from_engine(spec, tensor_mul(x, y)));
  }
}

TEST_CASE("pushforward", "[oracle]") {
  CHECK(oracle::pushforward(TensorClass::spread(3, B)).is_zero() == false);
  CHECK(oracle::pushforward(TensorClass::monomial({B, B, B})) == Integer(6) * HomologyClass::gamma(3));
  CHECK(oracle::pushforward(TensorClass::monomial({E(1), E(2)})) == hmono({1, 2}));
  CHECK(oracle::pushforward(TensorClass::monomial({B, B})) == Integer(2) * HomologyClass::gamma(2));
  CHECK(oracle::pushforward(TensorClass::monomial({E(2), U, E(1)})) == -hmono({1, 2}));
}

TEST_CASE("projection formula", "[oracle][property]") {
  // <x, pi_*(t)> = <pi^* x, t> for every tensor monomial t.
  for (int trial = 0; trial < 150; ++trial) {
    const int g = uniform(0, 3);
    const int n = uniform(1, 4);
    const CurveContext ctx(g, n);
    const CohomologyRing ring(ctx);
    const auto x = random_cohomology(ctx);
    std::vector<SurfaceBasisElement> slots;
    for (int p = 0; p < n; ++p) slots.push_back(random_element(g));
    const auto t = TensorClass::monomial(slots);
    CHECK(ring.kronecker(x, oracle::pushforward(t)) == tensor_pair(ring.pullback(x), t));
  }
}

TEST_CASE("ring specs from JSON", "[oracle]") {
  const auto j = json::parse(R"({
    "basis": [{"label": "1", "degree": 0}, {"label": "x", "degree": 2}, {"label": "y", "degree": 4}],
    "products": [
      {"left": "1", "right": "1", "result": [{"coeff": 1, "label": "1"}]},
      {"left": "1", "right": "x", "result": [{"coeff": 1, "label": "x"}]},
      {"left": "x", "right": "1", "result": [{"coeff": 1, "label": "x"}]},
      {"left": "1", "right": "y", "result": [{"coeff": 1, "label": "y"}]},
      {"left": "y", "right": "1", "result": [{"coeff": 1, "label": "y"}]},
      {"left": "x", "right": "x", "result": [{"coeff": "1/2", "label": "y"}]}
    ]})");
  const auto spec = oracle::ring_spec_from_json(j);
  CHECK(spec.size() == 3);
  CHECK(spec.product(1, 1).front().coeff == Rational(1, 2));
  // Degree 4 of the square is spanned by x (x) x and 1 (x) y + y (x) 1.
  CHECK(oracle::invariant_rank(spec, 2, 4) == 2);

  auto broken = j;
  broken["products"].push_back(json::parse(R"({"left": "x", "right": "y", "result": [{"coeff": 1, "label": "y"}]})"));
  CHECK_THROWS_AS(oracle::ring_spec_from_json(broken), InvalidArgument);
}
