#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace symprod;
using namespace test_support;

namespace {
const auto U = SurfaceBasisElement::unit();
const auto B = SurfaceBasisElement::b();
SurfaceBasisElement E(int i) { return SurfaceBasisElement::e(i); }
}  // namespace

TEST_CASE("curve context validation", "[algebra_core]") {
  CHECK_NOTHROW(CurveContext(0, 1));
  CHECK(CurveContext(3, 2).generator_count() == 6);
  CHECK_THROWS_AS(CurveContext(-1, 2), InvalidArgument);
  CHECK_THROWS_AS(CurveContext(1, 0), InvalidArgument);
}

TEST_CASE("surface products", "[algebra_core]") {
  const CurveContext ctx(2, 1);
  auto p = surface_mul(E(1), E(2), ctx);
  REQUIRE(p);
  CHECK(p->sign == 1);
  CHECK(p->element == B);

  p = surface_mul(E(2), E(1), ctx);
  REQUIRE(p);
  CHECK(p->sign == -1);
  CHECK(p->element == B);

  CHECK_FALSE(surface_mul(E(1), E(1), ctx));
  CHECK_FALSE(surface_mul(E(1), E(3), ctx));
  CHECK_FALSE(surface_mul(E(2), E(3), ctx));
  CHECK_FALSE(surface_mul(B, E(3), ctx));
  CHECK_FALSE(surface_mul(B, B, ctx));

  p = surface_mul(U, E(4), ctx);
  REQUIRE(p);
  CHECK(p->element == E(4));
  CHECK(p->sign == 1);
  p = surface_mul(B, U, ctx);
  REQUIRE(p);
  CHECK(p->element == B);

  CHECK_THROWS_AS(surface_mul(E(5), U, ctx), InvalidArgument);
  CHECK_THROWS_AS(SurfaceBasisElement::e(0), InvalidArgument);
}

TEST_CASE("transverse index translation", "[algebra_core]") {
  CHECK(symplectic_index_from_transverse(1, 3) == 1);
  CHECK(symplectic_index_from_transverse(4, 3) == 2);
  CHECK(symplectic_index_from_transverse(2, 3) == 3);
  CHECK(symplectic_index_from_transverse(6, 3) == 6);
  CHECK_THROWS_AS(symplectic_index_from_transverse(7, 3), InvalidArgument);
}

TEST_CASE("tensor product Koszul signs", "[algebra_core]") {
  const auto x = tensor({E(1), U});
  const auto y = tensor({U, E(1)});
  CHECK(tensor_mul(x, y) == tensor({E(1), E(1)}));
  CHECK(tensor_mul(y, x) == tensor({E(1), E(1)}, -1));

  const auto bb = tensor({B, U}) + tensor({U, B});
  CHECK(tensor_mul(bb, bb) == tensor({B, B}, 2));

  const auto e1 = TensorClass::spread(2, E(1));
  const auto e2 = TensorClass::spread(2, E(2));
  CHECK(tensor_mul(e1, e2) == tensor({B, U}) + tensor({E(1), E(2)}) - tensor({E(2), E(1)}) + tensor({U, B}));
}

TEST_CASE("tensor arity errors", "[algebra_core]") {
  CHECK_THROWS_AS(tensor_mul(TensorClass::one(2), TensorClass::one(3)), InvalidArgument);
  CHECK_THROWS_AS(tensor_pair(TensorClass::one(2), TensorClass::one(3)), InvalidArgument);
  CHECK_THROWS_AS(TensorClass(0), InvalidArgument);
  CHECK_THROWS_AS(TensorClass(17), InvalidArgument);
}

TEST_CASE("tensor pairing", "[algebra_core]") {
  CHECK(tensor_pair(tensor({B, B}), tensor({B, B})) == 1);
  CHECK(tensor_pair(tensor({E(1), E(2)}), tensor({E(1), E(2)})) == 1);
  CHECK(tensor_pair(tensor({E(1), E(2)}), tensor({E(2), E(1)})) == 0);
  CHECK(tensor_pair(tensor({B, B}, 2), tensor({B, B})) == 2);
}

TEST_CASE("tensor algebra laws on random samples", "[algebra_core][property]") {
  for (int trial = 0; trial < 150; ++trial) {
    const int g = uniform(0, 3);
    const int n = uniform(1, 4);
    const auto x = random_tensor(g, n);
    const auto y = random_tensor(g, n);
    const auto z = random_tensor(g, n);
    CHECK(tensor_mul(tensor_mul(x, y), z) == tensor_mul(x, tensor_mul(y, z)));
    CHECK(tensor_mul(TensorClass::one(n), x) == x);
    CHECK(tensor_mul(x, TensorClass::one(n)) == x);
    CHECK(tensor_mul(x, y + z) == tensor_mul(x, y) + tensor_mul(x, z));

    const int dx = uniform(0, 2 * n);
    const int dy = uniform(0, 2 * n);
    const auto hx = random_homogeneous_tensor(g, n, dx);
    const auto hy = random_homogeneous_tensor(g, n, dy);
    const Integer sign = (dx * dy) % 2 ? -1 : 1;
    CHECK(tensor_mul(hx, hy) == sign * tensor_mul(hy, hx));

    const auto w = random_tensor(g, n);
    CHECK(tensor_pair(tensor_mul(x, y + z), w) == tensor_pair(tensor_mul(x, y), w) + tensor_pair(tensor_mul(x, z), w));
    CHECK(tensor_pair(tensor_mul(x, y), w + z) == tensor_pair(tensor_mul(x, y), w) + tensor_pair(tensor_mul(x, y), z));
  }
}

TEST_CASE("positive-degree powers within a slot vanish beyond dimension", "[algebra_core][property]") {
  // Three positive-degree factors in one slot always vanish.
  for (int trial = 0; trial < 100; ++trial) {
    const int g = uniform(1, 3);
    const int n = uniform(1, 3);
    const int p = uniform(0, n - 1);
    TensorClass prod = TensorClass::one(n);
    for (int f = 0; f < 3; ++f) {
      SurfaceBasisElement e = random_element(g);
      while (e.is_unit()) e = random_element(g);
      prod = tensor_mul(prod, TensorClass::placement(n, p, e));
    }
    CHECK(prod.is_zero());
  }
}

TEST_CASE("tensor labels", "[algebra_core]") {
  CHECK(tensor({E(1), U, B}).to_string() == "1*e1(x)1(x)b");
  CHECK(TensorClass(2).to_string() == "0");
}
