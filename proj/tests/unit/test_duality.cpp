#include "doctest.h"

#include <random>

#include "quantoid/catalog.hpp"
#include "quantoid/classify.hpp"
#include "quantoid/duality.hpp"
#include "quantoid/enumerate.hpp"
#include "support/oracles.hpp"

using namespace quantoid;

TEST_CASE("dual worked examples") {
  CHECK(dual(catalog::zero(3)) == catalog::zero(3));

  // Frozen from the term-by-term oracle.
  const SetFunction u13 = catalog::uniform_matroid(1, 3);
  const SetFunction u23 = oracle::table(3, {0, 1, 1, 2, 1, 2, 2, 2});
  REQUIRE(oracle::dual(u13) == u23);
  CHECK(dual(u13) == u23);
  CHECK(u23 == catalog::uniform_matroid(2, 3));

  const SetFunction u24 = catalog::uniform_matroid(2, 4);
  REQUIRE(oracle::dual(u24) == u24);
  CHECK(dual(u24) == u24);
}

TEST_CASE("is_selfdual") {
  CHECK(is_selfdual(catalog::uniform_matroid(2, 4)));
  CHECK_FALSE(is_selfdual(catalog::uniform_matroid(1, 3)));
  CHECK(is_selfdual(catalog::bell()));
  CHECK(is_selfdual(catalog::ghz(3)));
  // Every normalized complementary function, submodular or not.
  CHECK(is_selfdual(oracle::table(2, {0, 5, 5, 0})));
  CHECK(is_selfdual(oracle::table(3, {0, 1, 4, 2, 2, 4, 1, 0})));
}

TEST_CASE("duality properties on arbitrary rational tables") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = trial % 5;
    const GroundSet g = GroundSet::numbered(n);
    const SetFunction h = SetFunction::generate(g, [&](Mask) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      return r;
    });
    const SetFunction d = dual(h);
    CHECK(d == oracle::dual(h));
    CHECK(dual(d) == h);
    CHECK(d[0] == h[0]);
    for (int i = 0; i < n; ++i) {
      CHECK(d.singleton(i) == h.singleton(i));
      CHECK(d[g.full()] - d[g.full() ^ bit(i)] == h[g.full()] - h[g.full() ^ bit(i)]);
    }
    CHECK(is_submodular(h) == is_submodular(d));
  }
}

TEST_CASE("dual of a polymatroid is a polymatroid") {
  std::mt19937_64 rng(5);
  for (int n = 0; n <= 3; ++n) {
    for (const SetFunction& h : enumerate(Kind::polymatroid, n, 2)) {
      const Classification c = classify(dual(h));
      CHECK(c.polymatroid);
      CHECK(c.tight == is_tight(h));
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const SetFunction h = oracle::random_polymatroid(rng, 1 + trial % 5);
    CHECK(classify(dual(h)).polymatroid);
  }
}

TEST_CASE("dual on approximate values") {
  // dual(h) - h = 1e-12 (U_{2,3} - U_{1,3}).
  const BasicSetFunction<double> h(GroundSet::numbered(3), {0, 1e-12, 1e-12, 1e-12, 1e-12, 1e-12, 1e-12, 1e-12});
  CHECK(is_selfdual(h, 1e-9));
  CHECK_FALSE(is_selfdual(h, 1e-15));
  const auto d = dual(h);
  CHECK(std::abs(d[0b011] - 2e-12) < 1e-24);
}
