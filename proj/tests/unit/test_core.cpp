#include "doctest.h"

#include <random>

#include "quantoid/catalog.hpp"
#include "quantoid/classify.hpp"
#include "quantoid/enumerate.hpp"
#include "support/oracles.hpp"

using namespace quantoid;

namespace {

Errc error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::InternalInvariant;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("0") == 0);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(parse_rational("123456789012345678901234567890")) ==
        "123456789012345678901234567890");
  for (const char* bad : {"", "1.5", "1/0", "a", "--1", "1/-2", "1/", "/2", " 1"}) {
    CHECK(error_code([&] { parse_rational(bad); }) == Errc::MalformedRational);
  }
}

TEST_CASE("limit_denominator") {
  const mpz_class four(4);
  CHECK(limit_denominator(Rational(1, 3), four) == Rational(1, 3));
  CHECK(limit_denominator(Rational(881, 1000), four) == Rational(1));
  CHECK(limit_denominator(Rational(3, 4), four) == Rational(3, 4));
  CHECK(limit_denominator(Rational(3141593, 1000000), mpz_class(7)) == Rational(22, 7));
  CHECK(limit_denominator(Rational(3141593, 1000000), mpz_class(113)) == Rational(355, 113));
  CHECK(limit_denominator(Rational(-7, 10), mpz_class(1)) == Rational(-1));
  CHECK(limit_denominator(Rational(1, 2), mpz_class(1)) == Rational(0));
}

TEST_CASE("ground set keys") {
  GroundSet g({"a", "b", "c"});
  CHECK(g.key(0).empty());
  CHECK(g.key(0b101) == "a,c");
  CHECK(g.parse_key("c,a") == 0b101u);
  CHECK(error_code([&] { g.parse_key("a,x"); }) == Errc::UnknownElement);
  CHECK(error_code([&] { g.parse_key("a,a"); }) == Errc::MalformedDocument);
  CHECK(error_code([] { GroundSet({"a", "a"}); }) == Errc::DuplicateLabel);
  CHECK(error_code([] { GroundSet({"a,b"}); }) == Errc::InvalidLabel);
  CHECK(error_code([] { GroundSet({""}); }) == Errc::InvalidLabel);

  std::vector<std::string> many;
  for (int i = 0; i < 17; ++i) many.push_back("e" + std::to_string(i));
  CHECK(error_code([&] { GroundSet{many}; }) == Errc::GroundSetTooLarge);
}

TEST_CASE("subset key round trip") {
  for (int n : {0, 1, 4, 7}) {
    const GroundSet g = GroundSet::numbered(n);
    for (Mask m = 0; m < g.subset_count(); ++m) {
      CHECK(g.parse_key(g.key(m)) == m);
    }
  }
}

TEST_CASE("build") {
  SUBCASE("empty ground set") {
    const SetFunction f = build({}, {{"", "0"}});
    CHECK(f.size() == 0);
    CHECK(f.values().size() == 1);
    CHECK(f[0] == 0);
  }
  SUBCASE("Bell polyquantoid") {
    const SetFunction f = build({"1", "2"}, {{"", "0"}, {"1", "1"}, {"2", "1"}, {"1,2", "0"}});
    CHECK(f == catalog::bell());
    CHECK(f("2,1") == 0);
    CHECK(classify(f).polyquantoid);
  }
  SUBCASE("errors") {
    CHECK(error_code([] { build({"1", "2"}, {{"", "0"}, {"1", "1"}, {"2", "1"}}); }) ==
          Errc::MissingSubset);
    try {
      build({"1", "2"}, {{"", "0"}, {"1", "1"}, {"2", "1"}});
    } catch (const Error& e) {
      CHECK(std::string(e.what()) == "MissingSubset: 1,2");
    }
    CHECK(error_code([] { build({"1", "1"}, {{"", "0"}}); }) == Errc::DuplicateLabel);
    CHECK(error_code([] { build({"1"}, {{"", "0"}, {"1", "x"}}); }) == Errc::MalformedRational);
    CHECK(error_code([] { build({"1"}, {{"", "0"}, {"1", "1"}, {"1", "2"}}); }) ==
          Errc::DuplicateSubset);
    CHECK(error_code([] { build({"1"}, {{"", "0"}, {"9", "1"}}); }) == Errc::UnknownElement);
    std::vector<std::string> labels;
    for (int i = 0; i < 17; ++i) labels.push_back(std::to_string(i));
    CHECK(error_code([&] { build(labels, {{"", "0"}}); }) == Errc::GroundSetTooLarge);
  }
}

TEST_CASE("classify worked examples") {
  SUBCASE("U_{2,4}") {
    const SetFunction u24 = catalog::uniform_matroid(2, 4);
    const auto a = oracle::axioms(u24);
    CHECK((a.normalized && a.nondecreasing && a.submodular && a.tight && a.integer));
    CHECK(oracle::dual(u24) == u24);

    const Classification c = classify(u24);
    CHECK(c.matroid);
    CHECK(c.polymatroid);
    CHECK(c.tight);
    CHECK(c.selfdual);
    CHECK_FALSE(c.complementary);
  }
  SUBCASE("GHZ3") {
    const SetFunction ghz = oracle::table(3, {0, 1, 1, 1, 1, 1, 1, 0});
    CHECK(ghz == catalog::ghz(3));
    const auto a = oracle::axioms(ghz);
    CHECK((a.normalized && a.complementary && a.submodular && !a.nondecreasing));

    const Classification c = classify(ghz);
    CHECK(c.polyquantoid);
    CHECK(c.quantoid);
    CHECK_FALSE(c.nondecreasing);
    CHECK_FALSE(c.polymatroid);
  }
  SUBCASE("not normalized") {
    const SetFunction f = oracle::table(1, {1, 1});
    const Classification c = classify(f);
    CHECK_FALSE(c.normalized);
    CHECK_FALSE(c.polymatroid);
    CHECK_FALSE(c.polyquantoid);
  }
  SUBCASE("empty ground set") {
    const Classification c = classify(catalog::zero(0));
    CHECK(c.matroid);
    CHECK(c.quantoid);
    CHECK(c.tight);
    CHECK(c.selfdual);
  }
}

TEST_CASE("classify agrees with the exhaustive oracle on random tables") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> value(-1, 3);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = trial % 4;
    std::vector<Rational> values;
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) values.emplace_back(value(rng));
    values[0] = trial % 5 == 0 ? 1 : 0;
    const SetFunction f = oracle::table(n, values);
    const auto a = oracle::axioms(f);
    const Classification c = classify(f);
    CHECK(c.normalized == a.normalized);
    CHECK(c.nondecreasing == a.nondecreasing);
    CHECK(c.submodular == a.submodular);
    CHECK(c.complementary == a.complementary);
    CHECK(c.tight == a.tight);
    CHECK(c.integer == a.integer);
    CHECK(c.submodular == is_submodular_exhaustive(f));
    CHECK(c.selfdual == (oracle::dual(f) == f));
  }
}

TEST_CASE("classification invariants") {
  std::mt19937_64 rng(11);
  const Rational scales[] = {Rational(1, 3), Rational(1), Rational(7, 2)};
  for (int n = 0; n <= 3; ++n) {
    for (bool quantum : {false, true}) {
      for (const SetFunction& f : enumerate(quantum ? Kind::polyquantoid : Kind::polymatroid, n, 2)) {
        const Classification c = classify(f);
        if (c.quantoid) CHECK(c.polyquantoid);
        if (c.polyquantoid) CHECK(c.submodular);
        if (c.matroid) CHECK(c.polymatroid);
        for (const Rational& t : scales) {
          Classification s = classify(scale(f, t));
          // Integrality and the singleton pattern are not cone conditions.
          CHECK(s.normalized == c.normalized);
          CHECK(s.nondecreasing == c.nondecreasing);
          CHECK(s.submodular == c.submodular);
          CHECK(s.complementary == c.complementary);
          CHECK(s.tight == c.tight);
          CHECK(s.selfdual == c.selfdual);
          CHECK(s.polymatroid == c.polymatroid);
          CHECK(s.polyquantoid == c.polyquantoid);
        }
      }
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    const SetFunction f = oracle::random_polymatroid(rng, 1 + trial % 5);
    CHECK(classify(f).polymatroid);
    CHECK(classify(scale(f, Rational(5, 3))).polymatroid);
  }
}

TEST_CASE("scale") {
  const SetFunction u24 = catalog::uniform_matroid(2, 4);
  CHECK(scale(u24, 1) == u24);
  const SetFunction doubled = scale(u24, 2);
  for (Mask m = 0; m < 16; ++m) CHECK(doubled[m] == 2 * std::min(std::popcount(m), 2));
  CHECK(error_code([&] { scale(u24, 0); }) == Errc::NonpositiveScale);
  CHECK(error_code([&] { scale(u24, Rational(-1, 2)); }) == Errc::NonpositiveScale);
}

TEST_CASE("enumerate small cases") {
  const auto pq1 = enumerate(Kind::polyquantoid, 1, 1);
  REQUIRE(pq1.size() == 1);
  CHECK(pq1[0] == catalog::zero(1));

  const auto pm1 = enumerate(Kind::polymatroid, 1, 1);
  REQUIRE(pm1.size() == 2);
  CHECK(pm1[0] == catalog::zero(1));
  CHECK(pm1[1] == catalog::free_matroid(1));

  const auto pq2 = enumerate(Kind::polyquantoid, 2, 1);
  REQUIRE(pq2.size() == 2);
  CHECK(pq2[0] == catalog::zero(2));
  CHECK(pq2[1] == catalog::bell());

  CHECK(enumerate(Kind::polymatroid, 0, 3).size() == 1);
  CHECK(enumerate(Kind::polymatroid, 2, -1).empty());
}

TEST_CASE("enumerate matches brute-force filtering") {
  for (int n = 0; n <= 3; ++n) {
    for (int cap = 0; cap <= (n == 3 ? 2 : 3); ++cap) {
      for (bool quantum : {false, true}) {
        const auto fast = enumerate(quantum ? Kind::polyquantoid : Kind::polymatroid, n, cap);
        const auto slow = oracle::enumerate(quantum, n, cap);
        CHECK(fast == slow);
        for (const auto& f : fast) CHECK(classify(f).is(quantum ? Kind::polyquantoid : Kind::polymatroid));
      }
    }
  }
}

TEST_CASE("enumerator streams lazily") {
  Enumerator it(Kind::polymatroid, 2, 1);
  int count = 0;
  while (auto f = it.next()) ++count;
  CHECK(count == static_cast<int>(enumerate(Kind::polymatroid, 2, 1).size()));
  CHECK_FALSE(it.next().has_value());
}

TEST_CASE("isomorphism") {
  const SetFunction a = oracle::table(2, {0, 1, 2, 2});
  const SetFunction b = oracle::table(2, {0, 2, 1, 2});
  CHECK(isomorphic(a, b));
  CHECK_FALSE(isomorphic(a, catalog::uniform_matroid(1, 2)));
  CHECK_FALSE(isomorphic(a, catalog::zero(3)));
}
