#include "doctest.h"

#include <random>

#include "quantoid/catalog.hpp"
#include "quantoid/correspondence.hpp"
#include "quantoid/json_io.hpp"

using namespace quantoid;
using io::Json;

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

TEST_CASE("set-function document layout") {
  const Json doc = io::to_json(catalog::bell());
  CHECK(io::dump(doc) ==
        "{\n  \"ground_set\": [\n    \"1\",\n    \"2\"\n  ],\n  \"values\": {\n    \"\": \"0\",\n"
        "    \"1\": \"1\",\n    \"2\": \"1\",\n    \"1,2\": \"0\"\n  }\n}\n");
  CHECK(io::to_json(vee(catalog::uniform_matroid(2, 4)))["values"]["1"] == "1/2");
}

TEST_CASE("document round trip") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const SetFunction f = SetFunction::generate(GroundSet::numbered(trial % 6), [&](Mask) {
      Rational r(num(rng), den(rng));
      r.canonicalize();
      return r;
    });
    CHECK(io::parse_set_function(io::parse_text(io::dump(io::to_json(f)))) == f);
  }
}

TEST_CASE("parse accepts integers and unordered keys") {
  const Json doc = io::parse_text(
      R"({"ground_set": [1, 2], "values": {"2,1": 0, "": "0", "2": 1, "1": "2/2"}})");
  CHECK(io::parse_set_function(doc) == catalog::bell());
}

TEST_CASE("parse errors") {
  CHECK(error_code([] { io::parse_text("{"); }) == Errc::MalformedDocument);
  CHECK(error_code([] { io::parse_set_function(io::parse_text("[]")); }) == Errc::MalformedDocument);
  CHECK(error_code([] { io::parse_set_function(io::parse_text(R"({"values": {}})")); }) ==
        Errc::MalformedDocument);
  CHECK(error_code([] {
          io::parse_set_function(io::parse_text(R"({"ground_set": ["1"], "values": {"": "0", "1": 0.5}})"));
        }) == Errc::MalformedRational);
  CHECK(error_code([] {
          io::parse_set_function(io::parse_text(R"({"ground_set": ["1"], "values": {"": "0"}})"));
        }) == Errc::MissingSubset);
  CHECK(error_code([] { io::read_file("/nonexistent/file.json"); }) == Errc::MalformedDocument);
}

TEST_CASE("distribution and state documents") {
  const JointDistribution p = io::parse_distribution(
      io::parse_text(R"({"parties": ["x", "y"], "alphabets": [2, 2], "probs": [0.5, 0, 0, 0.5]})"));
  CHECK(p.parties().labels() == std::vector<std::string>{"x", "y"});
  const PureState s = io::parse_state(io::parse_text(
      R"({"parties": ["a"], "dims": [2], "amplitudes": [[0, 1], [0, 0]]})"));
  CHECK(s.amplitudes()(0) == std::complex<double>(0, 1));
  CHECK(error_code([] {
          io::parse_state(io::parse_text(R"({"parties": ["a"], "dims": [2], "amplitudes": [[1], [0, 0]]})"));
        }) == Errc::MalformedDocument);
}

TEST_CASE("report documents") {
  const SetFunction u24 = catalog::uniform_matroid(2, 4);
  const Json c = io::to_json(classify(u24));
  CHECK(c["matroid"] == true);
  CHECK(c["selfdual"] == true);
  CHECK(c.size() == 11);

  const Json r = io::to_json(analyze(scale(u24, 2), "4", Kind::polymatroid), u24.ground());
  CHECK(r["dealer"] == "4");
  CHECK(r["ideal"] == true);
  CHECK(r["minimal_authorized"] == Json::array({"1,2", "1,3", "2,3"}));
  CHECK(r["extraction"]["t"] == "2");
  CHECK(io::parse_set_function(r["extraction"]["rank"]) == u24);

  const Json x = io::to_json(two_factor(scale(catalog::uniform_matroid(1, 2), 2)));
  CHECK(x["mode"] == "two-factor");
  CHECK(x["blocks"]["1"] == Json::array({"1.0+1.1"}));
  CHECK(x["pairs"]["2.0+2.1"] == Json::array({"2.0", "2.1"}));
}
