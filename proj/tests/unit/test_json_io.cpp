#include <doctest.h>

#include "random_objects.hpp"
#include "setpoly/setpoly.hpp"

using namespace setpoly;
using namespace setpoly::testing;

TEST_CASE("finite set encoding") {
  CHECK(to_json(FinSet::unit()).dump() == R"({"arity":0,"elems":[[]]})");
  CHECK(to_json(FinSet::of({{2, 1}, {1, 5}})).dump() == R"({"arity":2,"elems":[[1,5],[2,1]]})");
  CHECK(canonical_string(FinSet::of({{2, 1}, {1, 5}})) == to_json(FinSet::of({{2, 1}, {1, 5}})).dump());
  CHECK(finset_from_json(parse_json(R"({"arity":1,"elems":[[3],[1],[3]]})")) == FinSet::symbols({1, 3}));
  CHECK_THROWS_AS(finset_from_json(parse_json(R"({"arity":2,"elems":[[1]]})")), ParseError);
  CHECK_THROWS_AS(finset_from_json(parse_json(R"({"arity":1,"elems":[[-1]]})")), ParseError);
  CHECK_THROWS_AS(finset_from_json(parse_json(R"({"arity":1,"elems":[],"x":1})")), ParseError);
}

TEST_CASE("polynomial encoding") {
  const SetPolynomial sq = SetPolynomial::full_power(2);
  CHECK(to_json(sq).dump() == R"({"D":2,"coeffs":{"[1,2]":{"arity":0,"elems":[[]]}}})");
  CHECK(index_key(index_from_list({1, 3}, 3)) == "[1,3]");
  CHECK_THROWS_AS(poly_from_json(parse_json(R"({"D":2,"coeffs":{"[2,1]":{"arity":0,"elems":[[]]}}})")), ParseError);
  CHECK_THROWS_AS(poly_from_json(parse_json(R"({"D":2,"coeffs":{"[1]":{"arity":0,"elems":[[]]}}})")), ParseError);
  CHECK_THROWS_AS(poly_from_json(parse_json(R"({"D":0,"coeffs":{}})")), ParseError);
}

TEST_CASE("random values round-trip") {
  Rng rng(17);
  const auto pool = range_symbols(1, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t D = uniform(rng, 1, 4);
    const SetPolynomial P = random_poly(rng, D, pool, {4, 4, true, true});
    CHECK(poly_from_json(parse_json(to_json(P).dump())) == P);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const System A = random_system(rng, 3, pool, 4);
    CHECK(system_from_json(to_json(A)) == A);
  }
  const FinSet s = FinSet::symbols({4, 8});
  CHECK(symbols_from_json(symbols_to_json(s)) == s);
}

TEST_CASE("malformed text reports a position") {
  try {
    parse_json(R"({"D": 2, "coeffs": )");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_json("[1, 2"), ParseError);
  CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("serialization is deterministic") {
  Rng a(5), b(5);
  const System A1 = random_system(a, 2, range_symbols(1, 5), 3);
  const System A2 = random_system(b, 2, range_symbols(1, 5), 3);
  CHECK(to_json(A1).dump(2) == to_json(A2).dump(2));
}
