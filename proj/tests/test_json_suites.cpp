#include <doctest.h>

#include "oracles.hpp"
#include "primespec/errors.hpp"
#include "primespec/suites.hpp"

using namespace primespec;

TEST_CASE("rings round-trip through JSON") {
  std::vector<RingExpr> rings = finite_zoo();
  for (const auto& r : symbolic_zoo()) rings.push_back(r);
  for (const auto& r : rings) CHECK(ring_from_json(to_json(r)) == r);
  CHECK(ring_from_json(Json::parse(R"({"kind":"Zmod","n":12})")) == integers_mod(12));
  CHECK(ring_from_json(Json::parse(R"({"kind":"Zmod","n":"12"})")) == integers_mod(12));
  CHECK(ring_from_json(Json::parse(
            R"({"kind":"MonomialQuotient","field":"F2","nvars":3,"gens":[[1,1,0],[1,0,1],[0,1,1]]})")) ==
        monomial_quotient({2}, 3, supplement_generators(3)));
  CHECK(ring_from_json(Json::parse(R"({"kind":"SymbolicSupplement","field":"Q"})")) == symbolic_supplement({0}));
}

TEST_CASE("elements, points, sets and maps round-trip") {
  const std::vector<RingElement> elems = {int_elem(-12), mod_elem(5), rat_elem(Rational(-3, 4)), poly_elem({1, 0, 1}),
                                          mpoly_elem({Term{2, Exponent{1, 0, 0}}}),
                                          tuple_elem({mod_elem(1), poly_elem({0, 1})})};
  for (const auto& e : elems) CHECK(element_from_json(to_json(e)) == e);
  CHECK(element_from_json(Json(12)) == int_elem(12));
  CHECK(element_from_json(Json::parse(R"({"kind":"int","v":"12"})")) == int_elem(12));
  const std::vector<PrimePoint> pts = {zero_prime(), z_generic(), z_max(7), zmod_prime(3), fpx_generic(),
                                       fpx_max({1, 1, 1}), mono_prime({1, 3}), supp_min(4), supp_top(),
                                       tame(1, mono_prime({2}))};
  for (const auto& p : pts) CHECK(point_from_json(to_json(p)) == p);
  const std::vector<SpecSubset> sets = {empty_set(), whole_set(), explicit_set({z_max(5)}),
                                        cofinite_closed({z_max(11)}, true), cofinite_min({1, 2}, false)};
  for (const auto& s : sets) CHECK(set_from_json(to_json(s)) == s);
  const std::vector<RingMapSpec> maps = {diagonal_into_mod_product(6, {2, 3}), quotient_map(integers(), z_max(5)),
                                         residue_map(integers(), z_generic()),
                                         into_quotient_product(integers(), cofinite_closed({z_max(11)}, false)),
                                         into_local_product(symbolic_supplement({2}), explicit_set({supp_top()}))};
  for (const auto& m : maps) CHECK(to_json(map_from_json(to_json(m))) == to_json(m));
  const BigInt big = parse_bigint("123456789012345678901234567890");
  CHECK(to_json(int_elem(big))["v"] == "123456789012345678901234567890");
  CHECK(element_from_json(to_json(int_elem(big))) == int_elem(big));
}

TEST_CASE("malformed JSON is rejected with InvalidInput") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InternalError;
  };
  CHECK(kind_of([] { ring_from_json(Json::parse(R"({"kind":"Nope"})")); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { ring_from_json(Json::parse(R"({"kind":"Zmod"})")); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { set_from_json(Json::parse(R"([1,2])")); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { point_from_json(Json::parse(R"({"type":"zMax","p":"abc"})")); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { parse_json_argument("{not json"); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { ring_from_json(Json::parse(R"({"kind":"Zmod","n":"340282366920938463463374607431768211457"})")); }) !=
        ErrorKind::InternalError);
}

TEST_CASE("suites are deterministic and replayable") {
  SuiteOptions opt;
  opt.random_cases = 20;
  opt.max_points = 4;
  opt.max_supplement = 3;
  for (const auto& name : suite_names()) {
    const SuiteReport a = run_suite(name, opt);
    const SuiteReport b = run_suite(name, opt);
    CHECK_MESSAGE(a.all_pass(), name);
    CHECK_FALSE(a.cases.empty());
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(std::is_sorted(a.cases.begin(), a.cases.end(),
                         [](const SuiteCase& x, const SuiteCase& y) { return x.id < y.id; }));
    SuiteOptions one = opt;
    one.only = a.cases.front().id;
    const SuiteReport c = run_suite(name, one);
    REQUIRE(c.cases.size() == 1);
    CHECK(c.cases.front().id == one.only);
  }
  CHECK_THROWS_AS(run_suite("nope", opt), Error);
  const SuiteReport r = run_suite("remark-v5", opt);
  CHECK(r.repro(r.cases.front()) == "primespec verify remark-v5 --seed 1 --only " + r.cases.front().id);
  const Json j = r.to_json();
  for (const char* key : {"suite", "seed", "cases", "summary"}) CHECK(j.contains(key));
  for (const char* key : {"id", "input", "expected", "actual", "pass"}) CHECK(j["cases"][0].contains(key));
}

TEST_CASE("a failing case carries a repro line") {
  SuiteReport r;
  r.suite = "pz";
  r.seed = 9;
  r.cases.push_back({"ring-0001", {}, true, false, false});
  CHECK_FALSE(r.all_pass());
  CHECK(r.to_json()["cases"][0]["repro"] == "primespec verify pz --seed 9 --only ring-0001");
}
