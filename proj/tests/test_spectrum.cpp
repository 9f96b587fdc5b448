#include <doctest.h>

#include "oracles.hpp"
#include "primespec/errors.hpp"
#include "primespec/suites.hpp"

using namespace primespec;

namespace {

RingElement x(int k, std::size_t n) { return variable(k, n); }

const RingExpr kSupp3 = build_supplement({2}, 3).ring;

PrimePoint P(std::vector<int> cover) { return mono_prime(std::move(cover)); }

}  // namespace

TEST_CASE("enumerating finite spectra") {
  CHECK(finite_points(integers_mod(12)) == std::vector<PrimePoint>{zmod_prime(2), zmod_prime(3)});
  CHECK(finite_points(product({integers_mod(4), integers_mod(9)})) ==
        std::vector<PrimePoint>{tame(0, zmod_prime(2)), tame(1, zmod_prime(3))});
  const auto pts = finite_points(kSupp3);
  CHECK(pts.size() == 4);
  for (const auto& p : {P({2, 3}), P({1, 3}), P({1, 2}), P({1, 2, 3})}) {
    CHECK(std::find(pts.begin(), pts.end(), p) != pts.end());
  }
  CHECK(finite_points(prime_field(7)) == std::vector<PrimePoint>{zero_prime()});
  CHECK_THROWS_AS(finite_points(integers()), Error);
  CHECK_THROWS_AS(finite_points(monomial_quotient({2}, 2, {mono::from_vars({1, 2}, 2)})), Error);
}

TEST_CASE("spectrum of Z/n is the set of prime divisors") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t n = 2 + oracle_ref::draw(rng, 1000000);
    std::vector<PrimePoint> expected;
    for (auto p : oracle_ref::prime_divisors_naive(n)) expected.push_back(zmod_prime(p));
    REQUIRE(finite_points(integers_mod(n)) == expected);
  }
}

TEST_CASE("specialization order") {
  CHECK(leq_specialization(z_generic(), z_max(7), integers()));
  CHECK_FALSE(leq_specialization(z_max(5), z_max(7), integers()));
  CHECK_FALSE(leq_specialization(z_max(7), z_generic(), integers()));
  const RingExpr s = symbolic_supplement({2});
  CHECK(leq_specialization(supp_min(2), supp_top(), s));
  CHECK_FALSE(leq_specialization(supp_min(2), supp_min(3), s));
  CHECK(leq_specialization(fpx_generic(), fpx_max({1, 1}), poly_over_fp(2)));
}

TEST_CASE("specialization agrees with element membership on the finite zoo") {
  for (const auto& r : finite_zoo()) {
    const auto pts = finite_points(r);
    for (const auto& p : pts) {
      for (const auto& q : pts) REQUIRE(leq_specialization(p, q, r) == oracle_ref::below(p, q, r));
    }
  }
}

TEST_CASE("V and D loci") {
  const RingExpr z = integers();
  CHECK(v_locus(int_elem(12), z) == explicit_set({z_max(2), z_max(3)}));
  CHECK(is_whole(v_locus(int_elem(0), z), z));
  CHECK(is_empty(v_locus(int_elem(1), z)));
  CHECK(d_locus(int_elem(2), z) == cofinite_closed({z_max(2)}, true));
  CHECK(v_locus(x(1, 3), kSupp3) == explicit_set({P({1, 2}), P({1, 3}), P({1, 2, 3})}));
  const RingExpr s = symbolic_supplement({2});
  CHECK(v_locus(x(1, 1), s) == cofinite_min({1}, true));
  CHECK(v_locus(poly_elem({1, 0, 1}), poly_over_fp(2)) == explicit_set({fpx_max({1, 1})}));
}

TEST_CASE("V and D are complementary and agree with prime membership") {
  for (const auto& r : finite_zoo()) {
    for (const auto& a : sample_elements(r, 64)) {
      const SpecSubset v = v_locus(a, r), d = d_locus(a, r);
      CHECK(set_equal(set_union(v, d, r), whole_set(), r));
      CHECK(is_empty(set_intersection(v, d, r)));
      for (const auto& p : finite_points(r)) REQUIRE(subset_member(p, v) == prime_contains(p, a, r));
    }
  }
}

TEST_CASE("membership in symbolic sets") {
  CHECK_FALSE(subset_member(z_max(11), cofinite_closed({z_max(11)}, false)));
  CHECK(subset_member(z_generic(), cofinite_closed({z_max(11)}, true)));
  CHECK_FALSE(subset_member(z_generic(), cofinite_closed({z_max(11)}, false)));
  CHECK(subset_member(z_max(13), cofinite_closed({z_max(11)}, false)));
  CHECK(subset_member(supp_min(4), cofinite_min({1}, false)));
  CHECK_FALSE(subset_member(supp_top(), cofinite_min({1}, false)));
  CHECK(subset_member(supp_top(), whole_set()));
  CHECK_FALSE(subset_member(supp_top(), empty_set()));
}

TEST_CASE("canonical forms") {
  const RingExpr z = integers();
  CHECK(canonicalize(cofinite_closed({}, true), z) == whole_set());
  CHECK(canonicalize(cofinite_min({}, true), symbolic_supplement({0})) == whole_set());
  CHECK(canonicalize(explicit_set({}), z) == empty_set());
  CHECK(set_equal(explicit_set({zmod_prime(2), zmod_prime(3)}), whole_set(), integers_mod(6)));
}

TEST_CASE("set algebra on symbolic spectra agrees pointwise on a window") {
  std::mt19937_64 rng(5);
  for (const auto& r : symbolic_zoo()) {
    std::vector<PrimePoint> window = ordinary_points(r, 16);
    window.push_back(special_point(r));
    for (int i = 0; i < 100; ++i) {
      const SpecSubset a = random_symbolic_subset(r, rng, false);
      const SpecSubset b = random_symbolic_subset(r, rng, false);
      const SpecSubset u = set_union(a, b, r), n = set_intersection(a, b, r), c = set_complement(a, r),
                       d = set_difference(a, b, r);
      for (const auto& p : window) {
        const bool in_a = subset_member(p, a), in_b = subset_member(p, b);
        REQUIRE(subset_member(p, u) == (in_a || in_b));
        REQUIRE(subset_member(p, n) == (in_a && in_b));
        REQUIRE(subset_member(p, c) == !in_a);
        REQUIRE(subset_member(p, d) == (in_a && !in_b));
      }
      CHECK(set_includes(u, a, r));
      CHECK(set_includes(a, n, r));
      CHECK(set_equal(set_complement(c, r), a, r));
      CHECK(is_finite(a) == !is_finite(c));
    }
  }
}

TEST_CASE("point validation") {
  CHECK(point_belongs(z_max(7), integers()));
  CHECK_FALSE(point_belongs(z_max(8), integers()));
  CHECK(point_belongs(fpx_max({1, 1, 1}), poly_over_fp(2)));
  CHECK_FALSE(point_belongs(fpx_max({1, 0, 1}), poly_over_fp(2)));
  CHECK(point_belongs(tame(1, zmod_prime(3)), product({integers_mod(4), integers_mod(9)})));
  CHECK_FALSE(point_belongs(tame(2, zmod_prime(3)), product({integers_mod(4), integers_mod(9)})));
  CHECK_FALSE(point_belongs(P({1}), kSupp3));
}
