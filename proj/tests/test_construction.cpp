#include <doctest.h>

#include "oracles.hpp"
#include "primespec/errors.hpp"

using namespace primespec;

namespace {

Exponent m(std::vector<int> vars, std::size_t n) { return mono::from_vars(vars, n); }

}  // namespace

TEST_CASE("supplement generators") {
  CHECK(supplement_generators(3) == mono::minimalize({m({1, 2}, 3), m({1, 3}, 3), m({2, 3}, 3)}));
  CHECK(supplement_generators(2) == std::vector<Exponent>{m({1, 2}, 2)});
  CHECK(supplement_generators(1).empty());
  const SupplementRing one = build_supplement({2}, 1);
  CHECK(one.degenerate);
  CHECK_FALSE(build_supplement({0}, 2).degenerate);
  CHECK_THROWS_AS(build_supplement({2}, 0), Error);
}

TEST_CASE("minimal primes of monomial ideals") {
  CHECK(minimal_primes_monomial(supplement_generators(3), 3) ==
        std::vector<PrimePoint>{mono_prime({1, 2}), mono_prime({1, 3}), mono_prime({2, 3})});
  CHECK(minimal_primes_monomial({m({1, 2}, 2)}, 2) == std::vector<PrimePoint>{mono_prime({1}), mono_prime({2})});
  CHECK(minimal_primes_monomial({m({1}, 2)}, 2) == std::vector<PrimePoint>{mono_prime({1})});
  CHECK_THROWS_AS(minimal_primes_monomial({Exponent{2, 0}}, 2), Error);
  CHECK_THROWS_AS(minimal_primes_monomial({m({1, 2}, 21)}, 21), Error);
  CHECK(minimal_primes_monomial({m({1, 2}, 21)}, 21, false).size() == 2);
  const RingExpr t = ambient({2}, 2);
  CHECK_THROWS_AS(minimal_primes_monomial(principal(int_elem(2), integers()), 2), Error);
  CHECK(minimal_primes_monomial(monomial_ideal({m({1, 2}, 2)}, t), 2).size() == 2);
}

TEST_CASE("vertex covers agree with a smallest-first subset search on random hypergraphs") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 300; ++round) {
    const std::size_t nvars = 1 + oracle_ref::draw(rng, 9);
    std::vector<Exponent> gens;
    for (std::uint64_t k = oracle_ref::draw(rng, 6); k > 0; --k) {
      VarSet vs;
      for (std::size_t v = 1; v <= nvars; ++v) {
        if (oracle_ref::draw(rng, 3) == 0) vs.push_back(static_cast<int>(v));
      }
      if (!vs.empty()) gens.push_back(m(vs, nvars));
    }
    std::vector<PrimePoint> expected;
    for (const auto& c : oracle_ref::covers_by_size(gens, nvars)) expected.push_back(mono_prime(c));
    std::sort(expected.begin(), expected.end());
    REQUIRE(minimal_primes_monomial(gens, nvars) == expected);
  }
}

TEST_CASE("the supplement ideal is the intersection of the I_k") {
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(verify_intersection(n, {2}));
    CHECK(verify_intersection(n, {0}));
  }
  // Membership oracle over square-free monomials for n = 3 and 4.
  for (std::size_t n : {3u, 4u}) {
    const auto gens = supplement_generators(n);
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      Exponent e(n, 0);
      int vars = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (s >> i & 1) {
          e[i] = 1;
          ++vars;
        }
      }
      bool in_every = true;
      for (std::size_t k = 0; k < n; ++k) {
        bool in_k = false;
        for (std::size_t i = 0; i < n; ++i) in_k = in_k || (i != k && e[i]);
        in_every = in_every && in_k;
      }
      CHECK(oracle_ref::monomial_in(gens, e) == in_every);
      CHECK(in_every == (vars >= 2));
    }
  }
  CHECK_THROWS_AS(verify_intersection(0, {2}), Error);
}

TEST_CASE("krull dimension") {
  CHECK(krull_dim(build_supplement({3}, 5).ring) == 1);
  CHECK(krull_dim(integers_mod(12)) == 0);
  CHECK(krull_dim(monomial_quotient({2}, 3, {m({1, 2}, 3)})) == 2);
  CHECK(krull_dim(integers()) == 1);
  CHECK(krull_dim(rationals()) == 0);
  CHECK(krull_dim(product({integers_mod(6), build_supplement({2}, 3).ring})) == 1);
}

TEST_CASE("P.Z. and C.P. checks") {
  CHECK(pz_check(build_supplement({2}, 4).ring));
  CHECK(pz_check(integers_mod(30)));
  CHECK(cp_check(integers_mod(30)));
  CHECK(cp_check(build_supplement({2}, 3).ring));
  CHECK(pz_check(product({integers_mod(6), build_supplement({2}, 3).ring})));
  CHECK(pz_check(localized_at_irrelevant(monomial_quotient({2}, 1, {}))));
  CHECK_THROWS_AS(pz_check(product(std::vector<RingExpr>(21, prime_field(2)))), Error);
  // P_1 ∩ P_2 ⊆ P_1 with P_1 among the intersected primes.
  const RingExpr s = build_supplement({2}, 3).ring;
  const PrimePoint p1 = mono_prime({2, 3}), p2 = mono_prime({1, 3});
  CHECK(ideal_contains(ideal_intersect(prime_ideal(p1, s), prime_ideal(p2, s), s), prime_ideal(p1, s), s));
}

TEST_CASE("reducedness") {
  CHECK(is_reduced(build_supplement({2}, 3).ring));
  CHECK_FALSE(is_reduced(integers_mod(12)));
  CHECK(is_reduced(integers_mod(30)));
  CHECK_FALSE(is_reduced(product({integers_mod(30), integers_mod(4)})));
  CHECK(is_reduced(integers()));
}

TEST_CASE("supplement reports") {
  for (long n = 1; n <= 6; ++n) {
    const SupplementReport r = supplement_report({3}, n);
    CHECK(r.all_ok());
    CHECK(r.minimal_primes.size() == static_cast<std::size_t>(n));
    CHECK(r.degenerate == (n == 1));
  }
}
