#include <doctest.h>

#include "oracles.hpp"
#include "primespec/errors.hpp"
#include "primespec/suites.hpp"

using namespace primespec;

namespace {

const RingExpr kSupp3 = build_supplement({2}, 3).ring;
PrimePoint P(int k) {
  VarSet c;
  for (int i = 1; i <= 3; ++i) {
    if (i != k) c.push_back(i);
  }
  return mono_prime(c);
}
const PrimePoint kTop3 = mono_prime({1, 2, 3});

}  // namespace

TEST_CASE("unit idempotents") {
  const RingExpr r = product({integers_mod(4), integers_mod(9)});
  CHECK(unit_idempotent(0, r) == tuple_elem({mod_elem(1), mod_elem(0)}));
  CHECK_THROWS_AS(unit_idempotent(2, r), Error);
  CHECK_THROWS_AS(unit_idempotent(-1, r), Error);
  CHECK_THROWS_AS(unit_idempotent(0, integers()), Error);
}

TEST_CASE("the direct sum locus of a finite product is empty") {
  CHECK(is_empty(direct_sum_locus(product({integers_mod(4), integers_mod(9)}))));
  CHECK(is_empty(direct_sum_locus(product({integers_mod(2), integers_mod(3), integers_mod(5)}))));
  CHECK(is_empty(direct_sum_locus(product({integers_mod(8)}))));
}

TEST_CASE("contracting tame primes") {
  const RingExpr z = integers();
  const RingMapSpec q = into_quotient_product(z, explicit_set({z_max(2), z_max(3)}));
  CHECK(tame_contract(tame(0, zero_prime()), q) == z_max(2));
  const RingMapSpec l = into_local_product(z, explicit_set({z_max(5)}));
  CHECK(tame_contract(tame(0, zero_prime()), l) == z_generic());
  CHECK(tame_contract(tame(0, z_max(5)), l) == z_max(5));
  const RingMapSpec s = into_quotient_product(kSupp3, explicit_set({P(1), P(2)}));
  // Slot order follows the sorted members; find the slot of P_2.
  const long slot = *slot_of(explicit_set({P(1), P(2)}), kSupp3, P(2));
  CHECK(tame_contract(tame(static_cast<int>(slot), kTop3), s) == kTop3);
  CHECK_THROWS_AS(tame_contract(zero_prime(), quotient_map(z, z_max(5))), Error);
}

TEST_CASE("quotient product images") {
  const RingExpr z = integers();
  CHECK(quotient_product_image(z, cofinite_closed({z_max(11)}, false)) == cofinite_closed({z_max(11)}, true));
  CHECK(quotient_product_image(z, explicit_set({z_max(2), z_max(3)})) == explicit_set({z_max(2), z_max(3)}));
  CHECK(quotient_product_image(symbolic_supplement({2}), cofinite_min({}, false)) == whole_set());
  CHECK(quotient_product_image(integers_mod(12), explicit_set({zmod_prime(2)})) == explicit_set({zmod_prime(2)}));
  CHECK(quotient_product_image(kSupp3, explicit_set({P(1), P(2)})) == explicit_set({P(1), P(2), kTop3}));
  CHECK(quotient_product_image(z, explicit_set({z_generic()})) == whole_set());
}

TEST_CASE("local product images") {
  const RingExpr z = integers();
  CHECK(local_product_image(z, explicit_set({z_max(2), z_max(3)})) == explicit_set({z_generic(), z_max(2), z_max(3)}));
  CHECK(local_product_image(z, cofinite_closed({z_max(11)}, false)) == cofinite_closed({z_max(11)}, true));
  const RingExpr s = symbolic_supplement({2});
  CHECK(local_product_image(s, cofinite_min({5}, false)) == cofinite_min({5}, true));
  CHECK(local_product_image(kSupp3, explicit_set({P(1)})) == explicit_set({P(1)}));
  CHECK(local_product_image(s, explicit_set({supp_top()})) == whole_set());
  CHECK(local_product_image(s, explicit_set({supp_min(2)})) == explicit_set({supp_min(2)}));
}

TEST_CASE("formula images agree with enumerating the target on the finite zoo") {
  for (const auto& r : finite_zoo()) {
    const auto pts = finite_points(r);
    if (pts.size() > 6) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pts.size()); ++mask) {
      const auto e = oracle_ref::from_mask(pts, mask);
      const SpecSubset s = oracle_ref::as_set(e);
      REQUIRE(oracle_ref::members(quotient_product_image(r, s), r) == oracle_ref::up(e, r));
      REQUIRE(oracle_ref::members(local_product_image(r, s), r) == oracle_ref::down(e, r));
      REQUIRE(brute_force_image(r, s, ImageKind::Quotient) == quotient_product_image(r, s));
      REQUIRE(brute_force_image(r, s, ImageKind::Local) == local_product_image(r, s));
    }
  }
}

TEST_CASE("brute force needs finite data") {
  CHECK_THROWS_AS(brute_force_image(integers(), cofinite_closed({}, false), ImageKind::Quotient), Error);
}

TEST_CASE("units of a product of quotients") {
  const RingExpr z = integers();
  const SpecSubset e = cofinite_closed({z_max(11)}, false);
  CHECK(is_unit_in_quotient_product(int_elem(11), e, z));
  CHECK_FALSE(is_unit_in_quotient_product(int_elem(6), e, z));
  CHECK_FALSE(is_unit_in_quotient_product(mpoly_elem({Term{1, mono::from_vars({1}, 3)}}), explicit_set({P(2), P(3)}), kSupp3));
  CHECK(is_unit_in_quotient_product(mpoly_elem({Term{1, mono::from_vars({1}, 3)}}), explicit_set({P(1)}), kSupp3));
  CHECK(is_unit_in_quotient_product(int_elem(-1), whole_set(), z));
  CHECK_FALSE(is_unit_in_quotient_product(int_elem(0), explicit_set({z_max(2)}), z));
}

TEST_CASE("units of a product of quotients over Z/n match each factor") {
  for (std::uint64_t n : {12u, 30u, 60u, 210u}) {
    const RingExpr r = integers_mod(n);
    const auto pts = finite_points(r);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pts.size()); ++mask) {
      const auto e = oracle_ref::from_mask(pts, mask);
      for (std::uint64_t a = 0; a < n; ++a) {
        bool unit_everywhere = true;
        for (const auto& p : e) unit_everywhere = unit_everywhere && a % static_cast<std::uint64_t>(p.as<ZmodPrime>().p) != 0;
        REQUIRE(is_unit_in_quotient_product(mod_elem(a), oracle_ref::as_set(e), r) == unit_everywhere);
      }
    }
  }
}

TEST_CASE("nilradical of a product") {
  CHECK(nilradical_product_law_check(product({integers_mod(4), integers_mod(9)})));
  CHECK(nilradical_product_law_check(product({integers_mod(12), integers_mod(12)})));
  CHECK(nilradical_product_law_check(product({integers_mod(8)})));
  CHECK(nilradical_product_law_check(product({kSupp3, integers_mod(18)})));
  CHECK_THROWS_AS(nilradical_product_law_check(integers_mod(8)), Error);
  // Componentwise nilpotency by brute powers on every element of Z/12 x Z/12.
  const RingExpr r = product({integers_mod(12), integers_mod(12)});
  for (std::uint64_t a = 0; a < 12; ++a) {
    for (std::uint64_t b = 0; b < 12; ++b) {
      const RingElement t = tuple_elem({mod_elem(a), mod_elem(b)});
      REQUIRE(is_nilpotent(t, r) == oracle_ref::nilpotent_by_powers(t, r));
    }
  }
}

TEST_CASE("strictness demos") {
  const RingExpr z = integers();
  const ImageReport a = strictness_demo(z, cofinite_closed({z_max(11)}, false), Topology::Zariski);
  CHECK(a.strict);
  CHECK(a.image == cofinite_closed({z_max(11)}, true));
  CHECK(a.closure == whole_set());
  CHECK(a.witness == z_max(11));
  const ImageReport b = strictness_demo(symbolic_supplement({2}), cofinite_min({7}, false), Topology::Flat);
  CHECK(b.strict);
  CHECK(b.witness == supp_min(7));
  const ImageReport c = strictness_demo(z, explicit_set({z_max(2), z_max(3)}), Topology::Zariski);
  CHECK_FALSE(c.strict);
  CHECK(c.image == explicit_set({z_max(2), z_max(3)}));
  CHECK_FALSE(c.witness);
  CHECK_THROWS_AS(strictness_demo(z, explicit_set({z_max(2)}), Topology::Patch), Error);
}

TEST_CASE("symbolic images sit between E and the closures") {
  std::mt19937_64 rng(29);
  for (const auto& r : symbolic_zoo()) {
    for (int i = 0; i < 200; ++i) {
      const SpecSubset e = random_symbolic_subset(r, rng, false);
      const SpecSubset qi = quotient_product_image(r, e), li = local_product_image(r, e);
      REQUIRE(set_includes(qi, e, r));
      REQUIRE(set_includes(li, e, r));
      REQUIRE(set_includes(zariski_closure(e, r), qi, r));
      REQUIRE(set_includes(flat_closure(e, r), li, r));
      // Images of spectral maps are patch closed.
      REQUIRE(set_equal(patch_closure(qi, r), qi, r));
      REQUIRE(set_equal(patch_closure(li, r), li, r));
    }
  }
}
