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

TEST_CASE("zariski closure examples") {
  const RingExpr z = integers();
  CHECK(zariski_closure(explicit_set({z_generic()}), z) == whole_set());
  CHECK(zariski_closure(cofinite_closed({z_max(2), z_max(3)}, false), z) == whole_set());
  CHECK(zariski_closure(explicit_set({z_max(2), z_max(3)}), z) == explicit_set({z_max(2), z_max(3)}));
  const RingExpr s = symbolic_supplement({2});
  CHECK(zariski_closure(cofinite_min({1}, false), s) == cofinite_min({1}, true));
  CHECK(zariski_closure(explicit_set({supp_min(3)}), s) == explicit_set({supp_min(3), supp_top()}));
  CHECK(zariski_closure(explicit_set({supp_top()}), s) == explicit_set({supp_top()}));
  CHECK(zariski_closure(explicit_set({zmod_prime(2)}), integers_mod(12)) == explicit_set({zmod_prime(2)}));
}

TEST_CASE("flat closure examples") {
  const RingExpr z = integers();
  CHECK(flat_closure(explicit_set({z_max(5)}), z) == explicit_set({z_generic(), z_max(5)}));
  const RingExpr s = symbolic_supplement({2});
  CHECK(flat_closure(cofinite_min({2}, false), s) == whole_set());
  CHECK(flat_closure(explicit_set({supp_min(1), supp_min(3)}), s) == explicit_set({supp_min(1), supp_min(3)}));
  CHECK(flat_closure(explicit_set({supp_top()}), s) == whole_set());
  // Finite check of the last two on the concrete ring.
  CHECK(flat_closure(explicit_set({P(1), P(3)}), kSupp3) == explicit_set({P(1), P(3)}));
  CHECK(oracle_ref::down({P(1), P(3)}, kSupp3) == std::set<PrimePoint>{P(1), P(3)});
}

TEST_CASE("patch closure examples") {
  CHECK(patch_closure(explicit_set({zmod_prime(2)}), integers_mod(12)) == explicit_set({zmod_prime(2)}));
  CHECK(patch_closure(cofinite_closed({z_max(11)}, false), integers()) == cofinite_closed({z_max(11)}, true));
  CHECK(patch_closure(empty_set(), integers()) == empty_set());
  CHECK(patch_closure(explicit_set({z_max(3)}), integers()) == explicit_set({z_max(3)}));
  CHECK(patch_closure(cofinite_min({4}, false), symbolic_supplement({2})) == cofinite_min({4}, true));
}

TEST_CASE("closures on finite spectra match up- and down-sets by element membership") {
  for (const auto& r : finite_zoo()) {
    const auto pts = finite_points(r);
    if (pts.size() > 8) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pts.size()); ++mask) {
      const auto e = oracle_ref::from_mask(pts, mask);
      const SpecSubset s = oracle_ref::as_set(e);
      REQUIRE(oracle_ref::members(zariski_closure(s, r), r) == oracle_ref::up(e, r));
      REQUIRE(oracle_ref::members(flat_closure(s, r), r) == oracle_ref::down(e, r));
      REQUIRE(oracle_ref::members(up_closure(s, r), r) == oracle_ref::up(e, r));
      REQUIRE(oracle_ref::members(down_closure(s, r), r) == oracle_ref::down(e, r));
      REQUIRE(set_equal(patch_closure(s, r), s, r));
    }
  }
}

TEST_CASE("stability") {
  const RingExpr z = integers();
  const SpecSubset e = cofinite_closed({z_max(11)}, false);
  CHECK(is_stable(e, z, Stability::Specialization));
  CHECK_FALSE(is_stable(e, z, Stability::Generalization));
  CHECK_FALSE(is_stable(explicit_set({P(1), kTop3}), kSupp3, Stability::Generalization));
  CHECK(is_stable(explicit_set({P(1), kTop3}), kSupp3, Stability::Specialization));
  // A set holding the generic point but missing a closed point is not
  // closed under specialization.
  CHECK_FALSE(is_stable(cofinite_closed({z_max(11)}, true), z, Stability::Specialization));
  CHECK(is_stable(cofinite_closed({z_max(11)}, true), z, Stability::Generalization));
  CHECK(is_stable(whole_set(), z, Stability::Specialization));
  CHECK(is_stable(empty_set(), z, Stability::Generalization));
}

TEST_CASE("density") {
  CHECK(is_dense(cofinite_closed({z_max(2)}, false), integers(), Topology::Zariski));
  CHECK_FALSE(is_dense(explicit_set({zmod_prime(2)}), integers_mod(12), Topology::Zariski));
  CHECK(is_dense(cofinite_min({}, false), symbolic_supplement({2}), Topology::Flat));
  CHECK_FALSE(is_dense(explicit_set({z_max(2), z_max(3)}), integers(), Topology::Zariski));
  CHECK_FALSE(is_dense(cofinite_min({3}, false), symbolic_supplement({2}), Topology::Zariski));
}

TEST_CASE("density criterion") {
  const auto zz = density_criterion(integers(), Topology::Zariski);
  CHECK(zz.holds);
  CHECK(zz.rationale == DensityRationale::FactorizationFinite);
  const auto zf = density_criterion(integers(), Topology::Flat);
  CHECK_FALSE(zf.holds);
  REQUIRE(zf.witness);
  CHECK(*zf.witness == int_elem(2));
  CHECK(*zf.witness_locus == cofinite_closed({z_max(2)}, true));
  CHECK(verify_certificate(zf, integers()));
  const RingExpr s = symbolic_supplement({2});
  const auto sz = density_criterion(s, Topology::Zariski);
  CHECK_FALSE(sz.holds);
  REQUIRE(sz.witness);
  CHECK(*sz.witness_locus == cofinite_min({1}, true));
  CHECK(verify_certificate(sz, s));
  const auto sf = density_criterion(s, Topology::Flat);
  CHECK(sf.holds);
  CHECK(sf.rationale == DensityRationale::LocalPzDimensionOne);
  CHECK(density_criterion(integers_mod(12), Topology::Flat).rationale == DensityRationale::FiniteSpectrum);
  CHECK_THROWS_AS(density_criterion(integers(), Topology::Patch), Error);
}

TEST_CASE("a tampered certificate fails verification") {
  auto c = density_criterion(integers(), Topology::Flat);
  c.witness = int_elem(1);
  CHECK_FALSE(verify_certificate(c, integers()));
  auto d = density_criterion(symbolic_supplement({2}), Topology::Zariski);
  d.witness_locus = explicit_set({supp_min(1)});
  CHECK_FALSE(verify_certificate(d, symbolic_supplement({2})));
}

TEST_CASE("closure operators are extensive, idempotent and monotone on random symbolic sets") {
  std::mt19937_64 rng(17);
  for (const auto& r : symbolic_zoo()) {
    for (int i = 0; i < 150; ++i) {
      const SpecSubset a = random_symbolic_subset(r, rng, false);
      const SpecSubset b = set_union(a, random_symbolic_subset(r, rng, false), r);
      for (const Topology t : {Topology::Zariski, Topology::Flat, Topology::Patch}) {
        const SpecSubset c = closure(a, r, t);
        REQUIRE(set_includes(c, a, r));
        REQUIRE(set_equal(closure(c, r, t), c, r));
        REQUIRE(set_includes(closure(b, r, t), c, r));
      }
      const SpecSubset pc = patch_closure(a, r);
      REQUIRE(set_includes(zariski_closure(a, r), pc, r));
      REQUIRE(set_includes(flat_closure(a, r), pc, r));
      REQUIRE(set_equal(zariski_closure(a, r), a, r) ==
              (set_equal(pc, a, r) && is_stable(a, r, Stability::Specialization)));
      REQUIRE(set_equal(flat_closure(a, r), a, r) ==
              (set_equal(pc, a, r) && is_stable(a, r, Stability::Generalization)));
    }
  }
}

TEST_CASE("stability agrees with a windowed check on symbolic spectra") {
  // On Z, F_p[x] and the supplement every specialization relation runs
  // between the special point and an ordinary point, so a window suffices.
  std::mt19937_64 rng(23);
  for (const auto& r : symbolic_zoo()) {
    std::vector<PrimePoint> window = ordinary_points(r, 16);
    const PrimePoint sp = special_point(r);
    for (int i = 0; i < 100; ++i) {
      const SpecSubset a = random_symbolic_subset(r, rng, false);
      bool spec_ok = true, gen_ok = true;
      for (const auto& p : window) {
        const bool in_p = subset_member(p, a), in_s = subset_member(sp, a);
        if (leq_specialization(sp, p, r)) {
          spec_ok = spec_ok && (!in_s || in_p);
          gen_ok = gen_ok && (!in_p || in_s);
        } else {
          spec_ok = spec_ok && (!in_p || in_s);
          gen_ok = gen_ok && (!in_s || in_p);
        }
      }
      REQUIRE(is_stable(a, r, Stability::Specialization) == spec_ok);
      REQUIRE(is_stable(a, r, Stability::Generalization) == gen_ok);
    }
  }
}
