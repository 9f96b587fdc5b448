#include "primespec/products.hpp"

#include <algorithm>

#include "primespec/errors.hpp"

namespace primespec {

namespace {

const ProductRing& as_product(const RingExpr& ring) {
  if (!ring.is<ProductRing>()) fail(ErrorKind::KindMismatch, describe(ring) + " is not a product ring");
  return ring.as<ProductRing>();
}

SpecSubset with_special(const SpecSubset& e, const RingExpr& ring) {
  return set_union(e, explicit_set({special_point(ring)}), ring);
}

bool nilpotent_by_squaring(RingElement t, const RingExpr& ring) {
  // Nilpotency indices of the sampled rings stay below 2^6.
  for (int i = 0; i < 7; ++i) {
    if (is_zero(t, ring)) return true;
    t = mul(t, t, ring);
  }
  return is_zero(t, ring);
}

std::vector<RingElement> quotient_samples(std::size_t nvars, bool supplement) {
  auto mono = [&](std::vector<int> vars) {
    Exponent e(supplement ? 0 : nvars, 0);
    for (int v : vars) {
      if (e.size() < static_cast<std::size_t>(v)) e.resize(static_cast<std::size_t>(v), 0);
      e[static_cast<std::size_t>(v - 1)] += 1;
    }
    return e;
  };
  const int n = static_cast<int>(nvars);
  std::vector<RingElement> out;
  out.push_back(mpoly_elem({}));
  out.push_back(mpoly_elem({Term{1, mono({})}}));
  for (int i = 1; i <= n; ++i) {
    out.push_back(mpoly_elem({Term{1, mono({i})}}));
    out.push_back(mpoly_elem({Term{1, mono({})}, Term{1, mono({i})}}));
    for (int j = i + 1; j <= n; ++j) {
      out.push_back(mpoly_elem({Term{1, mono({i})}, Term{1, mono({j})}}));
      out.push_back(mpoly_elem({Term{1, mono({i, j})}}));
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(ImageKind kind) { return kind == ImageKind::Quotient ? "quotient" : "local"; }

RingElement unit_idempotent(int slot, const RingExpr& product) {
  const auto& fs = as_product(product).factors;
  if (slot < 0 || static_cast<std::size_t>(slot) >= fs.size()) {
    fail(ErrorKind::BadSlot, "slot " + std::to_string(slot) + " out of range for " + describe(product));
  }
  std::vector<RingElement> items;
  for (std::size_t i = 0; i < fs.size(); ++i) items.push_back(static_cast<int>(i) == slot ? one(fs[i]) : zero(fs[i]));
  return tuple_elem(std::move(items));
}

SpecSubset direct_sum_locus(const RingExpr& product) {
  const auto& fs = as_product(product).factors;
  SpecSubset out = whole_set();
  for (std::size_t k = 0; k < fs.size(); ++k) {
    out = set_intersection(out, v_locus(unit_idempotent(static_cast<int>(k), product), product), product);
  }
  return canonicalize(out, product);
}

PrimePoint tame_contract(const PrimePoint& p, const RingMapSpec& map) {
  if (map.is<QuotientMap>() || map.is<ResidueMap>()) {
    fail(ErrorKind::UnsupportedMap, describe(map) + " does not map into a product");
  }
  if (!p.is<TamePrime>()) fail(ErrorKind::WildPrimeUnsupported, describe(p) + " is not tame");
  return contract(map, p);
}

SpecSubset quotient_product_image(const RingExpr& ring, const SpecSubset& e0) {
  const SpecSubset e = canonicalize(e0, ring);
  if (is_empty(e)) return e;
  switch (family_of(ring)) {
    case SpectrumFamily::Finite: {
      // V(⋂ p) with the intersection computed in the ideal lattice.
      const auto pts = *finite_members(e, ring);
      IdealRepr fold = prime_ideal(pts.front(), ring);
      for (std::size_t i = 1; i < pts.size(); ++i) fold = ideal_intersect(fold, prime_ideal(pts[i], ring), ring);
      std::set<PrimePoint> out;
      for (const auto& q : finite_points(ring)) {
        if (ideal_contains(fold, prime_ideal(q, ring), ring)) out.insert(q);
      }
      return canonicalize(explicit_set(std::move(out)), ring);
    }
    case SpectrumFamily::PidLike:
      if (subset_member(special_point(ring), e)) return whole_set();  // V(0)
      return is_finite(e) ? e : with_special(e, ring);
    case SpectrumFamily::Supplement:
      return with_special(e, ring);
  }
  fail(ErrorKind::UnsupportedSymbolic, "no image rule for " + describe(e) + " over " + describe(ring));
}

SpecSubset local_product_image(const RingExpr& ring, const SpecSubset& e0) {
  const SpecSubset e = canonicalize(e0, ring);
  if (is_empty(e)) return e;
  switch (family_of(ring)) {
    case SpectrumFamily::Finite: {
      std::set<PrimePoint> out;
      const auto all = finite_points(ring);
      const std::vector<PrimePoint> listed = *finite_members(e, ring);
      for (const auto& p : listed) {
        const IdealRepr pi = prime_ideal(p, ring);
        for (const auto& q : all) {
          if (ideal_contains(prime_ideal(q, ring), pi, ring)) out.insert(q);
        }
      }
      return canonicalize(explicit_set(std::move(out)), ring);
    }
    case SpectrumFamily::PidLike:
      return with_special(e, ring);
    case SpectrumFamily::Supplement:
      if (subset_member(supp_top(), e)) return whole_set();  // Λ(m)
      return is_finite(e) ? e : with_special(e, ring);
  }
  fail(ErrorKind::UnsupportedSymbolic, "no image rule for " + describe(e) + " over " + describe(ring));
}

SpecSubset product_image(const RingExpr& ring, const SpecSubset& e, ImageKind kind) {
  return kind == ImageKind::Quotient ? quotient_product_image(ring, e) : local_product_image(ring, e);
}

SpecSubset brute_force_image(const RingExpr& ring, const SpecSubset& e, ImageKind kind) {
  if (!is_finite(canonicalize(e, ring))) fail(ErrorKind::NonEnumerable, "brute force needs a finite family");
  const RingMapSpec map = kind == ImageKind::Quotient ? into_quotient_product(ring, e) : into_local_product(ring, e);
  std::set<PrimePoint> out;
  for (const auto& q : target_points(map)) out.insert(contract(map, q));
  return canonicalize(explicit_set(std::move(out)), ring);
}

bool is_unit_in_quotient_product(const RingElement& r, const SpecSubset& e, const RingExpr& ring) {
  return is_empty(set_intersection(e, v_locus(r, ring), ring));
}

std::vector<RingElement> sample_elements(const RingExpr& ring, std::size_t limit) {
  std::vector<RingElement> out;
  if (ring.is<ModRing>()) {
    const BigInt& n = ring.as<ModRing>().n;
    for (BigInt v = 0; v < n && v < 12; ++v) out.push_back(mod_elem(v));
    const BigInt rad = radical(n);
    for (BigInt k = 1; k <= 6 && k * rad < n; ++k) out.push_back(mod_elem(k * rad));
    for (const auto& pp : ring.as<ModRing>().factorization) out.push_back(mod_elem(n / pp.prime));
  } else if (ring.is<IntegerRing>()) {
    for (int v = -2; v <= 6; ++v) out.push_back(int_elem(v));
  } else if (ring.is<PrimeField>()) {
    out = {mod_elem(0), mod_elem(1), mod_elem(ring.as<PrimeField>().p - 1)};
  } else if (ring.is<RationalField>()) {
    out = {rat_elem(0), rat_elem(1), rat_elem(Rational(1, 2))};
  } else if (ring.is<PolyRingFp>()) {
    out = {poly_elem({}), poly_elem({1}), poly_elem({0, 1}), poly_elem({1, 1})};
  } else if (ring.is<MonomialQuotient>() || ring.is<LocalizedAtIrrelevant>()) {
    const auto& q = ring.is<MonomialQuotient>() ? ring.as<MonomialQuotient>() : ring.as<LocalizedAtIrrelevant>().inner;
    out = quotient_samples(q.nvars, false);
  } else if (ring.is<SymbolicSupplement>()) {
    out = quotient_samples(3, true);
  } else {
    const auto& fs = ring.as<ProductRing>().factors;
    std::vector<std::vector<RingElement>> per;
    std::size_t total = 1;
    for (const auto& f : fs) {
      per.push_back(sample_elements(f, limit));
      total *= per.back().size();
    }
    // Mixed-radix walk over the cartesian product, thinned by a fixed stride.
    const std::size_t stride = total > limit ? total / limit + 1 : 1;
    for (std::size_t idx = 0; idx < total; idx += stride) {
      std::vector<RingElement> items;
      std::size_t rest = idx;
      for (const auto& s : per) {
        items.push_back(s[rest % s.size()]);
        rest /= s.size();
      }
      out.push_back(tuple_elem(std::move(items)));
    }
  }
  for (auto& x : out) x = normalize(x, ring);
  std::sort(out.begin(), out.end(), [](const RingElement& a, const RingElement& b) { return describe(a) < describe(b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool nilradical_product_law_check(const RingExpr& product) {
  const auto& fs = as_product(product).factors;
  for (const auto& t : sample_elements(product)) {
    const auto& items = t.as<TupleElem>().items;
    bool componentwise = true;
    for (std::size_t i = 0; i < fs.size(); ++i) componentwise = componentwise && is_nilpotent(items[i], fs[i]);
    if (nilpotent_by_squaring(t, product) != componentwise) return false;
  }
  const auto mins = minimal_points(product);
  std::set<PrimePoint> minimal(mins.begin(), mins.end());
  return is_dense(explicit_set(std::move(minimal)), product, Topology::Zariski);
}

ImageReport strictness_demo(const RingExpr& ring, const SpecSubset& e, Topology topology) {
  if (topology == Topology::Patch) fail(ErrorKind::InvalidInput, "strictness is reported for zariski or flat");
  ImageReport rep;
  rep.topology = topology;
  const bool zariski = topology == Topology::Zariski;
  rep.image = zariski ? quotient_product_image(ring, e) : local_product_image(ring, e);
  rep.closure = closure(e, ring, topology);
  rep.witness = least_member(set_difference(rep.closure, rep.image, ring), ring);
  rep.strict = rep.witness.has_value();
  return rep;
}

}  // namespace primespec
