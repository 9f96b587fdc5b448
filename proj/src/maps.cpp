#include "primespec/maps.hpp"

#include <algorithm>

#include "primespec/errors.hpp"

namespace primespec {

namespace {

bool is_pid(const RingExpr& r) { return r.is<IntegerRing>() || r.is<PolyRingFp>(); }
bool is_field(const RingExpr& r) { return r.is<PrimeField>() || r.is<RationalField>(); }

bool strictly_below(const PrimePoint& p, const PrimePoint& q, const RingExpr& ring) {
  return p != q && leq_specialization(p, q, ring);
}

std::set<PrimePoint> mentioned_ordinary(const SpecSubset& e, const RingExpr& ring) {
  std::set<PrimePoint> out;
  if (e.is<ExplicitSet>()) {
    const PrimePoint s = special_point(ring);
    for (const auto& p : e.as<ExplicitSet>().points) {
      if (p != s) out.insert(p);
    }
  } else if (e.is<CofiniteClosed>()) {
    out = e.as<CofiniteClosed>().excluded;
  } else if (e.is<CofiniteMin>()) {
    for (long k : e.as<CofiniteMin>().excluded) out.insert(supp_min(k));
  }
  return out;
}

PrimePoint quotient_label(const RingExpr& r, const PrimePoint& base, const PrimePoint& x) {
  if (x.is<ZeroPrime>()) return base;
  check_point(x, r);
  if (!strictly_below(base, x, r)) {
    fail(ErrorKind::InvalidInput, describe(x) + " does not name a prime of the quotient by " + describe(base));
  }
  return x;
}

PrimePoint local_label(const RingExpr& r, const PrimePoint& base, const PrimePoint& x) {
  if (x.is<ZeroPrime>()) {
    if (is_pid(r)) return special_point(r);
    if (is_field(r)) return zero_prime();
    fail(ErrorKind::InvalidInput, "the zero label only names the generic point of a domain");
  }
  check_point(x, r);
  if (!leq_specialization(x, base, r)) {
    fail(ErrorKind::InvalidInput, describe(x) + " does not name a prime of the localization at " + describe(base));
  }
  return x;
}

std::vector<PrimePoint> quotient_labels(const RingExpr& r, const PrimePoint& base) {
  std::vector<PrimePoint> out{zero_prime()};
  switch (family_of(r)) {
    case SpectrumFamily::Finite:
      for (const auto& q : finite_points(r)) {
        if (strictly_below(base, q, r)) out.push_back(q);
      }
      break;
    case SpectrumFamily::PidLike:
      if (base == special_point(r)) fail(ErrorKind::NonEnumerable, "the quotient by (0) has infinite spectrum");
      break;
    case SpectrumFamily::Supplement:
      if (base.is<SuppMin>()) out.push_back(supp_top());
      break;
  }
  return out;
}

std::vector<PrimePoint> local_labels(const RingExpr& r, const PrimePoint& base) {
  std::vector<PrimePoint> out;
  switch (family_of(r)) {
    case SpectrumFamily::Finite:
      for (const auto& q : finite_points(r)) {
        if (leq_specialization(q, base, r)) out.push_back(q);
      }
      break;
    case SpectrumFamily::PidLike:
      out.push_back(zero_prime());
      if (base != special_point(r)) out.push_back(base);
      break;
    case SpectrumFamily::Supplement:
      if (base.is<SuppTop>()) fail(ErrorKind::NonEnumerable, "the localization at m has infinite spectrum");
      out.push_back(base);
      break;
  }
  return out;
}

std::vector<PrimePoint> mod_labels(const BigInt& d) {
  if (is_prime(d)) return {zero_prime()};
  std::vector<PrimePoint> out;
  for (const auto& p : prime_divisors(d)) out.push_back(zmod_prime(p));
  return out;
}

const SpecSubset* family_of_map(const RingMapSpec& map) {
  if (map.is<CanonicalIntoQuotientProduct>()) return &map.as<CanonicalIntoQuotientProduct>().family;
  if (map.is<CanonicalIntoLocalProduct>()) return &map.as<CanonicalIntoLocalProduct>().family;
  return nullptr;
}

bool is_zero_prime_of(const RingExpr& r, const PrimePoint& p) {
  switch (family_of(r)) {
    case SpectrumFamily::Finite:
      return ideal_contains(prime_ideal(p, r), zero_ideal(r), r);
    case SpectrumFamily::PidLike:
      return p == special_point(r);
    case SpectrumFamily::Supplement:
      return false;  // two distinct minimal primes
  }
  return false;
}

}  // namespace

RingMapSpec quotient_map(const RingExpr& source, const PrimePoint& prime) {
  check_point(prime, source);
  return {QuotientMap{source, prime}};
}

RingMapSpec into_quotient_product(const RingExpr& source, const SpecSubset& family) {
  return {CanonicalIntoQuotientProduct{source, canonicalize(family, source)}};
}

RingMapSpec into_local_product(const RingExpr& source, const SpecSubset& family) {
  return {CanonicalIntoLocalProduct{source, canonicalize(family, source)}};
}

RingMapSpec diagonal_into_mod_product(const BigInt& n, std::vector<BigInt> divisors) {
  if (n < 2) fail(ErrorKind::InvalidInput, "modulus must be at least 2");
  if (divisors.empty()) fail(ErrorKind::InvalidInput, "a diagonal map needs at least one factor");
  for (const auto& d : divisors) {
    if (d < 2 || n % d != 0) fail(ErrorKind::InvalidInput, to_string(d) + " is not a divisor >= 2 of " + to_string(n));
  }
  return {DiagonalIntoModProduct{n, std::move(divisors)}};
}

RingMapSpec residue_map(const RingExpr& source, const PrimePoint& prime) {
  check_point(prime, source);
  return {ResidueMap{source, prime}};
}

RingExpr source_ring(const RingMapSpec& map) {
  return std::visit(
      [](const auto& m) -> RingExpr {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, DiagonalIntoModProduct>) {
          return integers_mod(m.n, Limits{true, 16});
        } else {
          return m.source;
        }
      },
      map.value);
}

std::string describe(const RingMapSpec& map) {
  if (map.is<QuotientMap>()) {
    const auto& m = map.as<QuotientMap>();
    return describe(m.source) + " -> " + describe(m.source) + "/" + describe(m.prime);
  }
  if (map.is<ResidueMap>()) {
    const auto& m = map.as<ResidueMap>();
    return describe(m.source) + " -> kappa(" + describe(m.prime) + ")";
  }
  if (map.is<DiagonalIntoModProduct>()) {
    const auto& m = map.as<DiagonalIntoModProduct>();
    std::string out = "Z/" + to_string(m.n) + " ->";
    for (std::size_t i = 0; i < m.divisors.size(); ++i) out += (i ? " x Z/" : " Z/") + to_string(m.divisors[i]);
    return out;
  }
  const bool quot = map.is<CanonicalIntoQuotientProduct>();
  const RingExpr& r = quot ? map.as<CanonicalIntoQuotientProduct>().source : map.as<CanonicalIntoLocalProduct>().source;
  return describe(r) + " -> prod over " + describe(*family_of_map(map)) + (quot ? " of R/p" : " of R_p");
}

std::optional<PrimePoint> member_at(const SpecSubset& e0, const RingExpr& ring, long slot) {
  if (slot < 0) return std::nullopt;
  const SpecSubset e = canonicalize(e0, ring);
  if (const auto pts = finite_members(e, ring)) {
    if (static_cast<std::size_t>(slot) < pts->size()) return (*pts)[static_cast<std::size_t>(slot)];
    return std::nullopt;
  }
  if (subset_member(special_point(ring), e)) {
    if (slot == 0) return special_point(ring);
    --slot;
  }
  const auto excluded = mentioned_ordinary(e, ring);
  long idx = 0;
  for (const auto& p : ordinary_points(ring, static_cast<std::size_t>(slot) + excluded.size() + 1)) {
    if (excluded.count(p)) continue;
    if (idx++ == slot) return p;
  }
  return std::nullopt;
}

std::optional<long> slot_of(const SpecSubset& e0, const RingExpr& ring, const PrimePoint& p) {
  const SpecSubset e = canonicalize(e0, ring);
  if (!subset_member(p, e)) return std::nullopt;
  if (const auto pts = finite_members(e, ring)) {
    return static_cast<long>(std::lower_bound(pts->begin(), pts->end(), p) - pts->begin());
  }
  const bool special = subset_member(special_point(ring), e);
  if (p == special_point(ring)) return 0;
  const auto excluded = mentioned_ordinary(e, ring);
  for (std::size_t count = 16;; count *= 2) {
    const auto pts = ordinary_points(ring, count);
    const auto it = std::find(pts.begin(), pts.end(), p);
    if (it == pts.end()) continue;
    long idx = special ? 1 : 0;
    for (auto jt = pts.begin(); jt != it; ++jt) {
      if (!excluded.count(*jt)) ++idx;
    }
    return idx;
  }
}

PrimePoint contract(const RingMapSpec& map, const PrimePoint& q) {
  if (map.is<QuotientMap>()) {
    const auto& m = map.as<QuotientMap>();
    if (q.is<TamePrime>()) fail(ErrorKind::KindMismatch, "the target of a quotient map is not a product");
    return quotient_label(m.source, m.prime, q);
  }
  if (map.is<ResidueMap>()) {
    if (!q.is<ZeroPrime>()) fail(ErrorKind::InvalidInput, "a residue field has only the zero prime");
    return map.as<ResidueMap>().prime;
  }
  if (!q.is<TamePrime>()) fail(ErrorKind::WildPrimeUnsupported, describe(q) + " is not a tame prime of the target");
  const auto& t = q.as<TamePrime>();
  if (map.is<DiagonalIntoModProduct>()) {
    const auto& m = map.as<DiagonalIntoModProduct>();
    if (t.slot < 0 || static_cast<std::size_t>(t.slot) >= m.divisors.size()) {
      fail(ErrorKind::BadSlot, "slot " + std::to_string(t.slot) + " out of range");
    }
    const BigInt& d = m.divisors[static_cast<std::size_t>(t.slot)];
    if (t.inner->is<ZeroPrime>() && is_prime(d)) return zmod_prime(d);
    if (t.inner->is<ZmodPrime>() && d % t.inner->as<ZmodPrime>().p == 0 && is_prime(t.inner->as<ZmodPrime>().p)) {
      return zmod_prime(t.inner->as<ZmodPrime>().p);
    }
    fail(ErrorKind::InvalidInput, describe(*t.inner) + " is not a prime of Z/" + to_string(d));
  }
  const bool quot = map.is<CanonicalIntoQuotientProduct>();
  const RingExpr& r = quot ? map.as<CanonicalIntoQuotientProduct>().source : map.as<CanonicalIntoLocalProduct>().source;
  const auto base = member_at(*family_of_map(map), r, t.slot);
  if (!base) fail(ErrorKind::BadSlot, "slot " + std::to_string(t.slot) + " out of range");
  return quot ? quotient_label(r, *base, *t.inner) : local_label(r, *base, *t.inner);
}

bool is_injective(const RingMapSpec& map) {
  if (map.is<DiagonalIntoModProduct>()) {
    const auto& m = map.as<DiagonalIntoModProduct>();
    BigInt l = 1;
    for (const auto& d : m.divisors) l = lcm(l, d);
    return l == m.n;
  }
  if (map.is<QuotientMap>()) return is_zero_prime_of(map.as<QuotientMap>().source, map.as<QuotientMap>().prime);
  if (map.is<ResidueMap>()) return is_zero_prime_of(map.as<ResidueMap>().source, map.as<ResidueMap>().prime);

  const bool quot = map.is<CanonicalIntoQuotientProduct>();
  const RingExpr& r = quot ? map.as<CanonicalIntoQuotientProduct>().source : map.as<CanonicalIntoLocalProduct>().source;
  const SpecSubset e = canonicalize(*family_of_map(map), r);
  if (is_empty(e)) return false;
  switch (family_of(r)) {
    case SpectrumFamily::Finite: {
      const auto pts = *finite_members(e, r);
      if (quot) {
        IdealRepr fold = prime_ideal(pts.front(), r);
        for (std::size_t i = 1; i < pts.size(); ++i) fold = ideal_intersect(fold, prime_ideal(pts[i], r), r);
        return ideal_contains(fold, zero_ideal(r), r);
      }
      // Every ring here has Ass(R) = Min(R).
      for (const auto& m : minimal_points(r)) {
        if (std::none_of(pts.begin(), pts.end(), [&](const PrimePoint& p) { return leq_specialization(m, p, r); })) {
          return false;
        }
      }
      return true;
    }
    case SpectrumFamily::PidLike:
      // A nonzero element lies in finitely many maximal ideals.
      return quot ? (!is_finite(e) || subset_member(special_point(r), e)) : true;
    case SpectrumFamily::Supplement: {
      const bool all_min = set_includes(e, cofinite_min({}, false), r);
      return quot ? all_min : (all_min || subset_member(supp_top(), e));
    }
  }
  return false;
}

std::vector<PrimePoint> target_points(const RingMapSpec& map) {
  std::vector<PrimePoint> out;
  if (map.is<QuotientMap>()) {
    out = quotient_labels(map.as<QuotientMap>().source, map.as<QuotientMap>().prime);
  } else if (map.is<ResidueMap>()) {
    out.push_back(zero_prime());
  } else if (map.is<DiagonalIntoModProduct>()) {
    const auto& ds = map.as<DiagonalIntoModProduct>().divisors;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      for (auto& l : mod_labels(ds[i])) out.push_back(tame(static_cast<int>(i), std::move(l)));
    }
  } else {
    const bool quot = map.is<CanonicalIntoQuotientProduct>();
    const RingExpr& r = quot ? map.as<CanonicalIntoQuotientProduct>().source : map.as<CanonicalIntoLocalProduct>().source;
    const auto pts = finite_members(*family_of_map(map), r);
    if (!pts) fail(ErrorKind::NonEnumerable, "a product over an infinite family has wild primes");
    for (std::size_t i = 0; i < pts->size(); ++i) {
      for (auto& l : quot ? quotient_labels(r, (*pts)[i]) : local_labels(r, (*pts)[i])) {
        out.push_back(tame(static_cast<int>(i), std::move(l)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrimePoint laying_over(const RingMapSpec& map, const PrimePoint& p) {
  check_point(p, source_ring(map));
  auto matches = [&](const PrimePoint& q) {
    try {
      return contract(map, q) == p;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidInput || e.kind() == ErrorKind::BadSlot) return false;
      throw;
    }
  };
  std::vector<PrimePoint> candidates;
  bool enumerated = true;
  try {
    candidates = target_points(map);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonEnumerable) throw;
    enumerated = false;
  }
  if (!enumerated) {
    // Symbolic targets: the least lying-over prime sits in slot 0, in the
    // slot of p itself or in the slot of the special point; every other tame
    // prime contracts elsewhere.
    const RingExpr r = source_ring(map);
    if (map.is<QuotientMap>()) {
      const auto& base = map.as<QuotientMap>().prime;
      candidates.push_back(base == p ? zero_prime() : p);
    } else {
      const bool quot = map.is<CanonicalIntoQuotientProduct>();
      const SpecSubset& e = *family_of_map(map);
      std::vector<long> slots{0};
      if (const auto s = slot_of(e, r, p)) slots.push_back(*s);
      if (const auto s = slot_of(e, r, special_point(r))) slots.push_back(*s);
      for (long s : slots) {
        const auto base = member_at(e, r, s);
        if (!base) continue;
        PrimePoint label = p;
        if (quot && *base == p) label = zero_prime();
        if (!quot && is_pid(r) && p == special_point(r)) label = zero_prime();
        candidates.push_back(tame(static_cast<int>(s), label));
      }
      std::sort(candidates.begin(), candidates.end());
    }
  }
  for (const auto& q : candidates) {
    if (matches(q)) return q;
  }
  if (!enumerated) {
    fail(ErrorKind::NonEnumerable, "no tame prime of the target lies over " + describe(p) + "; only wild primes can");
  }
  fail(ErrorKind::NotFound, "no prime lies over " + describe(p) + " along " + describe(map));
}

std::optional<RingExpr> FieldDescriptor::as_ring() const {
  if (kind == Kind::PrimeField) return prime_field(characteristic);
  if (kind == Kind::Rationals) return rationals();
  return std::nullopt;
}

FieldDescriptor residue_field(const RingExpr& ring, const PrimePoint& p) {
  check_point(p, ring);
  FieldDescriptor f;
  auto prime_char = [&](const BigInt& q) {
    if (q > BigInt(std::numeric_limits<std::uint64_t>::max())) {
      fail(ErrorKind::Unsupported, "residue characteristic above 64 bits");
    }
    f.kind = FieldDescriptor::Kind::PrimeField;
    f.characteristic = static_cast<std::uint64_t>(q);
  };
  auto base_field = [&](const CoefficientField& k) {
    if (k.is_rational()) {
      f.kind = FieldDescriptor::Kind::Rationals;
    } else {
      prime_char(k.p);
    }
  };
  if (ring.is<IntegerRing>()) {
    if (p.is<ZMax>()) prime_char(p.as<ZMax>().p);
    else f.kind = FieldDescriptor::Kind::Rationals;
  } else if (ring.is<ModRing>()) {
    prime_char(p.as<ZmodPrime>().p);
  } else if (ring.is<PrimeField>()) {
    prime_char(ring.as<PrimeField>().p);
  } else if (ring.is<RationalField>()) {
    f.kind = FieldDescriptor::Kind::Rationals;
  } else if (ring.is<PolyRingFp>()) {
    const auto q = ring.as<PolyRingFp>().p;
    f.characteristic = q;
    if (p.is<FpxGeneric>()) {
      f.kind = FieldDescriptor::Kind::RationalFunctions;
      f.univariate_fpx = true;
    } else if (fpx::degree(p.as<FpxMax>().f) == 1) {
      f.kind = FieldDescriptor::Kind::PrimeField;
    } else {
      f.kind = FieldDescriptor::Kind::GaloisField;
      f.modulus = p.as<FpxMax>().f;
    }
  } else if (ring.is<MonomialQuotient>() || ring.is<LocalizedAtIrrelevant>()) {
    const auto& q = ring.is<MonomialQuotient>() ? ring.as<MonomialQuotient>() : ring.as<LocalizedAtIrrelevant>().inner;
    base_field(q.field);
    const auto& cover = p.as<MonoPrime>().cover;
    for (std::size_t i = 1; i <= q.nvars; ++i) {
      if (!std::binary_search(cover.begin(), cover.end(), static_cast<int>(i))) f.free_variables.push_back(static_cast<int>(i));
    }
    if (!f.free_variables.empty()) {
      f.characteristic = q.field.p;
      f.kind = FieldDescriptor::Kind::RationalFunctions;
    }
  } else if (ring.is<SymbolicSupplement>()) {
    base_field(ring.as<SymbolicSupplement>().field);
    if (p.is<SuppMin>()) {
      f.characteristic = ring.as<SymbolicSupplement>().field.p;
      f.kind = FieldDescriptor::Kind::RationalFunctions;
      f.free_variables = {static_cast<int>(p.as<SuppMin>().k)};
    }
  } else {
    const auto& t = p.as<TamePrime>();
    return residue_field(ring.as<ProductRing>().factors[static_cast<std::size_t>(t.slot)], *t.inner);
  }
  return f;
}

std::string describe(const FieldDescriptor& f) {
  const std::string base = f.characteristic == 0 ? "Q" : "F_" + std::to_string(f.characteristic);
  switch (f.kind) {
    case FieldDescriptor::Kind::PrimeField: return base;
    case FieldDescriptor::Kind::Rationals: return "Q";
    case FieldDescriptor::Kind::GaloisField:
      return base + "[x]/(" + describe(poly_elem(f.modulus)) + ")";
    case FieldDescriptor::Kind::RationalFunctions: {
      if (f.univariate_fpx) return base + "(x)";
      std::string vars;
      for (int v : f.free_variables) vars += (vars.empty() ? "x" : ", x") + std::to_string(v);
      return base + "(" + vars + ")";
    }
  }
  return "?";
}

namespace {

RingElement product_element(const std::vector<PrimePoint>& pts, const RingExpr& ring) {
  RingElement a = one(ring);
  for (const auto& p : pts) {
    const auto gens = ideal_generators(prime_ideal(p, ring), ring);
    a = mul(a, gens.front(), ring);
  }
  return a;
}

}  // namespace

SpecSubset image_via_residue_fields(const RingExpr& ring, const SpecSubset& e0) {
  const SpecSubset e = canonicalize(e0, ring);
  auto meets = [&](const SpecSubset& n) { return !is_empty(set_intersection(e, n, ring)); };

  if (family_of(ring) == SpectrumFamily::Finite) {
    std::set<PrimePoint> image;
    for (const auto& q : finite_points(ring)) {
      // V(generators of q) cut down by D(a) for one a per strictly larger
      // prime, with a ∉ q read off as "a is a unit in kappa(q)".
      SpecSubset n = whole_set();
      for (const auto& b : ideal_generators(prime_ideal(q, ring), ring)) n = set_intersection(n, v_locus(b, ring), ring);
      const std::vector<PrimePoint> listed = *finite_members(n, ring);
      for (const auto& q2 : listed) {
        if (q2 == q) continue;
        for (const auto& a : ideal_generators(prime_ideal(q2, ring), ring)) {
          if (!prime_contains(q, a, ring)) {
            n = set_intersection(n, d_locus(a, ring), ring);
            break;
          }
        }
      }
      if (meets(n)) image.insert(q);
    }
    return canonicalize(explicit_set(std::move(image)), ring);
  }

  const PrimePoint special = special_point(ring);
  const auto mentioned = mentioned_ordinary(e, ring);
  PrimePoint representative = special;
  for (const auto& p : ordinary_points(ring, mentioned.size() + 1)) {
    if (!mentioned.count(p)) {
      representative = p;
      break;
    }
  }
  // Ordinary members of E (all of them when E is finite, otherwise those in
  // an initial segment): the adversarial part of a neighbourhood of the
  // special point.
  std::vector<PrimePoint> early;
  if (is_finite(e)) {
    const std::vector<PrimePoint> listed = *finite_members(e, ring);
    for (const auto& p : listed) {
      if (p != special) early.push_back(p);
    }
  } else {
    for (const auto& p : ordinary_points(ring, mentioned.size() + 4)) {
      if (subset_member(p, e)) early.push_back(p);
    }
  }

  auto ordinary_in_image = [&](const PrimePoint& q) {
    if (ring.is<SymbolicSupplement>()) {
      const long k = q.as<SuppMin>().k;
      return meets(d_locus(variable(static_cast<int>(k), static_cast<std::size_t>(k)), ring));
    }
    return meets(v_locus(ideal_generators(prime_ideal(q, ring), ring).front(), ring));
  };
  bool special_in = false;
  if (ring.is<SymbolicSupplement>()) {
    RingElement b = zero(ring);
    for (const auto& p : early) {
      const long k = p.as<SuppMin>().k;
      b = add(b, variable(static_cast<int>(k), static_cast<std::size_t>(k)), ring);
    }
    special_in = meets(v_locus(b, ring));
  } else {
    // The product of distinct monic irreducibles can exceed the default
    // factorization cap; its factors are known to be small.
    special_in = meets(d_locus(product_element(early, ring), ring, Limits{true, 4096}));
  }

  std::set<PrimePoint> in, out;
  for (const auto& p : mentioned) (ordinary_in_image(p) ? in : out).insert(p);
  SpecSubset result;
  if (representative != special && ordinary_in_image(representative)) {
    out.insert(special);
    result = set_complement(explicit_set(out), ring);
  } else {
    result = canonicalize(explicit_set(in), ring);
  }
  if (special_in) result = set_union(result, explicit_set({special}), ring);
  return result;
}

}  // namespace primespec
