#include "primespec/ideal.hpp"

#include <algorithm>

#include "primespec/errors.hpp"

namespace primespec {

namespace {

const MonomialQuotient* quotient_of(const RingExpr& ring) {
  if (ring.is<MonomialQuotient>()) return &ring.as<MonomialQuotient>();
  if (ring.is<LocalizedAtIrrelevant>()) return &ring.as<LocalizedAtIrrelevant>().inner;
  return nullptr;
}

bool is_principal_ring(const RingExpr& ring) {
  return ring.is<IntegerRing>() || ring.is<ModRing>() || ring.is<PrimeField>() || ring.is<RationalField>() ||
         ring.is<PolyRingFp>();
}

[[noreturn]] void mismatch(const IdealRepr& ideal, const RingExpr& ring) {
  fail(ErrorKind::KindMismatch, "ideal " + describe(ideal) + " does not belong to " + describe(ring));
}

RingElement canonical_generator(const RingElement& g0, const RingExpr& ring) {
  const RingElement g = normalize(g0, ring);
  if (ring.is<IntegerRing>()) {
    const BigInt& v = g.as<IntElem>().v;
    return int_elem(v < 0 ? BigInt(-v) : v);
  }
  if (ring.is<ModRing>()) {
    const BigInt& n = ring.as<ModRing>().n;
    return mod_elem(mod_floor(gcd(g.as<ModElem>().v, n), n));
  }
  if (ring.is<PrimeField>() || ring.is<RationalField>()) return is_zero(g, ring) ? zero(ring) : one(ring);
  return poly_elem(fpx::monic(g.as<PolyElem>().coeffs, ring.as<PolyRingFp>().p));
}

}  // namespace

IdealRepr principal(const RingElement& generator, const RingExpr& ring) {
  if (!is_principal_ring(ring)) fail(ErrorKind::KindMismatch, "principal ideals not modelled in " + describe(ring));
  return {PrincipalIdeal{canonical_generator(generator, ring)}};
}

IdealRepr monomial_ideal(std::vector<Exponent> gens, const RingExpr& ring) {
  const MonomialQuotient* q = quotient_of(ring);
  if (!q) fail(ErrorKind::KindMismatch, "monomial ideals not modelled in " + describe(ring));
  for (auto& g : gens) g = mono::resized(g, q->nvars);
  std::vector<Exponent> kept;
  for (auto& g : mono::minimalize(std::move(gens))) {
    if (!mono::member(q->gens, g)) kept.push_back(std::move(g));
  }
  return {MonomialIdeal{std::move(kept)}};
}

IdealRepr product_ideal(std::vector<IdealRepr> components, const RingExpr& ring) {
  if (!ring.is<ProductRing>()) fail(ErrorKind::KindMismatch, "product ideal over non-product " + describe(ring));
  const auto& factors = ring.as<ProductRing>().factors;
  if (components.size() != factors.size()) fail(ErrorKind::KindMismatch, "product ideal has wrong arity");
  for (std::size_t i = 0; i < factors.size(); ++i) components[i] = canonical(components[i], factors[i]);
  return {ProductIdeal{std::move(components)}};
}

IdealRepr zero_ideal(const RingExpr& ring) {
  if (is_principal_ring(ring)) return principal(zero(ring), ring);
  if (quotient_of(ring)) return monomial_ideal({}, ring);
  if (ring.is<ProductRing>()) {
    std::vector<IdealRepr> parts;
    for (const auto& f : ring.as<ProductRing>().factors) parts.push_back(zero_ideal(f));
    return product_ideal(std::move(parts), ring);
  }
  fail(ErrorKind::Unsupported, "ideals of " + describe(ring) + " are not finitely representable");
}

IdealRepr unit_ideal(const RingExpr& ring) {
  if (is_principal_ring(ring)) return principal(one(ring), ring);
  if (const auto* q = quotient_of(ring)) return monomial_ideal({Exponent(q->nvars, 0)}, ring);
  if (ring.is<ProductRing>()) {
    std::vector<IdealRepr> parts;
    for (const auto& f : ring.as<ProductRing>().factors) parts.push_back(unit_ideal(f));
    return product_ideal(std::move(parts), ring);
  }
  fail(ErrorKind::Unsupported, "ideals of " + describe(ring) + " are not finitely representable");
}

IdealRepr canonical(const IdealRepr& ideal, const RingExpr& ring) {
  if (ideal.is<PrincipalIdeal>()) return principal(ideal.as<PrincipalIdeal>().generator, ring);
  if (ideal.is<MonomialIdeal>()) return monomial_ideal(ideal.as<MonomialIdeal>().gens, ring);
  return product_ideal(ideal.as<ProductIdeal>().components, ring);
}

bool ideal_member(const IdealRepr& ideal0, const RingElement& r0, const RingExpr& ring) {
  const IdealRepr ideal = canonical(ideal0, ring);
  const RingElement r = normalize(r0, ring);
  if (ideal.is<PrincipalIdeal>()) {
    const RingElement& g = ideal.as<PrincipalIdeal>().generator;
    if (ring.is<IntegerRing>()) {
      const BigInt& d = g.as<IntElem>().v;
      return d == 0 ? r.as<IntElem>().v == 0 : r.as<IntElem>().v % d == 0;
    }
    if (ring.is<ModRing>()) {
      const BigInt& d = g.as<ModElem>().v;
      const BigInt& n = ring.as<ModRing>().n;
      return r.as<ModElem>().v % (d == 0 ? n : d) == 0;
    }
    if (ring.is<PrimeField>() || ring.is<RationalField>()) return !is_zero(g, ring) || is_zero(r, ring);
    return fpx::divides(g.as<PolyElem>().coeffs, r.as<PolyElem>().coeffs, ring.as<PolyRingFp>().p);
  }
  if (ideal.is<MonomialIdeal>()) {
    const auto& gens = ideal.as<MonomialIdeal>().gens;
    const auto& terms = r.as<MPolyElem>().terms;
    return std::all_of(terms.begin(), terms.end(), [&](const Term& t) { return mono::member(gens, t.e); });
  }
  const auto& parts = ideal.as<ProductIdeal>().components;
  const auto& items = r.as<TupleElem>().items;
  const auto& factors = ring.as<ProductRing>().factors;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!ideal_member(parts[i], items[i], factors[i])) return false;
  }
  return true;
}

bool ideal_contains(const IdealRepr& inner, const IdealRepr& outer, const RingExpr& ring) {
  for (const auto& g : ideal_generators(inner, ring)) {
    if (!ideal_member(outer, g, ring)) return false;
  }
  return true;
}

IdealRepr ideal_intersect(const IdealRepr& a0, const IdealRepr& b0, const RingExpr& ring) {
  const IdealRepr a = canonical(a0, ring), b = canonical(b0, ring);
  if (a.value.index() != b.value.index()) mismatch(b, ring);
  if (a.is<PrincipalIdeal>()) {
    const RingElement& x = a.as<PrincipalIdeal>().generator;
    const RingElement& y = b.as<PrincipalIdeal>().generator;
    if (ring.is<IntegerRing>()) return principal(int_elem(lcm(x.as<IntElem>().v, y.as<IntElem>().v)), ring);
    if (ring.is<ModRing>()) {
      const BigInt& n = ring.as<ModRing>().n;
      auto lift = [&](const BigInt& v) { return v == 0 ? n : v; };
      return principal(mod_elem(lcm(lift(x.as<ModElem>().v), lift(y.as<ModElem>().v))), ring);
    }
    if (ring.is<PrimeField>() || ring.is<RationalField>()) {
      return is_zero(x, ring) || is_zero(y, ring) ? zero_ideal(ring) : unit_ideal(ring);
    }
    return principal(poly_elem(fpx::lcm(x.as<PolyElem>().coeffs, y.as<PolyElem>().coeffs, ring.as<PolyRingFp>().p)),
                     ring);
  }
  if (a.is<MonomialIdeal>()) {
    // The dropped generators lie in I, which sits inside both ideals, so the
    // intersection is recovered by adding them back before taking lcms.
    const auto& q = *quotient_of(ring);
    auto full = [&](const MonomialIdeal& m) {
      std::vector<Exponent> g = m.gens;
      g.insert(g.end(), q.gens.begin(), q.gens.end());
      return mono::minimalize(std::move(g));
    };
    return monomial_ideal(mono::intersect(full(a.as<MonomialIdeal>()), full(b.as<MonomialIdeal>())), ring);
  }
  const auto& factors = ring.as<ProductRing>().factors;
  std::vector<IdealRepr> parts;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    parts.push_back(ideal_intersect(a.as<ProductIdeal>().components[i], b.as<ProductIdeal>().components[i], factors[i]));
  }
  return product_ideal(std::move(parts), ring);
}

std::vector<RingElement> ideal_generators(const IdealRepr& ideal0, const RingExpr& ring) {
  const IdealRepr ideal = canonical(ideal0, ring);
  if (ideal.is<PrincipalIdeal>()) return {ideal.as<PrincipalIdeal>().generator};
  if (ideal.is<MonomialIdeal>()) {
    std::vector<RingElement> out;
    for (const auto& g : ideal.as<MonomialIdeal>().gens) out.push_back(normalize(mpoly_elem({Term{Rational(1), g}}), ring));
    return out;
  }
  // e_j for j != i together with e_i * g for the generators g of component i.
  const auto& factors = ring.as<ProductRing>().factors;
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const auto& g : ideal_generators(ideal.as<ProductIdeal>().components[i], factors[i])) {
      std::vector<RingElement> items;
      for (std::size_t j = 0; j < factors.size(); ++j) items.push_back(j == i ? g : zero(factors[j]));
      out.push_back(tuple_elem(std::move(items)));
    }
  }
  return out;
}

IdealRepr nilradical(const RingExpr& ring, const Limits& limits) {
  if (ring.is<ModRing>()) return principal(mod_elem(radical(ring.as<ModRing>().n, limits)), ring);
  if (const auto* q = quotient_of(ring)) {
    // Intersection of the minimal primes (x_i : i in C) over minimal covers C.
    IdealRepr acc = unit_ideal(ring);
    for (const auto& cover : mono::minimal_vertex_covers(q->gens, q->nvars)) {
      std::vector<Exponent> vars;
      for (int v : cover) vars.push_back(mono::from_vars({v}, q->nvars));
      acc = ideal_intersect(acc, monomial_ideal(std::move(vars), ring), ring);
    }
    return acc;
  }
  if (is_principal_ring(ring)) return zero_ideal(ring);
  fail(ErrorKind::Unsupported, "nilradical is not computed for " + describe(ring));
}

std::string describe(const IdealRepr& ideal) {
  if (ideal.is<PrincipalIdeal>()) return "(" + describe(ideal.as<PrincipalIdeal>().generator) + ")";
  if (ideal.is<MonomialIdeal>()) {
    const auto& gens = ideal.as<MonomialIdeal>().gens;
    if (gens.empty()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + mono::to_string(gens[i]);
    return out + ")";
  }
  std::string out;
  const auto& parts = ideal.as<ProductIdeal>().components;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " x " : "") + describe(parts[i]);
  return out;
}

}  // namespace primespec
