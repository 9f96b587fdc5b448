#include "primespec/element.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "primespec/errors.hpp"

namespace primespec {

namespace {

[[noreturn]] void mismatch(const RingElement& e, const RingExpr& ring) {
  fail(ErrorKind::KindMismatch, "element " + describe(e) + " does not belong to " + describe(ring));
}

Rational coefficient_in(const Rational& c, const CoefficientField& field) {
  if (field.is_rational()) return c;
  const BigInt p(field.p);
  const BigInt num = mod_floor(boost::multiprecision::numerator(c), p);
  const BigInt den = mod_floor(boost::multiprecision::denominator(c), p);
  if (den == 0) fail(ErrorKind::InvalidInput, "coefficient " + to_string(c) + " has denominator divisible by p");
  const auto inv = inv_mod(static_cast<std::uint64_t>(den), field.p);
  return Rational(mod_floor(num * inv, p));
}

Rational coeff_add(const Rational& a, const Rational& b, const CoefficientField& field) {
  return coefficient_in(a + b, field);
}

Rational coeff_mul(const Rational& a, const Rational& b, const CoefficientField& field) {
  return coefficient_in(a * b, field);
}

// Shared canonicalization for MonomialQuotient, its localization and the
// symbolic supplement. `nvars == 0` means "any number of variables" and
// exponent vectors are stored without trailing zeros.
struct PolyContext {
  CoefficientField field;
  std::size_t nvars = 0;
  const std::vector<Exponent>* gens = nullptr;
  bool supplement_rule = false;  // delete monomials with two distinct variables
};

PolyContext context_of(const RingExpr& ring) {
  if (ring.is<MonomialQuotient>()) {
    const auto& q = ring.as<MonomialQuotient>();
    return {q.field, q.nvars, &q.gens, false};
  }
  if (ring.is<LocalizedAtIrrelevant>()) {
    const auto& q = ring.as<LocalizedAtIrrelevant>().inner;
    return {q.field, q.nvars, &q.gens, false};
  }
  if (ring.is<SymbolicSupplement>()) return {ring.as<SymbolicSupplement>().field, 0, nullptr, true};
  fail(ErrorKind::InternalError, "no polynomial context for " + describe(ring));
}

bool is_poly_ring(const RingExpr& ring) {
  return ring.is<MonomialQuotient>() || ring.is<LocalizedAtIrrelevant>() || ring.is<SymbolicSupplement>();
}

MPolyElem canonical_mpoly(const std::vector<Term>& terms, const PolyContext& ctx) {
  std::map<Exponent, Rational> acc;
  for (const auto& t : terms) {
    Exponent e = t.e;
    if (ctx.nvars > 0) {
      if (e.size() > ctx.nvars && !mono::is_one(Exponent(e.begin() + static_cast<std::ptrdiff_t>(ctx.nvars), e.end()))) {
        fail(ErrorKind::KindMismatch, "monomial " + mono::to_string(e) + " uses more than " +
                                          std::to_string(ctx.nvars) + " variables");
      }
      e = mono::resized(std::move(e), ctx.nvars);
    } else {
      e = mono::without_trailing_zeros(std::move(e));
    }
    if (ctx.supplement_rule && mono::distinct_variables(e) >= 2) continue;
    if (ctx.gens && mono::member(*ctx.gens, e)) continue;
    auto [it, inserted] = acc.try_emplace(e, coefficient_in(t.c, ctx.field));
    if (!inserted) it->second = coeff_add(it->second, t.c, ctx.field);
  }
  MPolyElem out;
  for (auto& [e, c] : acc) {
    if (c != 0) out.terms.push_back({c, e});
  }
  return out;
}

template <class Fn>
RingElement componentwise(const RingElement& a, const RingElement& b, const ProductRing& ring, Fn fn) {
  const auto& ta = a.as<TupleElem>().items;
  const auto& tb = b.as<TupleElem>().items;
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < ring.factors.size(); ++i) out.push_back(fn(ta[i], tb[i], ring.factors[i]));
  return tuple_elem(std::move(out));
}

bool all_components(const RingElement& r, const ProductRing& ring,
                    bool (*pred)(const RingElement&, const RingExpr&)) {
  const auto& items = r.as<TupleElem>().items;
  for (std::size_t i = 0; i < ring.factors.size(); ++i) {
    if (!pred(items[i], ring.factors[i])) return false;
  }
  return true;
}

// True when every monomial of `p` lies in every minimal prime of the
// quotient, i.e. is divisible by a variable of every minimal vertex cover.
bool in_every_minimal_prime(const MPolyElem& p, const MonomialQuotient& q) {
  const auto covers = mono::minimal_vertex_covers(q.gens, q.nvars);
  for (const auto& t : p.terms) {
    const VarSet s = mono::support(t.e);
    for (const auto& c : covers) {
      const bool hit = std::any_of(s.begin(), s.end(), [&](int v) { return std::binary_search(c.begin(), c.end(), v); });
      if (!hit) return false;
    }
  }
  return true;
}

}  // namespace

RingElement int_elem(const BigInt& v) { return {IntElem{v}}; }
RingElement mod_elem(const BigInt& v) { return {ModElem{v}}; }
RingElement rat_elem(const Rational& v) { return {RatElem{v}}; }
RingElement poly_elem(fpx::Coeffs coeffs) { return {PolyElem{std::move(coeffs)}}; }
RingElement mpoly_elem(std::vector<Term> terms) { return {MPolyElem{std::move(terms)}}; }
RingElement tuple_elem(std::vector<RingElement> items) { return {TupleElem{std::move(items)}}; }

RingElement variable(int k, std::size_t nvars) {
  Exponent e(std::max<std::size_t>(nvars, static_cast<std::size_t>(k)), 0);
  e[static_cast<std::size_t>(k - 1)] = 1;
  return mpoly_elem({Term{Rational(1), e}});
}

RingElement normalize(const RingElement& e, const RingExpr& ring) {
  if (ring.is<IntegerRing>()) {
    if (!e.is<IntElem>()) mismatch(e, ring);
    return e;
  }
  if (ring.is<ModRing>()) {
    if (!e.is<ModElem>()) mismatch(e, ring);
    return mod_elem(mod_floor(e.as<ModElem>().v, ring.as<ModRing>().n));
  }
  if (ring.is<PrimeField>()) {
    if (!e.is<ModElem>()) mismatch(e, ring);
    return mod_elem(mod_floor(e.as<ModElem>().v, BigInt(ring.as<PrimeField>().p)));
  }
  if (ring.is<RationalField>()) {
    if (!e.is<RatElem>()) mismatch(e, ring);
    return e;
  }
  if (ring.is<PolyRingFp>()) {
    if (!e.is<PolyElem>()) mismatch(e, ring);
    return poly_elem(fpx::reduce(e.as<PolyElem>().coeffs, ring.as<PolyRingFp>().p));
  }
  if (is_poly_ring(ring)) {
    if (!e.is<MPolyElem>()) mismatch(e, ring);
    return {canonical_mpoly(e.as<MPolyElem>().terms, context_of(ring))};
  }
  const auto& prod = ring.as<ProductRing>();
  if (!e.is<TupleElem>() || e.as<TupleElem>().items.size() != prod.factors.size()) mismatch(e, ring);
  std::vector<RingElement> items;
  for (std::size_t i = 0; i < prod.factors.size(); ++i) {
    items.push_back(normalize(e.as<TupleElem>().items[i], prod.factors[i]));
  }
  return tuple_elem(std::move(items));
}

RingElement zero(const RingExpr& ring) {
  if (ring.is<IntegerRing>()) return int_elem(0);
  if (ring.is<ModRing>() || ring.is<PrimeField>()) return mod_elem(0);
  if (ring.is<RationalField>()) return rat_elem(0);
  if (ring.is<PolyRingFp>()) return poly_elem({});
  if (is_poly_ring(ring)) return mpoly_elem({});
  std::vector<RingElement> items;
  for (const auto& f : ring.as<ProductRing>().factors) items.push_back(zero(f));
  return tuple_elem(std::move(items));
}

RingElement one(const RingExpr& ring) {
  if (ring.is<IntegerRing>()) return int_elem(1);
  if (ring.is<ModRing>() || ring.is<PrimeField>()) return normalize(mod_elem(1), ring);
  if (ring.is<RationalField>()) return rat_elem(1);
  if (ring.is<PolyRingFp>()) return poly_elem({1});
  if (is_poly_ring(ring)) {
    const auto ctx = context_of(ring);
    return {canonical_mpoly({Term{Rational(1), Exponent(ctx.nvars, 0)}}, ctx)};
  }
  std::vector<RingElement> items;
  for (const auto& f : ring.as<ProductRing>().factors) items.push_back(one(f));
  return tuple_elem(std::move(items));
}

RingElement add(const RingElement& a0, const RingElement& b0, const RingExpr& ring) {
  const RingElement a = normalize(a0, ring), b = normalize(b0, ring);
  if (ring.is<IntegerRing>()) return int_elem(a.as<IntElem>().v + b.as<IntElem>().v);
  if (ring.is<ModRing>() || ring.is<PrimeField>()) return normalize(mod_elem(a.as<ModElem>().v + b.as<ModElem>().v), ring);
  if (ring.is<RationalField>()) return rat_elem(a.as<RatElem>().v + b.as<RatElem>().v);
  if (ring.is<PolyRingFp>()) return poly_elem(fpx::add(a.as<PolyElem>().coeffs, b.as<PolyElem>().coeffs, ring.as<PolyRingFp>().p));
  if (is_poly_ring(ring)) {
    std::vector<Term> terms = a.as<MPolyElem>().terms;
    const auto& more = b.as<MPolyElem>().terms;
    terms.insert(terms.end(), more.begin(), more.end());
    return {canonical_mpoly(terms, context_of(ring))};
  }
  return componentwise(a, b, ring.as<ProductRing>(), [](const auto& x, const auto& y, const auto& r) { return add(x, y, r); });
}

RingElement negate(const RingElement& a0, const RingExpr& ring) {
  const RingElement a = normalize(a0, ring);
  if (ring.is<IntegerRing>()) return int_elem(-a.as<IntElem>().v);
  if (ring.is<ModRing>() || ring.is<PrimeField>()) return normalize(mod_elem(-a.as<ModElem>().v), ring);
  if (ring.is<RationalField>()) return rat_elem(-a.as<RatElem>().v);
  if (ring.is<PolyRingFp>()) return poly_elem(fpx::sub({}, a.as<PolyElem>().coeffs, ring.as<PolyRingFp>().p));
  if (is_poly_ring(ring)) {
    std::vector<Term> terms = a.as<MPolyElem>().terms;
    for (auto& t : terms) t.c = -t.c;
    return {canonical_mpoly(terms, context_of(ring))};
  }
  const auto& prod = ring.as<ProductRing>();
  std::vector<RingElement> items;
  for (std::size_t i = 0; i < prod.factors.size(); ++i) items.push_back(negate(a.as<TupleElem>().items[i], prod.factors[i]));
  return tuple_elem(std::move(items));
}

RingElement sub(const RingElement& a, const RingElement& b, const RingExpr& ring) {
  return add(a, negate(b, ring), ring);
}

RingElement mul(const RingElement& a0, const RingElement& b0, const RingExpr& ring) {
  const RingElement a = normalize(a0, ring), b = normalize(b0, ring);
  if (ring.is<IntegerRing>()) return int_elem(a.as<IntElem>().v * b.as<IntElem>().v);
  if (ring.is<ModRing>() || ring.is<PrimeField>()) return normalize(mod_elem(a.as<ModElem>().v * b.as<ModElem>().v), ring);
  if (ring.is<RationalField>()) return rat_elem(a.as<RatElem>().v * b.as<RatElem>().v);
  if (ring.is<PolyRingFp>()) return poly_elem(fpx::mul(a.as<PolyElem>().coeffs, b.as<PolyElem>().coeffs, ring.as<PolyRingFp>().p));
  if (is_poly_ring(ring)) {
    const auto ctx = context_of(ring);
    std::vector<Term> terms;
    for (const auto& s : a.as<MPolyElem>().terms) {
      for (const auto& t : b.as<MPolyElem>().terms) terms.push_back({coeff_mul(s.c, t.c, ctx.field), mono::product(s.e, t.e)});
    }
    return {canonical_mpoly(terms, ctx)};
  }
  return componentwise(a, b, ring.as<ProductRing>(), [](const auto& x, const auto& y, const auto& r) { return mul(x, y, r); });
}

RingElement power(const RingElement& a, unsigned exponent, const RingExpr& ring) {
  RingElement result = one(ring);
  RingElement base = normalize(a, ring);
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base, ring);
    base = mul(base, base, ring);
    exponent >>= 1U;
  }
  return result;
}

bool is_zero(const RingElement& e, const RingExpr& ring) { return normalize(e, ring) == zero(ring); }

bool is_unit(const RingElement& r0, const RingExpr& ring) {
  const RingElement r = normalize(r0, ring);
  if (ring.is<IntegerRing>()) return r.as<IntElem>().v == 1 || r.as<IntElem>().v == -1;
  if (ring.is<ModRing>()) return gcd(r.as<ModElem>().v, ring.as<ModRing>().n) == 1;
  if (ring.is<PrimeField>()) return r.as<ModElem>().v != 0;
  if (ring.is<RationalField>()) return r.as<RatElem>().v != 0;
  if (ring.is<PolyRingFp>()) return r.as<PolyElem>().coeffs.size() == 1;
  if (ring.is<MonomialQuotient>()) {
    const auto& p = r.as<MPolyElem>();
    if (constant_term(p) == 0) return false;
    MPolyElem rest;
    for (const auto& t : p.terms) {
      if (!mono::is_one(t.e)) rest.terms.push_back(t);
    }
    return in_every_minimal_prime(rest, ring.as<MonomialQuotient>());
  }
  if (ring.is<LocalizedAtIrrelevant>() || ring.is<SymbolicSupplement>()) {
    return constant_term(r.as<MPolyElem>()) != 0;
  }
  return all_components(r, ring.as<ProductRing>(), [](const RingElement& x, const RingExpr& f) { return is_unit(x, f); });
}

bool is_nilpotent(const RingElement& r0, const RingExpr& ring) {
  const RingElement r = normalize(r0, ring);
  if (ring.is<ModRing>()) {
    const auto& m = ring.as<ModRing>();
    return std::all_of(m.factorization.begin(), m.factorization.end(),
                       [&](const PrimePower& pp) { return r.as<ModElem>().v % pp.prime == 0; });
  }
  if (ring.is<MonomialQuotient>()) return in_every_minimal_prime(r.as<MPolyElem>(), ring.as<MonomialQuotient>());
  if (ring.is<LocalizedAtIrrelevant>()) {
    return in_every_minimal_prime(r.as<MPolyElem>(), ring.as<LocalizedAtIrrelevant>().inner);
  }
  if (ring.is<ProductRing>()) {
    return all_components(r, ring.as<ProductRing>(),
                          [](const RingElement& x, const RingExpr& f) { return is_nilpotent(x, f); });
  }
  // Z, fields, F_p[x] and the supplement ring are reduced.
  return r == zero(ring);
}

bool is_regular(const RingElement& r0, const RingExpr& ring) {
  if (is_poly_ring(ring)) fail(ErrorKind::Unsupported, "regularity is not decided for " + describe(ring));
  const RingElement r = normalize(r0, ring);
  if (ring.is<ModRing>()) {
    const auto& m = ring.as<ModRing>();
    return std::none_of(m.factorization.begin(), m.factorization.end(),
                        [&](const PrimePower& pp) { return r.as<ModElem>().v % pp.prime == 0; });
  }
  if (ring.is<ProductRing>()) {
    return all_components(r, ring.as<ProductRing>(),
                          [](const RingElement& x, const RingExpr& f) { return is_regular(x, f); });
  }
  return r != zero(ring);
}

Rational constant_term(const MPolyElem& p) {
  for (const auto& t : p.terms) {
    if (mono::is_one(t.e)) return t.c;
  }
  return Rational(0);
}

VarSet occurring_variables(const MPolyElem& p) {
  VarSet out;
  for (const auto& t : p.terms) {
    for (int v : mono::support(t.e)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string describe(const RingElement& e) {
  struct Visitor {
    std::string operator()(const IntElem& x) const { return to_string(x.v); }
    std::string operator()(const ModElem& x) const { return to_string(x.v); }
    std::string operator()(const RatElem& x) const { return to_string(x.v); }
    std::string operator()(const PolyElem& x) const {
      if (x.coeffs.empty()) return "0";
      std::string out;
      for (std::size_t i = x.coeffs.size(); i-- > 0;) {
        if (x.coeffs[i] == 0) continue;
        if (!out.empty()) out += "+";
        const bool unit = x.coeffs[i] == 1;
        if (i == 0) out += std::to_string(x.coeffs[i]);
        else out += (unit ? "" : std::to_string(x.coeffs[i])) + (i == 1 ? "x" : "x^" + std::to_string(i));
      }
      return out;
    }
    std::string operator()(const MPolyElem& x) const {
      if (x.terms.empty()) return "0";
      std::string out;
      for (const auto& t : x.terms) {
        if (!out.empty()) out += "+";
        if (mono::is_one(t.e)) out += to_string(t.c);
        else out += (t.c == 1 ? "" : to_string(t.c) + "*") + mono::to_string(t.e);
      }
      return out;
    }
    std::string operator()(const TupleElem& x) const {
      std::string out = "(";
      for (std::size_t i = 0; i < x.items.size(); ++i) out += (i ? ", " : "") + describe(x.items[i]);
      return out + ")";
    }
  };
  return std::visit(Visitor{}, e.value);
}

}  // namespace primespec
