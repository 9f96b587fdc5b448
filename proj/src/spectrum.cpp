#include "primespec/spectrum.hpp"

#include <algorithm>

#include "primespec/errors.hpp"

namespace primespec {

namespace {

const MonomialQuotient* quotient_of(const RingExpr& ring) {
  if (ring.is<MonomialQuotient>()) return &ring.as<MonomialQuotient>();
  if (ring.is<LocalizedAtIrrelevant>()) return &ring.as<LocalizedAtIrrelevant>().inner;
  return nullptr;
}

[[noreturn]] void point_mismatch(const PrimePoint& p, const RingExpr& ring) {
  fail(ErrorKind::KindMismatch, "point " + describe(p) + " is not a prime of " + describe(ring));
}

bool cover_valid(const VarSet& cover, const MonomialQuotient& q) {
  if (!std::is_sorted(cover.begin(), cover.end())) return false;
  for (int v : cover) {
    if (v < 1 || static_cast<std::size_t>(v) > q.nvars) return false;
  }
  return mono::is_vertex_cover(cover, q.gens);
}

VarSet all_vars(std::size_t n) {
  VarSet out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

SpectrumFamily family_of(const RingExpr& ring) {
  if (ring.is<IntegerRing>() || ring.is<PolyRingFp>()) return SpectrumFamily::PidLike;
  if (ring.is<SymbolicSupplement>()) return SpectrumFamily::Supplement;
  if (has_finite_spectrum(ring)) return SpectrumFamily::Finite;
  fail(ErrorKind::NonEnumerable, "spectrum of " + describe(ring) + " has no finite or symbolic representation");
}

bool has_finite_spectrum(const RingExpr& ring) {
  if (ring.is<ModRing>() || ring.is<PrimeField>() || ring.is<RationalField>() || ring.is<LocalizedAtIrrelevant>()) {
    return true;
  }
  // Non-monomial primes appear as soon as the quotient has positive dimension.
  if (ring.is<MonomialQuotient>()) return monomial_dimension(ring.as<MonomialQuotient>()) == 0;
  if (ring.is<ProductRing>()) {
    const auto& fs = ring.as<ProductRing>().factors;
    return std::all_of(fs.begin(), fs.end(), [](const RingExpr& f) { return has_finite_spectrum(f); });
  }
  return false;
}

std::vector<PrimePoint> finite_points(const RingExpr& ring) {
  if (!has_finite_spectrum(ring)) {
    fail(ErrorKind::NonEnumerable, "spectrum of " + describe(ring) + " is not finite");
  }
  std::vector<PrimePoint> out;
  if (ring.is<ModRing>()) {
    for (const auto& pp : ring.as<ModRing>().factorization) out.push_back(zmod_prime(pp.prime));
  } else if (ring.is<PrimeField>() || ring.is<RationalField>()) {
    out.push_back(zero_prime());
  } else if (const auto* q = quotient_of(ring)) {
    for (auto& c : mono::minimal_vertex_covers(q->gens, q->nvars)) out.push_back(mono_prime(std::move(c)));
    out.push_back(mono_prime(all_vars(q->nvars)));
  } else {
    const auto& fs = ring.as<ProductRing>().factors;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (auto& q : finite_points(fs[i])) out.push_back(tame(static_cast<int>(i), std::move(q)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PrimePoint> minimal_points(const RingExpr& ring) {
  const auto all = finite_points(ring);
  std::vector<PrimePoint> out;
  for (const auto& p : all) {
    const bool has_smaller =
        std::any_of(all.begin(), all.end(), [&](const PrimePoint& q) { return q != p && leq_specialization(q, p, ring); });
    if (!has_smaller) out.push_back(p);
  }
  return out;
}

SpecSubset enumerate_spec(const RingExpr& ring) {
  if (family_of(ring) != SpectrumFamily::Finite) return whole_set();
  const auto pts = finite_points(ring);
  return explicit_set(std::set<PrimePoint>(pts.begin(), pts.end()));
}

bool point_belongs(const PrimePoint& p, const RingExpr& ring, const Limits& limits) {
  if (ring.is<IntegerRing>()) return p.is<ZGeneric>() || (p.is<ZMax>() && is_prime(p.as<ZMax>().p));
  if (ring.is<ModRing>()) {
    if (!p.is<ZmodPrime>()) return false;
    const auto& f = ring.as<ModRing>().factorization;
    return std::any_of(f.begin(), f.end(), [&](const PrimePower& pp) { return pp.prime == p.as<ZmodPrime>().p; });
  }
  if (ring.is<PrimeField>() || ring.is<RationalField>()) return p.is<ZeroPrime>();
  if (ring.is<PolyRingFp>()) {
    if (p.is<FpxGeneric>()) return true;
    if (!p.is<FpxMax>()) return false;
    const auto& f = p.as<FpxMax>().f;
    const auto prime = ring.as<PolyRingFp>().p;
    return !f.empty() && f.back() == 1 && fpx::reduce(f, prime) == f && fpx::is_irreducible(f, prime, limits);
  }
  if (const auto* q = quotient_of(ring)) return p.is<MonoPrime>() && cover_valid(p.as<MonoPrime>().cover, *q);
  if (ring.is<SymbolicSupplement>()) return p.is<SuppTop>() || (p.is<SuppMin>() && p.as<SuppMin>().k >= 1);
  if (!p.is<TamePrime>()) return false;
  const auto& t = p.as<TamePrime>();
  const auto& fs = ring.as<ProductRing>().factors;
  return t.slot >= 0 && static_cast<std::size_t>(t.slot) < fs.size() && t.inner &&
         point_belongs(*t.inner, fs[static_cast<std::size_t>(t.slot)], limits);
}

void check_point(const PrimePoint& p, const RingExpr& ring, const Limits& limits) {
  if (!point_belongs(p, ring, limits)) point_mismatch(p, ring);
}

bool leq_specialization(const PrimePoint& p, const PrimePoint& q, const RingExpr& ring) {
  check_point(p, ring);
  check_point(q, ring);
  if (p == q) return true;
  if (ring.is<IntegerRing>()) return p.is<ZGeneric>();
  if (ring.is<PolyRingFp>()) return p.is<FpxGeneric>();
  if (quotient_of(ring)) {
    const auto& a = p.as<MonoPrime>().cover;
    const auto& b = q.as<MonoPrime>().cover;
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  }
  if (ring.is<SymbolicSupplement>()) return p.is<SuppMin>() && q.is<SuppTop>();
  if (ring.is<ProductRing>()) {
    const auto& a = p.as<TamePrime>();
    const auto& b = q.as<TamePrime>();
    return a.slot == b.slot &&
           leq_specialization(*a.inner, *b.inner, ring.as<ProductRing>().factors[static_cast<std::size_t>(a.slot)]);
  }
  return false;  // Z/n and fields: distinct primes are incomparable
}

IdealRepr prime_ideal(const PrimePoint& p, const RingExpr& ring) {
  check_point(p, ring);
  if (ring.is<IntegerRing>()) return principal(int_elem(p.is<ZMax>() ? p.as<ZMax>().p : BigInt(0)), ring);
  if (ring.is<ModRing>()) return principal(mod_elem(p.as<ZmodPrime>().p), ring);
  if (ring.is<PrimeField>() || ring.is<RationalField>()) return zero_ideal(ring);
  if (ring.is<PolyRingFp>()) return p.is<FpxMax>() ? principal(poly_elem(p.as<FpxMax>().f), ring) : zero_ideal(ring);
  if (const auto* q = quotient_of(ring)) {
    std::vector<Exponent> vars;
    for (int v : p.as<MonoPrime>().cover) vars.push_back(mono::from_vars({v}, q->nvars));
    return monomial_ideal(std::move(vars), ring);
  }
  if (ring.is<ProductRing>()) {
    const auto& t = p.as<TamePrime>();
    const auto& fs = ring.as<ProductRing>().factors;
    std::vector<IdealRepr> parts;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      parts.push_back(static_cast<int>(i) == t.slot ? prime_ideal(*t.inner, fs[i]) : unit_ideal(fs[i]));
    }
    return product_ideal(std::move(parts), ring);
  }
  fail(ErrorKind::Unsupported, "prime " + describe(p) + " of " + describe(ring) + " is not finitely generated");
}

bool prime_contains(const PrimePoint& p, const RingElement& r0, const RingExpr& ring) {
  if (ring.is<SymbolicSupplement>()) {
    check_point(p, ring);
    const RingElement r = normalize(r0, ring);
    const auto& poly = r.as<MPolyElem>();
    if (constant_term(poly) != 0) return false;
    if (p.is<SuppTop>()) return true;
    // After reduction every monomial is a pure power x_j^e, which lies in
    // P_k exactly when j != k.
    const VarSet vars = occurring_variables(poly);
    return !std::binary_search(vars.begin(), vars.end(), static_cast<int>(p.as<SuppMin>().k));
  }
  return ideal_member(prime_ideal(p, ring), r0, ring);
}

SpecSubset v_locus(const RingElement& r0, const RingExpr& ring, const Limits& limits) {
  const RingElement r = normalize(r0, ring);
  if (ring.is<IntegerRing>()) {
    const BigInt& v = r.as<IntElem>().v;
    if (v == 0) return whole_set();
    std::set<PrimePoint> pts;
    if (v != 1 && v != -1) {
      for (const auto& p : prime_divisors(v, limits)) pts.insert(z_max(p));
    }
    return explicit_set(std::move(pts));
  }
  if (ring.is<PolyRingFp>()) {
    const auto& c = r.as<PolyElem>().coeffs;
    if (c.empty()) return whole_set();
    std::set<PrimePoint> pts;
    if (!fpx::is_constant(c)) {
      for (auto& f : fpx::irreducible_factors(c, ring.as<PolyRingFp>().p, limits)) pts.insert(fpx_max(std::move(f)));
    }
    return explicit_set(std::move(pts));
  }
  if (ring.is<SymbolicSupplement>()) {
    const auto& poly = r.as<MPolyElem>();
    if (poly.terms.empty()) return whole_set();
    if (constant_term(poly) != 0) return empty_set();
    const VarSet vars = occurring_variables(poly);
    return cofinite_min(std::set<long>(vars.begin(), vars.end()), true);
  }
  std::set<PrimePoint> pts;
  for (const auto& p : finite_points(ring)) {
    if (prime_contains(p, r, ring)) pts.insert(p);
  }
  return explicit_set(std::move(pts));
}

SpecSubset d_locus(const RingElement& r, const RingExpr& ring, const Limits& limits) {
  return set_complement(v_locus(r, ring, limits), ring);
}

PrimePoint special_point(const RingExpr& ring) {
  if (ring.is<IntegerRing>()) return z_generic();
  if (ring.is<PolyRingFp>()) return fpx_generic();
  if (ring.is<SymbolicSupplement>()) return supp_top();
  fail(ErrorKind::Unsupported, describe(ring) + " is not a symbolic family");
}

std::vector<PrimePoint> ordinary_points(const RingExpr& ring, std::size_t count) {
  std::vector<PrimePoint> out;
  if (ring.is<IntegerRing>()) {
    for (BigInt p = 2; out.size() < count; ++p) {
      if (is_prime(p)) out.push_back(z_max(p));
    }
  } else if (ring.is<PolyRingFp>()) {
    const auto p = ring.as<PolyRingFp>().p;
    for (int d = 1; out.size() < count; ++d) {
      // Monic polynomials of degree d in increasing canonical order: the
      // digit of highest degree is the most significant one.
      std::vector<std::uint64_t> digits(static_cast<std::size_t>(d), 0);
      for (;;) {
        fpx::Coeffs f(digits.begin(), digits.end());
        f.push_back(1);
        if (fpx::is_irreducible(f, p, Limits{true, 64})) {
          out.push_back(fpx_max(f));
          if (out.size() == count) break;
        }
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
        if (i == digits.size()) break;
      }
    }
  } else if (ring.is<SymbolicSupplement>()) {
    for (long k = 1; out.size() < count; ++k) out.push_back(supp_min(k));
  } else {
    fail(ErrorKind::Unsupported, describe(ring) + " is not a symbolic family");
  }
  return out;
}

}  // namespace primespec
