#include <algorithm>
#include <iterator>

#include "primespec/errors.hpp"
#include "primespec/spectrum.hpp"

namespace primespec {

namespace {

// Uniform view of a subset of a symbolic spectrum: either finitely many
// ordinary points, or all ordinary points but finitely many; the special
// point (generic point, or m) is tracked separately.
struct Shape {
  bool cofinite = false;
  std::set<PrimePoint> ordinary;  // members when finite, exclusions when cofinite
  bool special = false;
};

bool is_special(const PrimePoint& p) { return p.is<ZGeneric>() || p.is<FpxGeneric>() || p.is<SuppTop>(); }

std::set<PrimePoint> set_minus(const std::set<PrimePoint>& a, const std::set<PrimePoint>& b) {
  std::set<PrimePoint> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::set<PrimePoint> set_and(const std::set<PrimePoint>& a, const std::set<PrimePoint>& b) {
  std::set<PrimePoint> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::set<PrimePoint> set_or(std::set<PrimePoint> a, const std::set<PrimePoint>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

void check_rep(const SpecSubset& e, SpectrumFamily family, const RingExpr& ring) {
  if (e.is<CofiniteClosed>() && family != SpectrumFamily::PidLike) {
    fail(ErrorKind::KindMismatch, "cofiniteClosed subsets only exist over Z and F_p[x], not " + describe(ring));
  }
  if (e.is<CofiniteMin>() && family != SpectrumFamily::Supplement) {
    fail(ErrorKind::KindMismatch, "cofiniteMin subsets only exist over the supplement ring, not " + describe(ring));
  }
}

Shape to_shape(const SpecSubset& e, const RingExpr& ring) {
  check_rep(e, family_of(ring), ring);
  Shape s;
  if (e.is<ExplicitSet>()) {
    for (const auto& p : e.as<ExplicitSet>().points) {
      check_point(p, ring);
      if (is_special(p)) s.special = true;
      else s.ordinary.insert(p);
    }
  } else if (e.is<CofiniteClosed>()) {
    s.cofinite = true;
    for (const auto& p : e.as<CofiniteClosed>().excluded) {
      check_point(p, ring);
      if (is_special(p)) fail(ErrorKind::InvalidInput, "the generic point cannot be excluded from a cofinite set");
      s.ordinary.insert(p);
    }
    s.special = e.as<CofiniteClosed>().with_generic;
  } else if (e.is<CofiniteMin>()) {
    s.cofinite = true;
    for (long k : e.as<CofiniteMin>().excluded) {
      if (k < 1) fail(ErrorKind::InvalidInput, "minimal prime index must be positive");
      s.ordinary.insert(supp_min(k));
    }
    s.special = e.as<CofiniteMin>().with_top;
  } else if (e.is<WholeSet>()) {
    s.cofinite = true;
    s.special = true;
  }
  return s;
}

SpecSubset from_shape(const Shape& s, const RingExpr& ring) {
  if (!s.cofinite) {
    std::set<PrimePoint> pts = s.ordinary;
    if (s.special) pts.insert(special_point(ring));
    return pts.empty() ? empty_set() : explicit_set(std::move(pts));
  }
  if (s.ordinary.empty() && s.special) return whole_set();
  if (ring.is<SymbolicSupplement>()) {
    std::set<long> idx;
    for (const auto& p : s.ordinary) idx.insert(p.as<SuppMin>().k);
    return cofinite_min(std::move(idx), s.special);
  }
  return cofinite_closed(s.ordinary, s.special);
}

std::set<PrimePoint> finite_view(const SpecSubset& e, const RingExpr& ring) {
  check_rep(e, SpectrumFamily::Finite, ring);
  if (e.is<EmptySet>()) return {};
  if (e.is<WholeSet>()) {
    const auto pts = finite_points(ring);
    return {pts.begin(), pts.end()};
  }
  for (const auto& p : e.as<ExplicitSet>().points) check_point(p, ring);
  return e.as<ExplicitSet>().points;
}

SpecSubset from_finite(std::set<PrimePoint> pts) { return pts.empty() ? empty_set() : explicit_set(std::move(pts)); }

}  // namespace

SpecSubset empty_set() { return {EmptySet{}}; }
SpecSubset explicit_set(std::set<PrimePoint> points) {
  if (points.empty()) return empty_set();
  return {ExplicitSet{std::move(points)}};
}
SpecSubset cofinite_closed(std::set<PrimePoint> excluded, bool with_generic) {
  return {CofiniteClosed{std::move(excluded), with_generic}};
}
SpecSubset cofinite_min(std::set<long> excluded, bool with_top) { return {CofiniteMin{std::move(excluded), with_top}}; }
SpecSubset whole_set() { return {WholeSet{}}; }

SpecSubset canonicalize(const SpecSubset& e, const RingExpr& ring) {
  if (family_of(ring) == SpectrumFamily::Finite) return from_finite(finite_view(e, ring));
  return from_shape(to_shape(e, ring), ring);
}

bool subset_member(const PrimePoint& p, const SpecSubset& e) {
  if (e.is<EmptySet>()) return false;
  if (e.is<WholeSet>()) return true;
  if (e.is<ExplicitSet>()) return e.as<ExplicitSet>().points.count(p) > 0;
  if (e.is<CofiniteClosed>()) {
    const auto& c = e.as<CofiniteClosed>();
    if (p.is<ZGeneric>() || p.is<FpxGeneric>()) return c.with_generic;
    return (p.is<ZMax>() || p.is<FpxMax>()) && c.excluded.count(p) == 0;
  }
  const auto& c = e.as<CofiniteMin>();
  if (p.is<SuppTop>()) return c.with_top;
  return p.is<SuppMin>() && c.excluded.count(p.as<SuppMin>().k) == 0;
}

SpecSubset set_union(const SpecSubset& a, const SpecSubset& b, const RingExpr& ring) {
  if (family_of(ring) == SpectrumFamily::Finite) return from_finite(set_or(finite_view(a, ring), finite_view(b, ring)));
  const Shape x = to_shape(a, ring), y = to_shape(b, ring);
  Shape out;
  out.special = x.special || y.special;
  if (!x.cofinite && !y.cofinite) {
    out.ordinary = set_or(x.ordinary, y.ordinary);
  } else if (x.cofinite && y.cofinite) {
    out.cofinite = true;
    out.ordinary = set_and(x.ordinary, y.ordinary);
  } else {
    const Shape& fin = x.cofinite ? y : x;
    const Shape& cof = x.cofinite ? x : y;
    out.cofinite = true;
    out.ordinary = set_minus(cof.ordinary, fin.ordinary);
  }
  return from_shape(out, ring);
}

SpecSubset set_intersection(const SpecSubset& a, const SpecSubset& b, const RingExpr& ring) {
  if (family_of(ring) == SpectrumFamily::Finite) return from_finite(set_and(finite_view(a, ring), finite_view(b, ring)));
  const Shape x = to_shape(a, ring), y = to_shape(b, ring);
  Shape out;
  out.special = x.special && y.special;
  if (!x.cofinite && !y.cofinite) {
    out.ordinary = set_and(x.ordinary, y.ordinary);
  } else if (x.cofinite && y.cofinite) {
    out.cofinite = true;
    out.ordinary = set_or(x.ordinary, y.ordinary);
  } else {
    const Shape& fin = x.cofinite ? y : x;
    const Shape& cof = x.cofinite ? x : y;
    out.ordinary = set_minus(fin.ordinary, cof.ordinary);
  }
  return from_shape(out, ring);
}

SpecSubset set_complement(const SpecSubset& a, const RingExpr& ring) {
  if (family_of(ring) == SpectrumFamily::Finite) {
    const auto all = finite_points(ring);
    return from_finite(set_minus({all.begin(), all.end()}, finite_view(a, ring)));
  }
  Shape s = to_shape(a, ring);
  s.cofinite = !s.cofinite;
  s.special = !s.special;
  return from_shape(s, ring);
}

SpecSubset set_difference(const SpecSubset& a, const SpecSubset& b, const RingExpr& ring) {
  return set_intersection(a, set_complement(b, ring), ring);
}

bool set_includes(const SpecSubset& outer, const SpecSubset& inner, const RingExpr& ring) {
  return is_empty(set_difference(inner, outer, ring));
}

bool set_equal(const SpecSubset& a, const SpecSubset& b, const RingExpr& ring) {
  return canonicalize(a, ring) == canonicalize(b, ring);
}

bool is_whole(const SpecSubset& e, const RingExpr& ring) { return is_empty(set_complement(e, ring)); }

bool is_empty(const SpecSubset& e) { return e.is<EmptySet>() || (e.is<ExplicitSet>() && e.as<ExplicitSet>().points.empty()); }

bool is_finite(const SpecSubset& e) { return e.is<EmptySet>() || e.is<ExplicitSet>(); }

std::optional<std::vector<PrimePoint>> finite_members(const SpecSubset& e0, const RingExpr& ring) {
  const SpecSubset e = canonicalize(e0, ring);
  if (e.is<EmptySet>()) return std::vector<PrimePoint>{};
  if (!e.is<ExplicitSet>()) return std::nullopt;
  const auto& pts = e.as<ExplicitSet>().points;
  return std::vector<PrimePoint>(pts.begin(), pts.end());
}

std::optional<PrimePoint> least_member(const SpecSubset& e0, const RingExpr& ring) {
  const SpecSubset e = canonicalize(e0, ring);
  if (e.is<EmptySet>()) return std::nullopt;
  if (e.is<ExplicitSet>()) return *e.as<ExplicitSet>().points.begin();
  const Shape s = to_shape(e, ring);
  std::optional<PrimePoint> best;
  if (s.special) best = special_point(ring);
  // s.ordinary is finite, so some point among the first |excluded|+1 is free.
  for (const auto& p : ordinary_points(ring, s.ordinary.size() + 1)) {
    if (!s.ordinary.count(p)) {
      if (!best || p < *best) best = p;
      break;
    }
  }
  return best;
}

std::string describe(const SpecSubset& e) {
  auto list = [](const std::set<PrimePoint>& pts) {
    std::string out;
    for (const auto& p : pts) out += (out.empty() ? "" : ", ") + describe(p);
    return out;
  };
  if (e.is<EmptySet>()) return "{}";
  if (e.is<WholeSet>()) return "Spec";
  if (e.is<ExplicitSet>()) return "{" + list(e.as<ExplicitSet>().points) + "}";
  if (e.is<CofiniteClosed>()) {
    const auto& c = e.as<CofiniteClosed>();
    return std::string("closed points minus {") + list(c.excluded) + "}" + (c.with_generic ? " plus (0)" : "");
  }
  const auto& c = e.as<CofiniteMin>();
  std::string idx;
  for (long k : c.excluded) idx += (idx.empty() ? "P_" : ", P_") + std::to_string(k);
  return "minimal primes minus {" + idx + "}" + (c.with_top ? " plus m" : "");
}

}  // namespace primespec
