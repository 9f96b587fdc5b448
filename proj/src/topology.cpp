#include "primespec/topology.hpp"

#include "primespec/errors.hpp"

namespace primespec {

namespace {

std::set<PrimePoint> members(const SpecSubset& e, const RingExpr& ring) {
  const auto pts = finite_members(e, ring);
  if (!pts) fail(ErrorKind::InternalError, "expected a finite subset");
  return {pts->begin(), pts->end()};
}

bool contains_special(const SpecSubset& e, const RingExpr& ring) { return subset_member(special_point(ring), e); }

SpecSubset with_special(const SpecSubset& e, const RingExpr& ring) {
  return set_union(e, explicit_set({special_point(ring)}), ring);
}

}  // namespace

std::string_view to_string(Topology t) {
  switch (t) {
    case Topology::Zariski: return "zariski";
    case Topology::Flat: return "flat";
    case Topology::Patch: return "patch";
  }
  return "?";
}

std::string_view to_string(Stability s) {
  return s == Stability::Specialization ? "specialization" : "generalization";
}

std::string_view to_string(DensityRationale r) {
  switch (r) {
    case DensityRationale::FiniteSpectrum: return "FiniteSpectrum";
    case DensityRationale::FactorizationFinite: return "FactorizationFinite";
    case DensityRationale::LocalPzDimensionOne: return "LocalPzDimensionOne";
    case DensityRationale::CounterexampleElement: return "CounterexampleElement";
  }
  return "?";
}

SpecSubset up_closure(const SpecSubset& e, const RingExpr& ring) {
  const auto all = finite_points(ring);
  std::set<PrimePoint> out;
  for (const auto& p : members(e, ring)) {
    for (const auto& q : all) {
      if (leq_specialization(p, q, ring)) out.insert(q);
    }
  }
  return canonicalize(explicit_set(std::move(out)), ring);
}

SpecSubset down_closure(const SpecSubset& e, const RingExpr& ring) {
  const auto all = finite_points(ring);
  std::set<PrimePoint> out;
  for (const auto& p : members(e, ring)) {
    for (const auto& q : all) {
      if (leq_specialization(q, p, ring)) out.insert(q);
    }
  }
  return canonicalize(explicit_set(std::move(out)), ring);
}

SpecSubset zariski_closure(const SpecSubset& e0, const RingExpr& ring) {
  const SpecSubset e = canonicalize(e0, ring);
  switch (family_of(ring)) {
    case SpectrumFamily::Finite:
      return up_closure(e, ring);
    case SpectrumFamily::PidLike:
      // Closed points are closed; anything containing the generic point, and
      // any infinite set, is dense.
      if (e.is<EmptySet>()) return e;
      if (e.is<ExplicitSet>() && !contains_special(e, ring)) return e;
      return whole_set();
    case SpectrumFamily::Supplement:
      // Every P_k specializes to m only; m is closed.
      if (e.is<EmptySet>()) return e;
      if (e.is<ExplicitSet>() && e.as<ExplicitSet>().points == std::set<PrimePoint>{supp_top()}) return e;
      return with_special(e, ring);
  }
  fail(ErrorKind::UnsupportedSymbolic, "no zariski closure rule for " + describe(e));
}

SpecSubset flat_closure(const SpecSubset& e0, const RingExpr& ring) {
  const SpecSubset e = canonicalize(e0, ring);
  switch (family_of(ring)) {
    case SpectrumFamily::Finite:
      return down_closure(e, ring);
    case SpectrumFamily::PidLike:
      // Every nonempty set picks up the generic point, and nothing else.
      return e.is<EmptySet>() ? e : with_special(e, ring);
    case SpectrumFamily::Supplement:
      if (e.is<EmptySet>()) return e;
      if (e.is<ExplicitSet>() && !contains_special(e, ring)) return e;
      return whole_set();  // contains m, or infinite
  }
  fail(ErrorKind::UnsupportedSymbolic, "no flat closure rule for " + describe(e));
}

SpecSubset patch_closure(const SpecSubset& e0, const RingExpr& ring) {
  const SpecSubset e = canonicalize(e0, ring);
  switch (family_of(ring)) {
    case SpectrumFamily::Finite:
      return e;
    case SpectrumFamily::PidLike:
    case SpectrumFamily::Supplement:
      // Finite sets are patch closed; an infinite set gains exactly the
      // special point, the unique limit of every sequence of distinct points.
      return is_finite(e) ? e : with_special(e, ring);
  }
  fail(ErrorKind::UnsupportedSymbolic, "no patch closure rule for " + describe(e));
}

SpecSubset closure(const SpecSubset& e, const RingExpr& ring, Topology topology) {
  switch (topology) {
    case Topology::Zariski: return zariski_closure(e, ring);
    case Topology::Flat: return flat_closure(e, ring);
    case Topology::Patch: return patch_closure(e, ring);
  }
  fail(ErrorKind::InvalidInput, "unknown topology");
}

bool is_stable(const SpecSubset& e0, const RingExpr& ring, Stability mode) {
  const SpecSubset e = canonicalize(e0, ring);
  const bool spec = mode == Stability::Specialization;
  switch (family_of(ring)) {
    case SpectrumFamily::Finite: {
      const auto all = finite_points(ring);
      for (const auto& p : all) {
        if (!subset_member(p, e)) continue;
        for (const auto& q : all) {
          const bool related = spec ? leq_specialization(p, q, ring) : leq_specialization(q, p, ring);
          if (related && !subset_member(q, e)) return false;
        }
      }
      return true;
    }
    case SpectrumFamily::PidLike:
      // The generic point specializes to everything; closed points have no
      // proper specializations and generalize only to the generic point.
      if (is_empty(e) || is_whole(e, ring)) return true;
      return spec ? !contains_special(e, ring) : contains_special(e, ring);
    case SpectrumFamily::Supplement: {
      // P_k <= m is the only strict relation.
      if (is_empty(e) || is_whole(e, ring)) return true;
      const bool has_top = contains_special(e, ring);
      if (spec) {
        const bool has_min = !set_equal(e, explicit_set({supp_top()}), ring);
        return has_top || !has_min;
      }
      return !has_top;
    }
  }
  return false;
}

bool is_dense(const SpecSubset& e, const RingExpr& ring, Topology topology) {
  return is_whole(closure(e, ring, topology), ring);
}

DensityCertificate density_criterion(const RingExpr& ring, Topology mode) {
  if (mode == Topology::Patch) fail(ErrorKind::InvalidInput, "density criterion is stated for zariski or flat only");
  DensityCertificate cert;
  cert.mode = mode;
  const SpectrumFamily family = family_of(ring);
  if (family == SpectrumFamily::Finite) {
    cert.holds = true;
    cert.rationale = DensityRationale::FiniteSpectrum;
    return cert;
  }
  const bool zariski = mode == Topology::Zariski;
  if (family == SpectrumFamily::PidLike) {
    if (zariski) {
      cert.holds = true;
      cert.rationale = DensityRationale::FactorizationFinite;
      return cert;
    }
    cert.witness = ring.is<IntegerRing>() ? int_elem(2) : poly_elem({0, 1});
    cert.witness_locus = d_locus(*cert.witness, ring);
  } else {
    if (!zariski) {
      cert.holds = true;
      cert.rationale = DensityRationale::LocalPzDimensionOne;
      return cert;
    }
    cert.witness = variable(1, 1);
    cert.witness_locus = v_locus(*cert.witness, ring);
  }
  cert.holds = false;
  cert.rationale = DensityRationale::CounterexampleElement;
  return cert;
}

bool verify_certificate(const DensityCertificate& cert, const RingExpr& ring) {
  if (cert.holds) return true;
  if (!cert.witness || !cert.witness_locus) return false;
  const bool zariski = cert.mode == Topology::Zariski;
  const SpecSubset locus = zariski ? v_locus(*cert.witness, ring) : d_locus(*cert.witness, ring);
  if (!set_equal(locus, *cert.witness_locus, ring)) return false;
  if (zariski ? is_nilpotent(*cert.witness, ring) : is_unit(*cert.witness, ring)) return false;
  return !is_finite(locus) && !is_dense(locus, ring, cert.mode);
}

}  // namespace primespec
