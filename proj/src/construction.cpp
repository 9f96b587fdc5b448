#include "primespec/construction.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "primespec/errors.hpp"

namespace primespec {

namespace {

constexpr std::size_t kOracleVars = 20;
constexpr std::size_t kMaxCheckedPoints = 12;

std::uint64_t support_mask(const Exponent& e) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i]) m |= std::uint64_t{1} << i;
  }
  return m;
}

std::vector<PrimePoint> checked_points(const RingExpr& ring) {
  const auto pts = finite_points(ring);
  if (pts.size() > kMaxCheckedPoints) {
    std::string name = describe(ring);
    if (name.size() > 60) name = name.substr(0, 57) + "...";
    fail(ErrorKind::SpectrumTooLarge, name + " has " + std::to_string(pts.size()) + " primes, above the limit of " +
                                          std::to_string(kMaxCheckedPoints));
  }
  return pts;
}

// Elements of q used to decide q ⊆ ⋃ F.
std::vector<RingElement> avoidance_samples(const PrimePoint& q, const RingExpr& ring) {
  const auto gens = ideal_generators(prime_ideal(q, ring), ring);
  std::vector<RingElement> out = gens;
  RingElement total = zero(ring);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    total = add(total, gens[i], ring);
    for (std::size_t j = i + 1; j < gens.size(); ++j) out.push_back(add(gens[i], gens[j], ring));
  }
  out.push_back(total);
  const MonomialQuotient* mq = ring.is<MonomialQuotient>()             ? &ring.as<MonomialQuotient>()
                               : ring.is<LocalizedAtIrrelevant>() ? &ring.as<LocalizedAtIrrelevant>().inner
                                                                       : nullptr;
  if (mq) {
    std::vector<RingElement> monos;
    for (std::size_t i = 1; i <= mq->nvars; ++i) {
      for (std::size_t j = i; j <= mq->nvars; ++j) {
        Exponent e(mq->nvars, 0);
        e[i - 1] += 1;
        e[j - 1] += 1;
        RingElement m = normalize(mpoly_elem({Term{1, e}}), ring);
        if (!is_zero(m, ring) && prime_contains(q, m, ring)) monos.push_back(m);
      }
    }
    for (std::size_t i = 0; i < monos.size(); ++i) {
      out.push_back(monos[i]);
      for (std::size_t j = i + 1; j < monos.size(); ++j) out.push_back(add(monos[i], monos[j], ring));
    }
  }
  return out;
}

}  // namespace

std::vector<Exponent> supplement_generators(std::size_t n) {
  std::vector<Exponent> gens;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = i + 1; k <= n; ++k) gens.push_back(mono::from_vars({static_cast<int>(i), static_cast<int>(k)}, n));
  }
  return mono::minimalize(std::move(gens));
}

SupplementRing build_supplement(CoefficientField field, long n) {
  if (n < 1) fail(ErrorKind::BadArity, "the supplement needs at least one variable, got " + std::to_string(n));
  const auto nv = static_cast<std::size_t>(n);
  return {localized_at_irrelevant(monomial_quotient(field, nv, supplement_generators(nv))), n == 1};
}

namespace oracle {

std::vector<VarSet> minimal_covers_brute(const std::vector<Exponent>& gens, std::size_t nvars) {
  if (nvars > kOracleVars) fail(ErrorKind::TooManyVars, "subset oracle is limited to 20 variables");
  std::vector<std::uint64_t> edges;
  for (const auto& g : gens) edges.push_back(support_mask(g));
  auto covers = [&](std::uint64_t s) {
    return std::all_of(edges.begin(), edges.end(), [&](std::uint64_t e) { return (e & s) != 0; });
  };
  std::vector<VarSet> out;
  const std::uint64_t limit = std::uint64_t{1} << nvars;
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (!covers(s)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < nvars && minimal; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((s & bit) && covers(s & ~bit)) minimal = false;
    }
    if (!minimal) continue;
    VarSet c;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (s & (std::uint64_t{1} << i)) c.push_back(static_cast<int>(i + 1));
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

std::vector<PrimePoint> minimal_primes_monomial(const std::vector<Exponent>& gens, std::size_t nvars, bool check_oracle) {
  for (const auto& g : gens) {
    if (!mono::is_square_free(g)) fail(ErrorKind::InvalidInput, "generator " + mono::to_string(g) + " is not square-free");
    if (mono::support(g).size() && static_cast<std::size_t>(mono::support(g).back()) > nvars) {
      fail(ErrorKind::InvalidInput, "generator " + mono::to_string(g) + " uses more than " + std::to_string(nvars) + " variables");
    }
  }
  if (check_oracle && nvars > kOracleVars) {
    fail(ErrorKind::TooManyVars, std::to_string(nvars) + " variables exceed the oracle bound; disable the oracle to proceed");
  }
  auto covers = mono::minimal_vertex_covers(gens, nvars);
  std::sort(covers.begin(), covers.end());
  if (check_oracle && covers != oracle::minimal_covers_brute(gens, nvars)) {
    fail(ErrorKind::InternalError, "vertex cover search disagrees with the subset oracle");
  }
  std::vector<PrimePoint> out;
  for (auto& c : covers) out.push_back(mono_prime(std::move(c)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimePoint> minimal_primes_monomial(const IdealRepr& ideal, std::size_t nvars, bool check_oracle) {
  if (!ideal.is<MonomialIdeal>()) fail(ErrorKind::KindMismatch, "expected a monomial ideal");
  return minimal_primes_monomial(ideal.as<MonomialIdeal>().gens, nvars, check_oracle);
}

bool verify_intersection(std::size_t n, CoefficientField field) {
  if (n < 1) fail(ErrorKind::BadArity, "need at least one variable");
  const RingExpr t = ambient(field, n);
  std::optional<IdealRepr> fold;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Exponent> vars;
    for (std::size_t i = 1; i <= n; ++i) {
      if (i != k) vars.push_back(mono::from_vars({static_cast<int>(i)}, n));
    }
    const IdealRepr ik = monomial_ideal(std::move(vars), t);
    fold = fold ? ideal_intersect(*fold, ik, t) : ik;
  }
  return canonical(*fold, t) == canonical(monomial_ideal(supplement_generators(n), t), t);
}

long krull_dim(const RingExpr& ring) {
  if (ring.is<IntegerRing>() || ring.is<PolyRingFp>() || ring.is<SymbolicSupplement>()) return 1;
  if (ring.is<PrimeField>() || ring.is<RationalField>()) return 0;
  if (ring.is<MonomialQuotient>()) return static_cast<long>(monomial_dimension(ring.as<MonomialQuotient>()));
  const auto pts = finite_points(ring);
  // Points come sorted, but specialization need not follow that order; a
  // fixed point iteration over heights is enough at this size.
  std::map<PrimePoint, long> height;
  for (const auto& p : pts) height[p] = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : pts) {
      for (const auto& q : pts) {
        if (q != p && leq_specialization(q, p, ring) && height[q] + 1 > height[p]) {
          height[p] = height[q] + 1;
          changed = true;
        }
      }
    }
  }
  long best = 0;
  for (const auto& [p, h] : height) best = std::max(best, h);
  return best;
}

bool pz_check(const RingExpr& ring) {
  const auto pts = checked_points(ring);
  std::vector<IdealRepr> ideals;
  for (const auto& p : pts) ideals.push_back(prime_ideal(p, ring));
  const std::uint64_t limit = std::uint64_t{1} << pts.size();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    std::optional<IdealRepr> meet;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (mask & (std::uint64_t{1} << i)) meet = meet ? ideal_intersect(*meet, ideals[i], ring) : ideals[i];
    }
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (!ideal_contains(*meet, ideals[j], ring)) continue;
      bool absorbed = false;
      for (std::size_t i = 0; i < pts.size() && !absorbed; ++i) {
        absorbed = (mask & (std::uint64_t{1} << i)) && ideal_contains(ideals[i], ideals[j], ring);
      }
      if (!absorbed) return false;
    }
  }
  return true;
}

bool cp_check(const RingExpr& ring) {
  const auto pts = checked_points(ring);
  std::vector<IdealRepr> ideals;
  for (const auto& p : pts) ideals.push_back(prime_ideal(p, ring));
  const std::uint64_t limit = std::uint64_t{1} << pts.size();
  for (std::size_t qi = 0; qi < pts.size(); ++qi) {
    const auto samples = avoidance_samples(pts[qi], ring);
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      auto in_union = [&](const RingElement& s) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
          if ((mask & (std::uint64_t{1} << i)) && prime_contains(pts[i], s, ring)) return true;
        }
        return false;
      };
      if (!std::all_of(samples.begin(), samples.end(), in_union)) continue;
      bool inside_one = false;
      for (std::size_t i = 0; i < pts.size() && !inside_one; ++i) {
        inside_one = (mask & (std::uint64_t{1} << i)) && ideal_contains(ideals[qi], ideals[i], ring);
      }
      if (!inside_one) return false;
    }
  }
  return true;
}

bool is_reduced(const RingExpr& ring) {
  if (ring.is<ProductRing>()) {
    const auto& fs = ring.as<ProductRing>().factors;
    return std::all_of(fs.begin(), fs.end(), [](const RingExpr& f) { return is_reduced(f); });
  }
  if (ring.is<ModRing>() || ring.is<MonomialQuotient>() || ring.is<LocalizedAtIrrelevant>()) {
    return ideal_contains(nilradical(ring), zero_ideal(ring), ring);
  }
  // Domains, and the supplement: a square-free monomial quotient localized.
  return true;
}

SupplementReport supplement_report(CoefficientField field, long n) {
  SupplementReport rep;
  rep.n = n;
  rep.field = field;
  const SupplementRing s = build_supplement(field, n);
  rep.degenerate = s.degenerate;
  const auto nv = static_cast<std::size_t>(n);
  rep.intersection_ok = verify_intersection(nv, field);
  rep.minimal_primes = minimal_primes_monomial(supplement_generators(nv), nv);
  std::vector<PrimePoint> expected;
  for (long k = 1; k <= n; ++k) {
    VarSet c;
    for (long i = 1; i <= n; ++i) {
      if (i != k) c.push_back(static_cast<int>(i));
    }
    expected.push_back(mono_prime(std::move(c)));
  }
  std::sort(expected.begin(), expected.end());
  rep.minimal_primes_ok = rep.minimal_primes == expected;
  rep.dim = krull_dim(s.ring);
  rep.reduced = is_reduced(s.ring);
  rep.pz_ok = pz_check(s.ring);
  return rep;
}

}  // namespace primespec
