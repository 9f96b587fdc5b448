#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "primespec/element.hpp"
#include "primespec/ideal.hpp"
#include "primespec/point.hpp"
#include "primespec/ring.hpp"

namespace primespec {

struct EmptySet {
  friend bool operator==(const EmptySet&, const EmptySet&) = default;
};

struct ExplicitSet {
  std::set<PrimePoint> points;
  friend bool operator==(const ExplicitSet&, const ExplicitSet&) = default;
};

/// Over Z or F_p[x]: every closed point except `excluded`, plus the generic
/// point iff `with_generic`.
struct CofiniteClosed {
  std::set<PrimePoint> excluded;
  bool with_generic = false;
  friend bool operator==(const CofiniteClosed&, const CofiniteClosed&) = default;
};

/// Over the symbolic supplement ring: every P_k with k not in `excluded`,
/// plus m iff `with_top`.
struct CofiniteMin {
  std::set<long> excluded;
  bool with_top = false;
  friend bool operator==(const CofiniteMin&, const CofiniteMin&) = default;
};

struct WholeSet {
  friend bool operator==(const WholeSet&, const WholeSet&) = default;
};

struct SpecSubset {
  std::variant<EmptySet, ExplicitSet, CofiniteClosed, CofiniteMin, WholeSet> value;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(value);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(value);
  }
  friend bool operator==(const SpecSubset&, const SpecSubset&) = default;
};

SpecSubset empty_set();
SpecSubset explicit_set(std::set<PrimePoint> points);
SpecSubset cofinite_closed(std::set<PrimePoint> excluded, bool with_generic);
SpecSubset cofinite_min(std::set<long> excluded, bool with_top);
SpecSubset whole_set();

/// How a spectrum is represented: finitely many explicit points, the
/// one-dimensional PID pattern (Z, F_p[x]) or the symbolic supplement.
enum class SpectrumFamily { Finite, PidLike, Supplement };

/// Throws NonEnumerable for rings whose spectrum has no representation.
SpectrumFamily family_of(const RingExpr& ring);
bool has_finite_spectrum(const RingExpr& ring);

/// Every prime of a ring with finite spectrum, in canonical order.
std::vector<PrimePoint> finite_points(const RingExpr& ring);

/// Primes of a finite spectrum with no strictly smaller prime.
std::vector<PrimePoint> minimal_points(const RingExpr& ring);

/// Whole spectrum in canonical form: Explicit for finite spectra, Whole for
/// the symbolic families.
SpecSubset enumerate_spec(const RingExpr& ring);

bool point_belongs(const PrimePoint& p, const RingExpr& ring, const Limits& limits = {});
void check_point(const PrimePoint& p, const RingExpr& ring, const Limits& limits = {});

/// ideal(p) ⊆ ideal(q).
bool leq_specialization(const PrimePoint& p, const PrimePoint& q, const RingExpr& ring);

/// The ideal of a finitely generated prime. Unsupported for supplement points.
IdealRepr prime_ideal(const PrimePoint& p, const RingExpr& ring);
bool prime_contains(const PrimePoint& p, const RingElement& r, const RingExpr& ring);

SpecSubset v_locus(const RingElement& r, const RingExpr& ring, const Limits& limits = {});
SpecSubset d_locus(const RingElement& r, const RingExpr& ring, const Limits& limits = {});

/// The generic point of Z / F_p[x] or the maximal ideal of the supplement.
PrimePoint special_point(const RingExpr& ring);
/// The first `count` non-special points of a symbolic family in canonical
/// order: primes ascending, irreducibles by degree, P_1, P_2, ...
std::vector<PrimePoint> ordinary_points(const RingExpr& ring, std::size_t count);

// Set algebra. Results are canonical.
SpecSubset canonicalize(const SpecSubset& e, const RingExpr& ring);
bool subset_member(const PrimePoint& p, const SpecSubset& e);
SpecSubset set_union(const SpecSubset& a, const SpecSubset& b, const RingExpr& ring);
SpecSubset set_intersection(const SpecSubset& a, const SpecSubset& b, const RingExpr& ring);
SpecSubset set_complement(const SpecSubset& a, const RingExpr& ring);
SpecSubset set_difference(const SpecSubset& a, const SpecSubset& b, const RingExpr& ring);
/// inner ⊆ outer.
bool set_includes(const SpecSubset& outer, const SpecSubset& inner, const RingExpr& ring);
bool set_equal(const SpecSubset& a, const SpecSubset& b, const RingExpr& ring);
bool is_whole(const SpecSubset& e, const RingExpr& ring);
bool is_empty(const SpecSubset& e);
bool is_finite(const SpecSubset& e);
/// Members of a finite subset; std::nullopt for infinite ones.
std::optional<std::vector<PrimePoint>> finite_members(const SpecSubset& e, const RingExpr& ring);
/// Least member in canonical order, or nullopt for the empty set.
std::optional<PrimePoint> least_member(const SpecSubset& e, const RingExpr& ring);

std::string describe(const SpecSubset& e);

}  // namespace primespec
