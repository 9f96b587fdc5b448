#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "primespec/spectrum.hpp"

namespace primespec {

/// R -> R/p.
struct QuotientMap {
  RingExpr source;
  PrimePoint prime;
};

/// R -> prod_{p in E} R/p. Slot i is the i-th member of E (see member_at).
struct CanonicalIntoQuotientProduct {
  RingExpr source;
  SpecSubset family;
};

/// R -> prod_{p in E} R_p.
struct CanonicalIntoLocalProduct {
  RingExpr source;
  SpecSubset family;
};

/// Z/n -> Z/d_1 x ... x Z/d_m with every d_i >= 2 dividing n.
struct DiagonalIntoModProduct {
  BigInt n;
  std::vector<BigInt> divisors;
};

/// R -> kappa(p).
struct ResidueMap {
  RingExpr source;
  PrimePoint prime;
};

struct RingMapSpec {
  using Variant =
      std::variant<QuotientMap, CanonicalIntoQuotientProduct, CanonicalIntoLocalProduct, DiagonalIntoModProduct, ResidueMap>;
  Variant value;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(value);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(value);
  }
};

// Validating constructors (InvalidInput / KindMismatch on bad data).
RingMapSpec quotient_map(const RingExpr& source, const PrimePoint& prime);
RingMapSpec into_quotient_product(const RingExpr& source, const SpecSubset& family);
RingMapSpec into_local_product(const RingExpr& source, const SpecSubset& family);
RingMapSpec diagonal_into_mod_product(const BigInt& n, std::vector<BigInt> divisors);
RingMapSpec residue_map(const RingExpr& source, const PrimePoint& prime);

RingExpr source_ring(const RingMapSpec& map);
std::string describe(const RingMapSpec& map);

/// Slot order of a family: sorted order for finite E; for infinite E the
/// special point first (when present), then ordinary points ascending.
std::optional<PrimePoint> member_at(const SpecSubset& e, const RingExpr& ring, long slot);
std::optional<long> slot_of(const SpecSubset& e, const RingExpr& ring, const PrimePoint& p);

// Target primes are labelled by points of the source: TamePrime(i, x) names
// x/E_i in R/E_i (x ⊇ E_i) or x R_{E_i} (x ⊆ E_i). ZeroPrime names the zero
// ideal of a quotient factor, of a residue field, of a prime Z/d_i, and the
// generic point of a localized PID.

PrimePoint contract(const RingMapSpec& map, const PrimePoint& q);
bool is_injective(const RingMapSpec& map);

/// Every prime of the target, when that spectrum is finite. NonEnumerable
/// otherwise.
std::vector<PrimePoint> target_points(const RingMapSpec& map);

/// Least target prime lying over the minimal prime p.
PrimePoint laying_over(const RingMapSpec& map, const PrimePoint& p);

struct FieldDescriptor {
  enum class Kind { PrimeField, Rationals, GaloisField, RationalFunctions };
  Kind kind = Kind::PrimeField;
  std::uint64_t characteristic = 0;
  fpx::Coeffs modulus;  // GaloisField: F_p[x]/(modulus)
  VarSet free_variables;  // RationalFunctions: base(x_j : j in free_variables)
  bool univariate_fpx = false;  // RationalFunctions over F_p(x) from F_p[x]

  /// The ring form of prime fields and Q; nullopt for the symbolic kinds.
  std::optional<RingExpr> as_ring() const;
  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

FieldDescriptor residue_field(const RingExpr& ring, const PrimePoint& p);
std::string describe(const FieldDescriptor& f);

/// Im pi* for pi: R -> prod_{p in E} kappa(p), decided point by point: q is in
/// the image iff E meets every neighbourhood V(B) ∩ D(a) with B ⊆ q, a ∉ q,
/// where a ∉ q is read off as "a is a unit in kappa(q)". Neighbourhoods are
/// built from concrete ring elements.
SpecSubset image_via_residue_fields(const RingExpr& ring, const SpecSubset& e);

}  // namespace primespec
