#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "primespec/monomial.hpp"
#include "primespec/numtheory.hpp"

namespace primespec {

/// Coefficient field of a polynomial quotient: F_p, or Q when `p == 0`.
struct CoefficientField {
  std::uint64_t p = 0;

  bool is_rational() const { return p == 0; }
  friend bool operator==(const CoefficientField&, const CoefficientField&) = default;
};

struct IntegerRing {
  friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

struct ModRing {
  BigInt n;
  std::vector<PrimePower> factorization;

  friend bool operator==(const ModRing& a, const ModRing& b) { return a.n == b.n; }
};

struct PrimeField {
  std::uint64_t p = 2;
  friend bool operator==(const PrimeField&, const PrimeField&) = default;
};

struct PolyRingFp {
  std::uint64_t p = 2;
  friend bool operator==(const PolyRingFp&, const PolyRingFp&) = default;
};

struct RationalField {
  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// K[x_1..x_n] / I with I generated by square-free monomials.
struct MonomialQuotient {
  CoefficientField field;
  std::size_t nvars = 1;
  std::vector<Exponent> gens;  // minimal, sorted

  friend bool operator==(const MonomialQuotient&, const MonomialQuotient&) = default;
};

/// (K[x_1..x_n] / I) localized at m = (x_1, ..., x_n).
struct LocalizedAtIrrelevant {
  MonomialQuotient inner;
  friend bool operator==(const LocalizedAtIrrelevant&, const LocalizedAtIrrelevant&) = default;
};

struct RingExpr;

struct ProductRing {
  std::vector<RingExpr> factors;
  friend bool operator==(const ProductRing&, const ProductRing&);
};

/// K[x_i : i >= 1] / (x_i x_k : i != k) localized at (x_i : i >= 1); only
/// ever handled through closed-form rules.
struct SymbolicSupplement {
  CoefficientField field;
  friend bool operator==(const SymbolicSupplement&, const SymbolicSupplement&) = default;
};

struct RingExpr {
  using Variant = std::variant<IntegerRing, ModRing, PrimeField, PolyRingFp, RationalField, MonomialQuotient,
                               LocalizedAtIrrelevant, ProductRing, SymbolicSupplement>;
  Variant node;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(node);
  }
  friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

inline bool operator==(const ProductRing& a, const ProductRing& b) { return a.factors == b.factors; }

// Validating constructors. Each throws InvalidInput when the invariant of the
// ring kind does not hold.
RingExpr integers();
RingExpr integers_mod(const BigInt& n, const Limits& limits = {});
RingExpr prime_field(std::uint64_t p);
RingExpr rationals();
RingExpr poly_over_fp(std::uint64_t p);
RingExpr monomial_quotient(CoefficientField field, std::size_t nvars, std::vector<Exponent> gens);
/// Requires the inner quotient to have Krull dimension at most 1.
RingExpr localized_at_irrelevant(const RingExpr& inner);
/// Nested products are flattened.
RingExpr product(std::vector<RingExpr> factors);
RingExpr symbolic_supplement(CoefficientField field);

/// Krull dimension of a square-free monomial quotient: nvars minus the
/// smallest vertex cover size.
std::size_t monomial_dimension(const MonomialQuotient& q);

/// The polynomial ring K[x_1..x_n] with I = 0.
RingExpr ambient(CoefficientField field, std::size_t nvars);

std::string describe(const RingExpr& ring);
std::string describe(const CoefficientField& field);

}  // namespace primespec
