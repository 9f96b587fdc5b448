#pragma once

#include <variant>
#include <vector>

#include "primespec/element.hpp"
#include "primespec/ring.hpp"

namespace primespec {

/// (g) in Z, Z/n, a prime field, Q or F_p[x]. Canonical generator: nonnegative
/// in Z, gcd(g, n) in Z/n, 0 or 1 in a field, monic in F_p[x].
struct PrincipalIdeal {
  RingElement generator;
  friend bool operator==(const PrincipalIdeal&, const PrincipalIdeal&) = default;
};

/// Ideal of a polynomial quotient K[x]/I, stored as the minimal generators of
/// its preimage J >= I with every generator that already lies in I dropped.
/// The zero ideal has no generators; the unit ideal is generated by 1.
struct MonomialIdeal {
  std::vector<Exponent> gens;
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

struct IdealRepr;

/// I_1 x ... x I_n in a finite product ring.
struct ProductIdeal {
  std::vector<IdealRepr> components;
  friend bool operator==(const ProductIdeal&, const ProductIdeal&);
};

struct IdealRepr {
  std::variant<PrincipalIdeal, MonomialIdeal, ProductIdeal> value;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(value);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(value);
  }
  friend bool operator==(const IdealRepr&, const IdealRepr&) = default;
};

inline bool operator==(const ProductIdeal& a, const ProductIdeal& b) { return a.components == b.components; }

IdealRepr principal(const RingElement& generator, const RingExpr& ring);
IdealRepr monomial_ideal(std::vector<Exponent> gens, const RingExpr& ring);
IdealRepr product_ideal(std::vector<IdealRepr> components, const RingExpr& ring);
IdealRepr zero_ideal(const RingExpr& ring);
IdealRepr unit_ideal(const RingExpr& ring);

/// Canonical form of an ideal of `ring`.
IdealRepr canonical(const IdealRepr& ideal, const RingExpr& ring);

bool ideal_member(const IdealRepr& ideal, const RingElement& r, const RingExpr& ring);
/// I ⊆ J, tested generator by generator.
bool ideal_contains(const IdealRepr& inner, const IdealRepr& outer, const RingExpr& ring);
IdealRepr ideal_intersect(const IdealRepr& a, const IdealRepr& b, const RingExpr& ring);
/// Finite generating set as ring elements.
std::vector<RingElement> ideal_generators(const IdealRepr& ideal, const RingExpr& ring);

/// Nilradical for Z, Z/n, fields, F_p[x] and monomial quotients (and their
/// localizations). Unsupported for products and the symbolic supplement.
IdealRepr nilradical(const RingExpr& ring, const Limits& limits = {});

std::string describe(const IdealRepr& ideal);

}  // namespace primespec
