#pragma once

#include <string>
#include <variant>
#include <vector>

#include "primespec/fp_poly.hpp"
#include "primespec/monomial.hpp"
#include "primespec/numtheory.hpp"
#include "primespec/ring.hpp"

namespace primespec {

struct IntElem {
  BigInt v;
  friend bool operator==(const IntElem&, const IntElem&) = default;
};

/// Residue class; used for Z/n and for F_p.
struct ModElem {
  BigInt v;
  friend bool operator==(const ModElem&, const ModElem&) = default;
};

struct RatElem {
  Rational v;
  friend bool operator==(const RatElem&, const RatElem&) = default;
};

struct PolyElem {
  fpx::Coeffs coeffs;
  friend bool operator==(const PolyElem&, const PolyElem&) = default;
};

struct Term {
  Rational c;
  Exponent e;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial. Over F_p the coefficients are integers in
/// [0, p). Canonical form: sorted by exponent, no zero coefficients, no
/// monomial lying in the defining ideal.
struct MPolyElem {
  std::vector<Term> terms;
  friend bool operator==(const MPolyElem&, const MPolyElem&) = default;
};

struct RingElement;

struct TupleElem {
  std::vector<RingElement> items;
  friend bool operator==(const TupleElem&, const TupleElem&);
};

struct RingElement {
  using Variant = std::variant<IntElem, ModElem, RatElem, PolyElem, MPolyElem, TupleElem>;
  Variant value;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(value);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(value);
  }
  friend bool operator==(const RingElement&, const RingElement&) = default;
};

inline bool operator==(const TupleElem& a, const TupleElem& b) { return a.items == b.items; }

// Convenience builders; none of them normalizes.
RingElement int_elem(const BigInt& v);
RingElement mod_elem(const BigInt& v);
RingElement rat_elem(const Rational& v);
RingElement poly_elem(fpx::Coeffs coeffs);
RingElement mpoly_elem(std::vector<Term> terms);
RingElement tuple_elem(std::vector<RingElement> items);
/// The monomial x_k (1-based) with unit coefficient.
RingElement variable(int k, std::size_t nvars);

/// Canonical form of `e` in `ring`. Throws KindMismatch when the tag does
/// not fit the ring.
RingElement normalize(const RingElement& e, const RingExpr& ring);

RingElement zero(const RingExpr& ring);
RingElement one(const RingExpr& ring);
RingElement add(const RingElement& a, const RingElement& b, const RingExpr& ring);
RingElement negate(const RingElement& a, const RingExpr& ring);
RingElement sub(const RingElement& a, const RingElement& b, const RingExpr& ring);
RingElement mul(const RingElement& a, const RingElement& b, const RingExpr& ring);
RingElement power(const RingElement& a, unsigned exponent, const RingExpr& ring);
bool is_zero(const RingElement& e, const RingExpr& ring);

bool is_unit(const RingElement& r, const RingExpr& ring);
bool is_nilpotent(const RingElement& r, const RingExpr& ring);
/// Not a zero divisor. Unsupported for polynomial quotient kinds.
bool is_regular(const RingElement& r, const RingExpr& ring);

/// Constant coefficient of a canonical polynomial element (0 if absent).
Rational constant_term(const MPolyElem& p);
/// 1-based indices of every variable occurring in a canonical element.
VarSet occurring_variables(const MPolyElem& p);

std::string describe(const RingElement& e);

}  // namespace primespec
