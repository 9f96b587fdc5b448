#pragma once

#include <memory>
#include <string>
#include <variant>

#include "primespec/fp_poly.hpp"
#include "primespec/monomial.hpp"
#include "primespec/numtheory.hpp"

namespace primespec {

/// The zero ideal of a domain: the single point of a field, or the zero
/// prime of a factor R/p in a quotient product.
struct ZeroPrime {
  friend auto operator<=>(const ZeroPrime&, const ZeroPrime&) = default;
};

struct ZGeneric {
  friend auto operator<=>(const ZGeneric&, const ZGeneric&) = default;
};

/// pZ for a prime p.
struct ZMax {
  BigInt p;
  friend bool operator==(const ZMax& a, const ZMax& b) { return a.p == b.p; }
  friend bool operator<(const ZMax& a, const ZMax& b) { return a.p < b.p; }
};

/// (p) in Z/n for a prime p dividing n.
struct ZmodPrime {
  BigInt p;
  friend bool operator==(const ZmodPrime& a, const ZmodPrime& b) { return a.p == b.p; }
  friend bool operator<(const ZmodPrime& a, const ZmodPrime& b) { return a.p < b.p; }
};

struct FpxGeneric {
  friend auto operator<=>(const FpxGeneric&, const FpxGeneric&) = default;
};

/// (f) in F_p[x] for a monic irreducible f.
struct FpxMax {
  fpx::Coeffs f;
  friend bool operator==(const FpxMax& a, const FpxMax& b) { return a.f == b.f; }
  friend bool operator<(const FpxMax& a, const FpxMax& b) { return fpx::less(a.f, b.f); }
};

/// (x_i : i in cover) in a monomial quotient or its localization.
struct MonoPrime {
  VarSet cover;
  friend auto operator<=>(const MonoPrime&, const MonoPrime&) = default;
};

/// The minimal prime P_k = (x_i : i != k) of the symbolic supplement ring.
struct SuppMin {
  long k = 1;
  friend auto operator<=>(const SuppMin&, const SuppMin&) = default;
};

/// The maximal ideal of the symbolic supplement ring.
struct SuppTop {
  friend auto operator<=>(const SuppTop&, const SuppTop&) = default;
};

struct PrimePoint;

/// pi_slot^{-1}(inner) in a finite product ring.
struct TamePrime {
  int slot = 0;
  std::shared_ptr<const PrimePoint> inner;
};

struct PrimePoint {
  using Variant = std::variant<ZeroPrime, ZGeneric, ZMax, ZmodPrime, FpxGeneric, FpxMax, MonoPrime, SuppMin, SuppTop,
                               TamePrime>;
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

bool operator==(const TamePrime& a, const TamePrime& b);
bool operator<(const TamePrime& a, const TamePrime& b);
bool operator==(const PrimePoint& a, const PrimePoint& b);
bool operator<(const PrimePoint& a, const PrimePoint& b);
inline bool operator!=(const PrimePoint& a, const PrimePoint& b) { return !(a == b); }

PrimePoint zero_prime();
PrimePoint z_generic();
PrimePoint z_max(const BigInt& p);
PrimePoint zmod_prime(const BigInt& p);
PrimePoint fpx_generic();
PrimePoint fpx_max(fpx::Coeffs f);
PrimePoint mono_prime(VarSet cover);
PrimePoint supp_min(long k);
PrimePoint supp_top();
PrimePoint tame(int slot, PrimePoint inner);

std::string describe(const PrimePoint& p);

}  // namespace primespec
