#pragma once

#include <vector>

#include "primespec/spectrum.hpp"

namespace primespec {

/// Localization at m of K[x_1..x_n]/(x_i x_k : i != k). For n = 1 the ideal
/// is zero and `degenerate` is set.
struct SupplementRing {
  RingExpr ring;
  bool degenerate = false;
};

/// BadArity for n < 1.
SupplementRing build_supplement(CoefficientField field, long n);
std::vector<Exponent> supplement_generators(std::size_t n);

namespace oracle {

/// Minimal vertex covers by scanning all 2^n subsets.
std::vector<VarSet> minimal_covers_brute(const std::vector<Exponent>& gens, std::size_t nvars);

}  // namespace oracle

/// Minimal primes of a square-free monomial ideal, one MonoPrime per minimal
/// vertex cover, cross-checked against the subset oracle. TooManyVars above
/// 20 variables unless `check_oracle` is off.
std::vector<PrimePoint> minimal_primes_monomial(const std::vector<Exponent>& gens, std::size_t nvars,
                                                bool check_oracle = true);
std::vector<PrimePoint> minimal_primes_monomial(const IdealRepr& ideal, std::size_t nvars, bool check_oracle = true);

/// ⋂_k (x_i : i != k) equals the supplement ideal in K[x_1..x_n].
bool verify_intersection(std::size_t n, CoefficientField field);

/// Longest chain of primes. NonEnumerable when there is no rule.
long krull_dim(const RingExpr& ring);

/// Prime absorbance over every nonempty family of primes. SpectrumTooLarge
/// above 12 points.
bool pz_check(const RingExpr& ring);
/// Prime avoidance for prime ideals, with union membership sampled on
/// generators, their sums and low degree monomials.
bool cp_check(const RingExpr& ring);

bool is_reduced(const RingExpr& ring);

struct SupplementReport {
  long n = 0;
  CoefficientField field;
  bool degenerate = false;
  bool intersection_ok = false;
  std::vector<PrimePoint> minimal_primes;
  bool minimal_primes_ok = false;  // exactly the covers {1..n} \ {k}
  long dim = 0;
  bool reduced = false;
  bool pz_ok = false;

  bool all_ok() const { return intersection_ok && minimal_primes_ok && dim == 1 && reduced && pz_ok; }
};

SupplementReport supplement_report(CoefficientField field, long n);

}  // namespace primespec
