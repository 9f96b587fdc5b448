#pragma once

// Brute-force references used by the tests. None of them call the routine
// they check; they work from definitions (divisibility, element membership,
// exhaustive subsets) instead.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "primespec/construction.hpp"
#include "primespec/products.hpp"

namespace oracle_ref {

using namespace primespec;

inline std::vector<std::uint64_t> prime_divisors_naive(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline bool is_prime_naive(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// p ⊆ q decided by testing each generator of p for membership in q.
inline bool below(const PrimePoint& p, const PrimePoint& q, const RingExpr& r) {
  for (const auto& g : ideal_generators(prime_ideal(p, r), r)) {
    if (!prime_contains(q, g, r)) return false;
  }
  return true;
}

inline std::set<PrimePoint> members(const SpecSubset& e, const RingExpr& r) {
  const auto m = finite_members(e, r);
  return {m->begin(), m->end()};
}

inline std::set<PrimePoint> up(const std::set<PrimePoint>& e, const RingExpr& r) {
  std::set<PrimePoint> out;
  for (const auto& q : finite_points(r)) {
    for (const auto& p : e) {
      if (below(p, q, r)) out.insert(q);
    }
  }
  return out;
}

inline std::set<PrimePoint> down(const std::set<PrimePoint>& e, const RingExpr& r) {
  std::set<PrimePoint> out;
  for (const auto& q : finite_points(r)) {
    for (const auto& p : e) {
      if (below(q, p, r)) out.insert(q);
    }
  }
  return out;
}

inline std::set<PrimePoint> from_mask(const std::vector<PrimePoint>& pts, std::uint64_t mask) {
  std::set<PrimePoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (mask >> i & 1) out.insert(pts[i]);
  }
  return out;
}

inline SpecSubset as_set(const std::set<PrimePoint>& s) { return s.empty() ? empty_set() : explicit_set(s); }

// Minimal vertex covers by listing every subset of variables, smallest
// first, and discarding supersets of covers already found.
inline std::vector<VarSet> covers_by_size(const std::vector<Exponent>& gens, std::size_t nvars) {
  std::vector<std::uint32_t> masks;
  for (std::uint32_t s = 0; s < (1u << nvars); ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return __builtin_popcount(a) < __builtin_popcount(b);
  });
  std::vector<std::uint32_t> found;
  for (const auto s : masks) {
    bool hits_all = true;
    for (const auto& g : gens) {
      bool hit = false;
      for (std::size_t i = 0; i < g.size(); ++i) hit = hit || (g[i] && (s >> i & 1));
      hits_all = hits_all && hit;
    }
    if (!hits_all) continue;
    if (std::any_of(found.begin(), found.end(), [&](std::uint32_t f) { return (f & s) == f; })) continue;
    found.push_back(s);
  }
  std::vector<VarSet> out;
  for (const auto s : found) {
    VarSet c;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (s >> i & 1) c.push_back(static_cast<int>(i + 1));
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Monomial m lies in the ideal generated by gens.
inline bool monomial_in(const std::vector<Exponent>& gens, const Exponent& m) {
  for (const auto& g : gens) {
    bool div = true;
    for (std::size_t i = 0; i < g.size(); ++i) div = div && (i < m.size() ? g[i] <= m[i] : g[i] == 0);
    if (div) return true;
  }
  return false;
}

// All exponent vectors in nvars variables of total degree <= d.
inline std::vector<Exponent> monomials_up_to(std::size_t nvars, unsigned d) {
  std::vector<Exponent> out{Exponent(nvars, 0)};
  for (std::size_t i = 0; i < out.size(); ++i) {
    unsigned total = 0;
    for (auto x : out[i]) total += x;
    if (total == d) continue;
    for (std::size_t v = 0; v < nvars; ++v) {
      bool lex_ok = true;
      for (std::size_t w = v + 1; w < nvars; ++w) lex_ok = lex_ok && out[i][w] == 0;
      if (!lex_ok) continue;
      Exponent e = out[i];
      ++e[v];
      out.push_back(e);
    }
  }
  return out;
}

// Nilpotent by multiplying up to `steps` times.
inline bool nilpotent_by_powers(const RingElement& a, const RingExpr& r, unsigned steps = 64) {
  RingElement x = a;
  for (unsigned i = 0; i < steps; ++i) {
    if (is_zero(x, r)) return true;
    x = mul(x, a, r);
  }
  return is_zero(x, r);
}

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

}  // namespace oracle_ref
