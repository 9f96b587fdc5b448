#pragma once

#include <cstdint>
#include <vector>

#include "primespec/numtheory.hpp"

namespace primespec::fpx {

/// Dense coefficients over F_p, lowest degree first, no trailing zeros.
/// The zero polynomial is the empty vector.
using Coeffs = std::vector<std::uint64_t>;

Coeffs trimmed(Coeffs f);
Coeffs reduce(const Coeffs& f, std::uint64_t p);
int degree(const Coeffs& f);
bool is_constant(const Coeffs& f);

Coeffs add(const Coeffs& f, const Coeffs& g, std::uint64_t p);
Coeffs sub(const Coeffs& f, const Coeffs& g, std::uint64_t p);
Coeffs mul(const Coeffs& f, const Coeffs& g, std::uint64_t p);
Coeffs scale(const Coeffs& f, std::uint64_t c, std::uint64_t p);
/// Quotient and remainder; g must be nonzero.
std::pair<Coeffs, Coeffs> divmod(const Coeffs& f, const Coeffs& g, std::uint64_t p);
Coeffs rem(const Coeffs& f, const Coeffs& g, std::uint64_t p);
bool divides(const Coeffs& g, const Coeffs& f, std::uint64_t p);
Coeffs monic(const Coeffs& f, std::uint64_t p);
/// Monic gcd; gcd(0, 0) = 0.
Coeffs gcd(const Coeffs& f, const Coeffs& g, std::uint64_t p);
/// Monic lcm; lcm with 0 is 0.
Coeffs lcm(const Coeffs& f, const Coeffs& g, std::uint64_t p);
Coeffs derivative(const Coeffs& f, std::uint64_t p);
Coeffs pow_mod(const Coeffs& base, const BigInt& exp, const Coeffs& modulus, std::uint64_t p);

/// Irreducibility by checking gcd(f, x^(p^i) - x) = 1 for 1 <= i <= deg/2.
/// Refuses degrees above the configured cap.
bool is_irreducible(const Coeffs& f, std::uint64_t p, const Limits& limits = {});

/// Distinct monic irreducible factors of a nonzero polynomial, sorted by
/// (degree, coefficients).
std::vector<Coeffs> irreducible_factors(const Coeffs& f, std::uint64_t p, const Limits& limits = {});

/// Canonical ordering used for sets of irreducibles.
bool less(const Coeffs& f, const Coeffs& g);

}  // namespace primespec::fpx
