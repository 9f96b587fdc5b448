#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace primespec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Bounds on the exact-arithmetic work a single operation may do.
/// Integers wider than 64 bits are refused by factorization unless
/// `allow_big` is set; polynomial factorization over F_p stops at
/// `max_poly_degree`.
struct Limits {
  bool allow_big = false;
  unsigned max_poly_degree = 16;
};

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

BigInt parse_bigint(const std::string& text);
std::string to_string(const BigInt& value);
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& value);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
/// Least nonnegative residue.
BigInt mod_floor(const BigInt& a, const BigInt& n);

bool is_prime(const BigInt& n);

/// Prime factorization of |n| (n != 0), primes ascending. Trial division
/// followed by Pollard rho.
std::vector<PrimePower> factorize(const BigInt& n, const Limits& limits = {});
std::vector<BigInt> prime_divisors(const BigInt& n, const Limits& limits = {});
/// Product of the distinct primes dividing n.
BigInt radical(const BigInt& n, const Limits& limits = {});

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

}  // namespace primespec
