#include "primespec/numtheory.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>

#include "primespec/errors.hpp"

namespace primespec {

namespace {

const BigInt kU64Max = BigInt(std::numeric_limits<std::uint64_t>::max());

BigInt abs_big(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

BigInt pow_mod_big(BigInt base, BigInt exp, const BigInt& m) {
  BigInt result = 1;
  base %= m;
  while (exp > 0) {
    if (boost::multiprecision::bit_test(exp, 0)) result = (result * base) % m;
    base = (base * base) % m;
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are deterministic for every 64-bit input.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool miller_rabin_big(const BigInt& n) {
  BigInt d = n - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  static constexpr std::array<unsigned, 20> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29,
                                                  31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
  for (unsigned a : bases) {
    BigInt x = pow_mod_big(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t rho_u64(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto step = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      std::uint64_t diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

BigInt rho_big(const BigInt& n) {
  if (!boost::multiprecision::bit_test(n, 0)) return 2;
  for (unsigned c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    auto step = [&](const BigInt& v) { return (v * v + c) % n; };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = gcd(abs_big(x - y), n);
    }
    if (d != n) return d;
  }
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = n <= kU64Max ? BigInt(rho_u64(static_cast<std::uint64_t>(n))) : rho_big(n);
  split(d, out);
  split(n / d, out);
}

}  // namespace

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) fail(ErrorKind::InvalidInput, "empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size() ||
      !std::all_of(text.begin() + static_cast<std::ptrdiff_t>(start), text.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    fail(ErrorKind::InvalidInput, "malformed integer literal '" + text + "'");
  }
  BigInt value(text.substr(start));
  return text[0] == '-' ? BigInt(-value) : value;
}

std::string to_string(const BigInt& value) { return value.str(); }

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) fail(ErrorKind::InvalidInput, "zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(abs_big(a), abs_big(b)); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs_big(a / gcd(a, b) * b);
}

BigInt mod_floor(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n <= kU64Max) return miller_rabin_u64(static_cast<std::uint64_t>(n));
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % p == 0) return false;
  }
  return miller_rabin_big(n);
}

std::vector<PrimePower> factorize(const BigInt& n, const Limits& limits) {
  if (n == 0) fail(ErrorKind::InvalidInput, "cannot factor zero");
  BigInt m = abs_big(n);
  if (m > kU64Max && !limits.allow_big) {
    fail(ErrorKind::FactorizationLimit, to_string(n) + " exceeds the 64-bit factorization bound");
  }
  std::map<BigInt, unsigned> found;
  for (unsigned p = 2; p < 1000 && BigInt(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      ++found[BigInt(p)];
      m /= p;
    }
  }
  split(m, found);
  std::vector<PrimePower> out;
  out.reserve(found.size());
  for (const auto& [prime, exponent] : found) out.push_back({prime, exponent});
  return out;
}

std::vector<BigInt> prime_divisors(const BigInt& n, const Limits& limits) {
  std::vector<BigInt> out;
  for (const auto& pp : factorize(n, limits)) out.push_back(pp.prime);
  return out;
}

BigInt radical(const BigInt& n, const Limits& limits) {
  BigInt r = 1;
  for (const auto& pp : factorize(n, limits)) r *= pp.prime;
  return r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) fail(ErrorKind::InvalidInput, "zero has no inverse modulo " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

}  // namespace primespec
