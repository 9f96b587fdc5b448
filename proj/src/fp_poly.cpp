#include "primespec/fp_poly.hpp"

#include <algorithm>
#include <random>

#include "primespec/errors.hpp"

namespace primespec::fpx {

namespace {

Coeffs x_poly() { return {0, 1}; }

void check_degree(const Coeffs& f, const Limits& limits) {
  if (degree(f) > static_cast<int>(limits.max_poly_degree) && !limits.allow_big) {
    fail(ErrorKind::FactorizationLimit,
         "polynomial degree " + std::to_string(degree(f)) + " exceeds cap " + std::to_string(limits.max_poly_degree));
  }
}

BigInt big_pow(std::uint64_t p, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

// Square-free decomposition input: returns the square-free part's distinct
// factors grouped by repeated p-th root extraction.
std::vector<Coeffs> squarefree_parts(const Coeffs& f, std::uint64_t p) {
  std::vector<Coeffs> parts;
  if (degree(f) <= 0) return parts;
  Coeffs df = derivative(f, p);
  if (df.empty()) {
    // f = g(x^p) = g'(x)^p over F_p
    Coeffs root;
    for (std::size_t i = 0; i < f.size(); i += p) root.push_back(f[i]);
    return squarefree_parts(trimmed(root), p);
  }
  Coeffs g = gcd(f, df, p);
  parts.push_back(monic(divmod(f, g, p).first, p));
  auto rest = squarefree_parts(g, p);
  parts.insert(parts.end(), rest.begin(), rest.end());
  return parts;
}

// Product of all monic irreducible factors of degree d, for square-free f.
std::vector<std::pair<int, Coeffs>> distinct_degree(Coeffs f, std::uint64_t p) {
  std::vector<std::pair<int, Coeffs>> out;
  Coeffs h = x_poly();
  for (int d = 1; 2 * d <= degree(f); ++d) {
    h = pow_mod(h, BigInt(p), f, p);
    Coeffs g = gcd(f, sub(h, x_poly(), p), p);
    if (degree(g) > 0) {
      out.emplace_back(d, g);
      f = divmod(f, g, p).first;
      h = rem(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(degree(f), monic(f, p));
  return out;
}

void equal_degree(const Coeffs& f, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<Coeffs>& out) {
  if (degree(f) == d) {
    out.push_back(monic(f, p));
    return;
  }
  const int n = degree(f);
  for (;;) {
    Coeffs a(static_cast<std::size_t>(n));
    for (auto& c : a) c = rng() % p;
    a = trimmed(a);
    if (degree(a) <= 0) continue;
    Coeffs t;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      Coeffs power = rem(a, f, p);
      t = power;
      for (int i = 1; i < d; ++i) {
        power = rem(mul(power, power, p), f, p);
        t = add(t, power, p);
      }
    } else {
      BigInt e = (big_pow(p, d) - 1) / 2;
      t = sub(pow_mod(a, e, f, p), Coeffs{1}, p);
    }
    Coeffs g = gcd(f, t, p);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(g, d, p, rng, out);
      equal_degree(divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

Coeffs trimmed(Coeffs f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Coeffs reduce(const Coeffs& f, std::uint64_t p) {
  Coeffs out(f.size());
  std::transform(f.begin(), f.end(), out.begin(), [p](std::uint64_t c) { return c % p; });
  return trimmed(std::move(out));
}

int degree(const Coeffs& f) { return static_cast<int>(f.size()) - 1; }

bool is_constant(const Coeffs& f) { return f.size() <= 1; }

Coeffs add(const Coeffs& f, const Coeffs& g, std::uint64_t p) {
  Coeffs out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = (out[i] + g[i]) % p;
  return trimmed(std::move(out));
}

Coeffs sub(const Coeffs& f, const Coeffs& g, std::uint64_t p) {
  Coeffs out(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = (out[i] + p - g[i]) % p;
  return trimmed(std::move(out));
}

Coeffs mul(const Coeffs& f, const Coeffs& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  Coeffs out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      out[i + j] = (out[i + j] + mul_mod(f[i], g[j], p)) % p;
    }
  }
  return trimmed(std::move(out));
}

Coeffs scale(const Coeffs& f, std::uint64_t c, std::uint64_t p) {
  Coeffs out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = mul_mod(f[i], c % p, p);
  return trimmed(std::move(out));
}

std::pair<Coeffs, Coeffs> divmod(const Coeffs& f, const Coeffs& g, std::uint64_t p) {
  if (g.empty()) fail(ErrorKind::InvalidInput, "polynomial division by zero");
  Coeffs r = f;
  if (degree(r) < degree(g)) return {{}, r};
  Coeffs q(static_cast<std::size_t>(degree(r) - degree(g) + 1), 0);
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  while (!r.empty() && degree(r) >= degree(g)) {
    const std::size_t shift = static_cast<std::size_t>(degree(r) - degree(g));
    const std::uint64_t c = mul_mod(r.back(), lead_inv, p);
    q[shift] = c;
    for (std::size_t j = 0; j < g.size(); ++j) {
      r[shift + j] = (r[shift + j] + p - mul_mod(c, g[j], p)) % p;
    }
    r = trimmed(std::move(r));
  }
  return {trimmed(std::move(q)), r};
}

Coeffs rem(const Coeffs& f, const Coeffs& g, std::uint64_t p) { return divmod(f, g, p).second; }

bool divides(const Coeffs& g, const Coeffs& f, std::uint64_t p) {
  if (g.empty()) return f.empty();
  return rem(f, g, p).empty();
}

Coeffs monic(const Coeffs& f, std::uint64_t p) {
  if (f.empty()) return f;
  return scale(f, inv_mod(f.back(), p), p);
}

Coeffs gcd(const Coeffs& f, const Coeffs& g, std::uint64_t p) {
  Coeffs a = f, b = g;
  while (!b.empty()) {
    Coeffs r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Coeffs lcm(const Coeffs& f, const Coeffs& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  return monic(divmod(mul(f, g, p), gcd(f, g, p), p).first, p);
}

Coeffs derivative(const Coeffs& f, std::uint64_t p) {
  if (f.size() <= 1) return {};
  Coeffs out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = mul_mod(f[i], i % p, p);
  return trimmed(std::move(out));
}

Coeffs pow_mod(const Coeffs& base, const BigInt& exp, const Coeffs& modulus, std::uint64_t p) {
  Coeffs result = rem(Coeffs{1}, modulus, p);
  Coeffs b = rem(base, modulus, p);
  BigInt e = exp;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) result = rem(mul(result, b, p), modulus, p);
    b = rem(mul(b, b, p), modulus, p);
    e >>= 1;
  }
  return result;
}

bool is_irreducible(const Coeffs& f, std::uint64_t p, const Limits& limits) {
  if (degree(f) < 1) return false;
  check_degree(f, limits);
  Coeffs g = monic(f, p);
  if (degree(g) == 1) return true;
  if (degree(gcd(g, derivative(g, p), p)) > 0) return false;
  Coeffs h = x_poly();
  for (int i = 1; 2 * i <= degree(g); ++i) {
    h = pow_mod(h, BigInt(p), g, p);
    if (degree(gcd(g, sub(h, x_poly(), p), p)) > 0) return false;
  }
  return true;
}

std::vector<Coeffs> irreducible_factors(const Coeffs& f, std::uint64_t p, const Limits& limits) {
  if (f.empty()) fail(ErrorKind::InvalidInput, "cannot factor the zero polynomial");
  check_degree(f, limits);
  std::vector<Coeffs> out;
  std::mt19937_64 rng(0x5eed0000ULL + p);
  for (const Coeffs& part : squarefree_parts(monic(f, p), p)) {
    if (degree(part) < 1) continue;
    for (const auto& [d, block] : distinct_degree(part, p)) equal_degree(block, d, p, rng, out);
  }
  std::sort(out.begin(), out.end(), less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool less(const Coeffs& f, const Coeffs& g) {
  if (f.size() != g.size()) return f.size() < g.size();
  return std::lexicographical_compare(f.rbegin(), f.rend(), g.rbegin(), g.rend());
}

}  // namespace primespec::fpx
