#include "primespec/monomial.hpp"

#include <algorithm>
#include <cstdint>

#include "primespec/errors.hpp"

namespace primespec::mono {

namespace {

std::uint32_t at(const Exponent& a, std::size_t i) { return i < a.size() ? a[i] : 0; }

using Mask = std::uint64_t;

Mask mask_of(const VarSet& vars) {
  Mask m = 0;
  for (int v : vars) m |= Mask{1} << (v - 1);
  return m;
}

VarSet vars_of(Mask m) {
  VarSet out;
  for (int i = 0; i < 64; ++i) {
    if (m & (Mask{1} << i)) out.push_back(i + 1);
  }
  return out;
}

}  // namespace

bool divides(const Exponent& a, const Exponent& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (at(a, i) > at(b, i)) return false;
  }
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(at(a, i), at(b, i));
  return out;
}

Exponent product(const Exponent& a, const Exponent& b) {
  Exponent out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(a, i) + at(b, i);
  return out;
}

bool is_square_free(const Exponent& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t e) { return e <= 1; });
}

bool is_one(const Exponent& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint32_t e) { return e == 0; });
}

VarSet support(const Exponent& a) {
  VarSet out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

std::size_t distinct_variables(const Exponent& a) {
  return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [](std::uint32_t e) { return e > 0; }));
}

Exponent resized(Exponent a, std::size_t n) {
  a.resize(n, 0);
  return a;
}

Exponent without_trailing_zeros(Exponent a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Exponent from_vars(const VarSet& vars, std::size_t n) {
  Exponent out(n, 0);
  for (int v : vars) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      fail(ErrorKind::InvalidInput, "variable index " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    out[static_cast<std::size_t>(v - 1)] = 1;
  }
  return out;
}

std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponent> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      redundant = j != i && divides(gens[j], gens[i]);
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

bool member(const std::vector<Exponent>& gens, const Exponent& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exponent& g) { return divides(g, m); });
}

std::vector<Exponent> intersect(const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
  std::vector<Exponent> out;
  out.reserve(a.size() * b.size());
  for (const auto& u : a) {
    for (const auto& v : b) out.push_back(lcm(u, v));
  }
  return minimalize(std::move(out));
}

bool is_vertex_cover(const VarSet& cover, const std::vector<Exponent>& gens) {
  for (const auto& g : gens) {
    const VarSet s = support(g);
    const bool hit = std::any_of(s.begin(), s.end(),
                                 [&](int v) { return std::binary_search(cover.begin(), cover.end(), v); });
    if (!hit) return false;
  }
  return true;
}

std::vector<VarSet> minimal_vertex_covers(const std::vector<Exponent>& gens, std::size_t nvars) {
  if (nvars > 64) fail(ErrorKind::TooManyVars, "vertex covers limited to 64 variables");
  std::vector<Mask> covers{0};
  for (const auto& g : gens) {
    const Mask edge = mask_of(support(g));
    if (edge == 0) return {};  // the unit ideal has no primes over it
    std::vector<Mask> next;
    for (Mask c : covers) {
      if (c & edge) {
        next.push_back(c);
        continue;
      }
      for (Mask bit = edge; bit; bit &= bit - 1) next.push_back(c | (bit & -bit));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    covers.clear();
    for (Mask c : next) {
      const bool minimal = std::none_of(next.begin(), next.end(),
                                        [c](Mask d) { return d != c && (d & c) == d; });
      if (minimal) covers.push_back(c);
    }
  }
  std::vector<VarSet> out;
  out.reserve(covers.size());
  for (Mask c : covers) out.push_back(vars_of(c));
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    out += "x" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace primespec::mono
