#include "primespec/point.hpp"

#include <algorithm>

#include "primespec/element.hpp"

namespace primespec {

bool operator==(const TamePrime& a, const TamePrime& b) { return a.slot == b.slot && *a.inner == *b.inner; }

bool operator<(const TamePrime& a, const TamePrime& b) {
  if (a.slot != b.slot) return a.slot < b.slot;
  return *a.inner < *b.inner;
}

bool operator==(const PrimePoint& a, const PrimePoint& b) { return a.value == b.value; }
bool operator<(const PrimePoint& a, const PrimePoint& b) { return a.value < b.value; }

PrimePoint zero_prime() { return {ZeroPrime{}}; }
PrimePoint z_generic() { return {ZGeneric{}}; }
PrimePoint z_max(const BigInt& p) { return {ZMax{p}}; }
PrimePoint zmod_prime(const BigInt& p) { return {ZmodPrime{p}}; }
PrimePoint fpx_generic() { return {FpxGeneric{}}; }
PrimePoint fpx_max(fpx::Coeffs f) { return {FpxMax{std::move(f)}}; }

PrimePoint mono_prime(VarSet cover) {
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  return {MonoPrime{std::move(cover)}};
}

PrimePoint supp_min(long k) { return {SuppMin{k}}; }
PrimePoint supp_top() { return {SuppTop{}}; }

PrimePoint tame(int slot, PrimePoint inner) {
  return {TamePrime{slot, std::make_shared<const PrimePoint>(std::move(inner))}};
}

std::string describe(const PrimePoint& p) {
  struct Visitor {
    std::string operator()(const ZeroPrime&) const { return "(0)"; }
    std::string operator()(const ZGeneric&) const { return "(0)"; }
    std::string operator()(const ZMax& x) const { return to_string(x.p) + "Z"; }
    std::string operator()(const ZmodPrime& x) const { return "(" + to_string(x.p) + ")"; }
    std::string operator()(const FpxGeneric&) const { return "(0)"; }
    std::string operator()(const FpxMax& x) const { return "(" + describe(poly_elem(x.f)) + ")"; }
    std::string operator()(const MonoPrime& x) const {
      std::string out = "(";
      for (std::size_t i = 0; i < x.cover.size(); ++i) out += (i ? "," : "") + std::string("x") + std::to_string(x.cover[i]);
      return x.cover.empty() ? "(0)" : out + ")";
    }
    std::string operator()(const SuppMin& x) const { return "P_" + std::to_string(x.k); }
    std::string operator()(const SuppTop&) const { return "m"; }
    std::string operator()(const TamePrime& x) const {
      return "pi_" + std::to_string(x.slot) + "^-1" + describe(*x.inner);
    }
  };
  return std::visit(Visitor{}, p.value);
}

}  // namespace primespec
