#include "primespec/ring.hpp"

#include <algorithm>
#include <sstream>

#include "primespec/errors.hpp"

namespace primespec {

namespace {

void check_field(const CoefficientField& field) {
  if (!field.is_rational() && !is_prime(BigInt(field.p))) {
    fail(ErrorKind::InvalidInput, "coefficient field characteristic " + std::to_string(field.p) + " is not prime");
  }
}

void check_prime(std::uint64_t p) {
  if (!is_prime(BigInt(p))) fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
}

}  // namespace

RingExpr integers() { return {IntegerRing{}}; }

RingExpr integers_mod(const BigInt& n, const Limits& limits) {
  if (n < 2) fail(ErrorKind::InvalidInput, "modulus must be at least 2");
  return {ModRing{n, factorize(n, limits)}};
}

RingExpr prime_field(std::uint64_t p) {
  check_prime(p);
  return {PrimeField{p}};
}

RingExpr rationals() { return {RationalField{}}; }

RingExpr poly_over_fp(std::uint64_t p) {
  check_prime(p);
  return {PolyRingFp{p}};
}

RingExpr monomial_quotient(CoefficientField field, std::size_t nvars, std::vector<Exponent> gens) {
  check_field(field);
  if (nvars < 1) fail(ErrorKind::InvalidInput, "monomial quotient needs at least one variable");
  if (nvars > 64) fail(ErrorKind::TooManyVars, "monomial quotient limited to 64 variables");
  for (auto& g : gens) {
    if (g.size() > nvars) {
      if (!mono::is_one(Exponent(g.begin() + static_cast<std::ptrdiff_t>(nvars), g.end()))) {
        fail(ErrorKind::InvalidInput, "generator " + mono::to_string(g) + " uses more than nvars variables");
      }
    }
    g = mono::resized(g, nvars);
    if (!mono::is_square_free(g)) {
      fail(ErrorKind::InvalidInput, "generator " + mono::to_string(g) + " is not square-free");
    }
    if (mono::is_one(g)) fail(ErrorKind::InvalidInput, "the unit ideal does not define a nonzero ring");
  }
  return {MonomialQuotient{field, nvars, mono::minimalize(std::move(gens))}};
}

RingExpr localized_at_irrelevant(const RingExpr& inner) {
  if (!inner.is<MonomialQuotient>()) fail(ErrorKind::InvalidInput, "localization needs a monomial quotient");
  const auto& q = inner.as<MonomialQuotient>();
  if (monomial_dimension(q) > 1) {
    fail(ErrorKind::InvalidInput, "localized quotient must have Krull dimension at most 1");
  }
  return {LocalizedAtIrrelevant{q}};
}

RingExpr product(std::vector<RingExpr> factors) {
  if (factors.empty()) fail(ErrorKind::InvalidInput, "product needs at least one factor");
  std::vector<RingExpr> flat;
  for (auto& f : factors) {
    if (f.is<SymbolicSupplement>()) fail(ErrorKind::InvalidInput, "symbolic supplement cannot be a product factor");
    if (f.is<ProductRing>()) {
      for (const auto& g : f.as<ProductRing>().factors) flat.push_back(g);
    } else {
      flat.push_back(std::move(f));
    }
  }
  return {ProductRing{std::move(flat)}};
}

RingExpr symbolic_supplement(CoefficientField field) {
  check_field(field);
  return {SymbolicSupplement{field}};
}

std::size_t monomial_dimension(const MonomialQuotient& q) {
  const auto covers = mono::minimal_vertex_covers(q.gens, q.nvars);
  std::size_t smallest = q.nvars;
  for (const auto& c : covers) smallest = std::min(smallest, c.size());
  return q.nvars - smallest;
}

RingExpr ambient(CoefficientField field, std::size_t nvars) { return monomial_quotient(field, nvars, {}); }

std::string describe(const CoefficientField& field) {
  return field.is_rational() ? "Q" : "F" + std::to_string(field.p);
}

std::string describe(const RingExpr& ring) {
  struct Visitor {
    std::string operator()(const IntegerRing&) const { return "Z"; }
    std::string operator()(const ModRing& r) const { return "Z/" + to_string(r.n); }
    std::string operator()(const PrimeField& r) const { return "F" + std::to_string(r.p); }
    std::string operator()(const PolyRingFp& r) const { return "F" + std::to_string(r.p) + "[x]"; }
    std::string operator()(const RationalField&) const { return "Q"; }
    std::string operator()(const MonomialQuotient& r) const {
      std::ostringstream out;
      out << describe(r.field) << "[x1..x" << r.nvars << "]/(";
      for (std::size_t i = 0; i < r.gens.size(); ++i) out << (i ? "," : "") << mono::to_string(r.gens[i]);
      out << ")";
      return out.str();
    }
    std::string operator()(const LocalizedAtIrrelevant& r) const {
      return "(" + (*this)(r.inner) + ")_m";
    }
    std::string operator()(const ProductRing& r) const {
      std::string out;
      for (std::size_t i = 0; i < r.factors.size(); ++i) out += (i ? " x " : "") + describe(r.factors[i]);
      return out;
    }
    std::string operator()(const SymbolicSupplement& r) const {
      return "Supp(" + describe(r.field) + ")";
    }
  };
  return std::visit(Visitor{}, ring.node);
}

}  // namespace primespec
