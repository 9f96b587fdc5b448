#include "primespec/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "primespec/errors.hpp"

namespace primespec {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "' in " + j.dump());
  return j.at(key);
}

// Rings and elements are tagged by "kind", points, sets and maps by "type";
// either key is accepted everywhere.
std::string type_of(const Json& j) {
  const Json& t = j.is_object() && j.contains("kind") ? j.at("kind") : field(j, "type");
  if (!t.is_string()) bad("tag must be a string");
  return t.get<std::string>();
}

BigInt big(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? BigInt(j.get<std::uint64_t>()) : BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  bad("expected an integer, got " + j.dump());
}

Json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return to_string(v);
}

std::uint64_t u64(const Json& j) {
  const BigInt v = big(j);
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) bad("value out of range: " + j.dump());
  return static_cast<std::uint64_t>(v);
}

Rational rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return Rational(big(j));
}

Json rational_json(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return big_json(boost::multiprecision::numerator(r));
  return to_string(r);
}

template <class T, class Fn>
std::vector<T> list(const Json& j, Fn fn) {
  if (!j.is_array()) bad("expected an array, got " + j.dump());
  std::vector<T> out;
  for (const auto& x : j) out.push_back(fn(x));
  return out;
}

fpx::Coeffs coeffs(const Json& j) {
  return list<std::uint64_t>(j, [](const Json& x) { return u64(x); });
}

Exponent exponent(const Json& j) {
  return list<std::uint32_t>(j, [](const Json& x) {
    const auto v = u64(x);
    if (v > std::numeric_limits<std::uint32_t>::max()) bad("exponent too large");
    return static_cast<std::uint32_t>(v);
  });
}

}  // namespace

CoefficientField field_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "Q") return {0};
    if (s.size() > 1 && s[0] == 'F') {
      const BigInt p = parse_bigint(s.substr(1));
      if (p < 2 || p > std::numeric_limits<std::uint64_t>::max() || !is_prime(p)) bad("field " + s + " is not F_p for a prime p");
      return {static_cast<std::uint64_t>(p)};
    }
  }
  if (j.is_object() && j.contains("p")) {
    const auto p = u64(j.at("p"));
    if (p != 0 && !is_prime(p)) bad("field characteristic must be prime");
    return {p};
  }
  bad("field must be \"Q\" or \"F<p>\", got " + j.dump());
}

Json to_json(const CoefficientField& f) { return f.is_rational() ? std::string("Q") : "F" + std::to_string(f.p); }

RingExpr ring_from_json(const Json& j, const Limits& limits) {
  const auto t = type_of(j);
  if (t == "Z") return integers();
  if (t == "Zmod") return integers_mod(big(field(j, "n")), limits);
  if (t == "Fp") return prime_field(u64(field(j, "p")));
  if (t == "FpPoly") return poly_over_fp(u64(field(j, "p")));
  if (t == "Q") return rationals();
  if (t == "MonomialQuotient") {
    const auto gens = list<Exponent>(field(j, "gens"), exponent);
    return monomial_quotient(field_from_json(field(j, "field")), u64(field(j, "nvars")), gens);
  }
  if (t == "LocalizedAtIrrelevant") return localized_at_irrelevant(ring_from_json(field(j, "inner"), limits));
  if (t == "Product") {
    return product(list<RingExpr>(field(j, "factors"), [&](const Json& x) { return ring_from_json(x, limits); }));
  }
  if (t == "SymbolicSupplement") return symbolic_supplement(field_from_json(field(j, "field")));
  bad("unknown ring type '" + t + "'");
}

Json to_json(const RingExpr& r) {
  if (r.is<IntegerRing>()) return {{"kind", "Z"}};
  if (r.is<ModRing>()) return {{"kind", "Zmod"}, {"n", big_json(r.as<ModRing>().n)}};
  if (r.is<PrimeField>()) return {{"kind", "Fp"}, {"p", r.as<PrimeField>().p}};
  if (r.is<PolyRingFp>()) return {{"kind", "FpPoly"}, {"p", r.as<PolyRingFp>().p}};
  if (r.is<RationalField>()) return {{"kind", "Q"}};
  if (r.is<MonomialQuotient>()) {
    const auto& q = r.as<MonomialQuotient>();
    return {{"kind", "MonomialQuotient"}, {"field", to_json(q.field)}, {"nvars", q.nvars}, {"gens", q.gens}};
  }
  if (r.is<LocalizedAtIrrelevant>()) {
    return {{"kind", "LocalizedAtIrrelevant"}, {"inner", to_json(RingExpr{r.as<LocalizedAtIrrelevant>().inner})}};
  }
  if (r.is<ProductRing>()) {
    Json fs = Json::array();
    for (const auto& f : r.as<ProductRing>().factors) fs.push_back(to_json(f));
    return {{"kind", "Product"}, {"factors", fs}};
  }
  return {{"kind", "SymbolicSupplement"}, {"field", to_json(r.as<SymbolicSupplement>().field)}};
}

RingElement element_from_json(const Json& j) {
  if (j.is_number_integer()) return int_elem(big(j));
  const auto t = type_of(j);
  if (t == "int") return int_elem(big(field(j, "v")));
  if (t == "mod") return mod_elem(big(field(j, "v")));
  if (t == "rat") return rat_elem(rational(field(j, "v")));
  if (t == "poly") return poly_elem(coeffs(field(j, "coeffs")));
  if (t == "mpoly") {
    return mpoly_elem(list<Term>(field(j, "terms"), [](const Json& x) {
      return Term{rational(field(x, "c")), exponent(field(x, "e"))};
    }));
  }
  if (t == "tuple") return tuple_elem(list<RingElement>(field(j, "items"), element_from_json));
  bad("unknown element type '" + t + "'");
}

Json to_json(const RingElement& e) {
  if (e.is<IntElem>()) return {{"kind", "int"}, {"v", big_json(e.as<IntElem>().v)}};
  if (e.is<ModElem>()) return {{"kind", "mod"}, {"v", big_json(e.as<ModElem>().v)}};
  if (e.is<RatElem>()) return {{"kind", "rat"}, {"v", rational_json(e.as<RatElem>().v)}};
  if (e.is<PolyElem>()) return {{"kind", "poly"}, {"coeffs", e.as<PolyElem>().coeffs}};
  if (e.is<MPolyElem>()) {
    Json terms = Json::array();
    for (const auto& t : e.as<MPolyElem>().terms) terms.push_back({{"c", rational_json(t.c)}, {"e", t.e}});
    return {{"kind", "mpoly"}, {"terms", terms}};
  }
  Json items = Json::array();
  for (const auto& x : e.as<TupleElem>().items) items.push_back(to_json(x));
  return {{"kind", "tuple"}, {"items", items}};
}

PrimePoint point_from_json(const Json& j) {
  const auto t = type_of(j);
  if (t == "zero") return zero_prime();
  if (t == "zGeneric") return z_generic();
  if (t == "zMax") return z_max(big(field(j, "p")));
  if (t == "zmodPrime") return zmod_prime(big(field(j, "p")));
  if (t == "fpxGeneric") return fpx_generic();
  if (t == "fpxMax") return fpx_max(coeffs(field(j, "f")));
  if (t == "monoPrime") {
    return mono_prime(list<int>(field(j, "cover"), [](const Json& x) {
      const auto v = u64(x);
      if (v < 1 || v > 64) bad("variable index out of range");
      return static_cast<int>(v);
    }));
  }
  if (t == "suppMin") {
    const BigInt k = big(field(j, "k"));
    if (k < 1 || k > std::numeric_limits<long>::max()) bad("minimal prime index must be positive");
    return supp_min(static_cast<long>(k));
  }
  if (t == "suppTop") return supp_top();
  if (t == "tame") {
    const BigInt s = big(field(j, "slot"));
    if (s < 0 || s > std::numeric_limits<int>::max()) bad("slot out of range");
    return tame(static_cast<int>(s), point_from_json(field(j, "inner")));
  }
  bad("unknown point type '" + t + "'");
}

Json to_json(const PrimePoint& p) {
  struct V {
    Json operator()(const ZeroPrime&) const { return {{"type", "zero"}}; }
    Json operator()(const ZGeneric&) const { return {{"type", "zGeneric"}}; }
    Json operator()(const ZMax& x) const { return {{"type", "zMax"}, {"p", big_json(x.p)}}; }
    Json operator()(const ZmodPrime& x) const { return {{"type", "zmodPrime"}, {"p", big_json(x.p)}}; }
    Json operator()(const FpxGeneric&) const { return {{"type", "fpxGeneric"}}; }
    Json operator()(const FpxMax& x) const { return {{"type", "fpxMax"}, {"f", x.f}}; }
    Json operator()(const MonoPrime& x) const { return {{"type", "monoPrime"}, {"cover", x.cover}}; }
    Json operator()(const SuppMin& x) const { return {{"type", "suppMin"}, {"k", x.k}}; }
    Json operator()(const SuppTop&) const { return {{"type", "suppTop"}}; }
    Json operator()(const TamePrime& x) const { return {{"type", "tame"}, {"slot", x.slot}, {"inner", to_json(*x.inner)}}; }
  };
  return std::visit(V{}, p.value);
}

SpecSubset set_from_json(const Json& j) {
  const auto t = type_of(j);
  auto points = [](const Json& a) {
    const auto v = list<PrimePoint>(a, point_from_json);
    return std::set<PrimePoint>(v.begin(), v.end());
  };
  auto flag = [&](const char* key) {
    if (!j.contains(key)) return false;
    if (!j.at(key).is_boolean()) bad(std::string("'") + key + "' must be a boolean");
    return j.at(key).get<bool>();
  };
  if (t == "empty") return empty_set();
  if (t == "explicit") return explicit_set(points(field(j, "points")));
  if (t == "cofiniteClosed") return cofinite_closed(points(field(j, "excluded")), flag("withGeneric"));
  if (t == "cofiniteMin") {
    const auto ks = list<long>(field(j, "excluded"), [](const Json& x) {
      const BigInt k = big(x);
      if (k < 1 || k > std::numeric_limits<long>::max()) bad("minimal prime index must be positive");
      return static_cast<long>(k);
    });
    return cofinite_min(std::set<long>(ks.begin(), ks.end()), flag("withTop"));
  }
  if (t == "whole") return whole_set();
  bad("unknown set type '" + t + "'");
}

Json to_json(const SpecSubset& s) {
  auto points = [](const std::set<PrimePoint>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(to_json(p));
    return a;
  };
  if (s.is<EmptySet>()) return {{"type", "empty"}};
  if (s.is<WholeSet>()) return {{"type", "whole"}};
  if (s.is<ExplicitSet>()) return {{"type", "explicit"}, {"points", points(s.as<ExplicitSet>().points)}};
  if (s.is<CofiniteClosed>()) {
    const auto& c = s.as<CofiniteClosed>();
    return {{"type", "cofiniteClosed"}, {"excluded", points(c.excluded)}, {"withGeneric", c.with_generic}};
  }
  const auto& c = s.as<CofiniteMin>();
  return {{"type", "cofiniteMin"}, {"excluded", c.excluded}, {"withTop", c.with_top}};
}

RingMapSpec map_from_json(const Json& j, const Limits& limits) {
  const auto t = type_of(j);
  if (t == "quotient") return quotient_map(ring_from_json(field(j, "ring"), limits), point_from_json(field(j, "prime")));
  if (t == "residue") return residue_map(ring_from_json(field(j, "ring"), limits), point_from_json(field(j, "prime")));
  if (t == "quotientProduct") return into_quotient_product(ring_from_json(field(j, "ring"), limits), set_from_json(field(j, "set")));
  if (t == "localProduct") return into_local_product(ring_from_json(field(j, "ring"), limits), set_from_json(field(j, "set")));
  if (t == "diagonal") return diagonal_into_mod_product(big(field(j, "n")), list<BigInt>(field(j, "divisors"), big));
  bad("unknown map type '" + t + "'");
}

Json to_json(const RingMapSpec& m) {
  if (m.is<QuotientMap>()) {
    return {{"type", "quotient"}, {"ring", to_json(m.as<QuotientMap>().source)}, {"prime", to_json(m.as<QuotientMap>().prime)}};
  }
  if (m.is<ResidueMap>()) {
    return {{"type", "residue"}, {"ring", to_json(m.as<ResidueMap>().source)}, {"prime", to_json(m.as<ResidueMap>().prime)}};
  }
  if (m.is<CanonicalIntoQuotientProduct>()) {
    const auto& x = m.as<CanonicalIntoQuotientProduct>();
    return {{"type", "quotientProduct"}, {"ring", to_json(x.source)}, {"set", to_json(x.family)}};
  }
  if (m.is<CanonicalIntoLocalProduct>()) {
    const auto& x = m.as<CanonicalIntoLocalProduct>();
    return {{"type", "localProduct"}, {"ring", to_json(x.source)}, {"set", to_json(x.family)}};
  }
  const auto& d = m.as<DiagonalIntoModProduct>();
  Json ds = Json::array();
  for (const auto& x : d.divisors) ds.push_back(big_json(x));
  return {{"type", "diagonal"}, {"n", big_json(d.n)}, {"divisors", ds}};
}

Json to_json(const DensityCertificate& c) {
  Json j = {{"holds", c.holds}, {"mode", std::string(to_string(c.mode))}, {"rationale", std::string(to_string(c.rationale))}};
  if (c.witness) j["witness"] = to_json(*c.witness);
  if (c.witness_locus) j["witnessLocus"] = to_json(*c.witness_locus);
  return j;
}

Json to_json(const ImageReport& r) {
  Json j = {{"image", to_json(r.image)},
            {"closure", to_json(r.closure)},
            {"topology", std::string(to_string(r.topology))},
            {"strict", r.strict}};
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const SupplementReport& r) {
  Json mins = Json::array();
  for (const auto& p : r.minimal_primes) mins.push_back(to_json(p));
  return {{"n", r.n},
          {"field", to_json(r.field)},
          {"degenerate", r.degenerate},
          {"intersection_ok", r.intersection_ok},
          {"minimal_primes", mins},
          {"minimal_primes_ok", r.minimal_primes_ok},
          {"dim", r.dim},
          {"reduced", r.reduced},
          {"pz_ok", r.pz_ok},
          {"all_ok", r.all_ok()}};
}

Json to_json(const FieldDescriptor& f) {
  static const char* kinds[] = {"PrimeField", "Rationals", "GaloisField", "RationalFunctions"};
  Json j = {{"kind", kinds[static_cast<int>(f.kind)]}, {"characteristic", f.characteristic}, {"describe", describe(f)}};
  if (f.kind == FieldDescriptor::Kind::GaloisField) j["modulus"] = f.modulus;
  if (f.kind == FieldDescriptor::Kind::RationalFunctions) {
    if (f.univariate_fpx) j["variables"] = Json::array({"x"});
    else j["variables"] = f.free_variables;
  }
  return j;
}

Json parse_json_argument(const std::string& text) {
  std::string body = text;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) bad("empty JSON argument");
  if (text[first] != '{' && text[first] != '[') {
    std::ifstream in(text);
    if (!in) bad("cannot open '" + text + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace primespec
