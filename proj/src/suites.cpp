#include "primespec/suites.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>

#include "primespec/errors.hpp"

namespace primespec {

namespace {

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

std::string case_id(const std::string& prefix, std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04zu", i);
  return prefix + "-" + buf;
}

class Recorder {
 public:
  Recorder(SuiteReport& report, const SuiteOptions& options) : report_(report), options_(options) {}

  bool wants(const std::string& id) const { return options_.only.empty() || options_.only == id; }

  void add(const std::string& id, Json input, Json expected, Json actual) {
    if (!wants(id)) return;
    const bool pass = expected == actual;
    report_.cases.push_back({id, std::move(input), std::move(expected), std::move(actual), pass});
  }

  void check(const std::string& id, Json input, bool ok, Json actual) {
    if (!wants(id)) return;
    report_.cases.push_back({id, std::move(input), true, std::move(actual), ok});
  }

  // Runs `body`, turning an engine error into a failing case.
  void guarded(const std::string& id, const Json& input, const std::function<void()>& body) {
    if (!wants(id)) return;
    try {
      body();
    } catch (const Error& e) {
      report_.cases.push_back({id, input, true, Json{{"error", std::string(to_string(e.kind()))}, {"what", e.what()}}, false});
    }
  }

 private:
  SuiteReport& report_;
  const SuiteOptions& options_;
};

SpecSubset subset_from_mask(const std::vector<PrimePoint>& pts, std::uint64_t mask) {
  std::set<PrimePoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (mask & (std::uint64_t{1} << i)) out.insert(pts[i]);
  }
  return out.empty() ? empty_set() : explicit_set(std::move(out));
}

Json ring_set(const RingExpr& r, const SpecSubset& e) { return {{"ring", to_json(r)}, {"set", to_json(e)}}; }

SpecSubset with_special(const SpecSubset& e, const RingExpr& r) {
  return set_union(e, explicit_set({special_point(r)}), r);
}

// Up-closure through ideal containment of the prime ideals themselves.
SpecSubset up_by_ideals(const SpecSubset& e, const RingExpr& r) {
  std::set<PrimePoint> out;
  const std::vector<PrimePoint> listed = *finite_members(e, r);
  for (const auto& p : listed) {
    for (const auto& q : finite_points(r)) {
      if (ideal_contains(prime_ideal(p, r), prime_ideal(q, r), r)) out.insert(q);
    }
  }
  return canonicalize(explicit_set(std::move(out)), r);
}

// --- suites -------------------------------------------------------------

void finite_closure(Recorder& rec, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  for (std::size_t i = 0; i < 100; ++i) {
    const BigInt n = 2 + pick(rng, 999999);
    const RingExpr r = integers_mod(n);
    const auto pts = finite_points(r);
    const SpecSubset e = subset_from_mask(pts, pick(rng, std::uint64_t{1} << pts.size()));
    const std::string id = case_id("zmod", i);
    rec.guarded(id, ring_set(r, e), [&] {
      const SpecSubset closure = zariski_closure(e, r);
      IdealRepr fold = unit_ideal(r);
      const std::vector<PrimePoint> listed = *finite_members(e, r);
      for (const auto& p : listed) fold = ideal_intersect(fold, prime_ideal(p, r), r);
      const SpecSubset v = v_locus(ideal_generators(fold, r).front(), r);
      const SpecSubset brute = up_by_ideals(e, r);
      rec.check(id, ring_set(r, e), closure == brute && closure == v,
                {{"closure", to_json(closure)}, {"upClosure", to_json(brute)}, {"vOfIntersection", to_json(v)}});
    });
  }
  for (const auto& r : finite_zoo()) {
    const auto pts = finite_points(r);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pts.size()); ++mask) {
      const SpecSubset e = subset_from_mask(pts, mask);
      const std::string id = case_id("zoo-" + describe(r), mask);
      rec.guarded(id, ring_set(r, e), [&] {
        rec.add(id, ring_set(r, e), to_json(up_by_ideals(e, r)), to_json(zariski_closure(e, r)));
      });
    }
  }
}

void remark_v5(Recorder& rec, const SuiteOptions&) {
  const RingExpr z = integers();
  const long qs[] = {11, 2, 3, 5, 7, 13, 101};
  for (std::size_t i = 0; i < std::size(qs); ++i) {
    const SpecSubset e = cofinite_closed({z_max(qs[i])}, false);
    const std::string id = case_id("q" + std::to_string(qs[i]), i);
    rec.guarded(id, ring_set(z, e), [&] {
      const ImageReport rep = strictness_demo(z, e, Topology::Zariski);
      Json expected = {{"image", to_json(cofinite_closed({z_max(qs[i])}, true))},
                       {"closure", to_json(whole_set())},
                       {"strict", true},
                       {"witness", to_json(z_max(qs[i]))},
                       {"qInvertible", true}};
      Json actual = to_json(rep);
      actual.erase("topology");
      actual["qInvertible"] = is_unit_in_quotient_product(int_elem(qs[i]), e, z);
      rec.add(id, ring_set(z, e), expected, actual);
    });
  }
}

void remark_flat(Recorder& rec, const SuiteOptions&) {
  for (const auto& field : {CoefficientField{2}, CoefficientField{0}}) {
    const RingExpr s = symbolic_supplement(field);
    for (long k : {7L, 1L, 2L, 40L}) {
      const SpecSubset e = cofinite_min({k}, false);
      const std::string id = case_id("supp-" + describe(field) + "-P" + std::to_string(k), static_cast<std::size_t>(k));
      rec.guarded(id, ring_set(s, e), [&] {
        Json expected = {{"image", to_json(cofinite_min({k}, true))},
                         {"closure", to_json(whole_set())},
                         {"strict", true},
                         {"witness", to_json(supp_min(k))}};
        Json actual = to_json(strictness_demo(s, e, Topology::Flat));
        actual.erase("topology");
        rec.add(id, ring_set(s, e), expected, actual);
      });
    }
  }
  // Over a PID the local image already is the flat closure.
  const RingExpr z = integers();
  const SpecSubset e = cofinite_closed({z_max(11)}, false);
  rec.guarded("z-local-0000", ring_set(z, e), [&] {
    const ImageReport rep = strictness_demo(z, e, Topology::Flat);
    rec.add("z-local-0000", ring_set(z, e), Json{{"strict", false}}, Json{{"strict", rep.strict}});
  });
}

void supplement(Recorder& rec, const SuiteOptions& opt) {
  for (const auto& field : {CoefficientField{2}, CoefficientField{3}, CoefficientField{0}}) {
    for (long n = 2; n <= opt.max_supplement; ++n) {
      const std::string id = case_id("n" + std::to_string(n) + "-" + describe(field), static_cast<std::size_t>(n));
      const Json input = {{"n", n}, {"field", to_json(field)}};
      rec.guarded(id, input, [&] {
        const SupplementReport r = supplement_report(field, n);
        rec.check(id, input, r.all_ok(), to_json(r));
      });
    }
  }
}

void nilradical_product(Recorder& rec, const SuiteOptions& opt) {
  std::vector<RingExpr> rings = {product({integers_mod(4), integers_mod(9)}), product({integers_mod(12), integers_mod(12)}),
                                 product({integers_mod(8)}),
                                 product({integers_mod(6), build_supplement({2}, 3).ring})};
  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i < 20; ++i) {
    std::vector<RingExpr> fs;
    const auto k = 1 + pick(rng, 3);
    for (std::uint64_t j = 0; j < k; ++j) {
      fs.push_back(pick(rng, 4) == 0 ? build_supplement({2}, 2 + static_cast<long>(pick(rng, 2))).ring
                                     : integers_mod(2 + pick(rng, 63)));
    }
    rings.push_back(product(std::move(fs)));
  }
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const RingExpr& r = rings[i];
    const std::string id = case_id("product", i);
    const Json input = {{"ring", to_json(r)}};
    rec.guarded(id, input, [&] {
      const bool law = nilradical_product_law_check(r);
      const bool no_wild = is_empty(direct_sum_locus(r));
      const auto& fs = r.as<ProductRing>().factors;
      bool idempotents = true;
      RingElement total = zero(r);
      for (std::size_t a = 0; a < fs.size(); ++a) {
        const RingElement ea = unit_idempotent(static_cast<int>(a), r);
        total = add(total, ea, r);
        for (std::size_t b = 0; b < fs.size(); ++b) {
          const RingElement prod = mul(ea, unit_idempotent(static_cast<int>(b), r), r);
          idempotents = idempotents && (a == b ? prod == ea : is_zero(prod, r));
        }
      }
      idempotents = idempotents && total == one(r);
      rec.check(id, input, law && no_wild && idempotents,
                {{"nilradicalLaw", law}, {"directSumLocusEmpty", no_wild}, {"idempotents", idempotents}});
    });
  }
}

std::vector<PrimePoint> minimal_source_primes(const RingExpr& r) {
  switch (family_of(r)) {
    case SpectrumFamily::Finite: return minimal_points(r);
    case SpectrumFamily::PidLike: return {special_point(r)};
    case SpectrumFamily::Supplement: return ordinary_points(r, 5);
  }
  return {};
}

RingMapSpec random_injective_map(std::mt19937_64& rng, const std::vector<RingExpr>& zoo) {
  for (;;) {
    switch (pick(rng, 3)) {
      case 0: {
        const BigInt n = 2 + pick(rng, 4999);
        std::vector<BigInt> ds;
        for (const auto& pp : factorize(n)) {
          BigInt q = 1;
          for (unsigned e = 0; e < pp.exponent; ++e) q *= pp.prime;
          if (!ds.empty() && pick(rng, 2)) ds[pick(rng, ds.size())] *= q;
          else ds.push_back(q);
        }
        for (std::uint64_t extra = pick(rng, 3); extra > 0; --extra) {
          const BigInt d = ds[pick(rng, ds.size())];
          for (const auto& p : prime_divisors(d)) {
            if (pick(rng, 2)) ds.push_back(p);
          }
        }
        std::shuffle(ds.begin(), ds.end(), rng);
        return diagonal_into_mod_product(n, ds);
      }
      case 1: {
        const RingExpr& r = zoo[pick(rng, zoo.size())];
        const auto pts = finite_points(r);
        const SpecSubset e = subset_from_mask(pts, pick(rng, std::uint64_t{1} << pts.size()));
        const RingMapSpec m = pick(rng, 2) ? into_quotient_product(r, e) : into_local_product(r, e);
        if (is_injective(m)) return m;
        break;
      }
      default: {
        if (pick(rng, 2)) {
          const RingExpr z = pick(rng, 2) ? integers() : poly_over_fp(2);
          std::set<PrimePoint> pts;
          const auto ord = ordinary_points(z, 8);
          for (std::uint64_t k = 1 + pick(rng, 3); k > 0; --k) pts.insert(ord[pick(rng, ord.size())]);
          if (pick(rng, 2)) return into_local_product(z, explicit_set(pts));
          pts.insert(special_point(z));
          return into_quotient_product(z, explicit_set(pts));
        }
        const RingExpr s = symbolic_supplement({2});
        if (pick(rng, 2)) return into_quotient_product(s, cofinite_min({}, pick(rng, 2) == 1));
        std::set<PrimePoint> pts{supp_top()};
        for (std::uint64_t k = pick(rng, 3); k > 0; --k) pts.insert(supp_min(1 + static_cast<long>(pick(rng, 6))));
        return into_local_product(s, explicit_set(pts));
      }
    }
  }
}

void lying_over(Recorder& rec, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  const auto zoo = finite_zoo();
  for (std::size_t i = 0; i < 50; ++i) {
    const RingMapSpec m = random_injective_map(rng, zoo);
    const std::string id = case_id("map", i);
    const Json input = {{"map", to_json(m)}};
    rec.guarded(id, input, [&] {
      Json trips = Json::array();
      bool ok = is_injective(m);
      for (const auto& p : minimal_source_primes(source_ring(m))) {
        const PrimePoint q = laying_over(m, p);
        const bool back = contract(m, q) == p;
        ok = ok && back;
        trips.push_back({{"prime", to_json(p)}, {"over", to_json(q)}, {"roundTrip", back}});
      }
      rec.check(id, input, ok, trips);
    });
  }
}

void pz(Recorder& rec, const SuiteOptions& opt) {
  std::vector<RingExpr> rings = finite_zoo();
  rings.push_back(localized_at_irrelevant(monomial_quotient({2}, 1, {})));  // a two-point chain
  std::size_t i = 0;
  for (const auto& r : rings) {
    if (finite_points(r).size() > opt.max_points + 1) continue;
    const std::string id = case_id("ring", i++);
    const Json input = {{"ring", to_json(r)}};
    rec.guarded(id, input, [&] {
      const bool p = pz_check(r), c = cp_check(r);
      rec.check(id, input, p && c, {{"pz", p}, {"cp", c}});
    });
  }
}

void density(Recorder& rec, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::size_t i = 0;
  for (const auto& r : symbolic_zoo()) {
    for (const Topology mode : {Topology::Zariski, Topology::Flat}) {
      const std::string id = case_id("criterion", i++);
      const Json input = {{"ring", to_json(r)}, {"mode", std::string(to_string(mode))}};
      rec.guarded(id, input, [&] {
        const DensityCertificate c = density_criterion(r, mode);
        const bool expected_hold = (family_of(r) == SpectrumFamily::PidLike) == (mode == Topology::Zariski);
        bool ok = c.holds == expected_hold && verify_certificate(c, r);
        Json actual = to_json(c);
        if (c.holds) {
          for (int k = 0; k < 50; ++k) {
            const SpecSubset e = random_symbolic_subset(r, rng, true);
            if (!is_dense(e, r, mode)) {
              ok = false;
              actual["nonDense"] = to_json(e);
            }
          }
        }
        rec.check(id, input, ok, actual);
      });
    }
  }
  for (const auto& r : finite_zoo()) {
    const std::string id = case_id("finite", i++);
    const Json input = {{"ring", to_json(r)}};
    rec.guarded(id, input, [&] {
      const auto a = density_criterion(r, Topology::Zariski), b = density_criterion(r, Topology::Flat);
      rec.check(id, input, a.holds && b.holds, {{"zariski", to_json(a)}, {"flat", to_json(b)}});
    });
  }
}

// Axioms and characterizations for one subset, plus monotonicity against a
// superset.
Json axiom_failures(const SpecSubset& a, const SpecSubset& b, const RingExpr& r) {
  Json bad = Json::array();
  const SpecSubset ab = set_union(a, b, r);
  for (const Topology t : {Topology::Zariski, Topology::Flat, Topology::Patch}) {
    const SpecSubset c = closure(a, r, t);
    const std::string name(to_string(t));
    if (!set_includes(c, a, r)) bad.push_back(name + ": not extensive");
    if (!set_equal(closure(c, r, t), c, r)) bad.push_back(name + ": not idempotent");
    if (!set_includes(closure(ab, r, t), c, r)) bad.push_back(name + ": not monotone");
  }
  const SpecSubset zc = zariski_closure(a, r), fc = flat_closure(a, r), pc = patch_closure(a, r);
  if (!set_includes(zc, pc, r) || !set_includes(fc, pc, r)) bad.push_back("patch closure not below the others");
  const bool patch_closed = set_equal(pc, a, r);
  if (set_equal(zc, a, r) != (patch_closed && is_stable(a, r, Stability::Specialization))) {
    bad.push_back("zariski closed vs patch closed and stable under specialization");
  }
  if (set_equal(fc, a, r) != (patch_closed && is_stable(a, r, Stability::Generalization))) {
    bad.push_back("flat closed vs patch closed and stable under generalization");
  }
  return bad;
}

void closure_axioms(Recorder& rec, const SuiteOptions& opt) {
  std::size_t i = 0;
  for (const auto& r : finite_zoo()) {
    const auto pts = finite_points(r);
    if (pts.size() > opt.max_points) continue;
    const std::string id = case_id("exhaustive", i++);
    const Json input = {{"ring", to_json(r)}};
    rec.guarded(id, input, [&] {
      Json bad = Json::array();
      const std::uint64_t full = std::uint64_t{1} << pts.size();
      for (std::uint64_t mask = 0; mask < full; ++mask) {
        const SpecSubset a = subset_from_mask(pts, mask);
        for (std::size_t k = 0; k <= pts.size(); ++k) {
          // k == pts.size() pairs a with itself.
          const SpecSubset b = k < pts.size() ? explicit_set({pts[k]}) : a;
          for (auto& f : axiom_failures(a, b, r)) bad.push_back({{"set", to_json(a)}, {"failure", f}});
          if (bad.size() > 10) break;
        }
      }
      rec.check(id, input, bad.empty(), {{"failures", bad}});
    });
  }
  std::mt19937_64 rng(opt.seed);
  const auto zoo = symbolic_zoo();
  for (std::size_t k = 0; k < opt.random_cases; ++k) {
    const RingExpr& r = zoo[pick(rng, zoo.size())];
    const SpecSubset a = random_symbolic_subset(r, rng, false);
    const SpecSubset b = random_symbolic_subset(r, rng, false);
    const std::string id = case_id("symbolic", k);
    const Json input = {{"ring", to_json(r)}, {"a", to_json(a)}, {"b", to_json(b)}};
    rec.guarded(id, input, [&] {
      const Json bad = axiom_failures(a, b, r);
      rec.check(id, input, bad.empty(), {{"failures", bad}});
    });
  }
}

void oracle_agreement(Recorder& rec, const SuiteOptions& opt, SuiteReport& report) {
  report.notes.push_back(
      "finite brute force cannot see the limit-point term contributed by wild primes of infinite products; that term is "
      "pinned by the symbolic image rules");
  std::size_t i = 0;
  for (const auto& r : finite_zoo()) {
    const auto pts = finite_points(r);
    if (pts.size() > 6) continue;
    const std::string id = case_id("images", i++);
    const Json input = {{"ring", to_json(r)}};
    rec.guarded(id, input, [&] {
      Json bad = Json::array();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pts.size()); ++mask) {
        const SpecSubset e = subset_from_mask(pts, mask);
        for (const ImageKind kind : {ImageKind::Quotient, ImageKind::Local}) {
          const SpecSubset formula = product_image(r, e, kind);
          const SpecSubset brute = brute_force_image(r, e, kind);
          const SpecSubset cl = kind == ImageKind::Quotient ? zariski_closure(e, r) : flat_closure(e, r);
          if (formula != brute || !set_includes(cl, formula, r) || !set_includes(formula, e, r)) {
            bad.push_back({{"set", to_json(e)}, {"kind", std::string(to_string(kind))}, {"formula", to_json(formula)},
                           {"bruteForce", to_json(brute)}});
          }
        }
      }
      rec.check(id, input, bad.empty(), {{"failures", bad}});
    });
  }
  // Patch closure against the residue field route.
  for (const auto& r : finite_zoo()) {
    const auto pts = finite_points(r);
    if (pts.size() > opt.max_points) continue;
    const std::string id = case_id("patch-finite", i++);
    const Json input = {{"ring", to_json(r)}};
    rec.guarded(id, input, [&] {
      Json bad = Json::array();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pts.size()); ++mask) {
        const SpecSubset e = subset_from_mask(pts, mask);
        const SpecSubset pc = patch_closure(e, r);
        if (pc != e || image_via_residue_fields(r, e) != pc) bad.push_back(to_json(e));
      }
      rec.check(id, input, bad.empty(), {{"failures", bad}});
    });
  }
  std::mt19937_64 rng(opt.seed);
  const auto zoo = symbolic_zoo();
  for (std::size_t k = 0; k < 200; ++k) {
    const RingExpr& r = zoo[pick(rng, zoo.size())];
    const SpecSubset e = random_symbolic_subset(r, rng, false);
    const std::string id = case_id("patch-symbolic", k);
    rec.guarded(id, ring_set(r, e), [&] {
      rec.add(id, ring_set(r, e), to_json(patch_closure(e, r)), to_json(image_via_residue_fields(r, e)));
    });
  }
}

}  // namespace

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const SuiteCase& c) { return !c.pass; }));
}

std::string SuiteReport::repro(const SuiteCase& c) const {
  return "primespec verify " + suite + " --seed " + std::to_string(seed) + " --only " + c.id;
}

Json SuiteReport::to_json() const {
  Json cs = Json::array();
  for (const auto& c : cases) {
    Json j = {{"id", c.id}, {"input", c.input}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
    if (!c.pass) j["repro"] = repro(c);
    cs.push_back(std::move(j));
  }
  return {{"suite", suite},
          {"seed", seed},
          {"cases", cs},
          {"summary", {{"total", cases.size()}, {"failed", failures()}, {"pass", all_pass()}, {"notes", notes}}}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"finite-closure", "remark-v5", "remark-flat", "supplement",
                                                 "nilradical-product", "lying-over", "pz", "density",
                                                 "closure-axioms", "oracle-agreement"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  SuiteReport report;
  report.suite = name;
  report.seed = options.seed;
  Recorder rec(report, options);
  if (name == "finite-closure") finite_closure(rec, options);
  else if (name == "remark-v5") remark_v5(rec, options);
  else if (name == "remark-flat") remark_flat(rec, options);
  else if (name == "supplement") supplement(rec, options);
  else if (name == "nilradical-product") nilradical_product(rec, options);
  else if (name == "lying-over") lying_over(rec, options);
  else if (name == "pz") pz(rec, options);
  else if (name == "density") density(rec, options);
  else if (name == "closure-axioms") closure_axioms(rec, options);
  else if (name == "oracle-agreement") oracle_agreement(rec, options, report);
  else fail(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
  std::sort(report.cases.begin(), report.cases.end(), [](const SuiteCase& a, const SuiteCase& b) { return a.id < b.id; });
  return report;
}

std::vector<RingExpr> finite_zoo() {
  const RingExpr s2 = build_supplement({2}, 2).ring;
  std::vector<RingExpr> zoo = {
      prime_field(5),
      rationals(),
      integers_mod(8),
      integers_mod(12),
      integers_mod(30),
      integers_mod(210),
      integers_mod(2310),
      integers_mod(30030),
      integers_mod(510510),
      integers_mod(9699690),
      monomial_quotient({2}, 2, {{1, 0}, {0, 1}}),
      localized_at_irrelevant(monomial_quotient({3}, 3, {{1, 1, 0}, {0, 0, 1}})),
      s2,
      build_supplement({3}, 3).ring,
      build_supplement({0}, 4).ring,
      build_supplement({2}, 5).ring,
      build_supplement({2}, 6).ring,
      build_supplement({3}, 7).ring,
      product({integers_mod(4), integers_mod(9)}),
      product({integers_mod(6), prime_field(2)}),
      product({integers_mod(2), integers_mod(3), integers_mod(5)}),
      product({s2, integers_mod(6)}),
      product({s2, s2}),
      product({prime_field(2), rationals(), integers_mod(6)}),
      product({integers_mod(30), build_supplement({2}, 3).ring}),
  };
  std::stable_sort(zoo.begin(), zoo.end(), [](const RingExpr& a, const RingExpr& b) {
    return finite_points(a).size() < finite_points(b).size();
  });
  return zoo;
}

std::vector<RingExpr> symbolic_zoo() {
  return {integers(), poly_over_fp(2), poly_over_fp(3), symbolic_supplement({2}), symbolic_supplement({0})};
}

SpecSubset random_symbolic_subset(const RingExpr& ring, std::mt19937_64& rng, bool infinite_only) {
  const auto pool = ordinary_points(ring, 12);
  std::set<PrimePoint> pts;
  for (std::uint64_t k = pick(rng, 5); k > 0; --k) pts.insert(pool[pick(rng, pool.size())]);
  const bool special = pick(rng, 2) == 1;
  const auto shape = infinite_only ? 1 + pick(rng, 4) : pick(rng, 6);
  SpecSubset out;
  if (shape == 0) {
    out = explicit_set(pts);
  } else if (shape == 5) {
    out = pick(rng, 2) ? whole_set() : empty_set();
  } else {
    out = set_complement(explicit_set(pts), ring);
    out = set_difference(out, explicit_set({special_point(ring)}), ring);
  }
  if (special) out = with_special(out, ring);
  return canonicalize(out, ring);
}

}  // namespace primespec
