// primespec: command line front end for the spectrum engine.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "primespec/errors.hpp"
#include "primespec/json_io.hpp"
#include "primespec/suites.hpp"

using namespace primespec;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

Topology parse_topology(const std::string& s) {
  if (s == "zariski") return Topology::Zariski;
  if (s == "flat") return Topology::Flat;
  if (s == "patch") return Topology::Patch;
  fail(ErrorKind::InvalidInput, "unknown topology '" + s + "'");
}

Stability parse_stability(const std::string& s) {
  if (s == "specialization") return Stability::Specialization;
  if (s == "generalization") return Stability::Generalization;
  fail(ErrorKind::InvalidInput, "unknown stability mode '" + s + "'");
}

ImageKind parse_kind(const std::string& s) {
  if (s == "quotient") return ImageKind::Quotient;
  if (s == "local") return ImageKind::Local;
  fail(ErrorKind::InvalidInput, "unknown image kind '" + s + "'");
}

CoefficientField parse_field(const std::string& s) {
  if (s == "Q") return {0};
  if (s.size() > 1 && s[0] == 'F') return field_from_json(Json(s));
  return field_from_json(parse_json_argument(s));
}

struct Inputs {
  std::string ring, set, map, prime, element;
  bool json = false;
  bool big = false;
};

void emit(const Inputs& in, const std::string& human, const Json& report) {
  if (in.json) std::cout << report.dump(2) << "\n";
  else std::cout << human << "\n";
}

}  // namespace

int run_command(int argc, char** argv) {
  CLI::App app{"Exact closures and images on prime spectra"};
  app.require_subcommand(1);
  Inputs in;
  app.add_flag("--json", in.json, "print a machine-readable report");
  app.add_flag("--big", in.big, "accept integers beyond 64 bits");

  auto ring_opt = [&](CLI::App* sub) { sub->add_option("--ring", in.ring, "ring JSON or file")->required(); };
  auto set_opt = [&](CLI::App* sub) { sub->add_option("--set", in.set, "subset JSON or file")->required(); };

  auto* spec = app.add_subcommand("spec", "describe a spectrum");
  ring_opt(spec);

  std::string topology = "zariski";
  auto* closure_cmd = app.add_subcommand("closure", "closure of a subset");
  closure_cmd->add_option("--topology", topology)->check(CLI::IsMember({"zariski", "flat", "patch"}));
  ring_opt(closure_cmd);
  set_opt(closure_cmd);

  auto* dense = app.add_subcommand("dense", "is a subset dense");
  dense->add_option("--topology", topology)->check(CLI::IsMember({"zariski", "flat", "patch"}));
  ring_opt(dense);
  set_opt(dense);

  std::string stability = "specialization";
  auto* stable = app.add_subcommand("stable", "is a subset stable under specialization or generalization");
  stable->add_option("--mode", stability)->check(CLI::IsMember({"specialization", "generalization"}));
  ring_opt(stable);
  set_opt(stable);

  auto* criterion = app.add_subcommand("criterion", "are all infinite subsets dense");
  criterion->add_option("--mode", topology)->check(CLI::IsMember({"zariski", "flat"}));
  ring_opt(criterion);

  std::string kind = "quotient";
  bool oracle = false;
  auto* image = app.add_subcommand("image", "image of Spec of a product of quotients or localizations");
  image->add_option("--kind", kind)->check(CLI::IsMember({"quotient", "local"}));
  image->add_flag("--oracle", oracle, "enumerate the target and cross-check");
  ring_opt(image);
  set_opt(image);

  auto* construct = app.add_subcommand("construct", "build a named ring");
  auto* supplement = construct->add_subcommand("supplement", "localized square-free supplement ring");
  construct->require_subcommand(1);
  long n = 3;
  std::string field = "F2", report_path;
  bool no_oracle = false;
  supplement->add_option("--n", n)->required();
  supplement->add_option("--field", field);
  supplement->add_option("--report", report_path, "also write the report to this file");
  supplement->add_flag("--no-oracle", no_oracle, "skip the subset oracle for minimal primes");

  auto* lyover = app.add_subcommand("lyover", "a prime lying over a minimal prime");
  lyover->add_option("--map", in.map, "map JSON or file")->required();
  lyover->add_option("--prime", in.prime, "prime JSON or file")->required();

  std::string suite;
  SuiteOptions sopt;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", sopt.seed);
  verify->add_option("--only", sopt.only, "run a single case");
  verify->add_option("--cases", sopt.random_cases, "randomized case count");
  verify->add_option("--max-points", sopt.max_points, "largest spectrum swept exhaustively");
  verify->add_option("--max-n", sopt.max_supplement, "largest supplement arity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Limits limits{in.big};
    if (*spec) {
      const RingExpr r = ring_from_json(parse_json_argument(in.ring), limits);
      Json rep = {{"ring", to_json(r)}, {"description", describe(r)}};
      std::string human = describe(r);
      if (has_finite_spectrum(r)) {
        Json pts = Json::array(), mins = Json::array();
        human += "\n";
        for (const auto& p : finite_points(r)) {
          pts.push_back(to_json(p));
          human += "  " + describe(p) + "\n";
        }
        for (const auto& p : minimal_points(r)) mins.push_back(to_json(p));
        rep["points"] = pts;
        rep["minimal"] = mins;
        human += "dim " + std::to_string(krull_dim(r));
        rep["dim"] = krull_dim(r);
      } else {
        Json pts = Json::array();
        for (const auto& p : ordinary_points(r, 8)) pts.push_back(to_json(p));
        rep["special"] = to_json(special_point(r));
        rep["firstPoints"] = pts;
        human += ": infinite spectrum, special point " + describe(special_point(r));
      }
      emit(in, human, rep);
      return kOk;
    }
    if (*closure_cmd || *dense || *stable) {
      const RingExpr r = ring_from_json(parse_json_argument(in.ring), limits);
      const SpecSubset e = set_from_json(parse_json_argument(in.set));
      if (*closure_cmd) {
        const SpecSubset c = closure(e, r, parse_topology(topology));
        emit(in, topology + " closure: " + describe(c), to_json(c));
      } else if (*dense) {
        const bool d = is_dense(e, r, parse_topology(topology));
        emit(in, std::string(d ? "dense" : "not dense") + " in the " + topology + " topology", Json{{"dense", d}});
      } else {
        const bool s = is_stable(e, r, parse_stability(stability));
        emit(in, std::string(s ? "stable" : "not stable") + " under " + stability, Json{{"stable", s}});
      }
      return kOk;
    }
    if (*criterion) {
      const RingExpr r = ring_from_json(parse_json_argument(in.ring), limits);
      const DensityCertificate c = density_criterion(r, parse_topology(topology));
      std::string human = std::string(c.holds ? "holds" : "fails") + " (" + std::string(to_string(c.rationale)) + ")";
      if (c.witness) human += ", witness " + describe(*c.witness) + " with locus " + describe(*c.witness_locus);
      emit(in, human, to_json(c));
      return verify_certificate(c, r) ? kOk : kFailed;
    }
    if (*image) {
      const RingExpr r = ring_from_json(parse_json_argument(in.ring), limits);
      const SpecSubset e = set_from_json(parse_json_argument(in.set));
      const ImageKind k = parse_kind(kind);
      const ImageReport rep = strictness_demo(r, e, k == ImageKind::Quotient ? Topology::Zariski : Topology::Flat);
      Json j = to_json(rep);
      std::string human = "image " + describe(rep.image) + "\nclosure " + describe(rep.closure);
      if (rep.witness) human += "\nstrict, witness " + describe(*rep.witness);
      bool agree = true;
      if (oracle) {
        const SpecSubset brute = brute_force_image(r, e, k);
        agree = set_equal(brute, rep.image, r);
        j["oracle"] = to_json(brute);
        j["oracleAgrees"] = agree;
        human += std::string("\noracle ") + (agree ? "agrees" : "DISAGREES: " + describe(brute));
      }
      emit(in, human, j);
      return agree ? kOk : kFailed;
    }
    if (*supplement) {
      const CoefficientField f = parse_field(field);
      SupplementReport rep;
      if (no_oracle) {
        // Same report without the subset oracle, for arities beyond its bound.
        const SupplementRing s = build_supplement(f, n);
        const auto nv = static_cast<std::size_t>(n);
        rep.n = n;
        rep.field = f;
        rep.degenerate = s.degenerate;
        rep.intersection_ok = verify_intersection(nv, f);
        rep.minimal_primes = minimal_primes_monomial(supplement_generators(nv), nv, false);
        rep.minimal_primes_ok = rep.minimal_primes.size() == nv;
        rep.dim = krull_dim(s.ring);
        rep.reduced = is_reduced(s.ring);
        rep.pz_ok = pz_check(s.ring);
      } else {
        rep = supplement_report(f, n);
      }
      const Json j = to_json(rep);
      if (!report_path.empty()) std::ofstream(report_path) << j.dump(2) << "\n";
      std::string human = "supplement n=" + std::to_string(n) + " over " + describe(f) + ": " +
                          (rep.all_ok() ? "all checks pass" : "CHECK FAILED");
      if (rep.degenerate) human += " (degenerate: n = 1)";
      emit(in, human, j);
      return rep.all_ok() ? kOk : kFailed;
    }
    if (*lyover) {
      const RingMapSpec m = map_from_json(parse_json_argument(in.map), limits);
      const PrimePoint p = point_from_json(parse_json_argument(in.prime));
      const PrimePoint q = laying_over(m, p);
      const bool back = contract(m, q) == p;
      emit(in, describe(q) + " lies over " + describe(p), Json{{"over", to_json(q)}, {"roundTrip", back}});
      return back ? kOk : kFailed;
    }
    if (*verify) {
      const SuiteReport rep = run_suite(suite, sopt);
      if (in.json) {
        std::cout << rep.to_json().dump(2) << "\n";
      } else {
        for (const auto& c : rep.cases) {
          if (!c.pass) std::cout << "FAIL " << c.id << "  repro: " << rep.repro(c) << "\n";
        }
        for (const auto& note : rep.notes) std::cout << "note: " << note << "\n";
        std::cout << suite << ": " << rep.cases.size() - rep.failures() << "/" << rep.cases.size() << " cases pass\n";
      }
      return rep.all_pass() && !rep.cases.empty() ? kOk : kFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InternalError ? kFailed : kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int main(int argc, char** argv) { return run_command(argc, argv); }
