#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "primespec/json_io.hpp"

namespace primespec {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t random_cases = 500;
  std::size_t max_points = 8;   // exhaustive subset sweeps
  long max_supplement = 8;
  std::string only;  // run a single case id
};

struct SuiteCase {
  std::string id;
  Json input;
  Json expected;
  Json actual;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<SuiteCase> cases;  // sorted by id
  std::vector<std::string> notes;

  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }
  /// Replays one case from the command line.
  std::string repro(const SuiteCase& c) const;
  Json to_json() const;
};

const std::vector<std::string>& suite_names();
/// Unknown names raise InvalidInput.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

/// Rings with finite spectra used by the exhaustive sweeps, smallest first.
std::vector<RingExpr> finite_zoo();
/// Z, F_2[x], F_3[x] and the symbolic supplement over F_2 and Q.
std::vector<RingExpr> symbolic_zoo();

/// Random subset of a symbolic spectrum: explicit or cofinite, drawn from
/// the first dozen ordinary points.
SpecSubset random_symbolic_subset(const RingExpr& ring, std::mt19937_64& rng, bool infinite_only);

}  // namespace primespec
