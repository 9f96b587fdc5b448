#pragma once

#include <optional>
#include <string_view>

#include "primespec/spectrum.hpp"

namespace primespec {

enum class Topology { Zariski, Flat, Patch };
enum class Stability { Specialization, Generalization };

std::string_view to_string(Topology t);
std::string_view to_string(Stability s);

SpecSubset zariski_closure(const SpecSubset& e, const RingExpr& ring);
SpecSubset flat_closure(const SpecSubset& e, const RingExpr& ring);
SpecSubset patch_closure(const SpecSubset& e, const RingExpr& ring);
SpecSubset closure(const SpecSubset& e, const RingExpr& ring, Topology topology);

/// Up-set (all specializations) and down-set (all generalizations) of a
/// finite set of points in a finite spectrum.
SpecSubset up_closure(const SpecSubset& e, const RingExpr& ring);
SpecSubset down_closure(const SpecSubset& e, const RingExpr& ring);

bool is_stable(const SpecSubset& e, const RingExpr& ring, Stability mode);
bool is_dense(const SpecSubset& e, const RingExpr& ring, Topology topology);

enum class DensityRationale {
  FiniteSpectrum,        // no infinite subsets exist
  FactorizationFinite,   // every nonzero element has finitely many prime factors
  LocalPzDimensionOne,   // every nonunit lies in all but finitely many primes
  CounterexampleElement  // the witness has an infinite locus
};

std::string_view to_string(DensityRationale r);

/// Decides whether every infinite subset of Spec(R) is dense in the given
/// topology (zariski or flat). A failing certificate carries an element whose
/// V (zariski) or D (flat) locus is infinite.
struct DensityCertificate {
  bool holds = false;
  Topology mode = Topology::Zariski;
  std::optional<RingElement> witness;
  std::optional<SpecSubset> witness_locus;
  DensityRationale rationale = DensityRationale::FiniteSpectrum;
};

DensityCertificate density_criterion(const RingExpr& ring, Topology mode);

/// Recomputes a failing certificate's locus and checks that it is infinite,
/// not dense, and that the witness is non-nilpotent (zariski) or a nonunit
/// (flat). Holding certificates verify trivially.
bool verify_certificate(const DensityCertificate& cert, const RingExpr& ring);

}  // namespace primespec
