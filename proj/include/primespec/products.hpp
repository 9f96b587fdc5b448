#pragma once

#include <optional>
#include <vector>

#include "primespec/maps.hpp"
#include "primespec/topology.hpp"

namespace primespec {

struct ImageReport {
  SpecSubset image;
  SpecSubset closure;
  Topology topology = Topology::Zariski;
  bool strict = false;
  std::optional<PrimePoint> witness;  // least point of closure \ image
};

enum class ImageKind { Quotient, Local };

std::string_view to_string(ImageKind kind);

/// e_k: 1 in slot k, 0 elsewhere. BadSlot for an invalid slot.
RingElement unit_idempotent(int slot, const RingExpr& product);

/// V(e_0, ..., e_{n-1}): the locus of wild primes. Always empty for a finite
/// product.
SpecSubset direct_sum_locus(const RingExpr& product);

/// Contraction of a tame prime along a canonical map into a product.
/// UnsupportedMap for maps whose target is not a product.
PrimePoint tame_contract(const PrimePoint& p, const RingMapSpec& map);

/// Im pi* for pi: R -> prod_{p in E} R/p.
SpecSubset quotient_product_image(const RingExpr& ring, const SpecSubset& e);
/// Im pi* for pi: R -> prod_{p in E} R_p.
SpecSubset local_product_image(const RingExpr& ring, const SpecSubset& e);
SpecSubset product_image(const RingExpr& ring, const SpecSubset& e, ImageKind kind);

/// Image obtained by listing every tame prime of the target product and
/// contracting it. Needs a finite E and a finite target spectrum.
SpecSubset brute_force_image(const RingExpr& ring, const SpecSubset& e, ImageKind kind);

/// r is a unit in prod_{p in E} R/p, i.e. r lies in no member of E.
bool is_unit_in_quotient_product(const RingElement& r, const SpecSubset& e, const RingExpr& ring);

/// Elements used to probe product-law statements: all residues for small
/// moduli, variables and their pairwise sums and products for quotients.
std::vector<RingElement> sample_elements(const RingExpr& ring, std::size_t limit = 4096);

/// Nilpotency of tuples by repeated squaring agrees with componentwise
/// nilpotency on a sample, and the minimal tame primes are Zariski dense.
bool nilradical_product_law_check(const RingExpr& product);

/// Image (quotient map for zariski, local map for flat) against the closure.
ImageReport strictness_demo(const RingExpr& ring, const SpecSubset& e, Topology topology);

}  // namespace primespec
