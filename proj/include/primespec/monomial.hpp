#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace primespec {

/// Exponent vector; position i is the exponent of x_{i+1}.
using Exponent = std::vector<std::uint32_t>;

/// Set of 1-based variable indices, ascending.
using VarSet = std::vector<int>;

namespace mono {

bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
Exponent product(const Exponent& a, const Exponent& b);
bool is_square_free(const Exponent& a);
bool is_one(const Exponent& a);
/// 1-based indices of the variables with positive exponent.
VarSet support(const Exponent& a);
std::size_t distinct_variables(const Exponent& a);
/// Pads with zeros or drops trailing zeros to the requested length.
Exponent resized(Exponent a, std::size_t n);
Exponent without_trailing_zeros(Exponent a);
/// Square-free monomial x_S over n variables.
Exponent from_vars(const VarSet& vars, std::size_t n);

/// Drops every generator divisible by another one; the result is sorted and
/// duplicate free.
std::vector<Exponent> minimalize(std::vector<Exponent> gens);
bool member(const std::vector<Exponent>& gens, const Exponent& m);
/// Generators of the intersection of two monomial ideals.
std::vector<Exponent> intersect(const std::vector<Exponent>& a, const std::vector<Exponent>& b);

/// `cover` meets the support of every generator.
bool is_vertex_cover(const VarSet& cover, const std::vector<Exponent>& gens);

/// Minimal vertex covers of the support hypergraph, computed by folding the
/// edges in one at a time and keeping the minimal transversals.
std::vector<VarSet> minimal_vertex_covers(const std::vector<Exponent>& gens, std::size_t nvars);

std::string to_string(const Exponent& e);

}  // namespace mono
}  // namespace primespec
