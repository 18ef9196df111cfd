#pragma once

// Degree tables for Fano manifolds by coindex, used to bound deg Z.
//
// For a Fano manifold Z of dimension q and index i, the coindex is
// c = q + 1 - i >= 0 (Kobayashi-Ochiai). Classified degree lists:
//   c = 0 : Z = P^q,              deg = 1
//   c = 1 : Z = quadric,          deg = 2
//   c = 2 : del Pezzo manifolds,  deg in {3, 4, 5}
//   c = 3 : Mukai manifolds,      deg in {4, 6, ..., 18, 22} (even)
// For c = 3 the engine uses the sharper admissible lists relevant to the
// searches: degree <= 16 in dimension 6 and <= 18 in dimensions 4 and 5.
// For c >= 4 there is no classification; admissible_degrees returns nullopt
// and callers fall back to solving for deg Z as an equation root, filtered
// by degree_coindex_compatible.

#include "birat/exact.hpp"

#include <optional>
#include <string>
#include <vector>

namespace birat::fano {

struct FanoTarget {
  int dim = 0;
  int index = 0;
  int coindex() const { return dim + 1 - index; }
};

// c = dim + 1 - index; throws std::domain_error if index < 1 or
// index > dim + 1.
int coindex(int dim, int index);

// The degree list for (dim, index); nullopt when coindex >= 4.
std::optional<std::vector<int>> admissible_degrees(int dim, int index);

// Human-readable name of the classification backing the list
// ("projective space", "quadric", "del Pezzo", "Mukai", or "unclassified").
std::string coindex_family_name(int c);

// Low degree pins the coindex: deg 1 only for P^q (c = 0), deg 2 only for
// quadrics (c <= 1), deg 3 only for c <= 2. Returns false when the degree
// is too small for the claimed coindex.
bool degree_coindex_compatible(const exact::Int& z, int c);

}  // namespace birat::fano
