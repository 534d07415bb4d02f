#pragma once

#include "hyperarr/families.hpp"
#include "hyperarr/polynomial.hpp"
#include "hyperarr/regions.hpp"

namespace hyperarr {

// Chromatic polynomial via the graphical arrangement's intersection poset,
// cross-checked against chromatic_delcon (throws std::logic_error on
// disagreement, which would indicate a bug).
Poly chromatic_polynomial(const Graph& g);

// Direct graph deletion-contraction with memoization on a canonical form.
Poly chromatic_delcon(const Graph& g);

long long count_proper_colorings(const Graph& g, long long colors);

// Brute force over all 2^|E| orientations; |E| <= 20.
long long count_acyclic_orientations(const Graph& g);

struct Orientation {
  // Per edge {i,j} with i<j: +1 directs i->j, -1 directs j->i.
  std::vector<int> dir;
};

// Edge {i,j} points i->j iff x_i < x_j at the region's sample point.
Orientation region_to_orientation(const Graph& g, const Region& r);

bool orientation_is_acyclic(const Graph& g, const Orientation& o);

}  // namespace hyperarr
