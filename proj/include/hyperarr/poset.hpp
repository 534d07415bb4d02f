#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hyperarr/arrangement.hpp"
#include "hyperarr/polynomial.hpp"

namespace hyperarr {

struct Flat {
  QMatrix system;         // augmented RREF, rank rows, d+1 columns
  int dim = 0;
  uint64_t mask = 0;      // hyperplanes containing the flat (determines it)
  long long mobius = 0;
};

// L(A): flats ordered by reverse inclusion. Sorted by decreasing dimension,
// then mask, so flats[0] is the ambient space.
struct IntersectionPoset {
  int d = 0;
  std::vector<Flat> flats;
};

IntersectionPoset build_poset(const Arrangement& a);

// X <= Y iff Y is a subset of X iff every hyperplane through X contains Y.
inline bool poset_leq(const Flat& x, const Flat& y) {
  return (x.mask & y.mask) == x.mask;
}

// Mobius values aligned with p.flats (mu(ambient) = 1, interval sums vanish).
std::vector<long long> mobius(const IntersectionPoset& p);

Poly chi_via_mobius(const Arrangement& a);

// Recursion chi_A = chi_{A-H} - chi_{A/H} on the last hyperplane; base case
// is the empty arrangement, t^d.
Poly chi_via_deletion_contraction(const Arrangement& a);

// Sorted (codimension, mask) multiset. Two arrangements with the same
// hyperplane indexing have isomorphic posets iff signatures are equal;
// codimension makes the signature invariant under essentialization.
std::vector<std::pair<int, uint64_t>> poset_signature(const IntersectionPoset& p);

}  // namespace hyperarr
