#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperarr/arrangement.hpp"

namespace hyperarr {

// One entry per hyperplane: +1 means v.x > a on the region, -1 means v.x < a.
using SignVector = std::vector<int>;

struct Region {
  SignVector signs;
  std::vector<Rat> sample;  // exact interior point
  bool relatively_bounded = false;
};

struct RegionOptions {
  int max_hyperplanes = 20;
  long long max_regions = -1;  // < 0: no cap
};

// Strictly feasible point for a (possibly partial, prefix) sign assignment:
// maximize t subject to s_i (v_i.x - a_i) >= t and t <= 1; any optimum t > 0
// certifies the open cell nonempty.
std::optional<std::vector<Rat>> strict_feasible(const Arrangement& a,
                                                const SignVector& signs);

// Depth-first search over sign prefixes with LP pruning; output in
// lexicographic sign order (+ before -).
std::vector<Region> enumerate_regions(const Arrangement& a,
                                      const RegionOptions& opts = {});

// Recession-cone test within the span of the normals: the region is
// relatively bounded iff {y in V_A : s_i (v_i.y) >= 0, sum_i s_i (v_i.y) = 1}
// is infeasible.
bool is_relatively_bounded(const Arrangement& a, const Region& r);

struct ZaslavskyCounts {
  long long regions = 0;
  long long bounded = 0;
};

// regions = (-1)^d chi(-1), bounded = (-1)^rank chi(1).
ZaslavskyCounts zaslavsky_counts(const Arrangement& a);

struct AdjacencyResult {
  std::vector<std::vector<int>> adj;  // sorted neighbor indices per region
  std::vector<int> dist;              // Hamming distance from the base region
  int base_index = -1;
};

// Adjacent = sign vectors differ in exactly one hyperplane and the shared
// face is a facet (equality on the crossed hyperplane, strict elsewhere).
AdjacencyResult adjacency_and_distance(const Arrangement& a,
                                       const std::vector<Region>& regions,
                                       const SignVector& base);

std::string signs_str(const SignVector& s);  // e.g. "++-"

}  // namespace hyperarr
