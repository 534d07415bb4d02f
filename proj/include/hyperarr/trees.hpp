#pragma once

#include <map>
#include <utility>
#include <vector>

namespace hyperarr {

// All labeled trees on vertices 0..k-1, as edge lists, via Prufer decoding.
std::vector<std::vector<std::pair<int, int>>> all_labeled_trees(int k);

// Trees on {0..n} rooted at 0; an inversion is a pair i < j (both >= 1) with
// j on the path from i to the root. Histogram inversions -> tree count; n <= 5.
std::map<int, long long> tree_inversion_histogram(int n);

// Trees on {1..n+1} where every vertex is larger than all its neighbors or
// smaller than all of them; n <= 6.
long long count_alternating_trees(int n);

}  // namespace hyperarr
