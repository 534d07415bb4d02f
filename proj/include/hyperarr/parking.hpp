#pragma once

#include <map>
#include <vector>

#include "hyperarr/regions.hpp"

namespace hyperarr {

// Literal parking simulation; every call is cross-checked against the sorted
// criterion (at least k entries <= k for every k).
bool is_parking_function(const std::vector<int>& a);

// All parking functions of length n in lexicographic order; n <= 7.
std::vector<std::vector<int>> enumerate_parking_functions(int n);

// Labels every region of Shi(n) with a parking function by breadth-first
// propagation from the base region (0 < x_i - x_j < 1 for all i < j):
// crossing x_i - x_j = 0 away from the base adds e_i, crossing x_i - x_j = 1
// adds e_j. n <= 4.
std::map<SignVector, std::vector<int>> pak_labeling(int n);

// The base region's sign vector for Shi(n): + on every offset-0 hyperplane,
// - on every offset-1 hyperplane.
SignVector shi_base_signs(int n);

}  // namespace hyperarr
