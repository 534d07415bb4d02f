#pragma once

#include <vector>

#include "hyperarr/regions.hpp"

namespace hyperarr {

unsigned long long catalan_number(int n);

bool is_ballot_sequence(const std::vector<int>& b);

// All +-1 sequences of length 2n with nonnegative partial sums and total 0.
std::vector<std::vector<int>> enumerate_ballot_sequences(int n);

// For a Catalan(n) region inside the chamber x_1 > x_2 > ... > x_n: order the
// 2n values {x_i} and {x_i + 1} decreasingly, write +1 for each x_i + 1 and
// -1 for each x_i. Throws NotInBaseChamber unless all offset-0 and offset--1
// signs are +.
std::vector<int> catalan_region_to_ballot(int n, const SignVector& signs);

// The region is relatively bounded iff every proper prefix sum is positive.
bool ballot_bounded_criterion(const std::vector<int>& b);

// The chamber's sign vector pattern: + on offset-0 and offset--1 hyperplanes.
bool in_catalan_base_chamber(int n, const SignVector& signs);

}  // namespace hyperarr
