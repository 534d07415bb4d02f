#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hyperarr/arrangement.hpp"
#include "hyperarr/polynomial.hpp"

namespace hyperarr {

// Element of the exterior algebra on hyperplane symbols e_0..e_{n-1}:
// each monomial is an index bitmask (factors in ascending index order).
using ExtElem = std::map<uint32_t, Rat>;

// Linear extension of d(e_{s_1...s_k}) = sum_j (-1)^j e_{s_1...^s_j...s_k}
// with 1-based j and ascending s; in particular d(e_a) = -1 (empty monomial).
ExtElem boundary(const ExtElem& e);

// e_T for every subset T (|T| >= 2) with empty intersection, and d(e_T) for
// every dependent T with nonempty intersection, ordered by (size, mask).
std::vector<ExtElem> ideal_generators(const Arrangement& a);

// dim of each graded piece of E(A)/I_A, trailing zeros trimmed; n <= 12.
std::vector<long long> graded_dimensions(const Arrangement& a);

// sum_k dim OS_k x^k.
Poly hilbert_polynomial(const Arrangement& a);

}  // namespace hyperarr
