#pragma once

#include <cstdint>
#include <vector>

#include "hyperarr/arrangement.hpp"
#include "hyperarr/polynomial.hpp"

namespace hyperarr {

inline constexpr long long kDefaultPointBudget = 10'000'000;

// Hyperplane rows scaled to primitive integer vectors (normal, then offset):
// row-wise lcm of denominators, divided by the content.
std::vector<std::vector<Int>> integer_rows(const Arrangement& a);

// True iff the mod-p poset, built by the same closure algorithm over F_p, is
// isomorphic to L(A) including the hyperplane witness sets of every flat.
bool is_good_prime(const Arrangement& a, int64_t p);

// Points of F_p^d on no hyperplane. DimensionTooLarge when p^d > max_points.
long long count_complement_points(const Arrangement& a, int64_t p,
                                  long long max_points = kDefaultPointBudget);

// Up to `count` good primes with p^d <= max_points, searched upward from the
// smallest prime exceeding max(|integer coefficient|, d).
std::vector<int64_t> smallest_good_primes(const Arrangement& a, int count,
                                          long long max_points = kDefaultPointBudget);

// Interpolates chi through complement counts at the d+1 smallest good primes.
Poly chi_via_finite_field(const Arrangement& a,
                          long long max_points = kDefaultPointBudget,
                          int threads = 1);

}  // namespace hyperarr
