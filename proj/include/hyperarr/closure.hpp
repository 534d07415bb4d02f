#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "hyperarr/errors.hpp"

namespace hyperarr {

// Generic intersection-closure over any coefficient field.
//
// A flat arising as an intersection of hyperplanes is determined by the set
// S(X) = {i : X inside H_i}: X equals the intersection over S(X), so the mask
// doubles as the dedup key, and the poset order is mask inclusion.
//
// Ctx requirements:
//   using System = ...;                    // canonical (RREF) flat system
//   int nrows() const;                     // number of hyperplanes
//   System ambient() const;
//   int dim(const System&) const;
//   std::optional<System> intersect(const System&, int i) const;  // nullopt if empty
//   bool contains(const System&, int i) const;                    // flat inside H_i

template <class Ctx>
struct ClosureFlat {
  typename Ctx::System sys;
  int dim = 0;
  uint64_t mask = 0;
};

template <class Ctx>
std::vector<ClosureFlat<Ctx>> closure_flats(const Ctx& ctx) {
  int n = ctx.nrows();
  if (n > 64)
    throw BudgetExceeded("intersection closure supports at most 64 hyperplanes");
  std::vector<ClosureFlat<Ctx>> flats;
  std::unordered_set<uint64_t> seen;

  auto add = [&](typename Ctx::System s) {
    uint64_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (ctx.contains(s, i)) mask |= uint64_t(1) << i;
    if (seen.insert(mask).second) {
      int dm = ctx.dim(s);
      flats.push_back(ClosureFlat<Ctx>{std::move(s), dm, mask});
    }
  };

  add(ctx.ambient());
  for (size_t k = 0; k < flats.size(); ++k) {
    auto sys = flats[k].sys;  // copy: add() may reallocate `flats`
    uint64_t mask = flats[k].mask;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) continue;
      if (auto next = ctx.intersect(sys, i)) add(std::move(*next));
    }
  }

  std::sort(flats.begin(), flats.end(), [](const auto& x, const auto& y) {
    if (x.dim != y.dim) return x.dim > y.dim;
    return x.mask < y.mask;
  });
  return flats;
}

}  // namespace hyperarr
