#pragma once

#include <vector>

#include "hyperarr/rational.hpp"

namespace hyperarr {

enum class Rel { LE, EQ, GE };

struct LpRow {
  std::vector<Rat> a;
  Rel rel = Rel::LE;
  Rat b;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;
  std::vector<Rat> x;
};

// Exact two-phase simplex with Bland's rule. All variables are free
// (internally split into differences of nonnegatives); no tolerances anywhere.
LpResult solve_lp(int nvars, const std::vector<LpRow>& rows,
                  const std::vector<Rat>& c, bool maximize);

}  // namespace hyperarr
