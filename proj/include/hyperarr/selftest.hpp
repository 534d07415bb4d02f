#pragma once

#include <iosfwd>

namespace hyperarr {

// Runs the full acceptance suite, printing one PASS/FAIL line per criterion.
// Returns the number of failed criteria.
int run_selftest(std::ostream& out);

}  // namespace hyperarr
