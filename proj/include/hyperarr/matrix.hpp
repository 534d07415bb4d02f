#pragma once

#include <vector>

#include "hyperarr/rational.hpp"

namespace hyperarr {

// Dense rational matrix, row major.
struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool operator==(const QMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

struct RrefResult {
  QMatrix m;
  int rank = 0;
  std::vector<int> pivot_cols;
};

// Unique reduced row echelon form: pivots 1, pivot columns cleared, pivot
// columns strictly increasing, zero rows last.
RrefResult rref(const QMatrix& m);

// Rank via forward elimination only (destructive on the local copy).
int matrix_rank(QMatrix m);

QMatrix transpose(const QMatrix& m);

// Reduces `row` (size m.cols) in place against an RREF matrix; returns true
// iff it vanishes, i.e. lies in the row span.
bool reduce_against_rref(const QMatrix& rref_m, const std::vector<int>& pivot_cols,
                         std::vector<Rat>& row);

}  // namespace hyperarr
