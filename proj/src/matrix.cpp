#include "hyperarr/matrix.hpp"

#include <utility>

namespace hyperarr {

RrefResult rref(const QMatrix& m) {
  RrefResult res;
  res.m = m;
  QMatrix& a = res.m;
  int r = 0;
  for (int c = 0; c < a.cols && r < a.rows; ++c) {
    int piv = -1;
    for (int i = r; i < a.rows; ++i)
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
    Rat inv = a.at(r, c);
    for (int j = c; j < a.cols; ++j) a.at(r, j) /= inv;
    for (int i = 0; i < a.rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (int j = c; j < a.cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

int matrix_rank(QMatrix m) {
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    for (int i = rank + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) / m.at(rank, c);
      m.at(i, c) = 0;
      for (int j = c + 1; j < m.cols; ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

QMatrix transpose(const QMatrix& m) {
  QMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

bool reduce_against_rref(const QMatrix& rref_m, const std::vector<int>& pivot_cols,
                         std::vector<Rat>& row) {
  for (size_t r = 0; r < pivot_cols.size(); ++r) {
    int c = pivot_cols[r];
    if (row[c] == 0) continue;
    Rat f = row[c];
    for (int j = c; j < rref_m.cols; ++j) row[j] -= f * rref_m.at(static_cast<int>(r), j);
  }
  for (const Rat& v : row)
    if (v != 0) return false;
  return true;
}

}  // namespace hyperarr
