#include "hyperarr/simplex.hpp"

#include <utility>

namespace hyperarr {

namespace {

// Dense rational tableau. Column order: split variables (x_j = u_j - w_j,
// u at 2j, w at 2j+1), then slacks/surpluses, then artificials; rhs last.
struct Tableau {
  int ncols = 0;      // structural + artificial columns
  int art_begin = 0;  // first artificial column (== ncols if none)
  std::vector<std::vector<Rat>> t;
  std::vector<int> basis;
  std::vector<Rat> z;  // reduced costs for the current phase

  int m() const { return static_cast<int>(t.size()); }

  void compute_z(const std::vector<Rat>& c) {
    z.assign(ncols, Rat(0));
    for (int j = 0; j < ncols; ++j) {
      Rat s = c[j];
      for (int r = 0; r < m(); ++r)
        if (rat_sgn(t[r][j]) != 0) s -= c[basis[r]] * t[r][j];
      z[j] = s;
    }
  }

  void pivot(int r, int e) {
    Rat inv = Rat(1) / t[r][e];
    for (Rat& v : t[r]) v *= inv;
    for (int i = 0; i < m(); ++i) {
      if (i == r || rat_sgn(t[i][e]) == 0) continue;
      Rat f = t[i][e];
      for (int j = 0; j <= ncols; ++j) t[i][j] -= f * t[r][j];
    }
    if (rat_sgn(z[e]) != 0) {
      Rat f = z[e];
      for (int j = 0; j < ncols; ++j) z[j] -= f * t[r][j];
    }
    basis[r] = e;
  }

  // Minimize with Bland's rule; artificials may not re-enter once banned.
  LpStatus iterate(bool ban_artificials) {
    for (;;) {
      int enter = -1;
      int limit = ban_artificials ? art_begin : ncols;
      for (int j = 0; j < limit; ++j)
        if (rat_sgn(z[j]) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rat best;
      for (int r = 0; r < m(); ++r) {
        if (rat_sgn(t[r][enter]) <= 0) continue;
        Rat ratio = t[r][ncols] / t[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  Rat objective(const std::vector<Rat>& c) const {
    Rat v(0);
    for (int r = 0; r < m(); ++r) v += c[basis[r]] * t[r][ncols];
    return v;
  }
};

}  // namespace

LpResult solve_lp(int nvars, const std::vector<LpRow>& rows,
                  const std::vector<Rat>& c, bool maximize) {
  if (static_cast<int>(c.size()) != nvars)
    throw InvalidSpec("objective length does not match variable count");
  for (const LpRow& row : rows)
    if (static_cast<int>(row.a.size()) != nvars)
      throw InvalidSpec("constraint length does not match variable count");

  int m = static_cast<int>(rows.size());
  // Normalize to b >= 0 and count extra columns.
  std::vector<Rel> rel(m);
  std::vector<int> sign(m, 1);
  int nslack = 0, nart = 0;
  for (int i = 0; i < m; ++i) {
    rel[i] = rows[i].rel;
    if (rat_sgn(rows[i].b) < 0) {
      sign[i] = -1;
      if (rel[i] == Rel::LE)
        rel[i] = Rel::GE;
      else if (rel[i] == Rel::GE)
        rel[i] = Rel::LE;
    }
    if (rel[i] != Rel::EQ) ++nslack;
    if (rel[i] != Rel::LE) ++nart;
  }

  Tableau tb;
  tb.art_begin = 2 * nvars + nslack;
  tb.ncols = tb.art_begin + nart;
  tb.t.assign(m, std::vector<Rat>(tb.ncols + 1, Rat(0)));
  tb.basis.assign(m, -1);

  int slack = 2 * nvars, art = tb.art_begin;
  for (int i = 0; i < m; ++i) {
    auto& row = tb.t[i];
    for (int j = 0; j < nvars; ++j) {
      Rat v = sign[i] * rows[i].a[j];
      row[2 * j] = v;
      row[2 * j + 1] = -v;
    }
    row[tb.ncols] = sign[i] * rows[i].b;
    if (rel[i] == Rel::LE) {
      row[slack] = 1;
      tb.basis[i] = slack++;
    } else if (rel[i] == Rel::GE) {
      row[slack++] = -1;
      row[art] = 1;
      tb.basis[i] = art++;
    } else {
      row[art] = 1;
      tb.basis[i] = art++;
    }
  }

  if (nart > 0) {
    std::vector<Rat> c1(tb.ncols, Rat(0));
    for (int j = tb.art_begin; j < tb.ncols; ++j) c1[j] = 1;
    tb.compute_z(c1);
    tb.iterate(false);  // bounded below by 0, never Unbounded
    if (rat_sgn(tb.objective(c1)) != 0) return {LpStatus::Infeasible, Rat(0), {}};
    // Drive remaining artificials out of the basis; drop redundant rows.
    for (int r = tb.m() - 1; r >= 0; --r) {
      if (tb.basis[r] < tb.art_begin) continue;
      int e = -1;
      for (int j = 0; j < tb.art_begin; ++j)
        if (rat_sgn(tb.t[r][j]) != 0) {
          e = j;
          break;
        }
      if (e >= 0) {
        tb.pivot(r, e);
      } else {
        tb.t.erase(tb.t.begin() + r);
        tb.basis.erase(tb.basis.begin() + r);
      }
    }
    // Remove artificial columns outright.
    for (auto& row : tb.t) {
      row[tb.art_begin] = row[tb.ncols];
      row.resize(tb.art_begin + 1);
    }
    tb.ncols = tb.art_begin;
  }

  std::vector<Rat> c2(tb.ncols, Rat(0));
  for (int j = 0; j < nvars; ++j) {
    Rat v = maximize ? -c[j] : c[j];
    c2[2 * j] = v;
    c2[2 * j + 1] = -v;
  }
  tb.compute_z(c2);
  if (tb.iterate(true) == LpStatus::Unbounded)
    return {LpStatus::Unbounded, Rat(0), {}};

  Rat value = tb.objective(c2);
  if (maximize) value = -value;
  std::vector<Rat> x(nvars, Rat(0));
  for (int r = 0; r < tb.m(); ++r) {
    int b = tb.basis[r];
    if (b < 2 * nvars) {
      if (b % 2 == 0)
        x[b / 2] += tb.t[r][tb.ncols];
      else
        x[b / 2] -= tb.t[r][tb.ncols];
    }
  }
  return {LpStatus::Optimal, value, std::move(x)};
}

}  // namespace hyperarr
