#include "hyperarr/regions.hpp"

#include <map>
#include <stdexcept>

#include "hyperarr/matrix.hpp"
#include "hyperarr/poset.hpp"
#include "hyperarr/simplex.hpp"

namespace hyperarr {

std::optional<std::vector<Rat>> strict_feasible(const Arrangement& a,
                                                const SignVector& signs) {
  int k = static_cast<int>(signs.size());
  if (k > a.n()) throw InvalidSpec("sign prefix longer than arrangement");
  int nv = a.d + 1;  // x, then the margin t
  std::vector<LpRow> rows;
  rows.reserve(k + 1);
  for (int i = 0; i < k; ++i) {
    LpRow row;
    row.a.assign(nv, Rat(0));
    for (int j = 0; j < a.d; ++j) row.a[j] = signs[i] * a.hyperplanes[i].normal[j];
    row.a[a.d] = -1;
    row.rel = Rel::GE;
    row.b = signs[i] * a.hyperplanes[i].offset;
    rows.push_back(std::move(row));
  }
  LpRow cap;
  cap.a.assign(nv, Rat(0));
  cap.a[a.d] = 1;
  cap.rel = Rel::LE;
  cap.b = 1;
  rows.push_back(std::move(cap));

  std::vector<Rat> c(nv, Rat(0));
  c[a.d] = 1;
  LpResult res = solve_lp(nv, rows, c, true);
  if (res.status != LpStatus::Optimal || rat_sgn(res.value) <= 0)
    return std::nullopt;
  res.x.resize(a.d);
  return res.x;
}

namespace {

void region_dfs(const Arrangement& a, const RegionOptions& opts,
                SignVector& signs, std::vector<Rat>& sample,
                std::vector<Region>& out) {
  int k = static_cast<int>(signs.size());
  if (k == a.n()) {
    if (opts.max_regions >= 0 &&
        static_cast<long long>(out.size()) >= opts.max_regions)
      throw BudgetExceeded("region cap exceeded");
    Region r{signs, sample, false};
    r.relatively_bounded = is_relatively_bounded(a, r);
    out.push_back(std::move(r));
    return;
  }
  Rat dot = -a.hyperplanes[k].offset;
  for (int j = 0; j < a.d; ++j) dot += a.hyperplanes[k].normal[j] * sample[j];
  int side = rat_sgn(dot);
  for (int s : {+1, -1}) {
    signs.push_back(s);
    if (side == s) {
      region_dfs(a, opts, signs, sample, out);  // parent sample still works
    } else if (auto pt = strict_feasible(a, signs)) {
      region_dfs(a, opts, signs, *pt, out);
    }
    signs.pop_back();
  }
}

}  // namespace

std::vector<Region> enumerate_regions(const Arrangement& a,
                                      const RegionOptions& opts) {
  if (a.n() > opts.max_hyperplanes)
    throw BudgetExceeded("too many hyperplanes for region enumeration");
  std::vector<Region> out;
  SignVector signs;
  std::vector<Rat> origin(a.d, Rat(0));
  region_dfs(a, opts, signs, origin, out);
  return out;
}

bool is_relatively_bounded(const Arrangement& a, const Region& r) {
  if (static_cast<int>(r.signs.size()) != a.n())
    throw InvalidSpec("sign vector length does not match arrangement");
  int n = a.n();
  QMatrix normals(n, a.d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < a.d; ++j) normals.at(i, j) = a.hyperplanes[i].normal[j];
  RrefResult rr = rref(normals);
  int rank = rr.rank;

  // w_i = coordinates of v_i in the basis spanning the normal space.
  std::vector<LpRow> rows;
  rows.reserve(n + 1);
  LpRow total;
  total.a.assign(rank, Rat(0));
  total.rel = Rel::EQ;
  total.b = 1;
  for (int i = 0; i < n; ++i) {
    LpRow row;
    row.a.assign(rank, Rat(0));
    for (int m = 0; m < rank; ++m) {
      Rat w(0);
      for (int j = 0; j < a.d; ++j)
        w += a.hyperplanes[i].normal[j] * rr.m.at(m, j);
      row.a[m] = r.signs[i] * w;
      total.a[m] += row.a[m];
    }
    row.rel = Rel::GE;
    row.b = 0;
    rows.push_back(std::move(row));
  }
  rows.push_back(std::move(total));
  std::vector<Rat> c(rank, Rat(0));
  LpResult res = solve_lp(rank, rows, c, false);
  return res.status == LpStatus::Infeasible;
}

ZaslavskyCounts zaslavsky_counts(const Arrangement& a) {
  Poly chi = chi_via_mobius(a);
  int rank = arrangement_rank(a);
  Rat r = poly_eval(chi, Rat(-1));
  if (a.d % 2 != 0) r = -r;
  Rat b = poly_eval(chi, Rat(1));
  if (rank % 2 != 0) b = -b;
  if (rat_sgn(r) < 0 || rat_sgn(b) < 0 || r.get_den() != 1 || b.get_den() != 1)
    throw std::logic_error("Zaslavsky evaluation produced a non-count");
  return {r.get_num().get_si(), b.get_num().get_si()};
}

AdjacencyResult adjacency_and_distance(const Arrangement& a,
                                       const std::vector<Region>& regions,
                                       const SignVector& base) {
  int nr = static_cast<int>(regions.size());
  std::map<SignVector, int> index;
  for (int i = 0; i < nr; ++i) index.emplace(regions[i].signs, i);
  auto it = index.find(base);
  if (it == index.end()) throw BaseNotFound("base region not among the regions");

  AdjacencyResult res;
  res.base_index = it->second;
  res.adj.assign(nr, {});
  res.dist.assign(nr, 0);
  for (int i = 0; i < nr; ++i) {
    int h = 0;
    for (int k = 0; k < a.n(); ++k)
      if (regions[i].signs[k] != base[k]) ++h;
    res.dist[i] = h;
  }

  int nv = a.d + 1;
  std::vector<Rat> c(nv, Rat(0));
  c[a.d] = 1;
  for (int i = 0; i < nr; ++i)
    for (int j = i + 1; j < nr; ++j) {
      int cross = -1, diffs = 0;
      for (int k = 0; k < a.n() && diffs < 2; ++k)
        if (regions[i].signs[k] != regions[j].signs[k]) {
          cross = k;
          ++diffs;
        }
      if (diffs != 1) continue;
      // Shared facet test: equality on the crossed wall, margin elsewhere.
      std::vector<LpRow> rows;
      rows.reserve(a.n() + 1);
      for (int k = 0; k < a.n(); ++k) {
        LpRow row;
        row.a.assign(nv, Rat(0));
        if (k == cross) {
          for (int m = 0; m < a.d; ++m) row.a[m] = a.hyperplanes[k].normal[m];
          row.rel = Rel::EQ;
          row.b = a.hyperplanes[k].offset;
        } else {
          int s = regions[i].signs[k];
          for (int m = 0; m < a.d; ++m) row.a[m] = s * a.hyperplanes[k].normal[m];
          row.a[a.d] = -1;
          row.rel = Rel::GE;
          row.b = s * a.hyperplanes[k].offset;
        }
        rows.push_back(std::move(row));
      }
      LpRow cap;
      cap.a.assign(nv, Rat(0));
      cap.a[a.d] = 1;
      cap.rel = Rel::LE;
      cap.b = 1;
      rows.push_back(std::move(cap));
      LpResult lp = solve_lp(nv, rows, c, true);
      if (lp.status == LpStatus::Optimal && rat_sgn(lp.value) > 0) {
        res.adj[i].push_back(j);
        res.adj[j].push_back(i);
      }
    }
  return res;
}

std::string signs_str(const SignVector& s) {
  std::string out;
  out.reserve(s.size());
  for (int v : s) out.push_back(v > 0 ? '+' : '-');
  return out;
}

}  // namespace hyperarr
