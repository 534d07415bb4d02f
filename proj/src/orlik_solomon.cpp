#include "hyperarr/orlik_solomon.hpp"

#include <bit>

#include "hyperarr/matrix.hpp"

namespace hyperarr {

namespace {

struct SubsetInfo {
  std::vector<char> consistent;  // intersection nonempty
  std::vector<char> indep;       // normals linearly independent
};

SubsetInfo classify(const Arrangement& a) {
  int n = a.n();
  SubsetInfo info;
  info.consistent.assign(uint32_t(1) << n, 1);
  info.indep.assign(uint32_t(1) << n, 1);
  for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
    int k = std::popcount(mask);
    QMatrix aug(k, a.d + 1);
    int r = 0;
    for (int i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = 0; j < a.d; ++j) aug.at(r, j) = a.hyperplanes[i].normal[j];
      aug.at(r, a.d) = a.hyperplanes[i].offset;
      ++r;
    }
    RrefResult rr = rref(aug);
    bool incons = !rr.pivot_cols.empty() && rr.pivot_cols.back() == a.d;
    info.consistent[mask] = !incons;
    info.indep[mask] = (rr.rank - (incons ? 1 : 0)) == k;
  }
  return info;
}

// Sign of e_W ^ e_M for disjoint W, M: one transposition per pair w > m.
int wedge_sign(uint32_t w, uint32_t m) {
  int inv = 0;
  for (uint32_t rest = w; rest; rest &= rest - 1) {
    int b = std::countr_zero(rest);
    inv += std::popcount(m & ((uint32_t(1) << b) - 1));
  }
  return inv % 2 ? -1 : 1;
}

}  // namespace

ExtElem boundary(const ExtElem& e) {
  ExtElem out;
  for (const auto& [mask, c] : e) {
    int j = 0;
    for (uint32_t rest = mask; rest; rest &= rest - 1) {
      ++j;
      uint32_t term = mask ^ (rest & -rest);
      Rat& slot = out[term];
      if (j % 2)
        slot -= c;
      else
        slot += c;
      if (rat_sgn(slot) == 0) out.erase(term);
    }
  }
  return out;
}

std::vector<ExtElem> ideal_generators(const Arrangement& a) {
  int n = a.n();
  if (n > 12) throw BudgetExceeded("Orlik-Solomon supports at most 12 hyperplanes");
  SubsetInfo info = classify(a);
  std::vector<ExtElem> gens;
  for (int size = 2; size <= n; ++size)
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      if (!info.consistent[mask])
        gens.push_back(ExtElem{{mask, Rat(1)}});
      else if (!info.indep[mask])
        gens.push_back(boundary(ExtElem{{mask, Rat(1)}}));
    }
  return gens;
}

std::vector<long long> graded_dimensions(const Arrangement& a) {
  int n = a.n();
  if (n > 12) throw BudgetExceeded("Orlik-Solomon supports at most 12 hyperplanes");
  SubsetInfo info = classify(a);

  std::vector<std::vector<uint32_t>> by_size(n + 1);
  for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask)
    by_size[std::popcount(mask)].push_back(mask);

  std::vector<long long> dims{1};
  for (int k = 1; k <= n; ++k) {
    // Live monomials survive the quotient by dead ones (dependent or empty);
    // the remaining relations are the live projections of e_W ^ d(e_U).
    std::vector<uint32_t> live;
    for (uint32_t mask : by_size[k])
      if (info.consistent[mask] && info.indep[mask]) live.push_back(mask);
    if (live.empty()) break;
    std::map<uint32_t, int> col;
    for (size_t i = 0; i < live.size(); ++i) col[live[i]] = static_cast<int>(i);

    std::vector<std::vector<Rat>> pivots;  // reduced rows, by leading column
    std::vector<int> lead;
    int rank = 0;
    auto add_row = [&](std::vector<Rat>& row) {
      for (size_t p = 0; p < pivots.size(); ++p) {
        if (rat_sgn(row[lead[p]]) == 0) continue;
        Rat f = row[lead[p]];
        for (size_t j = lead[p]; j < row.size(); ++j) row[j] -= f * pivots[p][j];
      }
      int l = -1;
      for (size_t j = 0; j < row.size(); ++j)
        if (rat_sgn(row[j]) != 0) {
          l = static_cast<int>(j);
          break;
        }
      if (l < 0) return;
      Rat inv = Rat(1) / row[l];
      for (size_t j = l; j < row.size(); ++j) row[j] *= inv;
      pivots.push_back(std::move(row));
      lead.push_back(l);
      ++rank;
    };

    for (int s = 2; s <= k + 1 && s <= n; ++s) {
      for (uint32_t u : by_size[s]) {
        if (info.indep[u] || !info.consistent[u]) continue;
        for (uint32_t w : by_size[k + 1 - s]) {
          if (w & u) continue;
          std::vector<Rat> row(live.size(), Rat(0));
          bool any = false;
          int j = 0;
          for (uint32_t rest = u; rest; rest &= rest - 1) {
            ++j;
            uint32_t part = u ^ (rest & -rest);
            auto it = col.find(w | part);
            if (it == col.end()) continue;  // dead monomial, already zero
            int sgn = wedge_sign(w, part) * (j % 2 ? -1 : 1);
            row[it->second] += sgn;
            any = true;
          }
          if (any) add_row(row);
        }
      }
    }
    long long dim = static_cast<long long>(live.size()) - rank;
    dims.push_back(dim);
    if (dim == 0) break;
  }
  while (!dims.empty() && dims.back() == 0) dims.pop_back();
  return dims;
}

Poly hilbert_polynomial(const Arrangement& a) {
  std::vector<long long> dims = graded_dimensions(a);
  std::vector<Rat> c;
  c.reserve(dims.size());
  for (long long v : dims) c.emplace_back(static_cast<long>(v));
  return Poly(std::move(c));
}

}  // namespace hyperarr
