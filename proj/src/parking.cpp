#include "hyperarr/parking.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperarr/families.hpp"

namespace hyperarr {

bool is_parking_function(const std::vector<int>& a) {
  int n = static_cast<int>(a.size());
  for (int v : a)
    if (v < 1) throw InvalidSpec("parking preferences must be positive");

  // Simulate: car i drives to spot a[i] and rolls forward to the first gap.
  std::vector<bool> taken(n + 2, false);
  bool parked_all = true;
  for (int i = 0; i < n && parked_all; ++i) {
    int s = a[i];
    while (s <= n && taken[s]) ++s;
    if (s > n)
      parked_all = false;
    else
      taken[s] = true;
  }

  std::vector<int> sorted = a;
  std::sort(sorted.begin(), sorted.end());
  bool criterion = true;
  for (int k = 0; k < n; ++k)
    if (sorted[k] > k + 1) {
      criterion = false;
      break;
    }

  if (parked_all != criterion)
    throw std::logic_error("parking simulation disagrees with sorted criterion");
  return parked_all;
}

std::vector<std::vector<int>> enumerate_parking_functions(int n) {
  if (n < 1) throw InvalidSpec("parking length must be positive");
  if (n > 7) throw BudgetExceeded("parking enumeration supports n <= 7");
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 1);
  for (;;) {
    if (is_parking_function(a)) out.push_back(a);
    int k = n - 1;
    while (k >= 0 && a[k] == n) a[k--] = 1;
    if (k < 0) break;
    ++a[k];
  }
  return out;
}

SignVector shi_base_signs(int n) {
  SignVector base;
  for (const DiffHyperplane& h : shi_structure(n))
    base.push_back(h.offset == 0 ? 1 : -1);
  return base;
}

std::map<SignVector, std::vector<int>> pak_labeling(int n) {
  if (n < 1) throw InvalidSpec("pak labeling needs n >= 1");
  if (n > 4) throw BudgetExceeded("pak labeling supports n <= 4");

  Arrangement a = make_family(FamilySpec::shi(n));
  std::vector<Region> regions = enumerate_regions(a);
  std::vector<DiffHyperplane> structure = shi_structure(n);
  AdjacencyResult ad = adjacency_and_distance(a, regions, shi_base_signs(n));

  int nr = static_cast<int>(regions.size());
  std::vector<std::vector<int>> label(nr);
  label[ad.base_index].assign(n, 1);

  // Order regions by distance from the base; each new region inherits from a
  // labeled facet neighbor one step closer, bumping the coordinate Pak's rule
  // assigns to the crossed wall.
  std::vector<int> order(nr);
  for (int i = 0; i < nr; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return ad.dist[x] != ad.dist[y] ? ad.dist[x] < ad.dist[y] : x < y; });

  for (int idx : order) {
    if (idx == ad.base_index) continue;
    bool found = false;
    for (int nb : ad.adj[idx]) {
      if (ad.dist[nb] != ad.dist[idx] - 1 || label[nb].empty()) continue;
      int wall = -1;
      for (int k = 0; k < a.n(); ++k)
        if (regions[idx].signs[k] != regions[nb].signs[k]) {
          wall = k;
          break;
        }
      std::vector<int> cand = label[nb];
      if (structure[wall].offset == 0)
        ++cand[structure[wall].i - 1];
      else
        ++cand[structure[wall].j - 1];
      if (!found) {
        label[idx] = std::move(cand);
        found = true;
      } else if (label[idx] != cand) {
        throw InconsistentLabel("neighboring regions propose different labels");
      }
    }
    if (!found) throw InconsistentLabel("region unreachable from the base");
  }

  std::map<SignVector, std::vector<int>> out;
  for (int i = 0; i < nr; ++i) out.emplace(regions[i].signs, label[i]);
  return out;
}

}  // namespace hyperarr
