#include "hyperarr/trees.hpp"

#include <algorithm>

#include "hyperarr/errors.hpp"

namespace hyperarr {

std::vector<std::vector<std::pair<int, int>>> all_labeled_trees(int k) {
  if (k < 1) throw InvalidSpec("trees need at least one vertex");
  if (k == 1) return {{}};
  if (k == 2) return {{{0, 1}}};

  std::vector<std::vector<std::pair<int, int>>> trees;
  std::vector<int> seq(k - 2, 0);
  for (;;) {
    // Prufer decode.
    std::vector<int> deg(k, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    edges.reserve(k - 1);
    for (int x : seq) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
      deg[leaf] = 0;
      --deg[x];
    }
    int u = 0;
    while (deg[u] != 1) ++u;
    int v = u + 1;
    while (deg[v] != 1) ++v;
    edges.emplace_back(u, v);
    std::sort(edges.begin(), edges.end());
    trees.push_back(std::move(edges));

    int i = k - 3;
    while (i >= 0 && seq[i] == k - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return trees;
}

std::map<int, long long> tree_inversion_histogram(int n) {
  if (n < 1) throw InvalidSpec("inversion histogram needs n >= 1");
  if (n > 5) throw BudgetExceeded("inversion histogram supports n <= 5");
  std::map<int, long long> hist;
  for (const auto& edges : all_labeled_trees(n + 1)) {
    std::vector<std::vector<int>> nb(n + 1);
    for (auto& e : edges) {
      nb[e.first].push_back(e.second);
      nb[e.second].push_back(e.first);
    }
    std::vector<int> parent(n + 1, -1);
    std::vector<int> stack{0};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : nb[v])
        if (w != parent[v]) {
          parent[w] = v;
          stack.push_back(w);
        }
    }
    int inv = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = parent[i]; j != 0; j = parent[j])
        if (j > i) ++inv;
    ++hist[inv];
  }
  return hist;
}

long long count_alternating_trees(int n) {
  if (n < 1) throw InvalidSpec("alternating trees need n >= 1");
  if (n > 6) throw BudgetExceeded("alternating trees support n <= 6");
  long long count = 0;
  for (const auto& edges : all_labeled_trees(n + 1)) {
    std::vector<std::vector<int>> nb(n + 1);
    for (auto& e : edges) {
      nb[e.first].push_back(e.second);
      nb[e.second].push_back(e.first);
    }
    bool ok = true;
    for (int v = 0; v <= n && ok; ++v) {
      bool has_lo = false, has_hi = false;
      for (int w : nb[v]) (w < v ? has_lo : has_hi) = true;
      if (has_lo && has_hi) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace hyperarr
