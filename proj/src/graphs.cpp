#include "hyperarr/graphs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hyperarr/poset.hpp"

namespace hyperarr {

namespace {

// Relabel vertices by (degree, index) and serialize. Equal keys imply
// isomorphic graphs (the key is itself an edge list), so memo hits are sound;
// isomorphic graphs may still get distinct keys, which only costs reuse.
std::string graph_key(const Graph& g) {
  std::vector<int> deg(g.n + 1, 0);
  for (auto& e : g.edges) {
    ++deg[e.first];
    ++deg[e.second];
  }
  std::vector<int> order(g.n);
  for (int v = 0; v < g.n; ++v) order[v] = v + 1;
  std::sort(order.begin(), order.end(),
            [&](int u, int v) { return deg[u] != deg[v] ? deg[u] < deg[v] : u < v; });
  std::vector<int> newlabel(g.n + 1, 0);
  for (int pos = 0; pos < g.n; ++pos) newlabel[order[pos]] = pos + 1;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (auto& e : g.edges) {
    int u = newlabel[e.first], v = newlabel[e.second];
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  std::ostringstream os;
  os << g.n;
  for (auto& e : edges) os << ' ' << e.first << ',' << e.second;
  return os.str();
}

Graph contract_edge(const Graph& g, int idx) {
  auto [i, j] = g.edges[idx];  // i < j; merge j into i, relabel > j down
  std::set<std::pair<int, int>> edges;
  for (int k = 0; k < static_cast<int>(g.edges.size()); ++k) {
    if (k == idx) continue;
    int u = g.edges[k].first == j ? i : g.edges[k].first;
    int v = g.edges[k].second == j ? i : g.edges[k].second;
    if (u == v) continue;  // parallel copy of the contracted edge
    if (u > j) --u;
    if (v > j) --v;
    if (u > v) std::swap(u, v);
    edges.emplace(u, v);
  }
  return Graph::make(g.n - 1, {edges.begin(), edges.end()});
}

Poly chromatic_rec(const Graph& g, std::map<std::string, Poly>& memo) {
  if (g.edges.empty()) return Poly::monomial(g.n);
  std::string key = graph_key(g);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  Graph del = g;
  del.edges.pop_back();
  int last = static_cast<int>(g.edges.size()) - 1;
  Poly p = chromatic_rec(del, memo) - chromatic_rec(contract_edge(g, last), memo);
  memo.emplace(std::move(key), p);
  return p;
}

}  // namespace

Poly chromatic_delcon(const Graph& g) {
  std::map<std::string, Poly> memo;
  return chromatic_rec(g, memo);
}

Poly chromatic_polynomial(const Graph& g) {
  Arrangement a = make_family(FamilySpec::graphical(g));
  Poly via_poset = chi_via_mobius(a);
  Poly via_graph = chromatic_delcon(g);
  if (!(via_poset == via_graph))
    throw std::logic_error("chromatic polynomial cross-check failed");
  return via_poset;
}

long long count_proper_colorings(const Graph& g, long long colors) {
  if (colors < 0) throw InvalidSpec("negative color count");
  std::vector<std::vector<int>> nb(g.n + 1);
  for (auto& e : g.edges) {
    nb[e.second].push_back(e.first);  // only earlier neighbors matter
  }
  std::vector<long long> color(g.n + 1, -1);
  long long count = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v > g.n) {
      ++count;
      return;
    }
    for (long long c = 0; c < colors; ++c) {
      bool ok = true;
      for (int u : nb[v])
        if (color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      self(self, v + 1);
      color[v] = -1;
    }
  };
  rec(rec, 1);
  return count;
}

bool orientation_is_acyclic(const Graph& g, const Orientation& o) {
  if (o.dir.size() != g.edges.size())
    throw InvalidSpec("orientation length does not match edge count");
  std::vector<std::vector<int>> out(g.n + 1);
  for (size_t k = 0; k < g.edges.size(); ++k) {
    auto [i, j] = g.edges[k];
    if (o.dir[k] > 0)
      out[i].push_back(j);
    else
      out[j].push_back(i);
  }
  // 0 = unseen, 1 = on stack, 2 = done
  std::vector<int> state(g.n + 1, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    state[v] = 1;
    for (int w : out[v]) {
      if (state[w] == 1) return false;
      if (state[w] == 0 && !self(self, w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int v = 1; v <= g.n; ++v)
    if (state[v] == 0 && !rec(rec, v)) return false;
  return true;
}

long long count_acyclic_orientations(const Graph& g) {
  int m = static_cast<int>(g.edges.size());
  if (m > 20) throw BudgetExceeded("too many edges for brute-force orientations");
  long long count = 0;
  Orientation o;
  o.dir.assign(m, 0);
  for (uint32_t bits = 0; bits < (uint32_t(1) << m); ++bits) {
    for (int k = 0; k < m; ++k) o.dir[k] = (bits >> k & 1) ? 1 : -1;
    if (orientation_is_acyclic(g, o)) ++count;
  }
  return count;
}

Orientation region_to_orientation(const Graph& g, const Region& r) {
  Orientation o;
  o.dir.reserve(g.edges.size());
  for (auto& e : g.edges) {
    const Rat& xi = r.sample[e.first - 1];
    const Rat& xj = r.sample[e.second - 1];
    if (xi == xj) throw InvalidSpec("sample point lies on an edge hyperplane");
    o.dir.push_back(xi < xj ? 1 : -1);
  }
  return o;
}

}  // namespace hyperarr
