#include "hyperarr/families.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "hyperarr/errors.hpp"

namespace hyperarr {

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw InvalidSpec("graph needs at least one vertex");
  for (auto& [i, j] : edges) {
    if (i == j) throw InvalidSpec("loop edge " + std::to_string(i));
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n)
      throw InvalidSpec("edge endpoint out of range: " + std::to_string(i) + " " + std::to_string(j));
  }
  std::sort(edges.begin(), edges.end());
  for (size_t k = 1; k < edges.size(); ++k)
    if (edges[k] == edges[k - 1]) throw InvalidSpec("repeated edge");
  return Graph{n, std::move(edges)};
}

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0, n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    if (n < 0) {
      std::string kw;
      ss >> kw;
      if (kw != "vertices" || !(ss >> n) || n < 1)
        throw ParseError("line " + std::to_string(lineno) + ": expected 'vertices n'");
      continue;
    }
    int i, j;
    if (!(ss >> i >> j))
      throw ParseError("line " + std::to_string(lineno) + ": expected edge 'i j'");
    std::string extra;
    if (ss >> extra) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
    edges.emplace_back(i, j);
  }
  if (n < 0) throw ParseError("missing 'vertices n' line");
  try {
    return Graph::make(n, std::move(edges));
  } catch (const InvalidSpec& e) {
    throw ParseError(e.what());
  }
}

FamilySpec FamilySpec::generic(int n, int d) {
  if (n < 0 || d < 1) throw InvalidSpec("generic family needs n >= 0, d >= 1");
  FamilySpec s;
  s.kind = FamilyKind::Generic;
  s.n = n;
  s.d = d;
  return s;
}

namespace {
FamilySpec diff_spec(FamilyKind kind, int n) {
  if (n < 1) throw InvalidSpec("family needs n >= 1");
  FamilySpec s;
  s.kind = kind;
  s.n = n;
  return s;
}
}  // namespace

FamilySpec FamilySpec::braid(int n) { return diff_spec(FamilyKind::Braid, n); }
FamilySpec FamilySpec::catalan(int n) { return diff_spec(FamilyKind::Catalan, n); }
FamilySpec FamilySpec::shi(int n) { return diff_spec(FamilyKind::Shi, n); }
FamilySpec FamilySpec::linial(int n) { return diff_spec(FamilyKind::Linial, n); }

FamilySpec FamilySpec::graphical(Graph g) {
  FamilySpec s;
  s.kind = FamilyKind::Graphical;
  s.n = g.n;
  s.graph = std::move(g);
  return s;
}

namespace {

Hyperplane diff_hyperplane(int n, int i, int j, int offset) {
  std::vector<Rat> v(n);
  v[i - 1] = 1;
  v[j - 1] = -1;
  return Hyperplane::make(std::move(v), Rat(offset));
}

std::string diff_label(int i, int j, int offset) {
  return "x" + std::to_string(i) + "-x" + std::to_string(j) + "=" + std::to_string(offset);
}

Arrangement diff_family(int n, const std::vector<int>& offsets) {
  std::vector<Hyperplane> hs;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int off : offsets) {
        hs.push_back(diff_hyperplane(n, i, j, off));
        labels.push_back(diff_label(i, j, off));
      }
  return Arrangement::make(n, std::move(hs), std::move(labels));
}

std::vector<DiffHyperplane> diff_structure(int n, const std::vector<int>& offsets) {
  if (n < 1) throw InvalidSpec("family needs n >= 1");
  std::vector<DiffHyperplane> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int off : offsets) out.push_back(DiffHyperplane{i, j, off});
  return out;
}

}  // namespace

Arrangement make_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Generic: {
      if (spec.n < 0 || spec.d < 1) throw InvalidSpec("generic family needs n >= 0, d >= 1");
      std::vector<Hyperplane> hs;
      for (int i = 1; i <= spec.n; ++i) {
        std::vector<Rat> v(spec.d);
        Rat pw(1);
        for (int j = 0; j < spec.d; ++j) {
          v[j] = pw;
          pw *= i;
        }
        hs.push_back(Hyperplane::make(std::move(v), pw));  // pw == i^d here
      }
      return Arrangement::make(spec.d, std::move(hs));
    }
    case FamilyKind::Braid:
      return diff_family(spec.n, {0});
    case FamilyKind::Catalan:
      return diff_family(spec.n, {-1, 0, 1});
    case FamilyKind::Shi:
      return diff_family(spec.n, {0, 1});
    case FamilyKind::Linial:
      return diff_family(spec.n, {1});
    case FamilyKind::Graphical: {
      const Graph& g = spec.graph;
      if (g.n < 1) throw InvalidSpec("graphical family needs a graph");
      std::vector<Hyperplane> hs;
      std::vector<std::string> labels;
      for (auto [i, j] : g.edges) {
        hs.push_back(diff_hyperplane(g.n, i, j, 0));
        labels.push_back(diff_label(i, j, 0));
      }
      return Arrangement::make(g.n, std::move(hs), std::move(labels));
    }
  }
  throw InvalidSpec("unknown family");
}

std::vector<DiffHyperplane> shi_structure(int n) { return diff_structure(n, {0, 1}); }
std::vector<DiffHyperplane> catalan_structure(int n) { return diff_structure(n, {-1, 0, 1}); }

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

namespace {
Poly linear(const Rat& root) {  // t - root
  return Poly(std::vector<Rat>{-root, Rat(1)});
}
}  // namespace

Poly chi_formula_braid(int n) {
  Poly p = Poly::constant(1);
  for (int k = 0; k < n; ++k) p = p * linear(Rat(k));
  return p;
}

Poly chi_formula_catalan(int n) {
  Poly p = linear(Rat(0));
  for (int k = n + 1; k <= 2 * n - 1; ++k) p = p * linear(Rat(k));
  return p;
}

Poly chi_formula_shi(int n) { return linear(Rat(0)) * poly_pow(linear(Rat(n)), n - 1); }

Poly chi_formula_linial(int n) {
  Poly sum;
  for (int k = 0; k <= n; ++k)
    sum = sum + Rat(static_cast<long>(binomial(n, k))) * poly_pow(linear(Rat(k)), n - 1);
  Rat scale = make_rat(1, static_cast<long>(1) << n);
  return scale * (linear(Rat(0)) * sum);
}

Poly chi_formula_generic(int n, int d) {
  Poly p;
  for (int k = 0; k <= d; ++k) {
    Rat c = Rat(static_cast<long>(binomial(n, k)));
    if (k % 2) c = -c;
    p = p + Poly::monomial(d - k, c);
  }
  return p;
}

}  // namespace hyperarr
