#pragma once

#include <iosfwd>
#include <vector>

#include "hyperarr/arrangement.hpp"
#include "hyperarr/polynomial.hpp"

namespace hyperarr {

struct Graph {
  int n = 0;                                // vertices 1..n
  std::vector<std::pair<int, int>> edges;   // i<j, sorted, distinct

  static Graph make(int n, std::vector<std::pair<int, int>> edges);
};

// Format: "vertices n" then one 1-based "i j" line per edge.
Graph read_graph(std::istream& in);

enum class FamilyKind { Generic, Braid, Graphical, Catalan, Shi, Linial };

struct FamilySpec {
  FamilyKind kind = FamilyKind::Braid;
  int n = 0;
  int d = 0;    // Generic only
  Graph graph;  // Graphical only

  static FamilySpec generic(int n, int d);
  static FamilySpec braid(int n);
  static FamilySpec graphical(Graph g);
  static FamilySpec catalan(int n);
  static FamilySpec shi(int n);
  static FamilySpec linial(int n);
};

// Hyperplanes in pair-lexicographic order (i<j); the difference families emit,
// per pair, offsets -1,0,1 (Catalan), 0,1 (Shi), 1 (Linial). Generic(n,d) puts
// hyperplane i on the moment curve: x . (1, i, i^2, ..., i^{d-1}) = i^d.
Arrangement make_family(const FamilySpec& spec);

// Index metadata for the difference families: entry k describes hyperplane k
// of the corresponding make_family output as x_i - x_j = offset.
struct DiffHyperplane {
  int i = 0, j = 0, offset = 0;
};
std::vector<DiffHyperplane> shi_structure(int n);
std::vector<DiffHyperplane> catalan_structure(int n);

// Closed forms used as independent oracles.
Poly chi_formula_braid(int n);           // t(t-1)...(t-n+1)
Poly chi_formula_catalan(int n);         // t(t-n-1)...(t-2n+1)
Poly chi_formula_shi(int n);             // t(t-n)^{n-1}
Poly chi_formula_linial(int n);          // (t/2^n) sum_k C(n,k)(t-k)^{n-1}
Poly chi_formula_generic(int n, int d);  // sum_k (-1)^k C(n,k) t^{d-k}

unsigned long long binomial(int n, int k);

}  // namespace hyperarr
