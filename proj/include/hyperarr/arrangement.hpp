#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hyperarr/matrix.hpp"

namespace hyperarr {

// Affine hyperplane {x : normal . x = offset}. Stored with the first nonzero
// normal entry scaled to 1, so equal point sets compare equal.
struct Hyperplane {
  std::vector<Rat> normal;
  Rat offset;

  static Hyperplane make(std::vector<Rat> normal, Rat offset);
  bool operator==(const Hyperplane& o) const {
    return normal == o.normal && offset == o.offset;
  }
};

// Equation rendering, e.g. "x1-x2=0" or "x1+2x2=4".
std::string equation_str(const Hyperplane& h);

struct Arrangement {
  int d = 0;
  std::vector<Hyperplane> hyperplanes;
  std::vector<std::string> labels;

  int n() const { return static_cast<int>(hyperplanes.size()); }

  // Canonicalizes nothing further; rejects dimension mismatches and duplicate
  // hyperplanes. Missing labels are derived from the equations.
  static Arrangement make(int d, std::vector<Hyperplane> hs,
                          std::vector<std::string> labels = {});
};

Arrangement delete_hyperplane(const Arrangement& a, int i);

// Contraction A/H_i realized inside H_i, which is parametrized by the original
// coordinates minus the pivot coordinate of H_i's canonical normal:
//   x_pivot = h_offset - sum_{j != pivot} h_normal[j] * x_j.
struct Contraction {
  Arrangement arr;             // the contracted arrangement in dimension d-1
  int pivot = 0;               // eliminated original coordinate
  std::vector<int> coord_map;  // new coordinate -> original coordinate
  std::vector<Rat> h_normal;   // the contracted hyperplane, original coords
  Rat h_offset;
};

Contraction contract_with_map(const Arrangement& a, int i);
Arrangement contract(const Arrangement& a, int i);

// Rewrites a flat of the contraction (rows over the d-1 contraction
// coordinates, augmented) as a canonical flat system in the ambient space.
QMatrix lift_contraction_flat(const Contraction& c, const QMatrix& sys, int ambient_d);

// Restriction to the span of the normals; returns the essential arrangement
// together with rank(A). The empty arrangement maps to dimension 0.
std::pair<Arrangement, int> essentialize(const Arrangement& a);

int arrangement_rank(const Arrangement& a);

// Every r-subset (r <= d) meets in dimension exactly d-r and every
// (d+1)-subset has empty intersection.
bool is_general_position(const Arrangement& a);

// Text format: first non-comment line "dim d", then one hyperplane per line,
// "c_1 c_2 ... c_d | a", coefficients integers or "p/q"; '#' starts a comment line.
Arrangement read_arrangement(std::istream& in);
void write_arrangement(std::ostream& out, const Arrangement& a);

// Canonical string key for an RREF flat system (used to match flats across
// arrangements living in the same ambient space).
std::string flat_key(const QMatrix& rref_sys);

}  // namespace hyperarr
