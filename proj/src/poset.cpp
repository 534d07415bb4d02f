#include "hyperarr/poset.hpp"

#include <optional>

#include "hyperarr/closure.hpp"

namespace hyperarr {

namespace {

// Rational closure context: a flat is its augmented RREF system (rank rows,
// d+1 columns).
struct QCtx {
  using System = QMatrix;
  const Arrangement& arr;

  int nrows() const { return arr.n(); }

  System ambient() const { return QMatrix(0, arr.d + 1); }

  int dim(const System& s) const { return arr.d - s.rows; }

  std::vector<Rat> hyperplane_row(int i) const {
    std::vector<Rat> row(arr.d + 1);
    for (int j = 0; j < arr.d; ++j) row[j] = arr.hyperplanes[i].normal[j];
    row[arr.d] = arr.hyperplanes[i].offset;
    return row;
  }

  std::optional<System> intersect(const System& s, int i) const {
    QMatrix raw(s.rows + 1, arr.d + 1);
    for (int r = 0; r < s.rows; ++r)
      for (int j = 0; j <= arr.d; ++j) raw.at(r, j) = s.at(r, j);
    std::vector<Rat> row = hyperplane_row(i);
    for (int j = 0; j <= arr.d; ++j) raw.at(s.rows, j) = row[j];
    RrefResult rr = rref(raw);
    if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == arr.d)
      return std::nullopt;  // pivot in the offset column: inconsistent
    QMatrix out(rr.rank, arr.d + 1);
    for (int r = 0; r < rr.rank; ++r)
      for (int j = 0; j <= arr.d; ++j) out.at(r, j) = rr.m.at(r, j);
    return out;
  }

  bool contains(const System& s, int i) const {
    std::vector<int> pivots(s.rows);
    for (int r = 0; r < s.rows; ++r) {
      int c = 0;
      while (s.at(r, c) == 0) ++c;
      pivots[r] = c;
    }
    std::vector<Rat> row = hyperplane_row(i);
    return reduce_against_rref(s, pivots, row);
  }
};

}  // namespace

IntersectionPoset build_poset(const Arrangement& a) {
  QCtx ctx{a};
  auto raw = closure_flats(ctx);
  IntersectionPoset p;
  p.d = a.d;
  p.flats.reserve(raw.size());
  for (auto& f : raw) p.flats.push_back(Flat{std::move(f.sys), f.dim, f.mask, 0});
  std::vector<long long> mu = mobius(p);
  for (size_t k = 0; k < mu.size(); ++k) p.flats[k].mobius = mu[k];
  return p;
}

std::vector<long long> mobius(const IntersectionPoset& p) {
  // Flats are sorted by decreasing dimension, so strictly smaller poset
  // elements (strict mask subsets) always come earlier.
  std::vector<long long> mu(p.flats.size());
  for (size_t k = 0; k < p.flats.size(); ++k) {
    if (k == 0) {
      mu[0] = 1;
      continue;
    }
    long long acc = 0;
    for (size_t y = 0; y < k; ++y) {
      uint64_t my = p.flats[y].mask, mx = p.flats[k].mask;
      if (my != mx && (my & mx) == my) acc += mu[y];
    }
    mu[k] = -acc;
  }
  return mu;
}

Poly chi_via_mobius(const Arrangement& a) {
  IntersectionPoset p = build_poset(a);
  Poly chi;
  for (const Flat& f : p.flats) chi = chi + Poly::monomial(f.dim, Rat(static_cast<long>(f.mobius)));
  return chi;
}

Poly chi_via_deletion_contraction(const Arrangement& a) {
  if (a.n() == 0) return Poly::monomial(a.d);
  int last = a.n() - 1;
  return chi_via_deletion_contraction(delete_hyperplane(a, last)) -
         chi_via_deletion_contraction(contract(a, last));
}

std::vector<std::pair<int, uint64_t>> poset_signature(const IntersectionPoset& p) {
  std::vector<std::pair<int, uint64_t>> sig;
  sig.reserve(p.flats.size());
  for (const Flat& f : p.flats) sig.emplace_back(p.d - f.dim, f.mask);
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace hyperarr
