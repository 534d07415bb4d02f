#include "hyperarr/selftest.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperarr/catalan.hpp"
#include "hyperarr/families.hpp"
#include "hyperarr/finite_field.hpp"
#include "hyperarr/graphs.hpp"
#include "hyperarr/orlik_solomon.hpp"
#include "hyperarr/parking.hpp"
#include "hyperarr/poset.hpp"
#include "hyperarr/regions.hpp"
#include "hyperarr/trees.hpp"

namespace hyperarr {

namespace {

void check(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error(msg);
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

long long factorial(int n) {
  long long r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Arrangement worked_example() {
  // x = 0, y = 0, x + y = 1
  return Arrangement::make(2, {Hyperplane::make({Rat(1), Rat(0)}, Rat(0)),
                               Hyperplane::make({Rat(0), Rat(1)}, Rat(0)),
                               Hyperplane::make({Rat(1), Rat(1)}, Rat(1))});
}

Arrangement os_example() {
  // x = 0, y = 0, x + y = 0, x - y = 1
  return Arrangement::make(2, {Hyperplane::make({Rat(1), Rat(0)}, Rat(0)),
                               Hyperplane::make({Rat(0), Rat(1)}, Rat(0)),
                               Hyperplane::make({Rat(1), Rat(1)}, Rat(0)),
                               Hyperplane::make({Rat(1), Rat(-1)}, Rat(1))});
}

int hamming(const SignVector& a, const SignVector& b) {
  int h = 0;
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k]) ++h;
  return h;
}

long long count_bounded(const std::vector<Region>& regions) {
  long long b = 0;
  for (const Region& r : regions)
    if (r.relatively_bounded) ++b;
  return b;
}

// Shared corpus for criteria 4, 9 and 10: every graph on up to 4 vertices plus
// 20 seeded random graphs on 5..6 vertices.
std::vector<Graph> graph_corpus() {
  std::vector<Graph> graphs;
  for (int k = 1; k <= 4; ++k) {
    std::vector<std::pair<int, int>> all;
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) all.emplace_back(i, j);
    int m = static_cast<int>(all.size());
    for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (int e = 0; e < m; ++e)
        if (mask >> e & 1) edges.push_back(all[e]);
      graphs.push_back(Graph::make(k, edges));
    }
  }
  std::mt19937 rng(1729);
  for (int t = 0; t < 20; ++t) {
    int k = 5 + static_cast<int>(rng() % 2);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        if (rng() % 2) edges.emplace_back(i, j);
    graphs.push_back(Graph::make(k, edges));
  }
  return graphs;
}

std::vector<Arrangement> family_corpus() {
  std::vector<Arrangement> out;
  for (int n = 1; n <= 8; ++n) out.push_back(make_family(FamilySpec::generic(n, 2)));
  for (int n = 1; n <= 6; ++n) out.push_back(make_family(FamilySpec::generic(n, 3)));
  for (int n = 2; n <= 5; ++n) out.push_back(make_family(FamilySpec::braid(n)));
  for (int n = 2; n <= 4; ++n) out.push_back(make_family(FamilySpec::catalan(n)));
  for (int n = 2; n <= 4; ++n) out.push_back(make_family(FamilySpec::shi(n)));
  for (int n = 2; n <= 5; ++n) out.push_back(make_family(FamilySpec::linial(n)));
  for (const Graph& g : graph_corpus())
    out.push_back(make_family(FamilySpec::graphical(g)));
  return out;
}

void criterion_generic(std::ostream&) {
  std::vector<std::pair<int, int>> cases;
  for (int n = 1; n <= 8; ++n) cases.emplace_back(n, 2);
  for (int n = 1; n <= 6; ++n) cases.emplace_back(n, 3);
  for (auto [n, d] : cases) {
    Arrangement a = make_family(FamilySpec::generic(n, d));
    check(is_general_position(a), "generic family not in general position");
    long long want_r = 0, want_b = 0;
    for (int k = 0; k <= d && k <= n; ++k) {
      long long c = static_cast<long long>(binomial(n, k));
      want_r += c;
      want_b += ((d - k) % 2 ? -c : c);
    }
    std::vector<Region> regions = enumerate_regions(a);
    check(static_cast<long long>(regions.size()) == want_r, "generic region count");
    check(count_bounded(regions) == want_b, "generic bounded count");
  }
}

void criterion_worked_example(std::ostream&) {
  Arrangement a = worked_example();
  Poly expected(std::vector<Rat>{Rat(3), Rat(-3), Rat(1)});
  check(chi_via_mobius(a) == expected, "chi via mobius");
  check(chi_via_deletion_contraction(a) == expected, "chi via deletion-contraction");
  check(chi_via_finite_field(a) == expected, "chi via finite field");
  std::vector<Region> regions = enumerate_regions(a);
  check(regions.size() == 7, "example region count");
  check(count_bounded(regions) == 1, "example bounded count");
  ZaslavskyCounts z = zaslavsky_counts(a);
  check(z.regions == 7 && z.bounded == 1, "example Zaslavsky counts");
}

void criterion_braid(std::ostream&) {
  for (int n = 2; n <= 5; ++n) {
    Arrangement a = make_family(FamilySpec::braid(n));
    Poly expected = chi_formula_braid(n);
    check(chi_via_mobius(a) == expected, "braid chi via mobius");
    check(chi_via_deletion_contraction(a) == expected, "braid chi via delcon");
    ZaslavskyCounts z = zaslavsky_counts(a);
    check(z.regions == factorial(n) && z.bounded == 0, "braid Zaslavsky counts");
    if (n > 4) continue;
    std::vector<Region> regions = enumerate_regions(a);
    check(static_cast<long long>(regions.size()) == factorial(n), "braid region count");
    check(count_bounded(regions) == 0, "braid bounded count");
    std::set<std::vector<int>> perms;
    for (const Region& r : regions) {
      std::vector<int> perm(n);
      for (int i = 0; i < n; ++i) perm[i] = i;
      std::sort(perm.begin(), perm.end(),
                [&](int x, int y) { return r.sample[x] > r.sample[y]; });
      perms.insert(perm);
    }
    check(static_cast<long long>(perms.size()) == factorial(n),
          "regions do not map bijectively to permutations");
  }
}

void criterion_graphical(std::ostream&) {
  for (const Graph& g : graph_corpus()) {
    Poly chrom = chromatic_polynomial(g);  // poset vs delcon inside
    for (long long q = 2; q <= 4; ++q)
      check(Rat(static_cast<long>(count_proper_colorings(g, q))) ==
                poly_eval(chrom, Rat(static_cast<long>(q))),
            "coloring count vs chromatic polynomial");
    long long acyclic = count_acyclic_orientations(g);
    Rat at_minus1 = poly_eval(chrom, Rat(-1));
    if (g.n % 2 != 0) at_minus1 = -at_minus1;
    check(Rat(static_cast<long>(acyclic)) == at_minus1,
          "acyclic orientations vs chi(-1)");
    ZaslavskyCounts z = zaslavsky_counts(make_family(FamilySpec::graphical(g)));
    check(z.regions == acyclic, "acyclic orientations vs region count");
  }
}

void criterion_catalan(std::ostream&) {
  for (int n = 2; n <= 4; ++n) {
    Arrangement a = make_family(FamilySpec::catalan(n));
    check(chi_via_mobius(a) == chi_formula_catalan(n), "catalan chi formula");
    long long cn = static_cast<long long>(catalan_number(n));
    long long cn1 = static_cast<long long>(catalan_number(n - 1));
    ZaslavskyCounts z = zaslavsky_counts(a);
    check(z.regions == factorial(n) * cn, "catalan region count");
    check(z.bounded == factorial(n) * cn1, "catalan bounded count");

    std::vector<Region> regions = enumerate_regions(a);
    check(static_cast<long long>(regions.size()) == z.regions,
          "catalan enumeration vs Zaslavsky");
    check(count_bounded(regions) == z.bounded, "catalan bounded enumeration");

    std::set<std::vector<int>> ballots;
    for (const Region& r : regions) {
      if (!in_catalan_base_chamber(n, r.signs)) continue;
      std::vector<int> b = catalan_region_to_ballot(n, r.signs);
      check(is_ballot_sequence(b), "region maps to a non-ballot sequence");
      check(ballots.insert(b).second, "two regions map to one ballot sequence");
      check(ballot_bounded_criterion(b) == r.relatively_bounded,
            "ballot prefix criterion vs relative boundedness");
    }
    std::vector<std::vector<int>> all = enumerate_ballot_sequences(n);
    check(ballots.size() == all.size() &&
              std::set<std::vector<int>>(all.begin(), all.end()) == ballots,
          "chamber regions do not biject with ballot sequences");
  }
}

void criterion_shi(std::ostream&) {
  for (int n = 2; n <= 4; ++n) {
    Arrangement a = make_family(FamilySpec::shi(n));
    check(chi_via_mobius(a) == chi_formula_shi(n), "shi chi formula");
    ZaslavskyCounts z = zaslavsky_counts(a);
    check(z.regions == ipow(n + 1, n - 1), "shi region count");
    check(z.bounded == ipow(n - 1, n - 1), "shi bounded count");

    std::map<SignVector, std::vector<int>> labels = pak_labeling(n);
    check(static_cast<long long>(labels.size()) == ipow(n + 1, n - 1),
          "pak labeling size");
    SignVector base = shi_base_signs(n);
    std::set<std::vector<int>> seen;
    for (const auto& [signs, label] : labels) {
      check(is_parking_function(label), "pak label is not a parking function");
      check(seen.insert(label).second, "pak labels collide");
      int sum = 0;
      for (int v : label) sum += v;
      check(sum - n == hamming(signs, base),
            "pak label weight vs separating walls");
    }
    std::vector<std::vector<int>> all = enumerate_parking_functions(n);
    check(seen == std::set<std::vector<int>>(all.begin(), all.end()),
          "pak labels do not exhaust parking functions");
  }
  for (int n = 1; n <= 5; ++n) {
    // is_parking_function cross-checks the simulation against the sorted
    // criterion on every call; sweep the full cube to exercise both.
    std::vector<int> a(n, 1);
    long long parked = 0;
    for (;;) {
      if (is_parking_function(a)) ++parked;
      int k = n - 1;
      while (k >= 0 && a[k] == n) a[k--] = 1;
      if (k < 0) break;
      ++a[k];
    }
    check(parked == ipow(n + 1, n - 1), "parking function count");
  }
}

void criterion_kreweras(std::ostream&) {
  for (int n = 2; n <= 4; ++n) {
    Arrangement a = make_family(FamilySpec::shi(n));
    std::vector<Region> regions = enumerate_regions(a);
    SignVector base = shi_base_signs(n);
    std::map<int, long long> dist_hist;
    for (const Region& r : regions) ++dist_hist[hamming(r.signs, base)];
    std::map<int, long long> inv_hist = tree_inversion_histogram(n);
    int top = n * (n - 1) / 2;
    for (int k = 0; k <= top; ++k) {
      long long lhs = dist_hist.count(k) ? dist_hist.at(k) : 0;
      long long rhs = inv_hist.count(top - k) ? inv_hist.at(top - k) : 0;
      check(lhs == rhs, "distance histogram vs tree inversions");
    }
    long long total = 0;
    for (auto& [k, v] : dist_hist) total += v;
    check(total == ipow(n + 1, n - 1), "distance histogram total");
  }
}

void criterion_linial(std::ostream&) {
  for (int n = 2; n <= 5; ++n) {
    Arrangement a = make_family(FamilySpec::linial(n));
    check(chi_via_mobius(a) == chi_formula_linial(n), "linial chi formula");
    ZaslavskyCounts z = zaslavsky_counts(a);
    check(z.regions == count_alternating_trees(n),
          "linial regions vs alternating trees");
  }
  for (int n = 2; n <= 8; ++n) {
    Poly chi = chi_formula_linial(n);
    check(rat_sgn(chi.c[0]) == 0, "linial chi should vanish at 0");
    Poly quotient(std::vector<Rat>(chi.c.begin() + 1, chi.c.end()));
    for (const auto& root : poly_roots_numeric(quotient))
      check(std::abs(root.real() - n / 2.0) < 1e-6,
            "linial root off the critical line");
  }
}

void criterion_finite_field(std::ostream&) {
  for (const Arrangement& a : family_corpus()) {
    Poly chi = chi_via_mobius(a);
    for (int64_t p : smallest_good_primes(a, 3)) {
      long long pts = count_complement_points(a, p);
      check(Rat(static_cast<long>(pts)) == poly_eval(chi, Rat(static_cast<long>(p))),
            "complement points vs chi(p)");
    }
  }
}

void criterion_orlik_solomon(std::ostream&) {
  check(graded_dimensions(os_example()) == std::vector<long long>({1, 4, 5}),
        "graded dims of the 4-line example");
  std::vector<Arrangement> suite = family_corpus();
  suite.push_back(worked_example());
  suite.push_back(os_example());
  for (const Arrangement& a : suite) {
    if (a.n() > 10) continue;
    std::vector<long long> dims = graded_dimensions(a);
    Poly chi = chi_via_mobius(a);
    for (int k = 0; k <= a.d; ++k) {
      const Rat& c = chi.coeff(a.d - k);
      if (rat_sgn(c) != 0)
        check(rat_sgn(c) == (k % 2 ? -1 : 1), "chi coefficients do not alternate");
      long long want = k < static_cast<int>(dims.size()) ? dims[k] : 0;
      Rat mag = c;
      if (rat_sgn(mag) < 0) mag = -mag;
      check(mag == Rat(static_cast<long>(want)),
            "hilbert coefficients vs |chi| coefficients");
    }
  }
}

void criterion_deletion_contraction(std::ostream&) {
  std::mt19937 rng(20260815);
  auto random_rat = [&]() {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = 1 + static_cast<long>(rng() % 5);
    return make_rat(num, den);
  };
  int built = 0, attempts = 0;
  while (built < 20) {
    check(++attempts < 2000, "rank-preserving sampler stalled");
    int d = 2 + static_cast<int>(rng() % 2);
    int n = d + 2 + (d == 2 ? static_cast<int>(rng() % 2) : 0);
    std::vector<Hyperplane> hs;
    bool ok = true;
    while (static_cast<int>(hs.size()) < n) {
      std::vector<Rat> normal(d);
      bool zero = true;
      for (int j = 0; j < d; ++j) {
        normal[j] = random_rat();
        if (rat_sgn(normal[j]) != 0) zero = false;
      }
      if (zero) continue;
      Hyperplane h = Hyperplane::make(normal, random_rat());
      if (std::find(hs.begin(), hs.end(), h) != hs.end()) continue;
      hs.push_back(std::move(h));
    }
    Arrangement a = Arrangement::make(d, hs);
    int rank = arrangement_rank(a);
    for (int i = 0; i < n && ok; ++i)
      if (arrangement_rank(delete_hyperplane(a, i)) != rank) ok = false;
    if (!ok) continue;  // resample: the bounded-count identity needs full-rank deletions
    ++built;

    Poly chi = chi_via_mobius(a);
    ZaslavskyCounts z = zaslavsky_counts(a);
    IntersectionPoset poset = build_poset(a);
    for (int i = 0; i < n; ++i) {
      Arrangement del = delete_hyperplane(a, i);
      Contraction con = contract_with_map(a, i);
      check(chi == chi_via_mobius(del) - chi_via_mobius(con.arr),
            "chi deletion-contraction identity");
      ZaslavskyCounts zd = zaslavsky_counts(del);
      ZaslavskyCounts zc = zaslavsky_counts(con.arr);
      check(z.regions == zd.regions + zc.regions, "region count recursion");
      check(z.bounded == zd.bounded + zc.bounded, "bounded count recursion");

      // The contraction's poset must be the interval above H_i in L(A).
      std::vector<std::string> lifted;
      for (const Flat& f : build_poset(con.arr).flats)
        lifted.push_back(flat_key(lift_contraction_flat(con, f.system, a.d)));
      std::vector<std::string> above;
      for (const Flat& f : poset.flats)
        if (f.mask >> i & 1) above.push_back(flat_key(f.system));
      std::sort(lifted.begin(), lifted.end());
      std::sort(above.begin(), above.end());
      check(lifted == above, "contraction flats vs interval above H");
    }
  }
}

void criterion_essentialization(std::ostream&) {
  std::vector<Arrangement> cases;
  for (int n = 2; n <= 4; ++n) cases.push_back(make_family(FamilySpec::braid(n)));
  for (int n = 2; n <= 3; ++n) cases.push_back(make_family(FamilySpec::shi(n)));
  for (const Arrangement& a : cases) {
    auto [ess, rank] = essentialize(a);
    check(ess.d == rank, "essentialization dimension");
    check(poset_signature(build_poset(a)) == poset_signature(build_poset(ess)),
          "posets differ under essentialization");
    ZaslavskyCounts za = zaslavsky_counts(a);
    ZaslavskyCounts ze = zaslavsky_counts(ess);
    check(za.regions == ze.regions && za.bounded == ze.bounded,
          "Zaslavsky counts differ under essentialization");
    std::vector<Region> ra = enumerate_regions(a);
    std::vector<Region> re = enumerate_regions(ess);
    check(ra.size() == re.size(), "region enumeration differs");
    check(count_bounded(ra) == za.bounded && count_bounded(re) == za.bounded,
          "bounded enumeration differs");
  }
}

}  // namespace

int run_selftest(std::ostream& out) {
  struct Criterion {
    const char* name;
    void (*fn)(std::ostream&);
  };
  const Criterion criteria[] = {
      {"generic position counts", criterion_generic},
      {"worked example", criterion_worked_example},
      {"braid family", criterion_braid},
      {"graphical arrangements", criterion_graphical},
      {"catalan family and ballots", criterion_catalan},
      {"shi family and parking", criterion_shi},
      {"kreweras histogram", criterion_kreweras},
      {"linial family and roots", criterion_linial},
      {"finite field method", criterion_finite_field},
      {"orlik-solomon dimensions", criterion_orlik_solomon},
      {"deletion-contraction identities", criterion_deletion_contraction},
      {"essentialization", criterion_essentialization},
  };
  int failures = 0, idx = 0;
  for (const Criterion& c : criteria) {
    ++idx;
    try {
      c.fn(out);
      out << "PASS " << idx << " " << c.name << "\n";
    } catch (const std::exception& e) {
      ++failures;
      out << "FAIL " << idx << " " << c.name << ": " << e.what() << "\n";
    }
  }
  out << "passed " << (12 - failures) << "/12\n";
  return failures;
}

}  // namespace hyperarr
