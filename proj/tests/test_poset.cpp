#include <gtest/gtest.h>

#include <map>

#include "hyperarr/errors.hpp"
#include "hyperarr/families.hpp"
#include "hyperarr/poset.hpp"

using namespace hyperarr;

namespace {

Arrangement worked_example() {
  return Arrangement::make(2, {Hyperplane::make({Rat(1), Rat(0)}, Rat(0)),
                               Hyperplane::make({Rat(0), Rat(1)}, Rat(0)),
                               Hyperplane::make({Rat(1), Rat(1)}, Rat(1))});
}

Poly poly(const std::vector<int>& coeffs) {
  std::vector<Rat> c;
  for (int v : coeffs) c.emplace_back(v);
  return Poly(c);
}

}  // namespace

TEST(Poset, WorkedExample) {
  IntersectionPoset p = build_poset(worked_example());
  ASSERT_EQ(p.flats.size(), 7u);
  EXPECT_EQ(p.flats[0].dim, 2);
  EXPECT_EQ(p.flats[0].mask, 0u);
  EXPECT_EQ(p.flats[0].mobius, 1);

  std::map<uint64_t, const Flat*> by_mask;
  for (const Flat& f : p.flats) by_mask[f.mask] = &f;
  // Three lines, each on exactly one hyperplane.
  for (uint64_t m : {1u, 2u, 4u}) {
    ASSERT_TRUE(by_mask.count(m));
    EXPECT_EQ(by_mask[m]->dim, 1);
    EXPECT_EQ(by_mask[m]->mobius, -1);
  }
  // Three pairwise intersection points; no triple point.
  for (uint64_t m : {3u, 5u, 6u}) {
    ASSERT_TRUE(by_mask.count(m));
    EXPECT_EQ(by_mask[m]->dim, 0);
    EXPECT_EQ(by_mask[m]->mobius, 1);
  }
  EXPECT_FALSE(by_mask.count(7));

  EXPECT_EQ(chi_via_mobius(worked_example()), poly({3, -3, 1}));
}

TEST(Poset, FlatsSortedByDimension) {
  IntersectionPoset p = build_poset(worked_example());
  for (size_t k = 1; k < p.flats.size(); ++k) {
    const Flat& a = p.flats[k - 1];
    const Flat& b = p.flats[k];
    EXPECT_TRUE(a.dim > b.dim || (a.dim == b.dim && a.mask < b.mask));
  }
  EXPECT_TRUE(poset_leq(p.flats[0], p.flats[3]));
}

TEST(Poset, BraidCenterMobius) {
  // All three hyperplanes of the braid arrangement on 3 letters meet in the
  // plane x1 = x2 = x3; mu of that flat is 2.
  IntersectionPoset p = build_poset(make_family(FamilySpec::braid(3)));
  ASSERT_EQ(p.flats.size(), 5u);
  const Flat& center = p.flats.back();
  EXPECT_EQ(center.mask, 7u);
  EXPECT_EQ(center.dim, 1);
  EXPECT_EQ(center.mobius, 2);
}

TEST(Poset, BraidFourHasPartitionLatticeSize) {
  IntersectionPoset p = build_poset(make_family(FamilySpec::braid(4)));
  EXPECT_EQ(p.flats.size(), 15u);  // partitions of a 4-element set
  EXPECT_EQ(chi_via_mobius(make_family(FamilySpec::braid(4))), chi_formula_braid(4));
}

TEST(Poset, ChiMethodsAgree) {
  for (const Arrangement& a :
       {worked_example(), make_family(FamilySpec::braid(3)),
        make_family(FamilySpec::shi(2)), make_family(FamilySpec::catalan(2)),
        make_family(FamilySpec::linial(3))}) {
    EXPECT_EQ(chi_via_mobius(a), chi_via_deletion_contraction(a));
  }
}

TEST(Poset, EmptyArrangement) {
  Arrangement empty = Arrangement::make(3, {});
  IntersectionPoset p = build_poset(empty);
  ASSERT_EQ(p.flats.size(), 1u);
  EXPECT_EQ(chi_via_mobius(empty), Poly::monomial(3));
  EXPECT_EQ(chi_via_deletion_contraction(empty), Poly::monomial(3));
}

TEST(Poset, ParallelLines) {
  // Two parallel lines never meet: chi = t^2 - 2t.
  Arrangement a = Arrangement::make(
      2, {Hyperplane::make({Rat(1), Rat(0)}, Rat(0)),
          Hyperplane::make({Rat(1), Rat(0)}, Rat(1))});
  IntersectionPoset p = build_poset(a);
  EXPECT_EQ(p.flats.size(), 3u);
  EXPECT_EQ(chi_via_mobius(a), poly({0, -2, 1}));
}

TEST(Poset, SignatureInvariantUnderEssentialization) {
  // The essentialization of the braid arrangement on 3 letters is a pencil of
  // three concurrent lines; codimension-based signatures agree.
  Arrangement braid3 = make_family(FamilySpec::braid(3));
  Arrangement pencil = Arrangement::make(
      2, {Hyperplane::make({Rat(1), Rat(0)}, Rat(0)),
          Hyperplane::make({Rat(0), Rat(1)}, Rat(0)),
          Hyperplane::make({Rat(1), Rat(1)}, Rat(0))});
  EXPECT_EQ(poset_signature(build_poset(braid3)), poset_signature(build_poset(pencil)));
  EXPECT_NE(poset_signature(build_poset(braid3)),
            poset_signature(build_poset(worked_example())));
}

TEST(Poset, MobiusVectorMatchesFlats) {
  IntersectionPoset p = build_poset(make_family(FamilySpec::shi(2)));
  std::vector<long long> mu = mobius(p);
  ASSERT_EQ(mu.size(), p.flats.size());
  for (size_t k = 0; k < mu.size(); ++k) EXPECT_EQ(mu[k], p.flats[k].mobius);
  // Shi on 2 letters: two parallel lines, chi = t(t - 2).
  EXPECT_EQ(chi_via_mobius(make_family(FamilySpec::shi(2))), poly({0, -2, 1}));
}

TEST(Poset, TooManyHyperplanes) {
  // The bitmask representation holds 64 hyperplanes; more must be rejected.
  std::vector<Hyperplane> hs;
  for (int i = 0; i < 65; ++i)
    hs.push_back(Hyperplane::make({Rat(1), Rat(0)}, Rat(i)));
  Arrangement a = Arrangement::make(2, hs);
  EXPECT_THROW(build_poset(a), BudgetExceeded);
}

TEST(Poset, FormulaOracles) {
  EXPECT_EQ(chi_formula_braid(3), poly({0, 2, -3, 1}));
  EXPECT_EQ(chi_formula_shi(3), poly({0, 9, -6, 1}));
  EXPECT_EQ(chi_formula_catalan(2), poly({0, -3, 1}));  // t(t-3)
  EXPECT_EQ(chi_formula_linial(2), poly({0, -1, 1}));      // t(t-1)
  EXPECT_EQ(chi_formula_generic(4, 2), poly({6, -4, 1}));
  EXPECT_EQ(chi_formula_generic(2, 3), poly({0, 1, -2, 1}));
}
