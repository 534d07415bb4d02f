#include <gtest/gtest.h>

#include "hyperarr/errors.hpp"
#include "hyperarr/families.hpp"
#include "hyperarr/finite_field.hpp"
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

TEST(FiniteField, IntegerRows) {
  Arrangement a = Arrangement::make(
      2, {Hyperplane::make({Rat(1, 2), Rat(1, 3)}, Rat(1, 6)),
          Hyperplane::make({Rat(2), Rat(4)}, Rat(6))});
  auto rows = integer_rows(a);
  ASSERT_EQ(rows.size(), 2u);
  // Stored form is x + (2/3)y = 1/3; clearing denominators gives 3x + 2y = 1.
  EXPECT_EQ(rows[0], (std::vector<Int>{Int(3), Int(2), Int(1)}));
  // 2x + 4y = 6 canonicalizes to x + 2y = 3.
  EXPECT_EQ(rows[1], (std::vector<Int>{Int(1), Int(2), Int(3)}));
}

TEST(FiniteField, GoodPrimeDetection) {
  // The braid poset is already correct mod 2.
  EXPECT_TRUE(is_good_prime(make_family(FamilySpec::braid(3)), 2));
  // x = 0 and x = 2 collapse mod 2, changing the poset.
  Arrangement collide = Arrangement::make(
      1, {Hyperplane::make({Rat(1)}, Rat(0)), Hyperplane::make({Rat(1)}, Rat(2))});
  EXPECT_FALSE(is_good_prime(collide, 2));
  EXPECT_TRUE(is_good_prime(collide, 3));
  // x + y = 2 and x - y = 0 are distinct lines that coincide mod 2.
  Arrangement merge = Arrangement::make(
      2, {Hyperplane::make({Rat(1), Rat(1)}, Rat(2)), Hyperplane::make({Rat(1), Rat(-1)}, Rat(0))});
  EXPECT_FALSE(is_good_prime(merge, 2));
  EXPECT_TRUE(is_good_prime(merge, 3));
  EXPECT_THROW(is_good_prime(merge, 4), InvalidSpec);
  EXPECT_THROW(is_good_prime(merge, 1), InvalidSpec);
}

TEST(FiniteField, CountComplementPoints) {
  // Triples with all coordinates distinct: p(p-1)(p-2).
  Arrangement braid3 = make_family(FamilySpec::braid(3));
  EXPECT_EQ(count_complement_points(braid3, 5), 5 * 4 * 3);
  EXPECT_EQ(count_complement_points(braid3, 7), 7 * 6 * 5);

  // Worked example mod 2: only (1,1) avoids x=0, y=0, x+y=1.
  EXPECT_EQ(count_complement_points(worked_example(), 2), 1);
  // chi(t) = t^2 - 3t + 3 at t = 5.
  EXPECT_EQ(count_complement_points(worked_example(), 5), 13);

  // Empty arrangement: every point counts.
  EXPECT_EQ(count_complement_points(Arrangement::make(3, {}), 3), 27);

  EXPECT_THROW(count_complement_points(braid3, 101, 100), DimensionTooLarge);
}

TEST(FiniteField, DegenerateRowsModP) {
  // x = 1/2 clears to 2x = 1, which reads 0 = 1 mod 2: no point lies on it,
  // so the complement is everything -- and 2 is not a good prime for it.
  Arrangement none = Arrangement::make(1, {Hyperplane::make({Rat(1)}, Rat(1, 2))});
  EXPECT_EQ(count_complement_points(none, 2), 2);
  EXPECT_FALSE(is_good_prime(none, 2));
  EXPECT_TRUE(is_good_prime(none, 3));
}

TEST(FiniteField, SmallestGoodPrimes) {
  // Coefficients of the worked example are all 1 and d = 2, so the search
  // starts after 2: primes 3, 5, 7.
  EXPECT_EQ(smallest_good_primes(worked_example(), 3),
            (std::vector<int64_t>{3, 5, 7}));
  // Budget cap p^d <= max_points filters the tail.
  EXPECT_EQ(smallest_good_primes(worked_example(), 3, 30),
            (std::vector<int64_t>{3, 5}));
  EXPECT_TRUE(smallest_good_primes(worked_example(), 3, 4).empty());
}

TEST(FiniteField, ChiMatchesMobius) {
  for (const Arrangement& a :
       {worked_example(), make_family(FamilySpec::braid(3)),
        make_family(FamilySpec::shi(2)), make_family(FamilySpec::linial(3))}) {
    EXPECT_EQ(chi_via_finite_field(a), chi_via_mobius(a));
  }
  EXPECT_EQ(chi_via_finite_field(worked_example()), poly({3, -3, 1}));
}

TEST(FiniteField, ThreadsAgree) {
  Arrangement a = make_family(FamilySpec::braid(4));
  Poly serial = chi_via_finite_field(a);
  EXPECT_EQ(chi_via_finite_field(a, kDefaultPointBudget, 3), serial);
  EXPECT_EQ(serial, chi_formula_braid(4));
}

TEST(FiniteField, BudgetExhausted) {
  // d+1 = 4 good primes are needed; a 100-point budget allows none beyond
  // tiny primes, so interpolation must refuse.
  EXPECT_THROW(chi_via_finite_field(make_family(FamilySpec::braid(4)), 100),
               BudgetExceeded);
}
