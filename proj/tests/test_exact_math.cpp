#include <gtest/gtest.h>

#include <complex>
#include <vector>

#include "hyperarr/errors.hpp"
#include "hyperarr/matrix.hpp"
#include "hyperarr/polynomial.hpp"
#include "hyperarr/rational.hpp"
#include "hyperarr/simplex.hpp"

using namespace hyperarr;

namespace {

QMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  QMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = Rat(rows[r][c]);
  return m;
}

Poly poly(const std::vector<int>& coeffs) {
  std::vector<Rat> c;
  for (int v : coeffs) c.emplace_back(v);
  return Poly(c);
}

}  // namespace

TEST(Rational, Normalization) {
  EXPECT_EQ(make_rat(2, 4), Rat(1, 2));
  EXPECT_EQ(make_rat(-3, -6), Rat(1, 2));
  EXPECT_THROW(make_rat(1, 0), InvalidSpec);
  EXPECT_EQ(parse_rat("2/4"), Rat(1, 2));
  EXPECT_EQ(parse_rat("-7"), Rat(-7));
  EXPECT_THROW(parse_rat("1/0"), ParseError);
  EXPECT_THROW(parse_rat("x"), ParseError);
  EXPECT_EQ(rat_str(Rat(1, 2)), "1/2");
  EXPECT_EQ(rat_str(Rat(-7)), "-7");
  EXPECT_EQ(rat_sgn(Rat(0)), 0);
  EXPECT_EQ(rat_sgn(Rat(-1, 3)), -1);
}

TEST(Matrix, RrefIsCanonical) {
  // Two row orderings of the same row space reduce to the same RREF.
  QMatrix a = from_rows({{1, 2, 3}, {2, 4, 7}});
  QMatrix b = from_rows({{2, 4, 7}, {1, 2, 3}});
  RrefResult ra = rref(a), rb = rref(b);
  EXPECT_EQ(ra.m, rb.m);
  EXPECT_EQ(ra.rank, 2);
  EXPECT_EQ(ra.pivot_cols, (std::vector<int>{0, 2}));
  EXPECT_EQ(ra.m.at(0, 1), Rat(2));
  EXPECT_EQ(ra.m.at(0, 2), Rat(0));
}

TEST(Matrix, RankAndReduce) {
  QMatrix m = from_rows({{1, 0, 1}, {0, 1, 1}, {1, 1, 2}});
  EXPECT_EQ(matrix_rank(m), 2);
  RrefResult r = rref(m);
  std::vector<Rat> in_span = {Rat(2), Rat(3), Rat(5)};
  EXPECT_TRUE(reduce_against_rref(r.m, r.pivot_cols, in_span));
  std::vector<Rat> off_span = {Rat(0), Rat(0), Rat(1)};
  EXPECT_FALSE(reduce_against_rref(r.m, r.pivot_cols, off_span));
}

TEST(Poly, Arithmetic) {
  Poly p = poly({-1, 1});  // t - 1
  Poly q = poly({-2, 1});  // t - 2
  EXPECT_EQ(p * q, poly({2, -3, 1}));
  EXPECT_EQ(p + q, poly({-3, 2}));
  EXPECT_EQ(p - p, Poly());
  EXPECT_EQ(poly_pow(p, 3), poly({-1, 3, -3, 1}));
  EXPECT_EQ(poly_eval(poly({2, -3, 1}), Rat(5)), Rat(12));
  EXPECT_EQ(Poly::monomial(3).degree(), 3);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(poly({2, -3, 1}).coeff(7), Rat(0));
}

TEST(Poly, Interpolate) {
  // Values 3, 1, 1 at 0, 1, 2 pin t^2 - 3t + 3.
  std::vector<std::pair<Rat, Rat>> pts = {{Rat(0), Rat(3)}, {Rat(1), Rat(1)}, {Rat(2), Rat(1)}};
  EXPECT_EQ(poly_interpolate(pts, 2), poly({3, -3, 1}));
  pts.push_back({Rat(1), Rat(9)});
  EXPECT_THROW(poly_interpolate(pts, 3), DuplicateAbscissa);
}

TEST(Poly, ToString) {
  EXPECT_EQ(poly_str(poly({3, -3, 1})), "t^2 - 3t + 3");
  EXPECT_EQ(poly_str(poly({0, 9, -6, 1})), "t^3 - 6t^2 + 9t");
  EXPECT_EQ(poly_str(Poly()), "0");
  EXPECT_EQ(poly_str(poly({5})), "5");
  EXPECT_EQ(poly_str(poly({0, -1})), "-t");
  Poly half(std::vector<Rat>{Rat(0), Rat(1, 2)});
  EXPECT_EQ(poly_str(half), "(1/2)t");
  EXPECT_EQ(poly_str(poly({1, 1}), "x"), "x + 1");
}

TEST(Poly, RootsNumeric) {
  // t^2 - 3t + 3 has roots 3/2 +- (sqrt 3 / 2) i.
  auto roots = poly_roots_numeric(poly({3, -3, 1}));
  ASSERT_EQ(roots.size(), 2u);
  for (const auto& r : roots) {
    EXPECT_NEAR(r.real(), 1.5, 1e-9);
    EXPECT_NEAR(std::abs(r.imag()), std::sqrt(3.0) / 2.0, 1e-9);
  }
  auto real_roots = poly_roots_numeric(poly({2, -3, 1}));
  ASSERT_EQ(real_roots.size(), 2u);
  EXPECT_NEAR(real_roots[0].real(), 1.0, 1e-9);
  EXPECT_NEAR(real_roots[1].real(), 2.0, 1e-9);
  EXPECT_THROW(poly_roots_numeric(Poly()), ZeroPolynomial);
}

TEST(Simplex, OptimalVertex) {
  // max x + y subject to x <= 1, y <= 2.
  std::vector<LpRow> rows = {{{Rat(1), Rat(0)}, Rel::LE, Rat(1)},
                             {{Rat(0), Rat(1)}, Rel::LE, Rat(2)}};
  LpResult r = solve_lp(2, rows, {Rat(1), Rat(1)}, true);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Rat(3));
  EXPECT_EQ(r.x[0], Rat(1));
  EXPECT_EQ(r.x[1], Rat(2));
}

TEST(Simplex, FreeVariablesAndEquality) {
  // min x subject to x + y = 0, y <= 5: x >= -5 with x = -y.
  std::vector<LpRow> rows = {{{Rat(1), Rat(1)}, Rel::EQ, Rat(0)},
                             {{Rat(0), Rat(1)}, Rel::LE, Rat(5)}};
  LpResult r = solve_lp(2, rows, {Rat(1), Rat(0)}, false);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Rat(-5));
  EXPECT_EQ(r.x[0], Rat(-5));
  EXPECT_EQ(r.x[1], Rat(5));
}

TEST(Simplex, InfeasibleAndUnbounded) {
  std::vector<LpRow> inf = {{{Rat(1)}, Rel::GE, Rat(2)}, {{Rat(1)}, Rel::LE, Rat(1)}};
  EXPECT_EQ(solve_lp(1, inf, {Rat(1)}, false).status, LpStatus::Infeasible);

  std::vector<LpRow> unb = {{{Rat(1)}, Rel::GE, Rat(0)}};
  EXPECT_EQ(solve_lp(1, unb, {Rat(1)}, true).status, LpStatus::Unbounded);
}

TEST(Simplex, ExactRationalAnswer) {
  // max 3x + 2y with x + y <= 7/3, x - y <= 1/2.
  std::vector<LpRow> rows = {{{Rat(1), Rat(1)}, Rel::LE, Rat(7, 3)},
                             {{Rat(1), Rat(-1)}, Rel::LE, Rat(1, 2)}};
  LpResult r = solve_lp(2, rows, {Rat(3), Rat(2)}, true);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  // Vertex of the two constraints: x = 17/12, y = 11/12.
  EXPECT_EQ(r.x[0], Rat(17, 12));
  EXPECT_EQ(r.x[1], Rat(11, 12));
  EXPECT_EQ(r.value, Rat(73, 12));
}

TEST(Simplex, DegenerateRedundantRows) {
  // Duplicate equalities must not trip phase one.
  std::vector<LpRow> rows = {{{Rat(1), Rat(1)}, Rel::EQ, Rat(1)},
                             {{Rat(2), Rat(2)}, Rel::EQ, Rat(2)},
                             {{Rat(1), Rat(0)}, Rel::GE, Rat(0)}};
  LpResult r = solve_lp(2, rows, {Rat(1), Rat(-1)}, false);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, Rat(-1));  // x = 0, y = 1
  EXPECT_EQ(solve_lp(2, rows, {Rat(0), Rat(0)}, true).status, LpStatus::Optimal);
}

TEST(Simplex, RejectsBadShapes) {
  std::vector<LpRow> rows = {{{Rat(1)}, Rel::LE, Rat(1)}};
  EXPECT_THROW(solve_lp(2, rows, {Rat(1), Rat(1)}, true), InvalidSpec);
  EXPECT_THROW(solve_lp(1, rows, {Rat(1), Rat(1)}, true), InvalidSpec);
}
