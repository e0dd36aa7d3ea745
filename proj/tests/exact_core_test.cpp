#include "hodge/lp.hpp"
#include "hodge/polygon.hpp"
#include "hodge/snf.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

namespace hodge {
namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

LpProblem example_lp(RationalVector target) {
  LpProblem lp;
  lp.sense = LpSense::minimize;
  lp.objective = {1, 1, 1};
  lp.constraints = RationalMatrix::from_columns(std::vector<IntVector>{
      make_int_vector({-1, 0, 0}), make_int_vector({1, 2, 0}), make_int_vector({1, 0, 2})});
  lp.rhs = std::move(target);
  lp.nonneg = {true, true, true};
  return lp;
}

TEST(LpOptimize, SingleConstraint) {
  LpProblem lp;
  lp.objective = {1};
  lp.constraints = RationalMatrix(1, 1);
  lp.constraints(0, 0) = 2;
  lp.rhs = {1};
  lp.nonneg = {true};
  auto res = lp_optimize(lp);
  ASSERT_TRUE(res.optimal());
  EXPECT_EQ(*res.value, Q(1, 2));
}

TEST(LpOptimize, ExampleWeightWitness) {
  auto res = lp_optimize(example_lp({0, 1, 0}));
  ASSERT_TRUE(res.optimal());
  EXPECT_EQ(*res.value, 1);
  EXPECT_EQ(res.witness, (RationalVector{Q(1, 2), Q(1, 2), 0}));
}

TEST(LpOptimize, Infeasible) {
  EXPECT_EQ(lp_optimize(example_lp({0, 0, -1})).status, LpStatus::infeasible);
}

TEST(LpOptimize, Unbounded) {
  LpProblem lp;
  lp.sense = LpSense::maximize;
  lp.objective = {1, 0};
  lp.constraints = RationalMatrix(1, 2);
  lp.constraints(0, 0) = 1;
  lp.constraints(0, 1) = -1;
  lp.rhs = {0};
  lp.nonneg = {true, true};
  EXPECT_EQ(lp_optimize(lp).status, LpStatus::unbounded);
}

TEST(LpOptimize, DimensionMismatchIsInputError) {
  LpProblem lp;
  lp.objective = {1, 1};
  lp.constraints = RationalMatrix(1, 3);
  lp.rhs = {1};
  lp.nonneg = {true, true};
  EXPECT_THROW(lp_optimize(lp), InputError);
}

TEST(LpOptimize, FreeVariablesAndRedundantRows) {
  // max x + y  s.t.  x + y = 3, 2x + 2y = 6, x - y = 1, x, y free.
  LpProblem lp;
  lp.sense = LpSense::maximize;
  lp.objective = {1, 1};
  lp.constraints = RationalMatrix::from_rows(std::vector<RationalVector>{{1, 1}, {2, 2}, {1, -1}});
  lp.rhs = {3, 6, 1};
  lp.nonneg = {false, false};
  auto res = lp_optimize(lp);
  ASSERT_TRUE(res.optimal());
  EXPECT_EQ(*res.value, 3);
  EXPECT_EQ(res.witness, (RationalVector{2, 1}));
}

// Property: every optimal answer has an equal-valued dual certificate and a
// witness no worse than any vertex found by brute-force basis enumeration.
TEST(LpOptimize, RandomProblemsMatchBasisEnumeration) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 4);
  int optimal_seen = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t m = 1 + trial % 3, n = m + 1 + trial % 3;
    LpProblem lp;
    lp.sense = trial % 2 ? LpSense::maximize : LpSense::minimize;
    lp.constraints = RationalMatrix(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) lp.constraints(i, j) = coef(rng);
    for (std::size_t i = 0; i < m; ++i) lp.rhs.push_back(coef(rng));
    for (std::size_t j = 0; j < n; ++j) lp.objective.push_back(coef(rng));
    lp.nonneg.assign(n, true);
    auto res = lp_optimize(lp);
    auto oracle = oracles::lp_by_basis_enumeration(lp);
    if (res.status == LpStatus::infeasible) {
      EXPECT_FALSE(oracle.feasible) << "trial " << trial;
      continue;
    }
    ASSERT_TRUE(oracle.feasible) << "trial " << trial;
    if (res.optimal()) {
      ++optimal_seen;
      EXPECT_EQ(*res.value, oracle.best) << "trial " << trial;
      EXPECT_EQ(dot(lp.rhs, res.dual), *res.value);
    }
  }
  EXPECT_GT(optimal_seen, 50);
}

TEST(LowerConvexHull, ExamplePoints) {
  std::vector<ExtPlanarPoint> pts{{0, ExtRational(0)}, {1, ExtRational(0)}, {2, ExtRational(2)}, {4, ExtRational(3)}};
  auto hull = lower_convex_hull(pts);
  EXPECT_EQ(hull, (std::vector<PlanarPoint>{{0, 0}, {1, 0}, {4, 3}}));
}

TEST(LowerConvexHull, SinglePointAndInfinity) {
  EXPECT_EQ(lower_convex_hull(std::vector<ExtPlanarPoint>{{0, ExtRational(0)}}), (std::vector<PlanarPoint>{{0, 0}}));
  std::vector<ExtPlanarPoint> pts{{0, ExtRational(0)}, {1, ExtRational::infinity()}, {2, ExtRational(1)}};
  EXPECT_EQ(lower_convex_hull(pts), (std::vector<PlanarPoint>{{0, 0}, {2, 1}}));
}

TEST(LowerConvexHull, DuplicateAbscissaIsInputError) {
  std::vector<ExtPlanarPoint> pts{{0, ExtRational(0)}, {0, ExtRational(1)}};
  EXPECT_THROW(lower_convex_hull(pts), InputError);
}

TEST(LowerConvexHull, IdempotentWithIncreasingSlopes) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> y(-5, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PlanarPoint> pts;
    for (int x = 0; x < 2 + trial % 9; ++x) pts.push_back({x, Rational(y(rng), 1 + trial % 3)});
    auto h1 = lower_convex_hull(pts);
    EXPECT_EQ(lower_convex_hull(h1), h1);
    for (std::size_t i = 2; i < h1.size(); ++i) {
      Rational s1 = (h1[i - 1].y - h1[i - 2].y) / (h1[i - 1].x - h1[i - 2].x);
      Rational s2 = (h1[i].y - h1[i - 1].y) / (h1[i].x - h1[i - 1].x);
      EXPECT_LT(s1, s2);
    }
    PlanarPolygon poly(h1);
    for (const auto& p : pts) EXPECT_LE(poly(p.x), p.y);
  }
}

TEST(SmithNormalForm, Identity) {
  auto snf = smith_normal_form(RationalMatrix::identity(3));
  EXPECT_EQ(snf.S, RationalMatrix::identity(3));
}

TEST(SmithNormalForm, ExampleMatrix) {
  auto M = RationalMatrix::from_columns(std::vector<IntVector>{
      make_int_vector({-1, 0, 0}), make_int_vector({1, 2, 0}), make_int_vector({1, 0, 2})});
  auto snf = smith_normal_form(M);
  EXPECT_EQ(snf.diagonal(), (std::vector<Integer>{1, 2, 2}));
  EXPECT_EQ(oracles::determinantal_divisor_diagonal(M), (std::vector<Integer>{1, 2, 2}));
}

TEST(SmithNormalForm, AlreadyDiagonal) {
  auto M = RationalMatrix::from_rows(std::vector<RationalVector>{{2, 0}, {0, 4}});
  EXPECT_EQ(smith_normal_form(M).diagonal(), (std::vector<Integer>{2, 4}));
}

TEST(SmithNormalForm, SingularIsInputError) {
  auto M = RationalMatrix::from_rows(std::vector<RationalVector>{{1, 2}, {2, 4}});
  EXPECT_THROW(smith_normal_form(M), InputError);
}

TEST(SmithNormalForm, RandomReconstructionAndDivisibility) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-6, 6);
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = 1 + checked % 4;
    RationalMatrix M(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M(i, j) = e(rng);
    if (determinant(M) == 0) continue;
    auto snf = smith_normal_form(M);
    EXPECT_EQ(abs(determinant(snf.U)), 1);
    EXPECT_EQ(abs(determinant(snf.V)), 1);
    EXPECT_EQ((*inverse(snf.U)) * snf.S * (*inverse(snf.V)), M);
    EXPECT_EQ(abs(determinant(snf.S)), abs(determinant(M)));
    auto d = snf.diagonal();
    for (std::size_t i = 1; i < n; ++i) EXPECT_EQ(d[i] % d[i - 1], 0);
    EXPECT_EQ(d, oracles::determinantal_divisor_diagonal(M));
    ++checked;
  }
}

TEST(HyperplaneThrough, ExampleFace) {
  auto e = hyperplane_through({make_int_vector({-1, 0, 0}), make_int_vector({1, 2, 0}), make_int_vector({1, 0, 2})});
  EXPECT_EQ(e.coeffs, (RationalVector{-1, 1, 1}));
}

TEST(HyperplaneThrough, DeligneFace) {
  auto e = hyperplane_through({make_int_vector({-1, 0, 0}), make_int_vector({1, 5, 0}), make_int_vector({1, 0, 5})});
  EXPECT_EQ(e.coeffs, (RationalVector{-1, Q(2, 5), Q(2, 5)}));
}

TEST(HyperplaneThrough, InconsistentSystemIsError) {
  EXPECT_THROW(hyperplane_through({make_int_vector({1, 0}), make_int_vector({2, 0})}), InputError);
}

TEST(HyperplaneThrough, EvaluatesToOneOnRandomSimplices) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(-5, 5);
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = 2 + checked % 3;
    std::vector<IntVector> pts(n, IntVector(n));
    for (auto& p : pts)
      for (auto& c : p) c = e(rng);
    AffineFunctional h;
    try {
      h = hyperplane_through(pts);
    } catch (const InputError&) {
      continue;
    }
    for (const auto& p : pts) EXPECT_EQ(h(p), 1);
    ++checked;
  }
}

}  // namespace
}  // namespace hodge
