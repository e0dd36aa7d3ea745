#include "hodge/deligne.hpp"

#include <gtest/gtest.h>

namespace hodge {
namespace {

IntVector V(std::initializer_list<long> xs) { return make_int_vector(xs); }
Rational Q(long n, long d = 1) { return Rational(n, d); }

TEST(Deligne, BuildExamples) {
  auto P = build_deligne(5, 2);
  EXPECT_EQ(P.facet_vertices(), (std::vector<IntVector>{V({-1, 0, 0}), V({1, 5, 0}), V({1, 0, 5})}));
  EXPECT_EQ(P.V_h.coeffs, (RationalVector{Q(-1), Q(2, 5), Q(2, 5)}));
  for (const auto& v : P.facet_vertices()) EXPECT_EQ(P.V_h(v), 1);
  EXPECT_EQ(normalized_volume(P.simplex), 25);
  EXPECT_EQ(normalized_volume(P.dual_simplex), 25);
  EXPECT_EQ(normalized_volume(P.full), 50);

  auto S = build_deligne(3, 1);
  auto expected = LatticePolytope::from_points({V({-1, 0}), V({1, 3})});
  EXPECT_EQ(S.simplex.vertices(), expected.vertices());
  EXPECT_THROW(build_deligne(0, 1), InputError);
}

TEST(Deligne, FacialPiecesAreTheTwoSimplices) {
  for (long d : {2, 3, 5})
    for (long n : {1, 2}) {
      auto P = build_deligne(d, n);
      auto pieces = facial_decomposition(P.full);
      ASSERT_EQ(pieces.size(), 2u);
      std::set<std::vector<IntVector>> got, want{P.simplex.vertices(), P.dual_simplex.vertices()};
      for (const auto& pc : pieces) got.insert(pc.vertices());
      EXPECT_EQ(got, want);
    }
}

TEST(Deligne, DenominatorCases) {
  EXPECT_EQ(D_deligne(5), 5);
  EXPECT_EQ(D_deligne(4), 2);
  EXPECT_EQ(D_deligne(1), 1);
  for (long d = 1; d <= 7; ++d)
    for (long n : {1, 2}) EXPECT_EQ(D_deligne(d), denominator_D(build_deligne(d, n).simplex)) << d << " " << n;
}

TEST(Deligne, ClosedFormExamples) {
  EXPECT_EQ(closed_form_W(5, 2, 0), 1);
  EXPECT_EQ(closed_form_W(5, 2, 2), 2);
  EXPECT_EQ(closed_form_W(5, 2, 1), 0);
  EXPECT_EQ(rational_binomial(Q(5, 2), 1), 0);
  EXPECT_EQ(rational_binomial(Q(4), 2), 6);
}

TEST(Deligne, ClosedFormMatchesSweep) {
  for (long d : {3, 4, 5})
    for (long n : {1, 2}) {
      const auto P = build_deligne(d, n);
      const Integer D = D_deligne(d);
      const long kmax = 5 * D.convert_to<long>();
      const auto W = weight_histogram(ConeRegion::full(P.simplex), kmax, D);
      for (long k = 0; k <= kmax; ++k)
        EXPECT_EQ(closed_form_W(d, n, k), W[static_cast<std::size_t>(k)]) << "d=" << d << " n=" << n << " k=" << k;
    }
}

TEST(Deligne, HodgePolygonFiveTwo) {
  auto hp = deligne_hodge_polygon(5, 2, 20);
  // The alternating sum over the three-dimensional cone has one more level, H(11) = 1,
  // beyond the vertex (24, 139/5); the total is the normalized volume 25.
  EXPECT_EQ(hp, PlanarPolygon({{0, 0},
                               {1, 0},
                               {3, Q(4, 5)},
                               {6, Q(16, 5)},
                               {10, Q(36, 5)},
                               {14, 12},
                               {17, Q(81, 5)},
                               {22, Q(121, 5)},
                               {24, Q(139, 5)},
                               {25, 30}}));
  EXPECT_EQ(hp.end_x(), 25);
}

TEST(Deligne, HodgePolygonMatchesGenericEngine) {
  for (long d : {1, 2, 3, 4, 5})
    for (long n : {1, 2}) {
      const long top = (n + 1) * D_deligne(d).convert_to<long>();
      EXPECT_EQ(deligne_hodge_polygon(d, n, top + 2), hodge_polygon(build_deligne(d, n).simplex));
    }
  EXPECT_THROW(deligne_hodge_polygon(5, 2, 10), InputError);
}

TEST(Deligne, CellDecompositionFiveTwo) {
  auto cd = cell_decomposition(5, 2);
  const auto& T = cd.decomposition;
  EXPECT_EQ(T.cells.size(), 5u);
  EXPECT_TRUE(validate_decomposition(T).valid);
  for (const auto& cell : T.canonical_cells()) {
    std::vector<IntVector> cols;
    for (auto i : cell) cols.push_back(T.config.point(i));
    EXPECT_EQ(abs(determinant(RationalMatrix::from_columns(cols))), 5);
  }
  EXPECT_TRUE(is_complete(T));
  auto reg = is_regular(T);
  EXPECT_TRUE(reg.regular);
  EXPECT_TRUE(induced_subdivision(T.config, cd.heights).same_cells(T));
}

TEST(Deligne, CellDecompositionSegmentsAndEvenD) {
  EXPECT_EQ(cell_decomposition(5, 1).decomposition.cells.size(), 1u);
  EXPECT_TRUE(is_complete(cell_decomposition(5, 1).decomposition));
  EXPECT_TRUE(is_complete(cell_decomposition(3, 2).decomposition));
  auto even = cell_decomposition(4, 2);
  EXPECT_TRUE(validate_decomposition(even.decomposition).valid);
  EXPECT_FALSE(is_complete(even.decomposition));
  EXPECT_TRUE(is_regular(even.decomposition).regular);
}

TEST(Deligne, OddCellsFollowCongruenceLaw) {
  for (long d : {3, 5})
    for (long n : {1, 2}) {
      auto T = cell_decomposition(d, n).decomposition;
      for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}) {
        if (d % p == 0) continue;
        auto v = cells_ordinary_diagonal(T, p);
        EXPECT_EQ(v.all_ordinary, p % d == 1) << "d=" << d << " n=" << n << " p=" << p;
        EXPECT_EQ(v.all_ordinary, predict_ordinarity(d, p) == Prediction::ordinary);
        if (!v.all_ordinary) EXPECT_TRUE(v.witness.has_value());
      }
    }
}

TEST(Deligne, DualCellsAreAlwaysOrdinary) {
  for (long d : {2, 3, 4, 5})
    for (long n : {1, 2}) {
      auto T = dual_cell_decomposition(d, n).decomposition;
      EXPECT_TRUE(validate_decomposition(T).valid);
      EXPECT_EQ(T.cells.size(), static_cast<std::size_t>(n == 1 ? d : d * d));
      for (std::int64_t p : {2, 3, 5, 7, 11, 13})
        if (d % p != 0) EXPECT_TRUE(cells_ordinary_diagonal(T, p).all_ordinary) << d << " " << n << " " << p;
    }
}

TEST(Deligne, Predictions) {
  EXPECT_EQ(predict_ordinarity(5, 11), Prediction::ordinary);
  EXPECT_EQ(predict_ordinarity(5, 7), Prediction::non_ordinary);
  EXPECT_EQ(predict_ordinarity(4, 5), Prediction::conjectural);
  EXPECT_EQ(predict_ordinarity(4, 7), Prediction::conjectural);
  EXPECT_EQ(predict_ordinarity(6, 5), Prediction::non_ordinary);
  EXPECT_EQ(predict_ordinarity(1, 3), Prediction::ordinary);
  EXPECT_THROW(predict_ordinarity(5, 5), InputError);
  EXPECT_THROW(predict_ordinarity(5, 4), InputError);
}

TEST(Deligne, SegmentBruteForce) {
  LPolynomialOptions opt;
  for (std::int64_t p : {2, 5, 7}) {
    auto f = deligne_polynomial(3, 1, p);
    auto v = is_ordinary(f, opt);
    EXPECT_EQ(v.ordinary, p == 7) << p;
    EXPECT_EQ(v.ordinary, cells_ordinary_diagonal(cell_decomposition(3, 1).decomposition, p).all_ordinary);
  }
}

}  // namespace
}  // namespace hodge
