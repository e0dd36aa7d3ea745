#include "hodge/decomposition.hpp"

#include <gtest/gtest.h>

#include <random>

namespace hodge {
namespace {

IntVector V(std::initializer_list<long> xs) { return make_int_vector(xs); }
Rational Q(long n, long d = 1) { return Rational(n, d); }

PointConfiguration config_of(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<IntVector> v;
  for (auto p : pts) v.push_back(make_int_vector(p));
  return PointConfiguration(v);
}

std::size_t idx(const PointConfiguration& c, std::initializer_list<long> p) {
  auto i = c.index_of(make_int_vector(p));
  EXPECT_TRUE(i.has_value());
  return i.value_or(0);
}

/// Sorted vertex sets of the cells, written as point lists.
std::set<std::set<IntVector>> cell_points(const Decomposition& T) {
  std::set<std::set<IntVector>> out;
  for (const auto& c : T.canonical_cells()) {
    std::set<IntVector> s;
    for (auto i : c) s.insert(T.config.point(i));
    out.insert(s);
  }
  return out;
}

std::set<IntVector> pts(std::initializer_list<std::initializer_list<long>> xs) {
  std::set<IntVector> s;
  for (auto x : xs) s.insert(make_int_vector(x));
  return s;
}

Decomposition pinwheel() {
  auto c = config_of({{0, 0}, {4, 0}, {0, 4}, {1, 1}, {2, 1}, {1, 2}});
  const std::size_t A = 0, B = 1, C = 2, a = 3, b = 4, cc = 5;
  return Decomposition{c, {{a, b, cc}, {A, B, b}, {A, b, a}, {B, C, cc}, {B, cc, b}, {C, A, a}, {C, a, cc}}};
}

PointConfiguration pentagon(bool with_centre) {
  std::vector<IntVector> v{V({0, 0}), V({2, 0}), V({3, 2}), V({1, 3}), V({-1, 2})};
  if (with_centre) v.push_back(V({1, 1}));
  return PointConfiguration(v);
}

TEST(PointConfiguration, RejectsDuplicatesAndTracksFrame) {
  EXPECT_THROW(config_of({{0, 0}, {0, 0}, {1, 0}}), InputError);
  auto c = config_of({{1, 0, 0}, {1, 2, 0}, {1, 0, 2}});
  EXPECT_EQ(c.dimension(), 2u);
  EXPECT_EQ(c.vertex_indices().size(), 3u);
  EXPECT_THROW(c.insert(V({0, 0, 0})), InputError);
  EXPECT_EQ(c.insert(V({1, 1, 1})), 3u);
}

TEST(Validate, SquareDiagonalIsValid) {
  auto c = config_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto rep = validate_decomposition(Decomposition{c, {{0, 1, 2}, {0, 2, 3}}});
  EXPECT_TRUE(rep.valid);
  EXPECT_TRUE(rep.violations.empty());
}

TEST(Validate, OverlappingTrianglesAreReported) {
  auto c = config_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto rep = validate_decomposition(Decomposition{c, {{0, 1, 2}, {0, 1, 3}}});
  EXPECT_FALSE(rep.valid);
  bool pair_listed = false;
  for (const auto& v : rep.violations) pair_listed = pair_listed || v.find("cells 0 and 1") != std::string::npos;
  EXPECT_TRUE(pair_listed);
}

TEST(Validate, FlatCellIsReported) {
  auto c = config_of({{0, 0}, {1, 0}, {2, 0}, {0, 1}});
  auto rep = validate_decomposition(Decomposition{c, {{0, 1, 2}, {0, 2, 3}}});
  EXPECT_FALSE(rep.valid);
}

TEST(Validate, MissingCellFailsVolume) {
  auto c = config_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto rep = validate_decomposition(Decomposition{c, {{0, 1, 2}}});
  EXPECT_FALSE(rep.valid);
}

TEST(Validate, PinwheelIsValid) {
  auto T = pinwheel();
  EXPECT_TRUE(validate_decomposition(T).valid);
  Rational total = 0;
  for (const auto& cell : T.cells) total += normalized_volume_of(T.config.projected(cell));
  EXPECT_EQ(total, 16);  // twice the area 8
}

TEST(Validate, LowerDimensionalConfiguration) {
  auto c = config_of({{1, 0, 0}, {1, 2, 0}, {1, 0, 2}, {1, 1, 0}, {1, 1, 1}, {1, 0, 1}});
  Decomposition T{c, {{0, 3, 5}, {3, 1, 4}, {5, 4, 2}, {3, 4, 5}}};
  EXPECT_TRUE(validate_decomposition(T).valid);
}

TEST(Facial, Examples) {
  std::vector<IntVector> simplex{V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})};
  auto S = LatticePolytope::from_points(simplex);
  auto pieces = facial_decomposition(S);
  ASSERT_EQ(pieces.size(), 1u);
  EXPECT_EQ(normalized_volume(pieces.front()), 1);

  auto ex = LatticePolytope::from_points({V({-1, 0, 0}), V({1, 2, 0}), V({1, 0, 2})});
  EXPECT_EQ(facial_decomposition(ex).size(), 1u);

  // Origin strictly inside: one piece per facet, volumes add up.
  auto sq = LatticePolytope::from_points({V({-1, -1}), V({1, -1}), V({1, 1}), V({-1, 1})});
  auto parts = facial_decomposition(sq);
  EXPECT_EQ(parts.size(), 4u);
  Integer vol = 0;
  for (const auto& p : parts) vol += normalized_volume(p);
  EXPECT_EQ(vol, normalized_volume(sq));
}

TEST(Boundary, TwoDimensionalCone) {
  auto P = LatticePolytope::from_points({V({4, 1}), V({1, 4})});
  auto B = boundary_decomposition(P);
  ASSERT_EQ(B.pieces().size(), 4u);
  std::vector<std::size_t> dims;
  for (const auto& pc : B.pieces()) dims.push_back(pc.dimension);
  EXPECT_EQ(dims, (std::vector<std::size_t>{0, 1, 1, 2}));
  auto interior = B.classify(V({1, 1}));
  ASSERT_TRUE(interior.has_value());
  EXPECT_EQ(B.pieces()[*interior].dimension, 2u);
  auto origin = B.classify(V({0, 0}));
  ASSERT_TRUE(origin.has_value());
  EXPECT_EQ(B.pieces()[*origin].dimension, 0u);
  auto ray = B.classify(V({8, 2}));
  ASSERT_TRUE(ray.has_value());
  EXPECT_EQ(B.pieces()[*ray].dimension, 1u);
  EXPECT_FALSE(B.classify(V({1, 0})).has_value());
  EXPECT_FALSE(B.classify(V({-1, -1})).has_value());
}

TEST(Boundary, PiecesPartitionLatticeCounts) {
  std::vector<LatticePolytope> cases{
      LatticePolytope::from_points({V({4, 1}), V({1, 4})}),
      LatticePolytope::from_points({V({-1, 0, 0}), V({1, 2, 0}), V({1, 0, 2})}),
      LatticePolytope::from_points({V({2, 0, 0}), V({0, 3, 0}), V({0, 0, 2}), V({1, 1, 1})}),
      LatticePolytope::from_points({V({-1, -1}), V({1, -1}), V({1, 1}), V({-1, 1})}),
  };
  for (const auto& P : cases) {
    const Integer D = denominator_D(P);
    const long kmax = 3 * D.convert_to<long>();
    auto B = boundary_decomposition(P);
    auto whole = weight_histogram(ConeRegion::full(P), kmax, D);
    std::vector<Integer> sum(whole.size(), Integer(0));
    for (std::size_t i = 0; i < B.pieces().size(); ++i) {
      auto h = weight_histogram(B.region(i), kmax, D);
      for (std::size_t k = 0; k < h.size(); ++k) sum[k] += h[k];
    }
    EXPECT_EQ(sum, whole);
    // classify agrees with region membership on every lattice point swept.
    auto [lo, hi] = scaled_bounding_box(P, Rational(2));
    for_each_lattice_point(lo, hi, [&](const IntVector& x) {
      auto c = B.classify(x);
      std::size_t hits = 0;
      for (std::size_t i = 0; i < B.pieces().size(); ++i) hits += B.region(i).contains(x) ? 1 : 0;
      EXPECT_EQ(hits, c.has_value() ? 1u : 0u);
      if (c) EXPECT_TRUE(B.region(*c).contains(x));
    });
  }
}

TEST(Star, PentagonCounts) {
  auto cv = pentagon(false);
  auto at_vertex = star_decomposition(cv, 0);
  EXPECT_EQ(at_vertex.decomposition.cells.size(), 3u);
  EXPECT_TRUE(validate_decomposition(at_vertex.decomposition).valid);

  auto ci = pentagon(true);
  auto at_centre = star_decomposition(ci, 5);
  EXPECT_EQ(at_centre.decomposition.cells.size(), 5u);
  EXPECT_TRUE(validate_decomposition(at_centre.decomposition).valid);
  EXPECT_EQ(at_centre.heights[5], 1);
  EXPECT_EQ(at_centre.heights[0], 0);
}

TEST(Star, SquareAndSegment) {
  auto sq = config_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto s = star_decomposition(sq, 0);
  EXPECT_EQ(cell_points(s.decomposition), (std::set<std::set<IntVector>>{pts({{0, 0}, {1, 0}, {1, 1}}),
                                                                         pts({{0, 0}, {1, 1}, {0, 1}})}));
  auto seg = config_of({{0, 0}, {3, 0}});
  EXPECT_EQ(star_decomposition(seg, 0).decomposition.cells.size(), 1u);
  EXPECT_THROW(star_decomposition(seg, 7), InputError);
}

TEST(Star, HeightsRoundTrip) {
  for (bool centre : {false, true}) {
    auto c = pentagon(centre);
    for (std::size_t v = 0; v < c.size(); ++v) {
      auto s = star_decomposition(c, v);
      EXPECT_TRUE(induced_subdivision(c, s.heights).same_cells(s.decomposition)) << "centre " << v;
    }
  }
}

TEST(Star, OneCellPerAvoidingFacet) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<IntVector> s;
    while (s.size() < 6) s.insert(V({coord(rng), coord(rng)}));
    std::vector<IntVector> v(s.begin(), s.end());
    std::vector<RationalVector> rv;
    for (const auto& p : v) rv.push_back(to_rational(p));
    if (affine_dimension(rv) < 2) continue;
    PointConfiguration c(v);
    const auto facets = full_dimensional_facets(rv);
    for (auto vi : c.vertex_indices()) {
      auto st = star_decomposition(c, vi);
      std::size_t avoiding = 0;
      for (const auto& f : facets)
        avoiding += std::find(f.incident.begin(), f.incident.end(), vi) == f.incident.end() ? 1 : 0;
      EXPECT_EQ(st.decomposition.cells.size(), avoiding);
      EXPECT_TRUE(validate_decomposition(st.decomposition).valid);
      EXPECT_TRUE(induced_subdivision(c, st.heights).same_cells(st.decomposition));
    }
  }
}

TEST(Hyperplane, TriangleCut) {
  auto c = config_of({{0, 0}, {4, 0}, {0, 4}});
  auto r = hyperplane_split(c, level_hyperplane({Q(1), Q(0)}, 1));
  EXPECT_EQ(cell_points(r.decomposition),
            (std::set<std::set<IntVector>>{pts({{0, 0}, {1, 0}, {1, 3}, {0, 4}}), pts({{1, 0}, {4, 0}, {1, 3}})}));
  EXPECT_TRUE(validate_decomposition(r.decomposition).valid);
  EXPECT_TRUE(induced_subdivision(r.decomposition.config, r.heights).same_cells(r.decomposition));
  // Heights peak on the cut.
  EXPECT_EQ(r.heights[idx(r.decomposition.config, {1, 3})], 1);
  EXPECT_EQ(r.heights[idx(r.decomposition.config, {4, 0})], 0);
}

TEST(Hyperplane, Errors) {
  auto sq = config_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_THROW(hyperplane_split(sq, level_hyperplane({Q(1), Q(0)}, Q(1, 2))), InputError);
  EXPECT_THROW(hyperplane_split(sq, level_hyperplane({Q(1), Q(0)}, 1)), InputError);
  EXPECT_THROW(hyperplane_split(sq, level_hyperplane({Q(1), Q(0)}, 5)), InputError);
}

TEST(Hyperplane, GridGivesSixteenUnitTriangles) {
  auto c = config_of({{0, 0}, {4, 0}, {0, 4}});
  std::vector<AffineFunctional> cuts;
  for (long j = 1; j <= 3; ++j) {
    cuts.push_back(level_hyperplane({Q(1), Q(0)}, j));
    cuts.push_back(level_hyperplane({Q(0), Q(1)}, j));
    cuts.push_back(level_hyperplane({Q(1), Q(1)}, j));
  }
  auto r = parallel_hyperplane_decomposition(c, cuts);
  EXPECT_EQ(r.decomposition.cells.size(), 16u);
  EXPECT_EQ(r.decomposition.config.size(), 15u);
  EXPECT_TRUE(validate_decomposition(r.decomposition).valid);
  EXPECT_TRUE(is_complete(r.decomposition));
  for (const auto& cell : r.decomposition.canonical_cells())
    EXPECT_EQ(normalized_volume_of(r.decomposition.config.projected(cell)), 1);
  EXPECT_TRUE(induced_subdivision(r.decomposition.config, r.heights).same_cells(r.decomposition));
}

TEST(Hyperplane, AxisGridLeavesSquares) {
  auto c = config_of({{0, 0}, {4, 0}, {0, 4}});
  std::vector<AffineFunctional> cuts;
  for (long j = 1; j <= 3; ++j) {
    cuts.push_back(level_hyperplane({Q(1), Q(0)}, j));
    cuts.push_back(level_hyperplane({Q(0), Q(1)}, j));
  }
  auto r = parallel_hyperplane_decomposition(c, cuts);
  EXPECT_EQ(r.decomposition.cells.size(), 10u);  // 6 unit squares and 4 corner triangles
  EXPECT_TRUE(validate_decomposition(r.decomposition).valid);
  EXPECT_TRUE(is_complete(r.decomposition));  // unit squares have no extra lattice points
  EXPECT_TRUE(induced_subdivision(r.decomposition.config, r.heights).same_cells(r.decomposition));
}

TEST(Collapsing, FigureEight) {
  auto c = config_of({{0, 2}, {3, 4}, {4, 4}, {4, 0}, {3, 0}, {2, 1}, {2, 3}});
  auto r = collapsing_decomposition(c, 0);
  EXPECT_EQ(r.decomposition.cells.size(), 4u);
  EXPECT_EQ(r.partition.size(), 4u);
  EXPECT_TRUE(validate_decomposition(r.decomposition).valid);
  EXPECT_EQ(cell_points(r.decomposition),
            (std::set<std::set<IntVector>>{pts({{3, 4}, {4, 4}, {4, 0}, {3, 0}, {2, 1}, {2, 3}}),
                                           pts({{0, 2}, {2, 3}, {3, 4}}), pts({{0, 2}, {2, 1}, {2, 3}}),
                                           pts({{0, 2}, {3, 0}, {2, 1}})}));
  EXPECT_TRUE(induced_subdivision(c, r.heights).same_cells(r.decomposition));
}

TEST(Collapsing, SquareAndDegenerate) {
  auto sq = config_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto r = collapsing_decomposition(sq, 0);
  EXPECT_EQ(r.decomposition.cells.size(), 2u);
  EXPECT_TRUE(validate_decomposition(r.decomposition).valid);
  auto tri = config_of({{0, 0}, {1, 0}, {0, 1}});
  EXPECT_THROW(collapsing_decomposition(tri, 0), InputError);
  auto withmid = config_of({{0, 0}, {2, 0}, {0, 2}, {1, 1}});
  EXPECT_THROW(collapsing_decomposition(withmid, 3), InputError);  // not a vertex
}

TEST(Induced, Examples) {
  auto sq = config_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  auto flat = induced_subdivision(sq, {Q(0), Q(0), Q(0), Q(0)});
  ASSERT_EQ(flat.cells.size(), 1u);
  EXPECT_EQ(flat.cells.front().size(), 4u);
  auto diag = induced_subdivision(sq, {Q(1), Q(0), Q(1), Q(0)});
  EXPECT_EQ(cell_points(diag), (std::set<std::set<IntVector>>{pts({{0, 0}, {1, 0}, {1, 1}}),
                                                              pts({{0, 0}, {1, 1}, {0, 1}})}));
  // A point lifted below the hull is absent.
  auto c = config_of({{0, 0}, {2, 0}, {0, 2}, {1, 0}});
  auto T = induced_subdivision(c, {Q(0), Q(0), Q(0), Q(-1)});
  ASSERT_EQ(T.cells.size(), 1u);
  EXPECT_EQ(T.cells.front(), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Regular, StarAndSingleCell) {
  auto c = pentagon(true);
  auto s = star_decomposition(c, 5);
  auto r = is_regular(s.decomposition);
  EXPECT_TRUE(r.regular);
  EXPECT_GT(r.slack, 0);
  auto single = is_regular(Decomposition{c, {c.all_indices()}});
  EXPECT_TRUE(single.regular);
}

TEST(Regular, PinwheelIsNotRegular) {
  auto r = is_regular(pinwheel());
  EXPECT_FALSE(r.regular);
  EXPECT_EQ(r.slack, 0);
  EXPECT_FALSE(r.certificate.empty());
}

TEST(Regular, RefusesInvalidDecomposition) {
  auto c = config_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_THROW(is_regular(Decomposition{c, {{0, 1, 2}}}), InputError);
}

TEST(Regular, InducedSubdivisionsRoundTrip) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coord(0, 3), height(-3, 3);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::set<IntVector> s;
    while (s.size() < 7) s.insert(V({coord(rng), coord(rng)}));
    std::vector<IntVector> v(s.begin(), s.end());
    std::vector<RationalVector> rv;
    for (const auto& p : v) rv.push_back(to_rational(p));
    if (affine_dimension(rv) < 2) continue;
    PointConfiguration c(v);
    HeightFunction psi;
    for (std::size_t i = 0; i < c.size(); ++i) psi.push_back(Rational(height(rng)));
    auto T = induced_subdivision(c, psi);
    ASSERT_TRUE(validate_decomposition(T).valid);
    auto r = is_regular(T);
    EXPECT_TRUE(r.regular);
    ++checked;
  }
  EXPECT_GE(checked, 190);
}

TEST(Regular, RoundTripInHigherAmbientSpace) {
  // Triangle on the plane x0 = 1 in R^3.
  auto c = config_of({{1, 0, 0}, {1, 3, 0}, {1, 0, 3}, {1, 1, 1}, {1, 1, 0}, {1, 0, 1}});
  auto T = induced_subdivision(c, {Q(0), Q(0), Q(0), Q(2), Q(1), Q(1)});
  EXPECT_TRUE(validate_decomposition(T).valid);
  EXPECT_TRUE(is_regular(T).regular);
}

TEST(Indecomposable, Examples) {
  EXPECT_TRUE(is_indecomposable(std::vector<IntVector>{V({0, 0}), V({1, 0}), V({0, 1})}));
  EXPECT_TRUE(is_indecomposable(std::vector<IntVector>{V({0, 0, 0}), V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})}));
  EXPECT_FALSE(is_indecomposable(std::vector<IntVector>{V({0, 0}), V({0, 2})}));
  EXPECT_FALSE(is_indecomposable(std::vector<IntVector>{V({0, 0}), V({2, 0}), V({0, 2})}));
  // Empty but not unimodular: still indecomposable.
  EXPECT_TRUE(is_indecomposable(std::vector<IntVector>{V({0, 0, 0}), V({1, 0, 0}), V({0, 1, 0}), V({1, 1, 2})}));
  EXPECT_EQ(lattice_points_of_hull({V({1, 0, 0}), V({1, 2, 0}), V({1, 0, 2})}).size(), 6u);
}

TEST(Maximizing, ConstantPhiGivesWeight) {
  auto c = config_of({{-1, 0, 0}, {1, 2, 0}, {1, 0, 2}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  auto Delta = LatticePolytope::from_points(c.points());
  HeightFunction one(c.size(), Rational(1));
  auto [lo, hi] = scaled_bounding_box(Delta, Rational(3));
  for_each_lattice_point(lo, hi, [&](const IntVector& x) {
    auto w = weight(Delta, x);
    const Rational expect = w.is_finite() ? w.value() : Rational(0);
    EXPECT_EQ(maximizing_value(one, c, to_rational(x), Extremum::sup), expect);
  });
}

PointConfiguration twisted_config() { return config_of({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {0, 1, 1}}); }
HeightFunction twisted_phi() { return {Q(1), Q(0), Q(0), Q(1)}; }

TEST(Maximizing, NonHomogeneousExample) {
  auto c = twisted_config();
  auto phi = twisted_phi();
  EXPECT_EQ(maximizing_value(phi, c, to_rational(V({0, 2, 2})), Extremum::sup), 2);
  EXPECT_EQ(maximizing_value(phi, c, to_rational(V({0, 2, 2})), Extremum::inf), 0);
  EXPECT_EQ(maximizing_value(phi, c, to_rational(V({0, 0, -1})), Extremum::sup), 0);
}

TEST(Homogeneous, Examples) {
  auto c = twisted_config();
  auto h = is_homogeneous(twisted_phi(), c, Rational(2));
  EXPECT_FALSE(h.homogeneous);
  ASSERT_TRUE(h.witness.has_value());
  // Lowest weight failure; (0,2,2) is the same failure doubled.
  EXPECT_EQ(*h.witness, V({0, 1, 1}));
  EXPECT_EQ(h.sup, 1);
  EXPECT_EQ(h.inf, 0);

  HeightFunction one(c.size(), Rational(1));
  EXPECT_TRUE(is_homogeneous(one, c, Rational(3)).homogeneous);

  auto basis = config_of({{2, 0, 0}, {0, 3, 0}, {1, 1, 1}});
  EXPECT_TRUE(is_homogeneous({Q(5), Q(-2), Q(7, 3)}, basis, Rational(3)).homogeneous);
}

TEST(Maximizing, Superadditive) {
  std::mt19937 rng(7);
  auto c = config_of({{-1, 0, 0}, {1, 2, 0}, {1, 0, 2}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  auto Delta = LatticePolytope::from_points(c.points());
  std::vector<IntVector> cone_pts;
  auto [lo, hi] = scaled_bounding_box(Delta, Rational(2));
  for_each_lattice_point(lo, hi, [&](const IntVector& x) {
    if (weight(Delta, x).is_finite()) cone_pts.push_back(x);
  });
  std::uniform_int_distribution<int> hv(-4, 4);
  std::uniform_int_distribution<std::size_t> pick(0, cone_pts.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    HeightFunction phi;
    for (std::size_t i = 0; i < c.size(); ++i) phi.push_back(Rational(hv(rng), 2));
    const auto& r1 = cone_pts[pick(rng)];
    const auto& r2 = cone_pts[pick(rng)];
    IntVector s(r1.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = r1[i] + r2[i];
    const auto m = [&](const IntVector& r) { return maximizing_value(phi, c, to_rational(r), Extremum::sup); };
    EXPECT_GE(m(s), m(r1) + m(r2));
  }
}

TEST(Maximizing, OptimumSupportedOnContainingCell) {
  // Regular triangulations of a lifted triangle on x0 = 1; for r in the cone over a cell,
  // restricting the LP to that cell's points loses nothing.
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> height(-3, 3), coef(0, 3);
  auto c = config_of({{1, 0, 0}, {1, 3, 0}, {1, 0, 3}, {1, 1, 1}, {1, 1, 0}, {1, 0, 1}, {1, 2, 1}, {1, 1, 2}});
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    HeightFunction psi;
    for (std::size_t i = 0; i < c.size(); ++i) psi.push_back(Rational(height(rng)));
    auto T = induced_subdivision(c, psi);
    auto reg = is_regular(T);
    ASSERT_TRUE(reg.regular);
    PiecewiseLinearLift lift(T, reg.heights);
    for (const auto& cell : T.cells) {
      PointConfiguration sub([&] {
        std::vector<IntVector> v;
        for (auto i : cell) v.push_back(c.point(i));
        return v;
      }());
      HeightFunction sub_phi;
      for (auto i : cell) sub_phi.push_back(reg.heights[i]);
      for (int s = 0; s < 5; ++s) {
        IntVector r(3, Integer(0));
        for (auto i : cell) {
          const int u = coef(rng);
          for (std::size_t j = 0; j < 3; ++j) r[j] += u * c.point(i)[j];
        }
        if (r[0] == 0) continue;
        const auto rr = to_rational(r);
        EXPECT_EQ(maximizing_value(reg.heights, c, rr, Extremum::sup),
                  maximizing_value(sub_phi, sub, rr, Extremum::sup));
        // The value is the homogeneous extension of the concave lift.
        RationalVector unit = rr;
        for (auto& x : unit) x /= rr[0];
        EXPECT_EQ(maximizing_value(reg.heights, c, rr, Extremum::sup), rr[0] * lift(unit));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(DegreePolygon, ExampleConstantPhi) {
  auto c = config_of({{-1, 0, 0}, {1, 2, 0}, {1, 0, 2}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  auto Delta = LatticePolytope::from_points(c.points());
  HeightFunction one(c.size(), Rational(1));
  auto Q3 = degree_polygon(ConeRegion::full(Delta), one, c, 3, 1);
  bool has = false;
  for (const auto& v : Q3.vertices()) has = has || (v.x == 7 && v.y == 12);
  EXPECT_TRUE(has);

  // With phi = 1 the maximizing value is the weight, so Q = (p - 1) times the chain polygon height.
  auto wide = config_of({{-1, 0, 0}, {1, 5, 0}, {1, 0, 5}});
  auto wideDelta = LatticePolytope::from_points(wide.points());
  ASSERT_EQ(denominator_D(wideDelta), 5);
  for (const auto& [cfg, P] : {std::pair{c, Delta}, std::pair{wide, wideDelta}}) {
    HeightFunction ones(cfg.size(), Rational(1));
    for (std::int64_t p : {2, 3, 5}) {
      auto deg = degree_polygon(ConeRegion::full(P), ones, cfg, p, 6);
      auto chain = chain_polygon(ConeRegion::full(P), 6);
      ASSERT_EQ(deg.vertices().size(), chain.vertices().size());
      for (std::size_t i = 0; i < deg.vertices().size(); ++i) {
        EXPECT_EQ(deg.vertices()[i].x, chain.vertices()[i].x);
        EXPECT_EQ(deg.vertices()[i].y, Rational(p - 1) * chain.vertices()[i].y);
      }
    }
  }
}

TEST(DegreePolygon, OriginRegion) {
  auto c = config_of({{-1, 0, 0}, {1, 2, 0}, {1, 0, 2}});
  auto Delta = LatticePolytope::from_points(c.points());
  auto poly = degree_polygon(ConeRegion::origin(Delta), HeightFunction(3, Rational(1)), c, 5, 4);
  EXPECT_EQ(poly, PlanarPolygon({{0, 0}, {1, 0}}));
}

TEST(ExtendToCone, Properties) {
  auto Delta = LatticePolytope::from_points({V({-1, 0, 0}), V({1, 2, 0}), V({1, 0, 2})});
  ConeFunction one = [](const RationalVector&) { return Rational(1); };
  ConeFunction lin = [](const RationalVector& x) { return x[1] + 2 * x[2]; };
  auto W = extend_to_cone(Delta, one);
  auto L = extend_to_cone(Delta, lin);
  EXPECT_EQ(W(RationalVector{0, 0, 0}), 0);
  auto [lo, hi] = scaled_bounding_box(Delta, Rational(2));
  for_each_lattice_point(lo, hi, [&](const IntVector& x) {
    const auto r = to_rational(x);
    const auto w = weight(Delta, r);
    if (w.is_infinite()) return;
    EXPECT_EQ(W(r), w.value());
    RationalVector r2 = r;
    for (auto& c : r2) c *= 2;
    EXPECT_EQ(L(r2), 2 * L(r));
    if (w.value() == 1) EXPECT_EQ(L(r), lin(r));
  });
}

TEST(PiecewiseLinearLift, RejectsNonAffineHeights) {
  auto sq = config_of({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  Decomposition one_cell{sq, {{0, 1, 2, 3}}};
  EXPECT_THROW(PiecewiseLinearLift(one_cell, {Q(0), Q(0), Q(1), Q(0)}), InputError);
  PiecewiseLinearLift ok(one_cell, {Q(0), Q(1), Q(1), Q(0)});
  EXPECT_EQ(ok(RationalVector{Q(1, 2), Q(1, 3)}), Q(1, 2));
}

}  // namespace
}  // namespace hodge
