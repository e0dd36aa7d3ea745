#pragma once

// Exact geometry of finite point sets: affine frames, hull vertices, facets
// and pulling triangulations. Everything is brute force and meant for small
// configurations (tens of points, dimension <= 6).

#include "hodge/lp.hpp"

#include <map>
#include <set>

namespace hodge {

/**
 * Coordinate projection that is injective on the affine hull of a point set.
 * Projected coordinates keep convexity, incidences and volume ratios.
 */
class AffineFrame {
 public:
  AffineFrame() = default;

  explicit AffineFrame(const std::vector<RationalVector>& points) {
    require(!points.empty(), "AffineFrame: no points");
    ambient_ = points.front().size();
    origin_ = points.front();
    if (points.size() == 1) return;
    RationalMatrix diffs(points.size() - 1, ambient_);
    for (std::size_t i = 1; i < points.size(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j) diffs(i - 1, j) = points[i][j] - origin_[j];
    coords_ = row_reduce(diffs);
    // Rows of the reduced matrix span the direction space; keep them for membership tests.
    for (std::size_t r = 0; r < coords_.size(); ++r) directions_.push_back(diffs.row(r));
  }

  std::size_t dimension() const { return coords_.size(); }
  std::size_t ambient_dimension() const { return ambient_; }
  const std::vector<std::size_t>& coordinates() const { return coords_; }

  RationalVector project(const RationalVector& x) const {
    RationalVector y(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) y[i] = x[coords_[i]];
    return y;
  }

  /// Whether x lies in the affine hull.
  bool contains(const RationalVector& x) const {
    // Reconstruct from the projected coordinates and compare.
    RationalVector rebuilt = origin_;
    for (std::size_t r = 0; r < coords_.size(); ++r) {
      Rational t = x[coords_[r]] - origin_[coords_[r]];
      for (std::size_t j = 0; j < ambient_; ++j) rebuilt[j] += t * directions_[r][j];
    }
    return rebuilt == x;
  }

 private:
  std::size_t ambient_ = 0;
  RationalVector origin_;
  std::vector<std::size_t> coords_;
  std::vector<RationalVector> directions_;  // reduced rows: unit in coords_[r], 0 in other pivots
};

inline std::size_t affine_dimension(const std::vector<RationalVector>& points) {
  return AffineFrame(points).dimension();
}

/// Whether x is a convex combination of `points` (LP feasibility).
inline bool in_convex_hull(const std::vector<RationalVector>& points, const RationalVector& x) {
  if (points.empty()) return false;
  const std::size_t m = x.size();
  LpBuilder lp(points.size());
  for (std::size_t i = 0; i < m; ++i) {
    RationalVector row(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) row[j] = points[j][i];
    lp.add(row, LpBuilder::Relation::eq, x[i]);
  }
  lp.add(RationalVector(points.size(), Rational(1)), LpBuilder::Relation::eq, 1);
  return lp.solve().optimal();
}

/// Indices of the points that are vertices of their convex hull (first copy of duplicates).
inline std::vector<std::size_t> hull_vertex_indices(const std::vector<RationalVector>& points) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool duplicate = false;
    for (std::size_t j = 0; j < i && !duplicate; ++j) duplicate = points[j] == points[i];
    if (duplicate) continue;
    std::vector<RationalVector> others;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (points[j] != points[i]) others.push_back(points[j]);
    if (!in_convex_hull(others, points[i])) out.push_back(i);
  }
  return out;
}

/// A facet of a full-dimensional point set in R^k:  normal . x <= offset, with equality on `incident`.
struct Facet {
  RationalVector normal;
  Rational offset;
  std::vector<std::size_t> incident;  // indices into the point list, sorted
};

/**
 * Facets of conv(points) for points spanning R^k (k = point length).
 * Brute force over k-subsets of hull vertices, validated by one-sidedness.
 */
inline std::vector<Facet> full_dimensional_facets(const std::vector<RationalVector>& points) {
  require(!points.empty(), "facets: no points");
  const std::size_t k = points.front().size();
  require(affine_dimension(points) == k, "facets: point set is not full-dimensional");
  std::vector<Facet> out;
  if (k == 0) return out;
  auto verts = hull_vertex_indices(points);
  std::set<std::vector<std::size_t>> seen;
  for_each_subset(verts.size(), k, [&](const std::vector<std::size_t>& sub) {
    const auto& p0 = points[verts[sub[0]]];
    RationalMatrix diffs(k - 1, k);
    for (std::size_t r = 1; r < k; ++r)
      for (std::size_t j = 0; j < k; ++j) diffs(r - 1, j) = points[verts[sub[r]]][j] - p0[j];
    auto ns = null_space(diffs);
    if (ns.size() != 1) return;
    RationalVector a = ns.front();
    Rational b = dot(a, p0);
    bool has_pos = false, has_neg = false;
    for (const auto& p : points) {
      Rational v = dot(a, p) - b;
      if (v > 0) has_pos = true;
      if (v < 0) has_neg = true;
    }
    if (has_pos && has_neg) return;
    if (has_pos) {
      for (auto& c : a) c = -c;
      b = -b;
    }
    std::vector<std::size_t> inc;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (dot(a, points[i]) == b) inc.push_back(i);
    if (!seen.insert(inc).second) return;
    // Scale the normal to a primitive integer vector for a canonical form.
    Integer l = 1;
    for (const auto& c : a) l = lcm_of(l, denominator(c));
    Integer g = 0;
    for (const auto& c : a) g = gcd_of(g, numerator(Rational(c * l)));
    Rational s = Rational(l) / Rational(g);
    for (auto& c : a) c *= s;
    b *= s;
    out.push_back(Facet{std::move(a), std::move(b), std::move(inc)});
  });
  return out;
}

/**
 * Pulling triangulation of conv(points[subset]): simplices as index lists of
 * length dim + 1, where dim is the affine dimension of the subset.
 */
inline std::vector<std::vector<std::size_t>> pulling_triangulation(const std::vector<RationalVector>& points,
                                                                   std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  std::vector<RationalVector> pts;
  for (auto i : subset) pts.push_back(points[i]);
  AffineFrame frame(pts);
  const std::size_t dim = frame.dimension();
  std::vector<RationalVector> proj;
  for (const auto& p : pts) proj.push_back(frame.project(p));
  auto verts = hull_vertex_indices(proj);
  if (dim == 0) return {{subset[verts.front()]}};
  const std::size_t apex = verts.front();
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : full_dimensional_facets(proj)) {
    if (std::find(f.incident.begin(), f.incident.end(), apex) != f.incident.end()) continue;
    std::vector<std::size_t> face;
    for (auto i : f.incident) face.push_back(subset[i]);
    for (auto simplex : pulling_triangulation(points, face)) {
      simplex.push_back(subset[apex]);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

/// |det| of the edge vectors of a simplex given in R^k by k + 1 points.
inline Rational simplex_normalized_volume(const std::vector<RationalVector>& simplex) {
  const std::size_t k = simplex.size() - 1;
  RationalMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = simplex[i + 1][j] - simplex[0][j];
  return abs(determinant(m));
}

/// k! Vol of a full-dimensional point set in R^k.
inline Rational normalized_volume_of(const std::vector<RationalVector>& points) {
  std::vector<std::size_t> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  Rational total = 0;
  for (const auto& s : pulling_triangulation(points, all)) {
    std::vector<RationalVector> simplex;
    for (auto i : s) simplex.push_back(points[i]);
    total += simplex_normalized_volume(simplex);
  }
  return total;
}

}  // namespace hodge
