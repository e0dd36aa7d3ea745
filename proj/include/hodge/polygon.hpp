#pragma once

// Planar polygons on [0, N]: Newton, Hodge, chain and degree polygons.

#include "hodge/core.hpp"

#include <utility>

namespace hodge {

struct PlanarPoint {
  Rational x;
  Rational y;
  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

struct ExtPlanarPoint {
  Rational x;
  ExtRational y;
};

namespace detail {
// > 0 when o -> a -> b turns left (counter-clockwise).
inline Rational cross(const PlanarPoint& o, const PlanarPoint& a, const PlanarPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}
}  // namespace detail

/**
 * Vertices of the highest convex polygonal line lying on or below every
 * finite input point. Input x-coordinates must strictly increase; points at
 * infinite height are skipped. Points in the interior of an edge are dropped.
 */
inline std::vector<PlanarPoint> lower_convex_hull(const std::vector<ExtPlanarPoint>& points) {
  require(!points.empty(), "lower_convex_hull: empty input");
  for (std::size_t i = 1; i < points.size(); ++i)
    require(points[i - 1].x < points[i].x, "lower_convex_hull: x-coordinates must strictly increase");
  std::vector<PlanarPoint> hull;
  for (const auto& p : points) {
    if (p.y.is_infinite()) continue;
    PlanarPoint q{p.x, p.y.value()};
    while (hull.size() >= 2 && detail::cross(hull[hull.size() - 2], hull.back(), q) <= 0) hull.pop_back();
    hull.push_back(std::move(q));
  }
  return hull;
}

inline std::vector<PlanarPoint> lower_convex_hull(const std::vector<PlanarPoint>& points) {
  std::vector<ExtPlanarPoint> ext;
  ext.reserve(points.size());
  for (const auto& p : points) ext.push_back({p.x, ExtRational(p.y)});
  return lower_convex_hull(ext);
}

/**
 * Piecewise-linear function on [x_0, x_last] given by its vertices.
 * Canonical form: strictly increasing x and no vertex in the interior of a
 * straight edge, so two polygons describe the same function exactly when
 * their vertex lists are equal.
 */
class PlanarPolygon {
 public:
  PlanarPolygon() = default;
  explicit PlanarPolygon(std::vector<PlanarPoint> vertices) : vertices_(std::move(vertices)) { canonicalize(); }

  const std::vector<PlanarPoint>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }
  const Rational& start_x() const { return vertices_.front().x; }
  const Rational& end_x() const { return vertices_.back().x; }
  const PlanarPoint& end() const { return vertices_.back(); }

  /// Non-decreasing slopes.
  bool is_convex() const {
    for (std::size_t i = 2; i < vertices_.size(); ++i)
      if (detail::cross(vertices_[i - 2], vertices_[i - 1], vertices_[i]) < 0) return false;
    return true;
  }

  /// Value at x within the domain (linear interpolation).
  Rational operator()(const Rational& x) const {
    require(!vertices_.empty() && x >= start_x() && x <= end_x(), "PlanarPolygon: evaluation outside the domain");
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
      if (x <= vertices_[i].x) {
        const auto& a = vertices_[i - 1];
        const auto& b = vertices_[i];
        return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
      }
    }
    return vertices_.back().y;
  }

  /// this >= other at every point of the common domain.
  bool lies_on_or_above(const PlanarPolygon& other) const {
    if (empty() || other.empty()) return true;
    const Rational lo = std::max(start_x(), other.start_x());
    const Rational hi = std::min(end_x(), other.end_x());
    if (lo > hi) return true;
    std::vector<Rational> xs{lo, hi};
    for (const auto& v : vertices_)
      if (v.x > lo && v.x < hi) xs.push_back(v.x);
    for (const auto& v : other.vertices_)
      if (v.x > lo && v.x < hi) xs.push_back(v.x);
    return std::all_of(xs.begin(), xs.end(), [&](const Rational& x) { return (*this)(x) >= other(x); });
  }

  friend bool operator==(const PlanarPolygon&, const PlanarPolygon&) = default;

 private:
  void canonicalize() {
    std::vector<PlanarPoint> out;
    for (auto& v : vertices_) {
      if (!out.empty()) {
        require(v.x >= out.back().x, "PlanarPolygon: x-coordinates must not decrease");
        if (v.x == out.back().x) {
          require(v.y == out.back().y, "PlanarPolygon: two heights at one abscissa");
          continue;
        }
      }
      while (out.size() >= 2 && detail::cross(out[out.size() - 2], out.back(), v) == 0) out.pop_back();
      out.push_back(std::move(v));
    }
    vertices_ = std::move(out);
  }

  std::vector<PlanarPoint> vertices_;
};

inline std::ostream& operator<<(std::ostream& os, const PlanarPolygon& p) {
  os << "[";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) os << ", ";
    os << "(" << to_string(p.vertices()[i].x) << "," << to_string(p.vertices()[i].y) << ")";
  }
  return os << "]";
}

}  // namespace hodge
