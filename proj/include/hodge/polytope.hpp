#pragma once

// Lattice polytopes containing the origin, their cones, the weight function,
// weight-level lattice counts, Hodge polygons and chain polygons.

#include "hodge/geometry.hpp"
#include "hodge/parallel.hpp"
#include "hodge/polygon.hpp"

#include <functional>

namespace hodge {

/** A codimension-1 face: normal . x <= rhs on the polytope, equality on the face. */
struct FaceDescriptor {
  std::vector<std::size_t> vertex_indices;  // into LatticePolytope::vertices()
  RationalVector normal;  // for origin-avoiding faces this is e with <e, x> = 1 on the face
  Rational rhs;           // 1 for origin-avoiding faces, 0 for faces through the origin
  std::size_t dimension = 0;
  bool contains_origin = false;

  AffineFunctional functional() const { return AffineFunctional{normal, -rhs}; }
};

/**
 * Full-dimensional lattice polytope, usually the Newton polytope conv(0, V_j).
 * Vertex list is minimal; the origin appears in it only when it is a vertex.
 */
class LatticePolytope {
 public:
  LatticePolytope() = default;

  /// conv(points) or conv({0} u points); the result must be full-dimensional.
  static LatticePolytope from_points(const std::vector<IntVector>& points, bool include_origin = true) {
    require(!points.empty(), "LatticePolytope: no points");
    const std::size_t n = points.front().size();
    require(n >= 1, "LatticePolytope: dimension must be positive");
    std::vector<IntVector> all;
    if (include_origin) all.push_back(IntVector(n, Integer(0)));
    for (const auto& p : points) {
      require(p.size() == n, "LatticePolytope: points of mixed dimension");
      all.push_back(p);
    }
    std::vector<RationalVector> rat;
    for (const auto& p : all) rat.push_back(to_rational(p));
    require(affine_dimension(rat) == n, "LatticePolytope: polytope is not full-dimensional");

    LatticePolytope P;
    P.dim_ = n;
    for (auto i : hull_vertex_indices(rat)) P.vertices_.push_back(all[i]);
    std::sort(P.vertices_.begin(), P.vertices_.end());
    std::vector<RationalVector> vr;
    for (const auto& v : P.vertices_) vr.push_back(to_rational(v));
    P.contains_origin_ = in_convex_hull(vr, RationalVector(n));
    P.compute_facets(vr);
    return P;
  }

  std::size_t dimension() const { return dim_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  bool contains_origin() const { return contains_origin_; }
  bool origin_is_vertex() const {
    return std::find(vertices_.begin(), vertices_.end(), IntVector(dim_, Integer(0))) != vertices_.end();
  }
  const std::vector<FaceDescriptor>& facets() const { return facets_; }

  std::vector<FaceDescriptor> origin_avoiding_facets() const {
    std::vector<FaceDescriptor> out;
    for (const auto& f : facets_)
      if (!f.contains_origin) out.push_back(f);
    return out;
  }

  bool contains(const RationalVector& x) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const FaceDescriptor& f) { return dot(f.normal, x) <= f.rhs; });
  }

  /// Whether x lies in the cone C(P) generated by P from the origin.
  bool cone_contains(const RationalVector& x) const {
    require(contains_origin_, "cone of a polytope that does not contain the origin");
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const FaceDescriptor& f) { return !f.contains_origin || dot(f.normal, x) <= 0; });
  }

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) { return a.vertices_ == b.vertices_; }

 private:
  void compute_facets(const std::vector<RationalVector>& vr) {
    for (const auto& f : full_dimensional_facets(vr)) {
      FaceDescriptor d;
      d.vertex_indices = f.incident;
      d.dimension = dim_ - 1;
      d.contains_origin = f.offset == 0;
      d.normal = f.normal;
      d.rhs = f.offset;
      if (f.offset != 0 && contains_origin_) {
        // offset > 0 because the origin satisfies normal . 0 <= offset.
        for (auto& c : d.normal) c /= f.offset;
        d.rhs = 1;
      }
      for (auto i : d.vertex_indices) ensure(dot(d.normal, vr[i]) == d.rhs, "facet: vertex off its hyperplane");
      facets_.push_back(std::move(d));
    }
  }

  std::size_t dim_ = 0;
  std::vector<IntVector> vertices_;
  bool contains_origin_ = false;
  std::vector<FaceDescriptor> facets_;
};

/// Codimension-1 faces with their supporting functionals.
inline std::vector<FaceDescriptor> facets(const LatticePolytope& P) { return P.facets(); }

/**
 * w(u) = smallest c >= 0 with u in cP; infinity outside the cone C(P).
 * Computed as the largest <e_delta, u> over origin-avoiding facets.
 */
inline ExtRational weight(const LatticePolytope& P, const RationalVector& u) {
  require(u.size() == P.dimension(), "weight: dimension mismatch");
  require(P.contains_origin(), "weight: polytope must contain the origin");
  if (!P.cone_contains(u)) return ExtRational::infinity();
  Rational w = 0;
  for (const auto& f : P.facets())
    if (!f.contains_origin) w = std::max(w, dot(f.normal, u));
  return w;
}

inline ExtRational weight(const LatticePolytope& P, const IntVector& u) { return weight(P, to_rational(u)); }

/**
 * Same weight from its definition: min sum c_j with sum c_j V_j = u, c >= 0,
 * over the vertices V_j lying on origin-avoiding facets.
 */
inline ExtRational weight_by_lp(const LatticePolytope& P, const RationalVector& u) {
  require(u.size() == P.dimension(), "weight_by_lp: dimension mismatch");
  std::vector<bool> on_far_face(P.vertices().size(), false);
  for (const auto& f : P.facets())
    if (!f.contains_origin)
      for (auto i : f.vertex_indices) on_far_face[i] = true;
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < P.vertices().size(); ++i)
    if (on_far_face[i]) gens.push_back(P.vertices()[i]);
  LpBuilder lp(gens.size());
  for (std::size_t r = 0; r < P.dimension(); ++r) {
    RationalVector row(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) row[j] = Rational(gens[j][r]);
    lp.add(row, LpBuilder::Relation::eq, u[r]);
  }
  lp.set_objective(LpSense::minimize, RationalVector(gens.size(), Rational(1)));
  auto res = lp.solve();
  if (res.status == LpStatus::infeasible) return ExtRational::infinity();
  ensure(res.optimal(), "weight_by_lp: unbounded weight LP");
  return *res.value;
}

/// D(P): least common denominator of the coefficients of all origin-avoiding facet functionals.
inline Integer denominator_D(const LatticePolytope& P) {
  require(P.contains_origin(), "denominator_D: polytope must contain the origin");
  Integer D = 1;
  for (const auto& f : P.facets())
    if (!f.contains_origin)
      for (const auto& c : f.normal) D = lcm_of(D, denominator(c));
  return D;
}

/// n! Vol(P), by pulling triangulation (from the origin when it is a vertex).
inline Integer normalized_volume(const LatticePolytope& P) {
  std::vector<RationalVector> vr;
  for (const auto& v : P.vertices()) vr.push_back(to_rational(v));
  Rational vol = normalized_volume_of(vr);
  ensure(is_integral(vol), "normalized_volume: non-integral lattice volume");
  return numerator(vol);
}

/// Calls fn(point) for every lattice point of the box [lo, hi] in lexicographic order.
template <typename Fn>
void for_each_lattice_point(const IntVector& lo, const IntVector& hi, Fn&& fn) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return;
  IntVector x = lo;
  while (true) {
    fn(static_cast<const IntVector&>(x));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        for (std::size_t j = i + 1; j < n; ++j) x[j] = lo[j];
        break;
      }
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

/// Integer bounding box of scale * P.
inline std::pair<IntVector, IntVector> scaled_bounding_box(const LatticePolytope& P, const Rational& scale) {
  const std::size_t n = P.dimension();
  IntVector lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = 0, mx = 0;
    bool first = true;
    for (const auto& v : P.vertices()) {
      Rational c = scale * v[i];
      if (first || c < mn) mn = c;
      if (first || c > mx) mx = c;
      first = false;
    }
    lo[i] = floor_of(mn);
    hi[i] = ceil_of(mx);
  }
  return {lo, hi};
}

enum class Openness { closed, relatively_open };

/**
 * A cone inside C(P) generated from the origin by a face or sub-polytope of P,
 * either closed or relatively open (interior relative to its linear span).
 */
class ConeRegion {
 public:
  ConeRegion(LatticePolytope base, std::vector<IntVector> generators, Openness openness)
      : base_(std::move(base)), generators_(std::move(generators)), openness_(openness) {
    require(base_.contains_origin(), "ConeRegion: base polytope must contain the origin");
    std::vector<RationalVector> pts{RationalVector(base_.dimension())};
    for (const auto& g : generators_) {
      require(g.size() == base_.dimension(), "ConeRegion: generator dimension mismatch");
      pts.push_back(to_rational(g));
    }
    span_ = AffineFrame(pts);
    const std::size_t s = span_.dimension();
    std::vector<RationalVector> proj;
    for (const auto& g : generators_) {
      auto p = span_.project(to_rational(g));
      if (std::any_of(p.begin(), p.end(), [](const Rational& c) { return c != 0; })) proj.push_back(std::move(p));
    }
    if (s == 0) return;
    std::set<std::vector<std::size_t>> seen;
    for_each_subset(proj.size(), s - 1, [&](const std::vector<std::size_t>& sub) {
      RationalMatrix m(s - 1, s);
      for (std::size_t r = 0; r < sub.size(); ++r)
        for (std::size_t j = 0; j < s; ++j) m(r, j) = proj[sub[r]][j];
      auto ns = null_space(m);
      if (ns.size() != 1) return;
      RationalVector a = ns.front();
      bool pos = false, neg = false;
      std::vector<std::size_t> inc;
      for (std::size_t i = 0; i < proj.size(); ++i) {
        Rational v = dot(a, proj[i]);
        if (v > 0) pos = true;
        if (v < 0) neg = true;
        if (v == 0) inc.push_back(i);
      }
      if (pos && neg) return;
      if (neg)
        for (auto& c : a) c = -c;
      if (!seen.insert(inc).second) return;
      normals_.push_back(std::move(a));
    });
  }

  static ConeRegion full(const LatticePolytope& P, Openness o = Openness::closed) {
    return ConeRegion(P, P.vertices(), o);
  }
  static ConeRegion origin(const LatticePolytope& P) { return ConeRegion(P, {}, Openness::closed); }

  const LatticePolytope& base() const { return base_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  Openness openness() const { return openness_; }
  std::size_t dimension() const { return span_.dimension(); }

  bool contains(const RationalVector& x) const {
    if (!span_.contains(x)) return false;
    auto p = span_.project(x);
    for (const auto& a : normals_) {
      Rational v = dot(a, p);
      if (v < 0) return false;
      if (v == 0 && openness_ == Openness::relatively_open) return false;
    }
    return true;
  }
  bool contains(const IntVector& x) const { return contains(to_rational(x)); }

 private:
  LatticePolytope base_;
  std::vector<IntVector> generators_;
  Openness openness_;
  AffineFrame span_;
  std::vector<RationalVector> normals_;  // in projected span coordinates, >= 0 on the cone
};

/**
 * W(region, k) for k = 0..k_max: lattice points of the region of weight k/D.
 * The bounding box of (k_max/D) P is swept once, lexicographically.
 */
inline std::vector<Integer> weight_histogram(const ConeRegion& region, long k_max, const Integer& D) {
  require(k_max >= 0, "weight_histogram: negative k");
  const auto& P = region.base();
  auto [lo, hi] = scaled_bounding_box(P, Rational(Integer(k_max), D));
  std::vector<IntVector> firsts;
  for (Integer v = lo[0]; v <= hi[0]; ++v) firsts.push_back(IntVector{v});
  auto parts = parallel_blocks<std::vector<Integer>>(
      firsts.size(), worker_count(), [&](std::size_t b, std::size_t e, std::vector<Integer>& out) {
        out.assign(static_cast<std::size_t>(k_max + 1), Integer(0));
        if (b >= e) return;
        IntVector sub_lo = lo, sub_hi = hi;
        sub_lo[0] = firsts[b][0];
        sub_hi[0] = firsts[e - 1][0];
        for_each_lattice_point(sub_lo, sub_hi, [&](const IntVector& x) {
          auto xr = to_rational(x);
          auto w = weight(P, xr);
          if (w.is_infinite()) return;
          Rational scaled = w.value() * Rational(D);
          if (!is_integral(scaled) || scaled > k_max) return;
          if (!region.contains(xr)) return;
          out[static_cast<std::size_t>(numerator(scaled))] += 1;
        });
      });
  std::vector<Integer> total(static_cast<std::size_t>(k_max + 1), Integer(0));
  for (const auto& p : parts)
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += p[k];
  return total;
}

/// Number of lattice points in the region with weight exactly k/D.
inline Integer count_by_weight(const ConeRegion& region, long k, const Integer& D) {
  return weight_histogram(region, k, D).back();
}

/// H(k) = sum_i (-1)^i C(n, i) W(k - iD) from precomputed W(0..).
inline Integer hodge_number_from_counts(const std::vector<Integer>& W, std::size_t n, long k, long D) {
  Integer h = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    long idx = k - static_cast<long>(i) * D;
    if (idx < 0) break;
    require(static_cast<std::size_t>(idx) < W.size(), "hodge_number: weight counts too short");
    Integer term = binomial(static_cast<long>(n), static_cast<long>(i)) * W[static_cast<std::size_t>(idx)];
    h += (i % 2 == 0) ? term : Integer(-term);
  }
  ensure(h >= 0, "hodge number is negative");
  return h;
}

inline Integer hodge_numbers(const LatticePolytope& P, long k) {
  require(k >= 0, "hodge_numbers: negative k");
  const Integer D = denominator_D(P);
  auto W = weight_histogram(ConeRegion::full(P), k, D);
  return hodge_number_from_counts(W, P.dimension(), k, D.convert_to<long>());
}

/// All H(0..nD) at once.
inline std::vector<Integer> hodge_number_table(const LatticePolytope& P) {
  const long D = denominator_D(P).convert_to<long>();
  const long top = static_cast<long>(P.dimension()) * D;
  auto W = weight_histogram(ConeRegion::full(P), top, Integer(D));
  std::vector<Integer> H;
  for (long k = 0; k <= top; ++k) H.push_back(hodge_number_from_counts(W, P.dimension(), k, D));
  return H;
}

/// Polygon with vertices (sum_{k<=m} H(k), (1/D) sum_{k<=m} k H(k)) from given H(0..).
inline PlanarPolygon polygon_from_levels(const std::vector<Integer>& levels, const Integer& D) {
  std::vector<PlanarPoint> pts{{0, 0}};
  Integer x = 0;
  Rational y = 0;
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (levels[k] == 0) continue;
    x += levels[k];
    y += Rational(Integer(k) * levels[k], D);
    pts.push_back({Rational(x), y});
  }
  return PlanarPolygon(std::move(pts));
}

/// Hodge polygon HP(P).
inline PlanarPolygon hodge_polygon(const LatticePolytope& P) {
  auto H = hodge_number_table(P);
  auto hp = polygon_from_levels(H, denominator_D(P));
  Integer total = 0;
  for (const auto& h : H) total += h;
  ensure(total == normalized_volume(P), "hodge_polygon: sum of Hodge numbers != normalized volume");
  ensure(hp.is_convex(), "hodge_polygon: not convex");
  return hp;
}

/// Chain-level polygon P(region), vertices m = 0..m_max.
inline PlanarPolygon chain_polygon(const ConeRegion& region, long m_max) {
  const Integer D = denominator_D(region.base());
  return polygon_from_levels(weight_histogram(region, m_max, D), D);
}

}  // namespace hodge
