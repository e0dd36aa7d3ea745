#pragma once

#include "hodge/polytope.hpp"

#include <functional>
#include <map>
#include <set>

namespace hodge {

/**
 * A finite lattice point set A whose hull is the polytope delta being
 * decomposed. delta may be lower dimensional in its ambient space; all
 * convexity tests run in the coordinates of an AffineFrame of A.
 */
class PointConfiguration {
 public:
  PointConfiguration() = default;
  explicit PointConfiguration(std::vector<IntVector> points) : points_(std::move(points)) {
    require(!points_.empty(), "point configuration is empty");
    std::set<IntVector> seen;
    for (const auto& p : points_) {
      require(p.size() == points_.front().size(), "point configuration mixes dimensions");
      require(seen.insert(p).second, "point configuration has a repeated point");
    }
    std::vector<RationalVector> rp;
    for (const auto& p : points_) rp.push_back(to_rational(p));
    frame_ = AffineFrame(rp);
    require(frame_.dimension() >= 1, "point configuration must span at least a segment");
    for (const auto& p : rp) proj_.push_back(frame_.project(p));
  }

  const std::vector<IntVector>& points() const { return points_; }
  const IntVector& point(std::size_t i) const { return points_.at(i); }
  std::size_t size() const { return points_.size(); }
  std::size_t ambient_dimension() const { return points_.front().size(); }
  std::size_t dimension() const { return frame_.dimension(); }
  const AffineFrame& frame() const { return frame_; }
  const RationalVector& projected(std::size_t i) const { return proj_.at(i); }
  RationalVector project(const RationalVector& x) const { return frame_.project(x); }

  std::vector<RationalVector> projected(const std::vector<std::size_t>& idx) const {
    std::vector<RationalVector> out;
    for (auto i : idx) out.push_back(proj_.at(i));
    return out;
  }

  std::optional<std::size_t> index_of(const IntVector& x) const {
    auto it = std::find(points_.begin(), points_.end(), x);
    if (it == points_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
  }

  /// Index of x, appending it when new; x must lie in the affine hull.
  std::size_t insert(const IntVector& x) {
    if (auto i = index_of(x)) return *i;
    require(frame_.contains(to_rational(x)), "point lies outside the affine hull of the configuration");
    points_.push_back(x);
    proj_.push_back(frame_.project(to_rational(x)));
    return points_.size() - 1;
  }

  std::vector<std::size_t> all_indices() const {
    std::vector<std::size_t> out(points_.size());
    std::iota(out.begin(), out.end(), 0);
    return out;
  }

  /// Vertices of conv(A).
  std::vector<std::size_t> vertex_indices() const { return hull_vertex_indices(proj_); }

  friend bool operator==(const PointConfiguration& a, const PointConfiguration& b) { return a.points_ == b.points_; }

 private:
  std::vector<IntVector> points_;
  AffineFrame frame_;
  std::vector<RationalVector> proj_;
};

using HeightFunction = std::vector<Rational>;

namespace detail {

/// Facet description of conv(A[indices]) in frame coordinates.
struct CellGeometry {
  std::vector<std::size_t> indices;
  std::vector<Facet> facets;  // incident refers to positions in `indices`
  bool full_dimensional = false;

  CellGeometry(const PointConfiguration& config, std::vector<std::size_t> idx) : indices(std::move(idx)) {
    auto pts = config.projected(indices);
    full_dimensional = !pts.empty() && affine_dimension(pts) == config.dimension();
    if (full_dimensional) facets = full_dimensional_facets(pts);
  }

  bool contains(const RationalVector& y) const {
    return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) { return dot(f.normal, y) <= f.offset; });
  }
};

inline std::vector<std::size_t> cell_vertices(const PointConfiguration& config, const std::vector<std::size_t>& cell) {
  auto pts = config.projected(cell);
  std::vector<std::size_t> out;
  for (auto i : hull_vertex_indices(pts)) out.push_back(cell[i]);
  std::sort(out.begin(), out.end());
  return out;
}

/// k + 1 affinely independent members of `cell` (first found in index order).
inline std::vector<std::size_t> affine_basis(const PointConfiguration& config, const std::vector<std::size_t>& cell) {
  std::vector<std::size_t> basis;
  std::vector<RationalVector> pts;
  for (auto i : cell) {
    pts.push_back(config.projected(i));
    if (affine_dimension(pts) + 1 == pts.size()) basis.push_back(i);
    else pts.pop_back();
    if (basis.size() == config.dimension() + 1) break;
  }
  require(basis.size() == config.dimension() + 1, "cell is not full-dimensional");
  return basis;
}

/// Affine function on frame coordinates taking `values` at the basis points: (c, c0).
inline std::pair<RationalVector, Rational> affine_through(const PointConfiguration& config,
                                                          const std::vector<std::size_t>& basis,
                                                          const std::vector<Rational>& values) {
  const std::size_t k = config.dimension();
  RationalMatrix m(k + 1, k + 1);
  for (std::size_t r = 0; r <= k; ++r) {
    const auto& y = config.projected(basis[r]);
    for (std::size_t j = 0; j < k; ++j) m(r, j) = y[j];
    m(r, k) = 1;
  }
  auto sol = solve_square(m, values);
  ensure(sol.has_value(), "affine basis is singular");
  RationalVector c(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(k));
  return {c, (*sol)[k]};
}

}  // namespace detail

/** Cells of a decomposition of conv(A), each a list of indices into A. */
struct Decomposition {
  PointConfiguration config;
  std::vector<std::vector<std::size_t>> cells;

  /// Each cell reduced to its sorted vertex indices; the cell list sorted.
  std::vector<std::vector<std::size_t>> canonical_cells() const {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& c : cells) out.push_back(detail::cell_vertices(config, c));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool same_cells(const Decomposition& o) const {
    return config == o.config && canonical_cells() == o.canonical_cells();
  }
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/**
 * Checks full dimensionality of every cell, pairwise interior disjointness
 * (LP: maximize t with a common point at distance >= t inside every facet
 * of both cells) and that cell volumes add up to the volume of conv(A).
 */
inline ValidationReport validate_decomposition(const Decomposition& T) {
  ValidationReport rep;
  auto fail = [&](std::string msg) {
    rep.valid = false;
    rep.violations.push_back(std::move(msg));
  };
  if (T.cells.empty()) {
    fail("decomposition has no cells");
    return rep;
  }
  std::vector<detail::CellGeometry> geo;
  for (std::size_t i = 0; i < T.cells.size(); ++i) {
    const auto& c = T.cells[i];
    if (c.empty() || std::any_of(c.begin(), c.end(), [&](std::size_t j) { return j >= T.config.size(); })) {
      fail("cell " + std::to_string(i) + " refers to points outside the configuration");
      return rep;
    }
    geo.emplace_back(T.config, c);
    if (!geo.back().full_dimensional) fail("cell " + std::to_string(i) + " is not full-dimensional");
  }
  if (!rep.valid) return rep;
  const std::size_t k = T.config.dimension();
  for (std::size_t i = 0; i < geo.size(); ++i)
    for (std::size_t j = i + 1; j < geo.size(); ++j) {
      LpBuilder lp(k + 1);
      for (std::size_t v = 0; v <= k; ++v) lp.set_free(v);
      RationalVector obj(k + 1);
      obj[k] = 1;
      lp.set_objective(LpSense::maximize, obj);
      for (const auto* g : {&geo[i], &geo[j]})
        for (const auto& f : g->facets) {
          RationalVector row = f.normal;
          row.push_back(1);
          lp.add(row, LpBuilder::Relation::le, f.offset);
        }
      lp.add(obj, LpBuilder::Relation::le, 1);
      auto res = lp.solve();
      ensure(res.optimal(), "overlap LP did not reach an optimum");
      if (*res.value > 0) fail("cells " + std::to_string(i) + " and " + std::to_string(j) + " overlap in their interiors");
    }
  Rational total = 0;
  for (const auto& c : T.cells) total += normalized_volume_of(T.config.projected(c));
  const Rational whole = normalized_volume_of(T.config.projected(T.config.all_indices()));
  if (total != whole)
    fail("cell volumes sum to " + to_string(total) + " but the polytope has volume " + to_string(whole));
  return rep;
}

/// conv(0, sigma) for each facet sigma of Delta that avoids the origin.
inline std::vector<LatticePolytope> facial_decomposition(const LatticePolytope& Delta) {
  require(Delta.contains_origin(), "facial decomposition needs a polytope containing the origin");
  std::vector<LatticePolytope> out;
  for (const auto& f : Delta.origin_avoiding_facets()) {
    std::vector<IntVector> pts;
    for (auto i : f.vertex_indices) pts.push_back(Delta.vertices()[i]);
    out.push_back(LatticePolytope::from_points(pts, true));
  }
  return out;
}

/** Relatively open faces of C(Delta), one per face of the cone. */
class BoundaryDecomposition {
 public:
  struct Piece {
    std::vector<std::size_t> tight;  // cone facets vanishing on the piece
    std::size_t dimension = 0;
    std::vector<IntVector> generators;
  };

  explicit BoundaryDecomposition(const LatticePolytope& Delta) : Delta_(Delta) {
    require(Delta.contains_origin(), "boundary decomposition needs a polytope containing the origin");
    for (const auto& f : Delta.facets())
      if (f.contains_origin) normals_.push_back(f.normal);
    const std::size_t n = Delta.dimension(), m = normals_.size();
    for (std::size_t size = 0; size <= m; ++size)
      for_each_subset(m, size, [&](const std::vector<std::size_t>& S) {
        // A face has exactly S tight iff some cone point vanishes on S and is strictly negative elsewhere.
        LpBuilder lp(n + 1);
        for (std::size_t v = 0; v <= n; ++v) lp.set_free(v);
        RationalVector obj(n + 1);
        obj[n] = 1;
        lp.set_objective(LpSense::maximize, obj);
        for (std::size_t i = 0; i < m; ++i) {
          RationalVector row = normals_[i];
          const bool in_s = std::find(S.begin(), S.end(), i) != S.end();
          row.push_back(in_s ? 0 : 1);
          lp.add(row, in_s ? LpBuilder::Relation::eq : LpBuilder::Relation::le, 0);
        }
        lp.add(obj, LpBuilder::Relation::le, 1);
        auto res = lp.solve();
        if (!res.optimal() || *res.value <= 0) return;
        Piece piece;
        piece.tight = S;
        RationalMatrix N(S.size(), n);
        for (std::size_t r = 0; r < S.size(); ++r)
          for (std::size_t j = 0; j < n; ++j) N(r, j) = normals_[S[r]][j];
        piece.dimension = n - (S.empty() ? 0 : rank(N));
        for (const auto& v : Delta.vertices()) {
          if (std::all_of(v.begin(), v.end(), [](const Integer& c) { return c == 0; })) continue;
          bool on = true;
          for (auto i : S) on = on && dot(normals_[i], v) == 0;
          if (on) piece.generators.push_back(v);
        }
        pieces_.push_back(std::move(piece));
      });
    std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) {
      return std::tie(a.dimension, a.tight) < std::tie(b.dimension, b.tight);
    });
  }

  const std::vector<Piece>& pieces() const { return pieces_; }

  /// Index of the piece whose relative interior contains x; nullopt outside C(Delta).
  std::optional<std::size_t> classify(const RationalVector& x) const {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < normals_.size(); ++i) {
      const Rational v = dot(normals_[i], x);
      if (v > 0) return std::nullopt;
      if (v == 0) tight.push_back(i);
    }
    for (std::size_t p = 0; p < pieces_.size(); ++p)
      if (pieces_[p].tight == tight) return p;
    throw InvariantViolation("cone point matches no boundary piece");
  }
  std::optional<std::size_t> classify(const IntVector& x) const { return classify(to_rational(x)); }

  ConeRegion region(std::size_t i) const {
    const auto& pc = pieces_.at(i);
    if (pc.generators.empty()) return ConeRegion::origin(Delta_);
    return ConeRegion(Delta_, pc.generators, Openness::relatively_open);
  }

 private:
  LatticePolytope Delta_;
  std::vector<RationalVector> normals_;
  std::vector<Piece> pieces_;
};

inline BoundaryDecomposition boundary_decomposition(const LatticePolytope& Delta) { return BoundaryDecomposition(Delta); }

/**
 * Upper hull of the lifted points (a, psi(a)) projected back to conv(A). A
 * face is found from every k + 1 affinely independent points whose affine
 * interpolant dominates psi on A; cells list the points on the face.
 */
inline Decomposition induced_subdivision(const PointConfiguration& config, const HeightFunction& psi) {
  require(psi.size() == config.size(), "height function must have one value per point");
  const std::size_t k = config.dimension(), N = config.size();
  std::set<std::vector<std::size_t>> faces;
  for_each_subset(N, k + 1, [&](const std::vector<std::size_t>& S) {
    auto pts = config.projected(S);
    if (affine_dimension(pts) != k) return;
    std::vector<Rational> vals;
    for (auto i : S) vals.push_back(psi[i]);
    auto [c, c0] = detail::affine_through(config, S, vals);
    std::vector<std::size_t> face;
    for (std::size_t a = 0; a < N; ++a) {
      const Rational l = dot(c, config.projected(a)) + c0;
      if (l < psi[a]) return;
      if (l == psi[a]) face.push_back(a);
    }
    faces.insert(std::move(face));
  });
  Decomposition T{config, {}};
  for (const auto& f : faces) T.cells.push_back(f);
  T.cells = T.canonical_cells();
  return T;
}

struct ConstructedDecomposition {
  Decomposition decomposition;
  HeightFunction heights;
};

/// Cells conv(V0, sigma) over the facets sigma of conv(A) not containing V0; heights 1 at V0, 0 elsewhere.
inline ConstructedDecomposition star_decomposition(const PointConfiguration& config, std::size_t v0) {
  require(v0 < config.size(), "star centre is not a point of the configuration");
  const auto all = config.all_indices();
  ConstructedDecomposition out{{config, {}}, HeightFunction(config.size(), Rational(0))};
  for (const auto& f : full_dimensional_facets(config.projected(all))) {
    if (std::find(f.incident.begin(), f.incident.end(), v0) != f.incident.end()) continue;
    std::vector<std::size_t> cell = f.incident;
    cell.push_back(v0);
    std::sort(cell.begin(), cell.end());
    out.decomposition.cells.push_back(cell);
  }
  out.heights[v0] = 1;
  return out;
}

/**
 * Hyperplane {x : H(x) = 1} with H(x) = <coeffs, x> + constant. The helper
 * makes the hyperplane <coeffs, x> = level.
 */
inline AffineFunctional level_hyperplane(RationalVector coeffs, const Rational& level) {
  return AffineFunctional{std::move(coeffs), Rational(1) - level};
}

namespace detail {

/// Whether conv(A[cell]) has vertices strictly on both sides of H = 1.
inline bool straddles(const PointConfiguration& config, const std::vector<std::size_t>& cell, const AffineFunctional& H) {
  bool below = false, above = false;
  for (auto v : cell) {
    const Rational h = H(config.point(v)) - 1;
    below = below || h < 0;
    above = above || h > 0;
  }
  return below && above;
}

/// Splits conv(A[cell]) by H = 1; nullopt when the cell has no vertex strictly on one side.
inline std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> split_cell(
    PointConfiguration& config, const std::vector<std::size_t>& cell, const AffineFunctional& H) {
  if (!straddles(config, cell, H)) return std::nullopt;
  const auto verts = cell_vertices(config, cell);
  std::vector<RationalVector> below, above;
  std::set<RationalVector> cut;
  for (auto v : verts) {
    const RationalVector x = to_rational(config.point(v));
    const Rational h = H(x) - 1;
    if (h <= 0) below.push_back(x);
    if (h >= 0) above.push_back(x);
  }
  for (auto u : verts)
    for (auto v : verts) {
      const RationalVector xu = to_rational(config.point(u)), xv = to_rational(config.point(v));
      const Rational hu = H(xu) - 1, hv = H(xv) - 1;
      if (!(hu < 0 && hv > 0)) continue;
      const Rational t = -hu / (hv - hu);
      RationalVector x(xu.size());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = xu[i] + t * (xv[i] - xu[i]);
      cut.insert(x);
    }
  auto vertex_points = [&](std::vector<RationalVector> pts) {
    for (const auto& c : cut) pts.push_back(c);
    std::vector<RationalVector> proj;
    for (const auto& p : pts) proj.push_back(config.project(p));
    std::vector<std::size_t> out;
    for (auto i : hull_vertex_indices(proj)) {
      require(is_integral(pts[i]), "hyperplane cut has a non-integral vertex");
      IntVector z;
      for (const auto& c : pts[i]) z.push_back(numerator(c));
      out.push_back(config.insert(z));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  auto lo = vertex_points(below);
  auto hi = vertex_points(above);
  return std::make_pair(lo, hi);
}

}  // namespace detail

/**
 * Splits every cell crossed by one of the hyperplanes H = 1, in the order
 * given, adding the integral cut vertices to A. Heights are the sum over the
 * cuts of 1 - |H(a) - 1| / max_A |H - 1|, a concave function creased exactly
 * along the cuts.
 */
inline ConstructedDecomposition parallel_hyperplane_decomposition(const PointConfiguration& config,
                                                                  const std::vector<AffineFunctional>& cuts) {
  PointConfiguration A = config;
  std::vector<std::vector<std::size_t>> cells{A.all_indices()};
  for (const auto& H : cuts) {
    require(H.coeffs.size() == A.ambient_dimension(), "hyperplane dimension does not match the configuration");
    require(detail::straddles(A, A.all_indices(), H), "hyperplane does not cross the interior of the polytope");
    std::vector<std::vector<std::size_t>> next;
    for (const auto& c : cells) {
      if (auto parts = detail::split_cell(A, c, H)) {
        next.push_back(parts->first);
        next.push_back(parts->second);
      } else {
        next.push_back(detail::cell_vertices(A, c));
      }
    }
    cells = std::move(next);
  }
  HeightFunction psi(A.size(), Rational(0));
  for (const auto& H : cuts) {
    Rational dmax = 0;
    for (const auto& a : A.points()) dmax = std::max(dmax, Rational(abs(H(a) - 1)));
    for (std::size_t i = 0; i < A.size(); ++i) psi[i] += Rational(1) - abs(H(A.point(i)) - 1) / dmax;
  }
  // Each cell also lists the points of A it contains.
  for (auto& c : cells) {
    detail::CellGeometry g(A, c);
    std::vector<std::size_t> full;
    for (std::size_t i = 0; i < A.size(); ++i)
      if (g.contains(A.projected(i))) full.push_back(i);
    c = full;
  }
  return {Decomposition{A, cells}, psi};
}

inline ConstructedDecomposition hyperplane_split(const PointConfiguration& config, const AffineFunctional& H) {
  return parallel_hyperplane_decomposition(config, {H});
}

struct CollapsingDecomposition {
  Decomposition decomposition;
  std::vector<std::vector<std::size_t>> partition;  // A_1 = A \ {V1}, then one block per visible face
  HeightFunction heights;                           // 0 off V1, -1 at V1
};

/**
 * delta_1 = conv(A \ {V1}) plus conv(sigma, V1) for each facet sigma of
 * delta_1 that V1 sees from outside.
 */
inline CollapsingDecomposition collapsing_decomposition(const PointConfiguration& config, std::size_t v1) {
  require(v1 < config.size(), "collapsing vertex is not a point of the configuration");
  const auto verts = config.vertex_indices();
  require(std::find(verts.begin(), verts.end(), v1) != verts.end(), "collapsing point must be a vertex of the polytope");
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < config.size(); ++i)
    if (i != v1) rest.push_back(i);
  auto rest_pts = config.projected(rest);
  require(affine_dimension(rest_pts) == config.dimension(),
          "removing the collapsing vertex leaves a lower-dimensional polytope");
  CollapsingDecomposition out;
  out.decomposition.config = config;
  out.decomposition.cells.push_back(rest);
  out.partition.push_back(rest);
  const auto& y = config.projected(v1);
  for (const auto& f : full_dimensional_facets(rest_pts)) {
    if (dot(f.normal, y) <= f.offset) continue;
    std::vector<std::size_t> cell;
    for (auto i : f.incident) cell.push_back(rest[i]);
    cell.push_back(v1);
    std::sort(cell.begin(), cell.end());
    out.decomposition.cells.push_back(cell);
    out.partition.push_back(cell);
  }
  out.heights.assign(config.size(), Rational(0));
  out.heights[v1] = -1;
  return out;
}

struct RegularityResult {
  bool regular = false;
  Rational slack;                       // optimal epsilon
  HeightFunction heights;               // certifying heights when regular
  std::vector<Rational> certificate;    // dual multipliers proving epsilon <= 0 otherwise
};

/**
 * LP over heights psi on A (k + 1 points of the first cell pinned to 0) and a
 * slack epsilon <= 1: each cell's affine interpolant l_i must agree with psi
 * on A inside the cell and exceed psi + epsilon at every other point. The
 * primal has few columns and many rows, so its dual is solved in standard
 * form and the primal optimum is read from the dual certificate.
 */
inline RegularityResult is_regular(const Decomposition& T) {
  const auto report = validate_decomposition(T);
  require(report.valid, "regularity test needs a valid decomposition: " +
                            (report.violations.empty() ? std::string() : report.violations.front()));
  const auto& A = T.config;
  const std::size_t N = A.size(), k = A.dimension();
  std::vector<std::vector<std::size_t>> bases;
  for (const auto& c : T.cells) bases.push_back(detail::affine_basis(A, c));
  std::vector<bool> pinned(N, false);
  for (auto b : bases.front()) pinned[b] = true;
  std::vector<std::optional<std::size_t>> column(N);
  std::size_t nv = 0;
  for (std::size_t a = 0; a < N; ++a)
    if (!pinned[a]) column[a] = nv++;
  const std::size_t eps = nv++;

  std::vector<RationalVector> le_rows, eq_rows;
  std::vector<Rational> le_rhs;
  for (std::size_t i = 0; i < T.cells.size(); ++i) {
    detail::CellGeometry g(A, T.cells[i]);
    const auto& B = bases[i];
    // Barycentric coordinates of every point with respect to B.
    RationalMatrix m(k + 1, k + 1);
    for (std::size_t r = 0; r <= k; ++r) {
      for (std::size_t j = 0; j < k; ++j) m(j, r) = A.projected(B[r])[j];
      m(k, r) = 1;
    }
    const auto inv = inverse(m);
    ensure(inv.has_value(), "cell basis is singular");
    for (std::size_t a = 0; a < N; ++a) {
      if (std::find(B.begin(), B.end(), a) != B.end()) continue;
      RationalVector y = A.projected(a);
      y.push_back(1);
      const RationalVector lambda = (*inv) * y;
      RationalVector row(nv, Rational(0));
      for (std::size_t r = 0; r <= k; ++r)
        if (column[B[r]]) row[*column[B[r]]] += lambda[r];
      if (column[a]) row[*column[a]] -= 1;
      if (g.contains(A.projected(a))) {
        eq_rows.push_back(row);
      } else {
        // l_i(a) - psi(a) - eps >= 0, written as <= 0 after negation.
        row[eps] -= 1;
        for (auto& c : row) c = -c;
        le_rows.push_back(row);
        le_rhs.push_back(0);
      }
    }
  }
  RationalVector cap(nv, Rational(0));
  cap[eps] = 1;
  le_rows.push_back(cap);
  le_rhs.push_back(1);

  // Dual: min b.y  s.t.  A_le^T y + A_eq^T z = e_eps, y >= 0, z free.
  LpProblem dual;
  dual.sense = LpSense::minimize;
  const std::size_t cols = le_rows.size() + eq_rows.size();
  dual.constraints = RationalMatrix(nv, cols);
  for (std::size_t c = 0; c < le_rows.size(); ++c)
    for (std::size_t r = 0; r < nv; ++r) dual.constraints(r, c) = le_rows[c][r];
  for (std::size_t c = 0; c < eq_rows.size(); ++c)
    for (std::size_t r = 0; r < nv; ++r) dual.constraints(r, le_rows.size() + c) = eq_rows[c][r];
  dual.objective = le_rhs;
  dual.objective.resize(cols, Rational(0));
  dual.rhs = cap;
  dual.nonneg.assign(cols, false);
  for (std::size_t c = 0; c < le_rows.size(); ++c) dual.nonneg[c] = true;
  const auto res = lp_optimize(dual);
  ensure(res.optimal(), "regularity LP has no optimum");

  RegularityResult out;
  const RationalVector& x = res.dual;  // primal (psi, eps)
  out.slack = x[eps];
  ensure(out.slack == *res.value, "regularity LP duality gap");
  out.regular = out.slack > 0;
  if (!out.regular) {
    out.certificate = res.witness;
    return out;
  }
  out.heights.assign(N, Rational(0));
  for (std::size_t a = 0; a < N; ++a)
    if (column[a]) out.heights[a] = x[*column[a]];
  ensure(induced_subdivision(A, out.heights).same_cells(T), "certified heights do not induce the decomposition");
  return out;
}

/// Lattice points of conv(points), which may be lower dimensional.
inline std::vector<IntVector> lattice_points_of_hull(const std::vector<IntVector>& points) {
  require(!points.empty(), "empty point set");
  std::vector<RationalVector> rp;
  for (const auto& p : points) rp.push_back(to_rational(p));
  const AffineFrame frame(rp);
  std::vector<RationalVector> proj;
  for (const auto& p : rp) proj.push_back(frame.project(p));
  const auto fs = full_dimensional_facets(proj);
  const std::size_t n = points.front().size();
  IntVector lo = points.front(), hi = points.front();
  for (const auto& p : points)
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  std::vector<IntVector> out;
  for_each_lattice_point(lo, hi, [&](const IntVector& x) {
    const auto xr = to_rational(x);
    if (!frame.contains(xr)) return;
    const auto y = frame.project(xr);
    for (const auto& f : fs)
      if (dot(f.normal, y) > f.offset) return;
    out.push_back(x);
  });
  return out;
}

/// No lattice points besides the vertices.
inline bool is_indecomposable(const std::vector<IntVector>& points) {
  require(!points.empty(), "empty point set");
  std::vector<RationalVector> rp;
  for (const auto& p : points) rp.push_back(to_rational(p));
  const AffineFrame frame(rp);
  std::vector<RationalVector> proj;
  for (const auto& p : rp) proj.push_back(frame.project(p));
  return lattice_points_of_hull(points).size() == hull_vertex_indices(proj).size();
}

inline bool is_indecomposable(const LatticePolytope& P) { return is_indecomposable(P.vertices()); }

/// Every cell is indecomposable.
inline bool is_complete(const Decomposition& T) {
  for (const auto& c : T.canonical_cells()) {
    std::vector<IntVector> pts;
    for (auto i : c) pts.push_back(T.config.point(i));
    if (!is_indecomposable(pts)) return false;
  }
  return true;
}

enum class Extremum { sup, inf };

/**
 * Extremum of sum_j u_j phi(a_j) over u >= 0 with sum_j u_j a_j = r.
 * Returns 0 when r is not in the cone over A.
 */
inline Rational maximizing_value(const HeightFunction& phi, const PointConfiguration& A, const RationalVector& r,
                                 Extremum which) {
  require(phi.size() == A.size(), "phi must have one value per point");
  require(r.size() == A.ambient_dimension(), "point dimension does not match the configuration");
  LpBuilder lp(A.size());
  lp.set_objective(which == Extremum::sup ? LpSense::maximize : LpSense::minimize, phi);
  for (std::size_t i = 0; i < r.size(); ++i) {
    RationalVector row;
    for (const auto& a : A.points()) row.push_back(Rational(a[i]));
    lp.add(row, LpBuilder::Relation::eq, r[i]);
  }
  const auto res = lp.solve();
  if (res.status == LpStatus::infeasible) return 0;
  require(res.status != LpStatus::unbounded, "maximizing value is unbounded");
  return *res.value;
}

struct HomogeneityCheck {
  bool homogeneous = true;
  std::optional<IntVector> witness;  // first point, in (weight, lex) order, where sup != inf
  Rational sup, inf;
  std::size_t points_checked = 0;
};

/// Compares the sup and inf maximizing values at every lattice point of weight <= bound in C(conv(0, A)).
inline HomogeneityCheck is_homogeneous(const HeightFunction& phi, const PointConfiguration& A, const Rational& bound) {
  const auto Delta = LatticePolytope::from_points(A.points(), true);
  auto [lo, hi] = scaled_bounding_box(Delta, bound);
  std::vector<std::pair<Rational, IntVector>> pts;
  for_each_lattice_point(lo, hi, [&](const IntVector& x) {
    const auto w = weight(Delta, x);
    if (w.is_finite() && w.value() <= bound) pts.emplace_back(w.value(), x);
  });
  std::sort(pts.begin(), pts.end());
  HomogeneityCheck out;
  for (const auto& [w, x] : pts) {
    ++out.points_checked;
    const auto xr = to_rational(x);
    const Rational s = maximizing_value(phi, A, xr, Extremum::sup);
    const Rational i = maximizing_value(phi, A, xr, Extremum::inf);
    if (s != i) {
      out.homogeneous = false;
      out.witness = x;
      out.sup = s;
      out.inf = i;
      return out;
    }
  }
  return out;
}

/**
 * Degree polygon of phi over a cone region: vertex m is
 * (sum_{k<=m} W(k), (p-1) sum_{w(r)<=m/D} m(phi, A; r)), starting at (0, 0).
 */
inline PlanarPolygon degree_polygon(const ConeRegion& region, const HeightFunction& phi, const PointConfiguration& A,
                                    std::int64_t p, long m_max) {
  require(m_max >= 0, "degree polygon needs m >= 0");
  const auto& P = region.base();
  const Integer D = denominator_D(P);
  auto [lo, hi] = scaled_bounding_box(P, Rational(Integer(m_max), D));
  const auto levels = static_cast<std::size_t>(m_max + 1);
  struct Partial {
    std::vector<Integer> W;
    std::vector<Rational> Q;
  };
  const auto slices = lo[0] > hi[0] ? std::size_t{0} : static_cast<std::size_t>(hi[0] - lo[0] + 1);
  auto parts = parallel_blocks<Partial>(slices, worker_count(), [&](std::size_t b, std::size_t e, Partial& out) {
    out.W.assign(levels, Integer(0));
    out.Q.assign(levels, Rational(0));
    if (b >= e) return;
    IntVector sub_lo = lo, sub_hi = hi;
    sub_lo[0] = lo[0] + b;
    sub_hi[0] = lo[0] + (e - 1);
    for_each_lattice_point(sub_lo, sub_hi, [&](const IntVector& x) {
      const auto xr = to_rational(x);
      const auto w = weight(P, xr);
      if (w.is_infinite()) return;
      const Rational level = w.value() * Rational(D);
      if (!is_integral(level) || level > m_max || !region.contains(xr)) return;
      const auto k = static_cast<std::size_t>(numerator(level));
      out.W[k] += 1;
      out.Q[k] += maximizing_value(phi, A, xr, Extremum::sup);
    });
  });
  std::vector<Integer> W(levels, Integer(0));
  std::vector<Rational> Q(levels, Rational(0));
  for (const auto& part : parts)
    for (std::size_t k = 0; k < levels; ++k) {
      W[k] += part.W[k];
      Q[k] += part.Q[k];
    }
  std::vector<PlanarPoint> pts{{0, 0}};
  Integer x = 0;
  Rational y = 0;
  for (std::size_t k = 0; k < W.size(); ++k) {
    if (W[k] == 0) continue;
    x += W[k];
    y += Rational(p - 1) * Q[k];
    pts.push_back({Rational(x), y});
  }
  return PlanarPolygon(std::move(pts));
}

using ConeFunction = std::function<Rational(const RationalVector&)>;

/// Homogeneous extension r -> w(r) phi(r / w(r)); zero at the origin and outside the cone.
inline ConeFunction extend_to_cone(const LatticePolytope& Delta, ConeFunction phi) {
  return [Delta, phi = std::move(phi)](const RationalVector& r) -> Rational {
    const auto w = weight(Delta, r);
    if (w.is_infinite() || w.value() == 0) return 0;
    RationalVector s = r;
    for (auto& c : s) c /= w.value();
    return w.value() * phi(s);
  };
}

/**
 * Function on conv(A) that is affine on every cell of T and takes the values
 * psi on A.
 */
class PiecewiseLinearLift {
 public:
  PiecewiseLinearLift(Decomposition T, HeightFunction psi) : T_(std::move(T)), psi_(std::move(psi)) {
    require(psi_.size() == T_.config.size(), "height function must have one value per point");
    for (const auto& c : T_.cells) {
      const auto basis = detail::affine_basis(T_.config, c);
      std::vector<Rational> vals;
      for (auto b : basis) vals.push_back(psi_[b]);
      auto piece = detail::affine_through(T_.config, basis, vals);
      detail::CellGeometry g(T_.config, c);
      for (std::size_t a = 0; a < T_.config.size(); ++a)
        if (g.contains(T_.config.projected(a)))
          require(dot(piece.first, T_.config.projected(a)) + piece.second == psi_[a],
                  "heights are not affine on a cell");
      pieces_.push_back(std::move(piece));
      cells_.push_back(std::move(g));
    }
  }

  const Decomposition& decomposition() const { return T_; }
  const HeightFunction& heights() const { return psi_; }

  Rational operator()(const RationalVector& x) const {
    require(T_.config.frame().contains(x), "point lies outside the affine hull of the decomposition");
    const auto y = T_.config.project(x);
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (cells_[i].contains(y)) return dot(pieces_[i].first, y) + pieces_[i].second;
    throw InputError("point lies outside the decomposed polytope");
  }
  Rational operator()(const IntVector& x) const { return (*this)(to_rational(x)); }

 private:
  Decomposition T_;
  HeightFunction psi_;
  std::vector<std::pair<RationalVector, Rational>> pieces_;
  std::vector<detail::CellGeometry> cells_;
};

}  // namespace hodge
