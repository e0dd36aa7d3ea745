#pragma once

#include "hodge/decomposition.hpp"
#include "hodge/diagonal.hpp"

namespace hodge {

/**
 * The polytope spanned by the origin, -e0, e0 and e0 + d e_i (i = 1..n) in
 * R^{n+1}, coordinates ordered (x0, x1, ..., xn). It splits into
 * simplex = conv(0, -e0, e0 + d e_i) and dual_simplex = conv(0, e0, e0 + d e_i).
 */
struct DelignePolytope {
  long d = 0;
  long n = 0;
  LatticePolytope full;
  LatticePolytope simplex;
  LatticePolytope dual_simplex;
  AffineFunctional V_h;  // <V_h, v> = 1 on the facet of `simplex` away from the origin

  /// Vertices of that facet: -e0 followed by e0 + d e_i.
  std::vector<IntVector> facet_vertices() const {
    std::vector<IntVector> out;
    IntVector m(static_cast<std::size_t>(n + 1), Integer(0));
    m[0] = -1;
    out.push_back(m);
    for (long i = 1; i <= n; ++i) {
      IntVector v(static_cast<std::size_t>(n + 1), Integer(0));
      v[0] = 1;
      v[static_cast<std::size_t>(i)] = d;
      out.push_back(v);
    }
    return out;
  }
};

inline DelignePolytope build_deligne(long d, long n) {
  require(d >= 1 && n >= 1, "Deligne polytope needs d >= 1 and n >= 1");
  DelignePolytope P;
  P.d = d;
  P.n = n;
  const auto facet = P.facet_vertices();
  IntVector e0(static_cast<std::size_t>(n + 1), Integer(0));
  e0[0] = 1;
  std::vector<IntVector> top(facet.begin() + 1, facet.end());
  top.insert(top.begin(), e0);
  std::vector<IntVector> all = facet;
  all.push_back(e0);
  P.full = LatticePolytope::from_points(all);
  P.simplex = LatticePolytope::from_points(facet);
  P.dual_simplex = LatticePolytope::from_points(top);

  RationalVector vh(static_cast<std::size_t>(n + 1), Rational(2, d));
  vh[0] = -1;
  P.V_h = AffineFunctional{vh, 0};
  ensure(hyperplane_through(facet).coeffs == vh, "facet functional differs from (-1, 2/d, ..., 2/d)");
  return P;
}

/// D of the simplex part: d for odd d, d/2 for even d.
inline Integer D_deligne(long d) {
  require(d >= 1, "d must be positive");
  return d % 2 == 1 ? Integer(d) : Integer(d / 2);
}

/// Binomial coefficient that vanishes when the top argument is not an integer.
inline Integer rational_binomial(const Rational& top, long bottom) {
  if (!is_integral(top)) return 0;
  const Integer t = numerator(top);
  if (t < bottom || t < 0) return 0;
  return binomial(t.convert_to<long>(), bottom);
}

/**
 * Lattice points of weight k/D in the cone over the simplex part. A point
 * (u0, u) lies in that cone iff u >= 0 and -w <= u0 <= w, where
 * w = -u0 + (2/d) sum u_i, so sum u_i = (d/2)(w + u0).
 */
inline Integer closed_form_W(long d, long n, long k) {
  require(k >= 0, "weight level must be nonnegative");
  const Integer D = D_deligne(d);
  const Rational w(Integer(k), D);
  const Integer bound = floor_of(w);
  Integer total = 0;
  for (Integer u0 = -bound; u0 <= bound; ++u0)
    total += rational_binomial(Rational(d, 2) * (w + Rational(u0)) + Rational(n - 1), n - 1);
  return total;
}

/**
 * Hodge polygon of the simplex part from the closed-form counts, using the
 * ambient dimension n + 1 in the alternating sum. Cross-checked against the
 * generic lattice sweep.
 */
inline PlanarPolygon deligne_hodge_polygon(long d, long n, long k_max) {
  const Integer D = D_deligne(d);
  const long Dl = D.convert_to<long>();
  const long top = (n + 1) * Dl;
  require(k_max >= top, "k_max must reach (n + 1) D = " + std::to_string(top));
  std::vector<Integer> W;
  for (long k = 0; k <= k_max; ++k) W.push_back(closed_form_W(d, n, k));
  std::vector<Integer> H;
  for (long k = 0; k <= k_max; ++k) H.push_back(hodge_number_from_counts(W, static_cast<std::size_t>(n + 1), k, Dl));
  for (long k = top + 1; k <= k_max; ++k) ensure(H[static_cast<std::size_t>(k)] == 0, "Hodge number beyond (n + 1) D");
  auto hp = polygon_from_levels(H, D);
  const auto P = build_deligne(d, n);
  ensure(denominator_D(P.simplex) == D, "closed-form D differs from the polytope's D");
  ensure(hp == hodge_polygon(P.simplex), "closed-form Hodge polygon differs from the lattice sweep");
  return hp;
}

/**
 * Decomposition of the facet of the simplex part by the hyperplanes
 * x_i = (j/2)(x0 + 1), which pass through -e0 and meet the opposite face in
 * x_i = j. Cuts that miss the interior (always the case for n = 1) are skipped.
 */
inline ConstructedDecomposition cell_decomposition(long d, long n) {
  const auto P = build_deligne(d, n);
  PointConfiguration A(lattice_points_of_hull(P.facet_vertices()));
  std::vector<AffineFunctional> cuts;
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j < d; ++j) {
      RationalVector c(static_cast<std::size_t>(n + 1), Rational(0));
      c[static_cast<std::size_t>(i)] = 1;
      c[0] = Rational(-j, 2);
      AffineFunctional H{c, Rational(1) - Rational(j, 2)};
      if (detail::straddles(A, A.all_indices(), H)) cuts.push_back(H);
    }
  if (cuts.empty()) {
    ConstructedDecomposition single{Decomposition{A, {A.all_indices()}}, HeightFunction(A.size(), Rational(0))};
    return single;
  }
  return parallel_hyperplane_decomposition(A, cuts);
}

/**
 * Unimodular decomposition of the facet of the dual part (x0 = 1) by the
 * grid x_i = j and sum_i x_i = j.
 */
inline ConstructedDecomposition dual_cell_decomposition(long d, long n) {
  const auto P = build_deligne(d, n);
  auto verts = P.facet_vertices();
  verts.front()[0] = 1;
  PointConfiguration A(lattice_points_of_hull(verts));
  std::vector<AffineFunctional> cuts;
  for (long j = 1; j < d; ++j) {
    for (long i = 1; i <= n; ++i) {
      RationalVector c(static_cast<std::size_t>(n + 1), Rational(0));
      c[static_cast<std::size_t>(i)] = 1;
      cuts.push_back(level_hyperplane(c, j));
    }
    if (n >= 2) {
      RationalVector c(static_cast<std::size_t>(n + 1), Rational(1));
      c[0] = 0;
      cuts.push_back(level_hyperplane(c, j));
    }
  }
  std::vector<AffineFunctional> crossing;
  for (const auto& H : cuts)
    if (detail::straddles(A, A.all_indices(), H)) crossing.push_back(H);
  if (crossing.empty()) return {Decomposition{A, {A.all_indices()}}, HeightFunction(A.size(), Rational(0))};
  return parallel_hyperplane_decomposition(A, crossing);
}

struct CellOrdinarity {
  bool all_ordinary = true;
  std::optional<std::size_t> witness_cell;  // first non-ordinary cell
  std::optional<FractionalVector> witness;
  std::vector<bool> per_cell;
};

/**
 * Diagonal criterion on each simplicial cell conv(0, cell vertices). Cells
 * must be simplices whose vertices are linearly independent.
 */
inline CellOrdinarity cells_ordinary_diagonal(const Decomposition& T, std::int64_t p) {
  CellOrdinarity out;
  const auto cells = T.canonical_cells();
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::vector<IntVector> cols;
    for (auto i : cells[c]) cols.push_back(T.config.point(i));
    const auto v = is_ordinary_diagonal(exponent_matrix_of_columns(cols), p);
    out.per_cell.push_back(v.ordinary);
    if (!v.ordinary && out.all_ordinary) {
      out.all_ordinary = false;
      out.witness_cell = c;
      out.witness = v.witness;
    }
  }
  return out;
}

enum class Prediction { ordinary, non_ordinary, conjectural };

inline std::string to_string(Prediction p) {
  switch (p) {
    case Prediction::ordinary: return "ordinary";
    case Prediction::non_ordinary: return "non-ordinary";
    case Prediction::conjectural: return "conjectural";
  }
  return "";
}

/**
 * Odd d: ordinary iff p = 1 mod d. Any d: non-ordinary when p != 1 mod D.
 * Even d with p = 1 mod d/2 is only conjecturally ordinary.
 */
inline Prediction predict_ordinarity(long d, std::int64_t p) {
  require(p >= 2 && is_prime(static_cast<std::uint64_t>(p)), "p must be prime");
  require(d >= 1, "d must be positive");
  require(d % p != 0, "p divides d; the prediction does not apply");
  const long D = D_deligne(d).convert_to<long>();
  if (p % D != 1 % D) return Prediction::non_ordinary;
  return d % 2 == 1 ? Prediction::ordinary : Prediction::conjectural;
}

/// 1/x0 + sum_i x0 x_i^d over GF(p).
inline LaurentPolynomial deligne_polynomial(long d, long n, std::int64_t p) {
  const auto P = build_deligne(d, n);
  FiniteField F(p, 1);
  std::vector<LaurentTerm> terms;
  for (const auto& v : P.facet_vertices()) terms.push_back({v, F.one()});
  return LaurentPolynomial(F, static_cast<std::size_t>(n + 1), terms);
}

}  // namespace hodge
