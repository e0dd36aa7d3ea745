#pragma once

#include "hodge/cyclotomic.hpp"
#include "hodge/finite_field.hpp"
#include "hodge/parallel.hpp"
#include "hodge/polygon.hpp"
#include "hodge/polytope.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>

namespace hodge {

/// Default cap on point evaluations for a single exponential sum.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct LaurentTerm {
  IntVector exponent;
  FiniteField::Element coefficient;
};

/** f = sum_j a_j x^{V_j} over GF(p^a) in n variables, with nonzero a_j. */
class LaurentPolynomial {
 public:
  LaurentPolynomial(FiniteField field, std::size_t n, std::vector<LaurentTerm> terms)
      : field_(std::move(field)), n_(n), terms_(std::move(terms)) {
    require(n_ >= 1, "Laurent polynomial needs at least one variable");
    require(!terms_.empty(), "Laurent polynomial has no terms");
    std::set<IntVector> seen;
    for (const auto& t : terms_) {
      require(t.exponent.size() == n_, "term exponent has the wrong number of variables");
      require(t.coefficient != 0, "term coefficients must be nonzero");
      require(static_cast<std::int64_t>(t.coefficient) < field_.q(), "term coefficient is not a field element");
      require(seen.insert(t.exponent).second, "repeated exponent in Laurent polynomial");
    }
  }

  const FiniteField& field() const { return field_; }
  std::size_t variables() const { return n_; }
  const std::vector<LaurentTerm>& terms() const { return terms_; }

  std::vector<IntVector> exponents() const {
    std::vector<IntVector> out;
    for (const auto& t : terms_) out.push_back(t.exponent);
    return out;
  }

 private:
  FiniteField field_;
  std::size_t n_;
  std::vector<LaurentTerm> terms_;
};

/// Delta(f): the hull of the origin and the exponents; must be full-dimensional.
inline LatticePolytope newton_polytope(const LaurentPolynomial& f) {
  return LatticePolytope::from_points(f.exponents(), true);
}

namespace detail {

inline std::uint64_t saturating_power(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

}  // namespace detail

/**
 * Counts N_t = #{x in (GF(q^k)^*)^n : Tr f(x) = t} for t in GF(p) by direct
 * enumeration in log coordinates and returns sum_t N_t zeta^t.
 */
inline CyclotomicInteger exp_sum(const LaurentPolynomial& f, int k, std::uint64_t budget = kDefaultBudget) {
  require(k >= 1, "exponential sum index k must be positive");
  const FiniteField& small = f.field();
  const std::int64_t p = small.p();
  const std::size_t n = f.variables();
  {
    // Check the point budget before building the extension field.
    const std::uint64_t Q = detail::saturating_power(static_cast<std::uint64_t>(p), static_cast<std::size_t>(small.degree() * k));
    const std::uint64_t required = detail::saturating_power(Q - 1, n);
    if (required > budget)
      throw BudgetExceeded("exponential sum S_" + std::to_string(k) + " over GF(" + std::to_string(p) + "^" +
                               std::to_string(small.degree() * k) + ")",
                           required, budget);
  }
  const FiniteField big = make_field(p, small.degree() * k);
  const std::int64_t M = big.unit_count();
  const std::size_t m = f.terms().size();

  std::vector<std::int64_t> coef_log(m);
  // step[i][j]: exponent of variable i in term j, reduced mod M.
  std::vector<std::vector<std::int64_t>> step(n, std::vector<std::int64_t>(m));
  for (std::size_t j = 0; j < m; ++j) {
    const auto& t = f.terms()[j];
    coef_log[j] = big.log_of(big.embed(small, t.coefficient));
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t e = static_cast<std::int64_t>(t.exponent[i] % M);
      step[i][j] = ((e % M) + M) % M;
    }
  }
  const std::int64_t* zech = big.zech_table().data();
  const std::int64_t* tr = big.trace_of_log().data();
  using Counts = std::vector<std::uint64_t>;

  // Innermost axis: `count` consecutive logs of the last variable.
  auto innermost = [&](std::vector<std::int64_t>& t, std::int64_t count, Counts& counts) {
    const std::int64_t* st = step[n - 1].data();
    for (std::int64_t x = 0; x < count; ++x) {
      std::int64_t s = t[0];
      for (std::size_t j = 1; j < m; ++j) {
        if (s < 0) {
          s = t[j];
          continue;
        }
        std::int64_t d = t[j] - s;
        if (d < 0) d += M;
        const std::int64_t z = zech[d];
        if (z < 0) {
          s = -1;
        } else {
          s += z;
          if (s >= M) s -= M;
        }
      }
      ++counts[static_cast<std::size_t>(s < 0 ? 0 : tr[s])];
      for (std::size_t j = 0; j < m; ++j) {
        t[j] += st[j];
        if (t[j] >= M) t[j] -= M;
      }
    }
  };
  // t holds the term logs with variables before `var` fixed and `var` at its first value.
  std::function<void(std::size_t, std::vector<std::int64_t>, std::int64_t, Counts&)> visit =
      [&](std::size_t var, std::vector<std::int64_t> t, std::int64_t count, Counts& counts) {
        if (var + 1 == n) {
          innermost(t, count, counts);
          return;
        }
        for (std::int64_t c = 0; c < count; ++c) {
          visit(var + 1, t, M, counts);
          for (std::size_t j = 0; j < m; ++j) {
            t[j] += step[var][j];
            if (t[j] >= M) t[j] -= M;
          }
        }
      };
  auto sweep = [&](std::size_t lo, std::size_t hi, Counts& counts) {
    counts.assign(static_cast<std::size_t>(p), 0);
    std::vector<std::int64_t> t(m);
    for (std::size_t j = 0; j < m; ++j) t[j] = (coef_log[j] + static_cast<std::int64_t>(lo) * step[0][j]) % M;
    visit(0, t, static_cast<std::int64_t>(hi - lo), counts);
  };

  auto partials = parallel_blocks<Counts>(static_cast<std::size_t>(M), worker_count(), sweep);
  std::vector<Integer> N(static_cast<std::size_t>(p), Integer(0));
  for (const auto& part : partials)
    for (std::size_t t = 0; t < part.size(); ++t) N[t] += part[t];
  Integer total = 0;
  for (const auto& c : N) total += c;
  Integer expected = 1;
  for (std::size_t i = 0; i < n; ++i) expected *= M;
  ensure(total == expected, "exponential sum point count does not equal (q^k-1)^n");
  return CyclotomicInteger::from_powers(p, N);
}

/**
 * L*(f,T)^{(-1)^{n-1}} = sum_i A_i T^i with A_0 = 1. Trailing zero
 * coefficients are trimmed, so degree() falls short of expected_degree
 * exactly when f is degenerate.
 */
struct LPolynomial {
  std::int64_t p = 2;
  int a = 1;
  std::size_t n = 1;
  std::vector<CyclotomicInteger> coefficients;
  std::vector<CyclotomicInteger> sums;  // S_1, ..., S_d
  std::size_t expected_degree = 0;

  bool inverted() const { return (n - 1) % 2 == 1; }
  std::size_t degree() const { return coefficients.size() - 1; }
};

/**
 * A_1..A_d from S_1..S_d by m A_m = sum_{k=1}^m S'_k A_{m-k} with
 * S'_k = (-1)^{n-1} S_k; every division by m must be exact.
 */
inline std::vector<CyclotomicInteger> l_coefficients_from_sums(const std::vector<CyclotomicInteger>& sums,
                                                              std::size_t n, std::int64_t p) {
  std::vector<CyclotomicInteger> A{CyclotomicInteger(p, Integer(1))};
  const bool flip = (n - 1) % 2 == 1;
  for (std::size_t mm = 1; mm <= sums.size(); ++mm) {
    CyclotomicInteger acc(p);
    for (std::size_t k = 1; k <= mm; ++k) acc += sums[k - 1] * A[mm - k];
    if (flip) acc = -acc;
    auto q = acc.exact_divide(Integer(mm));
    if (!q) throw InputError("L-series is not a polynomial of the expected degree");
    A.push_back(*q);
  }
  return A;
}

struct LPolynomialOptions {
  std::uint64_t budget = kDefaultBudget;
  /// Also compute S_{d+1} and require the degree-(d+1) coefficient to vanish.
  bool check_next_coefficient = false;
};

inline LPolynomial l_polynomial(const LaurentPolynomial& f, const LPolynomialOptions& opt = {}) {
  const auto P = newton_polytope(f);
  const Integer vol = normalized_volume(P);
  LPolynomial L;
  L.p = f.field().p();
  L.a = f.field().degree();
  L.n = f.variables();
  L.expected_degree = static_cast<std::size_t>(vol);
  const std::size_t top = L.expected_degree + (opt.check_next_coefficient ? 1 : 0);
  for (std::size_t k = 1; k <= top; ++k) L.sums.push_back(exp_sum(f, static_cast<int>(k), opt.budget));
  auto A = l_coefficients_from_sums(L.sums, L.n, L.p);
  if (opt.check_next_coefficient) {
    if (!A.back().is_zero()) throw InputError("L-series is not a polynomial of the expected degree");
    A.pop_back();
    L.sums.pop_back();
  }
  while (A.size() > 1 && A.back().is_zero()) A.pop_back();
  L.coefficients = std::move(A);
  return L;
}

inline PlanarPolygon newton_polygon(const LPolynomial& L) {
  std::vector<ExtPlanarPoint> pts;
  for (std::size_t i = 0; i < L.coefficients.size(); ++i)
    pts.push_back({Rational(static_cast<long>(i)), ord_q(L.coefficients[i], L.a)});
  return PlanarPolygon(lower_convex_hull(pts));
}

inline PlanarPolygon newton_polygon(const LaurentPolynomial& f, const LPolynomialOptions& opt = {}) {
  return newton_polygon(l_polynomial(f, opt));
}

struct OrdinarityVerdict {
  bool ordinary = false;
  PlanarPolygon np;
  PlanarPolygon hp;
  LPolynomial l;
};

/// NP(f) = HP(Delta(f)); refuses degenerate f, whose Newton polygon is undefined.
inline OrdinarityVerdict is_ordinary(const LaurentPolynomial& f, const LPolynomialOptions& opt = {}) {
  OrdinarityVerdict v;
  v.l = l_polynomial(f, opt);
  if (v.l.degree() != v.l.expected_degree)
    throw InputError("f is degenerate at p = " + std::to_string(v.l.p) + ": L-polynomial has degree " +
                     std::to_string(v.l.degree()) + " instead of " + std::to_string(v.l.expected_degree));
  v.np = newton_polygon(v.l);
  v.hp = hodge_polygon(newton_polytope(f));
  ensure(v.np.lies_on_or_above(v.hp), "Newton polygon lies below the Hodge polygon");
  v.ordinary = v.np == v.hp;
  return v;
}

struct GnpSample {
  PlanarPolygon estimate;
  std::size_t samples_used = 0;
  std::size_t degenerate_skipped = 0;
};

/**
 * Upper estimate of the generic Newton polygon: draws `trials` polynomials
 * whose support is every nonzero lattice point of Delta (vertex coefficients
 * nonzero, others arbitrary), takes the minimum of their Newton polygons at
 * each integer abscissa, and returns the lower hull of those minima.
 * Degenerate draws are skipped and counted.
 */
inline GnpSample sample_gnp(const LatticePolytope& Delta, std::int64_t p, int a, std::size_t trials,
                            std::uint64_t seed, std::uint64_t budget = kDefaultBudget) {
  require(trials >= 1, "sample_gnp needs at least one trial");
  require(Delta.origin_is_vertex(), "sample_gnp expects a polytope with the origin as a vertex");
  const FiniteField F = make_field(p, a);
  std::vector<IntVector> support;
  std::vector<bool> is_vertex;
  auto [lo, hi] = scaled_bounding_box(Delta, Rational(1));
  const IntVector zero(Delta.dimension(), Integer(0));
  for_each_lattice_point(lo, hi, [&](const IntVector& x) {
    if (x == zero || !Delta.contains(to_rational(x))) return;
    support.push_back(x);
    is_vertex.push_back(std::find(Delta.vertices().begin(), Delta.vertices().end(), x) != Delta.vertices().end());
  });
  std::mt19937_64 rng(seed);
  GnpSample out;
  std::map<std::int64_t, ExtRational> best;
  std::size_t degree = static_cast<std::size_t>(normalized_volume(Delta));
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<LaurentTerm> terms;
    for (std::size_t i = 0; i < support.size(); ++i) {
      const auto lo_c = is_vertex[i] ? std::uint64_t{1} : std::uint64_t{0};
      const auto c = static_cast<FiniteField::Element>(lo_c + rng() % (static_cast<std::uint64_t>(F.q()) - lo_c));
      if (c != 0) terms.push_back({support[i], c});
    }
    LaurentPolynomial f(F, Delta.dimension(), terms);
    LPolynomial L;
    try {
      L = l_polynomial(f, {budget, false});
    } catch (const InputError&) {
      ++out.degenerate_skipped;
      continue;
    }
    if (L.degree() != degree) {
      ++out.degenerate_skipped;
      continue;
    }
    const auto np = newton_polygon(L);
    for (std::size_t x = 0; x <= degree; ++x) {
      const ExtRational y(np(Rational(static_cast<long>(x))));
      auto [it, fresh] = best.emplace(static_cast<std::int64_t>(x), y);
      if (!fresh && y < it->second) it->second = y;
    }
    ++out.samples_used;
  }
  require(out.samples_used > 0, "every sampled polynomial was degenerate");
  std::vector<ExtPlanarPoint> pts;
  for (const auto& [x, y] : best) pts.push_back({Rational(x), y});
  out.estimate = PlanarPolygon(lower_convex_hull(pts));
  return out;
}

}  // namespace hodge
