#pragma once

// Independent brute-force oracles used to freeze expected values in tests.
// None of these call into the code paths they check.

#include "hodge/expsum.hpp"
#include "hodge/lp.hpp"

#include <map>
#include <set>

namespace hodge::oracles {

struct BasisEnumeration {
  bool feasible = false;
  Rational best;
};

/// Optimum over all basic feasible solutions (valid when the LP is bounded).
inline BasisEnumeration lp_by_basis_enumeration(const LpProblem& lp) {
  const std::size_t m = lp.constraints.rows(), n = lp.constraints.cols();
  const std::size_t r = rank(lp.constraints);
  BasisEnumeration out;
  for_each_subset(n, r, [&](const std::vector<std::size_t>& cols) {
    RationalMatrix sub(m, r);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < r; ++j) sub(i, j) = lp.constraints(i, cols[j]);
    if (rank(sub) != r) return;
    auto xs = solve_any(sub, lp.rhs);
    if (!xs) return;
    for (const auto& v : *xs)
      if (v < 0) return;
    Rational obj = 0;
    for (std::size_t j = 0; j < r; ++j) obj += lp.objective[cols[j]] * (*xs)[j];
    const bool better = lp.sense == LpSense::minimize ? obj < out.best : obj > out.best;
    if (!out.feasible || better) out.best = obj;
    out.feasible = true;
  });
  return out;
}

/// Smith diagonal from gcds of k x k minors: s_k = d_k / d_{k-1}.
inline std::vector<Integer> determinantal_divisor_diagonal(const RationalMatrix& M) {
  const std::size_t n = M.rows();
  std::vector<Integer> d{1};
  for (std::size_t k = 1; k <= n; ++k) {
    Integer g = 0;
    for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        RationalMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = M(rows[i], cols[j]);
        g = gcd_of(g, numerator(determinant(sub)));
      });
    });
    d.push_back(g);
  }
  std::vector<Integer> s;
  for (std::size_t k = 1; k <= n; ++k) s.push_back(d[k] / d[k - 1]);
  return s;
}

/// N_t counts by evaluating f term by term at every point with plain field
/// operations, without logarithm bookkeeping.
inline CyclotomicInteger exp_sum_by_evaluation(const LaurentPolynomial& f, int k) {
  const FiniteField& small = f.field();
  const FiniteField big = make_field(small.p(), small.degree() * k);
  const std::size_t n = f.variables();
  std::vector<Integer> N(static_cast<std::size_t>(small.p()), Integer(0));
  std::vector<FiniteField::Element> x(n, 1);
  while (true) {
    FiniteField::Element value = 0;
    for (const auto& t : f.terms()) {
      FiniteField::Element mono = big.embed(small, t.coefficient);
      for (std::size_t i = 0; i < n; ++i) mono = big.mul(mono, big.pow(x[i], static_cast<std::int64_t>(t.exponent[i])));
      value = big.add(value, mono);
    }
    N[static_cast<std::size_t>(big.trace(value))] += 1;
    std::size_t i = 0;
    while (i < n && ++x[i] == static_cast<FiniteField::Element>(big.q())) x[i++] = 1;
    if (i == n) break;
  }
  return CyclotomicInteger::from_powers(small.p(), N);
}

/// Weight from the definition: least c with u = sum c_j v_j, c_j >= 0, sum c_j = c,
/// searched over all vertex subsets forming a basis.
inline ExtRational weight_by_vertex_bases(const std::vector<IntVector>& vertices, const RationalVector& u) {
  const std::size_t n = u.size();
  std::optional<Rational> best;
  for_each_subset(vertices.size(), n, [&](const std::vector<std::size_t>& idx) {
    std::vector<RationalVector> cols;
    for (auto i : idx) cols.push_back(to_rational(vertices[i]));
    auto M = RationalMatrix::from_columns(cols);
    auto c = solve_square(M, u);
    if (!c) return;
    Rational s = 0;
    for (const auto& ci : *c) {
      if (ci < 0) return;
      s += ci;
    }
    if (!best || s < *best) best = s;
  });
  if (!best) return ExtRational::infinity();
  return ExtRational(*best);
}

/// r in ((1/|det|) Z)^n with 0 <= r_i < 1 and M r integral, by exhaustive search.
inline std::set<RationalVector> solution_group_by_search(const RationalMatrix& M) {
  const Integer det = abs(numerator(determinant(M)));
  const std::size_t n = M.rows();
  std::set<RationalVector> out;
  std::vector<Integer> j(n, Integer(0));
  while (true) {
    RationalVector r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = Rational(j[i]) / Rational(det);
    if (is_integral(M * r)) out.insert(r);
    std::size_t i = 0;
    while (i < n && ++j[i] == det) j[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace hodge::oracles
