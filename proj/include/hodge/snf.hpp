#pragma once

#include "hodge/matrix.hpp"

namespace hodge {

/// U * M * V = S with U, V unimodular and S = diag(s_1 | s_2 | ... | s_n), s_i > 0.
struct SmithForm {
  RationalMatrix U;
  RationalMatrix S;
  RationalMatrix V;

  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < S.rows(); ++i) d.push_back(numerator(S(i, i)));
    return d;
  }
};

namespace detail {

using IntMatrix = std::vector<std::vector<Integer>>;

inline IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline RationalMatrix to_rational_matrix(const IntMatrix& m) {
  RationalMatrix r(m.size(), m.empty() ? 0 : m.front().size());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) = Rational(m[i][j]);
  return r;
}

// Floor division so remainders land in [0, |b|).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace detail

/** Smith normal form of a non-singular square integer matrix. */
inline SmithForm smith_normal_form(const RationalMatrix& m) {
  using detail::IntMatrix;
  require(m.rows() == m.cols(), "smith_normal_form: matrix must be square");
  require(m.is_integral(), "smith_normal_form: matrix must have integer entries");
  const std::size_t n = m.rows();
  require(determinant(m) != 0, "smith_normal_form: singular matrix (degenerate diagonal polynomial)");

  IntMatrix a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = numerator(m(i, j));
  IntMatrix u = detail::int_identity(n), v = detail::int_identity(n);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) {
      std::swap(a[r][i], a[r][j]);
      std::swap(v[r][i], v[r][j]);
    }
  };
  // row_i -= q * row_j
  auto row_sub = [&](std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < n; ++c) {
      a[i][c] -= q * a[j][c];
      u[i][c] -= q * u[j][c];
    }
  };
  // col_i -= q * col_j
  auto col_sub = [&](std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t r = 0; r < n; ++r) {
      a[r][i] -= q * a[r][j];
      v[r][i] -= q * v[r][j];
    }
  };

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = n, pc = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pr == n || abs(a[i][j]) < abs(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      ensure(pr != n, "smith_normal_form: unexpected zero block");
      if (pr != t) swap_rows(pr, t);
      if (pc != t) swap_cols(pc, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        row_sub(i, t, detail::floor_div(a[i][t], a[t][t]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        col_sub(j, t, detail::floor_div(a[t][j], a[t][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and retry.
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == n) break;
      row_sub(t, bad, Integer(-1));
    }
    if (a[t][t] < 0) {
      for (std::size_t c = 0; c < n; ++c) {
        a[t][c] = -a[t][c];
        u[t][c] = -u[t][c];
      }
    }
  }

  SmithForm out{detail::to_rational_matrix(u), detail::to_rational_matrix(a), detail::to_rational_matrix(v)};
  ensure(out.U * m * out.V == out.S, "smith_normal_form: U*M*V != S");
  return out;
}

}  // namespace hodge
