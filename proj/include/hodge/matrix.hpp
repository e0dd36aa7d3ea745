#pragma once

#include "hodge/core.hpp"

#include <utility>

namespace hodge {

/** Dense exact matrix, row-major. */
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Matrix whose columns are the given vectors.
  template <typename Vec>
  static RationalMatrix from_columns(const std::vector<Vec>& cols) {
    require(!cols.empty(), "from_columns: no columns");
    RationalMatrix m(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      require(cols[j].size() == m.rows_, "from_columns: ragged columns");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = Rational(cols[j][i]);
    }
    return m;
  }

  template <typename Vec>
  static RationalMatrix from_rows(const std::vector<Vec>& rows) {
    require(!rows.empty(), "from_rows: no rows");
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == m.cols_, "from_rows: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = Rational(rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalVector row(std::size_t i) const {
    return RationalVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  RationalVector column(std::size_t j) const {
    RationalVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    require(a.cols_ == b.rows_, "matrix product: dimension mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend RationalVector operator*(const RationalMatrix& a, const RationalVector& x) {
    require(a.cols_ == x.size(), "matrix-vector product: dimension mismatch");
    RationalVector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  bool is_integral() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return hodge::is_integral(q); });
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/**
 * Reduced row echelon form in place; returns the pivot columns.
 * Only the first `limit_cols` columns are eligible as pivots (default all).
 */
inline std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t limit_cols = SIZE_MAX) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t ncols = std::min(limit_cols, m.cols());
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

inline Rational determinant(RationalMatrix m) {
  require(m.rows() == m.cols(), "determinant of non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Unique solution of the square system A x = b, or nullopt if A is singular.
inline std::optional<RationalVector> solve_square(const RationalMatrix& a, const RationalVector& b) {
  require(a.rows() == a.cols() && a.rows() == b.size(), "solve_square: dimension mismatch");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto piv = row_reduce(aug, n);
  if (piv.size() < n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

/// Some solution of A x = b (free variables set to 0), or nullopt if inconsistent.
inline std::optional<RationalVector> solve_any(const RationalMatrix& a, const RationalVector& b) {
  require(a.rows() == b.size(), "solve_any: dimension mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = row_reduce(aug, a.cols());
  for (std::size_t i = piv.size(); i < a.rows(); ++i)
    if (aug(i, a.cols()) != 0) return std::nullopt;
  RationalVector x(a.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, a.cols());
  return x;
}

/// Basis of the right null space {x : A x = 0}.
inline std::vector<RationalVector> null_space(RationalMatrix a) {
  auto piv = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(a.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  require(a.rows() == a.cols(), "inverse of non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  if (row_reduce(aug, n).size() < n) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/**
 * The functional e with <e, p> = 1 for each of n affinely independent points
 * p in R^n whose affine span misses the origin.
 */
inline AffineFunctional hyperplane_through(const std::vector<IntVector>& points) {
  require(!points.empty(), "hyperplane_through: no points");
  const std::size_t n = points.front().size();
  require(points.size() == n, "hyperplane_through: need exactly n points in dimension n");
  auto m = RationalMatrix::from_rows(points);
  auto e = solve_square(m, RationalVector(n, Rational(1)));
  if (!e) throw InputError("hyperplane_through: points are affinely dependent or their span contains the origin");
  return AffineFunctional{*e, 0};
}

}  // namespace hodge
