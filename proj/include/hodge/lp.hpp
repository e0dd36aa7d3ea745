#pragma once

// Exact two-phase primal simplex over the rationals with Bland's rule.
//
// Problems are given in equality form  A x = b  with a per-variable
// non-negativity flag; free variables are split internally. Every optimal
// answer carries a dual certificate that is verified exactly before return.

#include "hodge/matrix.hpp"

namespace hodge {

enum class LpSense { minimize, maximize };
enum class LpStatus { optimal, infeasible, unbounded };

struct LpProblem {
  LpSense sense = LpSense::minimize;
  RationalVector objective;    // length = variable count
  RationalMatrix constraints;  // rows x variable count
  RationalVector rhs;          // length = rows
  std::vector<bool> nonneg;    // length = variable count; false = free
};

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::optional<Rational> value;  // present iff optimal
  RationalVector witness;         // primal optimum, empty unless optimal
  /// y with b.y = value and A^T y <= c (min) / >= c (max) on non-negative
  /// columns, equality on free columns. Empty unless optimal.
  RationalVector dual;

  bool optimal() const { return status == LpStatus::optimal; }
};

namespace detail {

class SimplexTableau {
 public:
  // rows x (cols + 1); last column holds the right-hand side.
  SimplexTableau(RationalMatrix t, std::vector<std::size_t> basis)
      : t_(std::move(t)), basis_(std::move(basis)), cost_(t_.cols()) {}

  void set_costs(const RationalVector& c) {
    const std::size_t n = t_.cols() - 1;
    for (std::size_t j = 0; j < n; ++j) cost_[j] = c[j];
    cost_[n] = 0;
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= n; ++j)
        if (t_(i, j) != 0) cost_[j] -= cb * t_(i, j);
    }
  }

  /// Runs Bland's rule over columns < allowed. Returns false if unbounded.
  bool run(std::size_t allowed) {
    const std::size_t rhs = t_.cols() - 1;
    while (true) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == allowed) return true;
      std::size_t leave = t_.rows();
      Rational best;
      for (std::size_t i = 0; i < t_.rows(); ++i) {
        if (t_(i, enter) <= 0) continue;
        Rational ratio = t_(i, rhs) / t_(i, enter);
        if (leave == t_.rows() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t_.rows()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const std::size_t ncols = t_.cols();
    Rational inv = 1 / t_(r, c);
    for (std::size_t j = 0; j < ncols; ++j)
      if (t_(r, j) != 0) t_(r, j) *= inv;
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < ncols; ++j)
      if (t_(r, j) != 0) nz.push_back(j);
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (i == r || t_(i, c) == 0) continue;
      Rational f = t_(i, c);
      for (auto j : nz) t_(i, j) -= f * t_(r, j);
    }
    if (cost_[c] != 0) {
      Rational f = cost_[c];
      for (auto j : nz) cost_[j] -= f * t_(r, j);
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    RationalMatrix smaller(t_.rows() - 1, t_.cols());
    for (std::size_t i = 0, k = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      for (std::size_t j = 0; j < t_.cols(); ++j) smaller(k, j) = t_(i, j);
      ++k;
    }
    t_ = std::move(smaller);
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

  const RationalMatrix& table() const { return t_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const Rational& objective_value() const { return cost_.back(); }  // = -z

 private:
  RationalMatrix t_;
  std::vector<std::size_t> basis_;
  RationalVector cost_;
};

}  // namespace detail

/**
 * Solves the linear program exactly. Deterministic: Bland's rule on a fixed
 * column order, so equal inputs give equal witnesses.
 */
inline LpResult lp_optimize(const LpProblem& lp) {
  const std::size_t nvar = lp.objective.size();
  const std::size_t m = lp.constraints.rows();
  require(lp.constraints.cols() == nvar || (m == 0), "lp_optimize: constraint columns != variable count");
  require(lp.rhs.size() == m, "lp_optimize: rhs length != constraint rows");
  require(lp.nonneg.size() == nvar, "lp_optimize: nonneg flags length != variable count");

  // Standard-form columns: one per non-negative variable, two per free one.
  std::vector<std::size_t> pos_col(nvar), neg_col(nvar, SIZE_MAX);
  std::size_t nstd = 0;
  for (std::size_t j = 0; j < nvar; ++j) {
    pos_col[j] = nstd++;
    if (!lp.nonneg[j]) neg_col[j] = nstd++;
  }
  const Rational sense_sign = lp.sense == LpSense::minimize ? 1 : -1;
  RationalVector c_std(nstd + m);
  for (std::size_t j = 0; j < nvar; ++j) {
    c_std[pos_col[j]] = sense_sign * lp.objective[j];
    if (neg_col[j] != SIZE_MAX) c_std[neg_col[j]] = -sense_sign * lp.objective[j];
  }

  std::vector<Rational> row_sign(m, Rational(1));
  RationalMatrix a_std(m, nstd);
  RationalMatrix t(m, nstd + m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.rhs[i] < 0) row_sign[i] = -1;
    for (std::size_t j = 0; j < nvar; ++j) {
      const Rational a = row_sign[i] * lp.constraints(i, j);
      a_std(i, pos_col[j]) = a;
      if (neg_col[j] != SIZE_MAX) a_std(i, neg_col[j]) = -a;
    }
    for (std::size_t j = 0; j < nstd; ++j) t(i, j) = a_std(i, j);
    t(i, nstd + i) = 1;
    t(i, nstd + m) = row_sign[i] * lp.rhs[i];
  }
  std::vector<std::size_t> basis(m);
  std::iota(basis.begin(), basis.end(), nstd);
  detail::SimplexTableau tab(std::move(t), basis);

  // Phase 1: minimise the sum of artificials.
  RationalVector phase1(nstd + m);
  for (std::size_t i = 0; i < m; ++i) phase1[nstd + i] = 1;
  tab.set_costs(phase1);
  tab.run(nstd + m);
  if (tab.objective_value() != 0) return LpResult{LpStatus::infeasible, std::nullopt, {}, {}};

  // Drive artificials out of the basis; rows where that is impossible are redundant.
  for (std::size_t i = 0; i < tab.basis().size();) {
    if (tab.basis()[i] < nstd) {
      ++i;
      continue;
    }
    std::size_t col = nstd;
    for (std::size_t j = 0; j < nstd; ++j)
      if (tab.table()(i, j) != 0) {
        col = j;
        break;
      }
    if (col < nstd) {
      tab.pivot(i, col);
      ++i;
    } else {
      tab.drop_row(i);
    }
  }

  // Phase 2.
  tab.set_costs(c_std);
  if (!tab.run(nstd)) return LpResult{LpStatus::unbounded, std::nullopt, {}, {}};

  RationalVector x_std(nstd);
  const std::size_t rhs_col = tab.table().cols() - 1;
  for (std::size_t i = 0; i < tab.basis().size(); ++i) x_std[tab.basis()[i]] = tab.table()(i, rhs_col);

  LpResult res;
  res.status = LpStatus::optimal;
  res.witness.assign(nvar, Rational(0));
  for (std::size_t j = 0; j < nvar; ++j) {
    res.witness[j] = x_std[pos_col[j]];
    if (neg_col[j] != SIZE_MAX) res.witness[j] -= x_std[neg_col[j]];
  }
  res.value = dot(lp.objective, res.witness);

  // Dual certificate: any y with B^T y = c_B on the sign-adjusted system.
  // Redundant rows make y non-unique but leave reduced costs and b.y fixed.
  const std::size_t k = tab.basis().size();
  RationalMatrix bt(k, m);
  RationalVector cb(k);
  for (std::size_t r = 0; r < k; ++r) {
    const std::size_t col = tab.basis()[r];
    cb[r] = c_std[col];
    for (std::size_t i = 0; i < m; ++i) bt(r, i) = a_std(i, col);
  }
  auto y_std = solve_any(bt, cb);
  ensure(y_std.has_value(), "lp_optimize: inconsistent optimal basis");
  res.dual.assign(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) res.dual[i] = sense_sign * row_sign[i] * (*y_std)[i];

  // Verify primal feasibility, dual feasibility and equal objectives.
  for (std::size_t i = 0; i < m; ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < nvar; ++j) lhs += lp.constraints(i, j) * res.witness[j];
    ensure(lhs == lp.rhs[i], "lp_optimize: witness violates an equality");
  }
  for (std::size_t j = 0; j < nvar; ++j) {
    if (lp.nonneg[j]) ensure(res.witness[j] >= 0, "lp_optimize: witness violates non-negativity");
    Rational aty = 0;
    for (std::size_t i = 0; i < m; ++i) aty += lp.constraints(i, j) * res.dual[i];
    const Rational slack = sense_sign * (lp.objective[j] - aty);
    if (lp.nonneg[j]) ensure(slack >= 0, "lp_optimize: dual certificate infeasible");
    else ensure(slack == 0, "lp_optimize: dual certificate infeasible on a free column");
  }
  ensure(dot(lp.rhs, res.dual) == *res.value, "lp_optimize: duality gap in certificate");
  return res;
}

/**
 * Convenience builder for problems with <=, >= and = rows; inequality rows
 * get their own slack columns appended after the user variables.
 */
class LpBuilder {
 public:
  enum class Relation { le, ge, eq };

  explicit LpBuilder(std::size_t variables) : nvar_(variables), nonneg_(variables, true) {}

  void set_free(std::size_t j) { nonneg_[j] = false; }
  void set_objective(LpSense sense, RationalVector c) {
    sense_ = sense;
    objective_ = std::move(c);
  }
  void add(RationalVector coeffs, Relation rel, Rational rhs) {
    require(coeffs.size() == nvar_, "LpBuilder::add: coefficient length mismatch");
    rows_.push_back({std::move(coeffs), rel, std::move(rhs)});
  }

  LpProblem build() const {
    std::size_t slacks = 0;
    for (const auto& r : rows_)
      if (r.rel != Relation::eq) ++slacks;
    LpProblem lp;
    lp.sense = sense_;
    lp.objective = objective_.empty() ? RationalVector(nvar_) : objective_;
    lp.objective.resize(nvar_ + slacks);
    lp.nonneg = nonneg_;
    lp.nonneg.resize(nvar_ + slacks, true);
    lp.constraints = RationalMatrix(rows_.size(), nvar_ + slacks);
    lp.rhs.resize(rows_.size());
    std::size_t s = nvar_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (std::size_t j = 0; j < nvar_; ++j) lp.constraints(i, j) = rows_[i].coeffs[j];
      if (rows_[i].rel == Relation::le) lp.constraints(i, s++) = 1;
      else if (rows_[i].rel == Relation::ge) lp.constraints(i, s++) = -1;
      lp.rhs[i] = rows_[i].rhs;
    }
    return lp;
  }

  /// Solves and truncates the witness to the user variables.
  LpResult solve() const {
    auto res = lp_optimize(build());
    if (res.optimal()) res.witness.resize(nvar_);
    return res;
  }

 private:
  struct Row {
    RationalVector coeffs;
    Relation rel;
    Rational rhs;
  };
  std::size_t nvar_;
  std::vector<bool> nonneg_;
  LpSense sense_ = LpSense::minimize;
  RationalVector objective_;
  std::vector<Row> rows_;
};

}  // namespace hodge
