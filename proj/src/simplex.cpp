#include "lipext/simplex.hpp"

#include <cmath>
#include <limits>

namespace lipext {

namespace {
constexpr double kPivotTol = 1e-10;
constexpr int kMaxIterations = 200000;

// Standard-form tableau: min c.x, A x = b, x >= 0, b >= 0.
struct Tableau {
  int m, n;
  std::vector<double> a;  // m x n
  std::vector<double> b;
  std::vector<double> c;
  std::vector<int> basis;  // size m, column index basic in each row

  double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  void pivot(int row, int col) {
    const double piv = at(row, col);
    for (int j = 0; j < n; ++j) at(row, j) /= piv;
    b[row] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == row) continue;
      const double factor = at(i, col);
      if (factor == 0.0) continue;
      for (int j = 0; j < n; ++j) at(i, j) -= factor * at(row, j);
      b[i] -= factor * b[row];
    }
    basis[row] = col;
  }

  // Bland's rule: entering variable = lowest index with negative reduced
  // cost; leaving row = min ratio, ties broken by lowest basic index.
  void run(const std::vector<bool>& allowed) {
    for (int iter = 0; iter < kMaxIterations; ++iter) {
      std::vector<double> y(m);
      for (int i = 0; i < m; ++i) y[i] = c[basis[i]];
      int enter = -1;
      for (int j = 0; j < n; ++j) {
        if (!allowed[j]) continue;
        double red = c[j];
        for (int i = 0; i < m; ++i) red -= y[i] * at(i, j);
        if (red < -kPivotTol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;  // optimal
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        const double aij = at(i, enter);
        if (aij > kPivotTol) {
          const double ratio = b[i] / aij;
          if (ratio < best - kPivotTol ||
              (ratio < best + kPivotTol && (leave < 0 || basis[i] < basis[leave]))) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave < 0) throw LpError(LpError::Kind::Unbounded, "linear program is unbounded");
      pivot(leave, enter);
    }
    throw LpError(LpError::Kind::IterationLimit, "simplex iteration limit reached");
  }

  double objective() const {
    double v = 0.0;
    for (int i = 0; i < m; ++i) v += c[basis[i]] * b[i];
    return v;
  }
};
}  // namespace

int LinearProgram::add_var(double objective_coeff, bool free_sign) {
  obj_.push_back(objective_coeff);
  free_.push_back(free_sign);
  return static_cast<int>(obj_.size()) - 1;
}

void LinearProgram::add_le(const std::vector<std::pair<int, double>>& terms, double rhs) {
  rows_.push_back({terms, rhs, -1});
}
void LinearProgram::add_ge(const std::vector<std::pair<int, double>>& terms, double rhs) {
  rows_.push_back({terms, rhs, +1});
}
void LinearProgram::add_eq(const std::vector<std::pair<int, double>>& terms, double rhs) {
  rows_.push_back({terms, rhs, 0});
}

LinearProgram::Solution LinearProgram::minimize() const {
  const int user_vars = static_cast<int>(obj_.size());
  // Column layout: split user variables first, then one slack per
  // inequality, then one artificial per row.
  std::vector<int> pos_col(user_vars), neg_col(user_vars, -1);
  int ncols = 0;
  for (int v = 0; v < user_vars; ++v) {
    pos_col[v] = ncols++;
    if (free_[v]) neg_col[v] = ncols++;
  }
  const int slack_base = ncols;
  int n_slacks = 0;
  for (const auto& r : rows_)
    if (r.type != 0) ++n_slacks;
  ncols += n_slacks;
  const int art_base = ncols;
  const int m = static_cast<int>(rows_.size());
  ncols += m;

  Tableau t;
  t.m = m;
  t.n = ncols;
  t.a.assign(static_cast<size_t>(m) * ncols, 0.0);
  t.b.resize(m);
  t.basis.resize(m);

  int slack_idx = 0;
  for (int i = 0; i < m; ++i) {
    const auto& r = rows_[i];
    double sign = r.rhs < 0.0 ? -1.0 : 1.0;
    for (const auto& [v, coef] : r.terms) {
      t.at(i, pos_col[v]) += sign * coef;
      if (neg_col[v] >= 0) t.at(i, neg_col[v]) -= sign * coef;
    }
    if (r.type != 0) {
      // le: +slack, ge: -slack (before sign normalization)
      t.at(i, slack_base + slack_idx) = sign * (r.type < 0 ? 1.0 : -1.0);
      ++slack_idx;
    }
    t.b[i] = sign * r.rhs;
    t.at(i, art_base + i) = 1.0;
    t.basis[i] = art_base + i;
  }

  // Phase 1: minimize the sum of artificials.
  t.c.assign(ncols, 0.0);
  for (int i = 0; i < m; ++i) t.c[art_base + i] = 1.0;
  std::vector<bool> allowed(ncols, true);
  t.run(allowed);
  if (t.objective() > 1e-7)
    throw LpError(LpError::Kind::Infeasible, "linear program is infeasible");

  // Drive any artificial still in the basis out of it where possible.
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] >= art_base) {
      for (int j = 0; j < art_base; ++j) {
        if (std::fabs(t.at(i, j)) > kPivotTol) {
          t.pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 2: original objective, artificial columns frozen.
  t.c.assign(ncols, 0.0);
  for (int v = 0; v < user_vars; ++v) {
    t.c[pos_col[v]] = obj_[v];
    if (neg_col[v] >= 0) t.c[neg_col[v]] = -obj_[v];
  }
  for (int j = art_base; j < ncols; ++j) allowed[j] = false;
  t.run(allowed);

  Solution sol;
  sol.objective = t.objective();
  sol.x.assign(user_vars, 0.0);
  std::vector<double> col_val(ncols, 0.0);
  for (int i = 0; i < m; ++i) col_val[t.basis[i]] = t.b[i];
  for (int v = 0; v < user_vars; ++v) {
    sol.x[v] = col_val[pos_col[v]];
    if (neg_col[v] >= 0) sol.x[v] -= col_val[neg_col[v]];
  }
  return sol;
}

}  // namespace lipext
