#pragma once

#include <vector>

#include "lipext/errors.hpp"

namespace lipext {

/// Dense two-phase primal simplex with Bland's rule (anti-cycling).
/// Solves  min c.x  s.t.  constraints, free or nonnegative variables.
/// Free variables are split internally.  Intended for the small certification
/// programs in this project, not for large-scale use.
class LinearProgram {
 public:
  /// Adds a variable with lower bound 0 (free = false) or unbounded sign
  /// (free = true).  Returns its index.
  int add_var(double objective_coeff, bool free_sign = false);

  void add_le(const std::vector<std::pair<int, double>>& terms, double rhs);
  void add_ge(const std::vector<std::pair<int, double>>& terms, double rhs);
  void add_eq(const std::vector<std::pair<int, double>>& terms, double rhs);

  struct Solution {
    double objective;
    std::vector<double> x;  // one entry per added variable
  };

  /// Throws LpError on infeasibility, unboundedness or iteration overflow.
  Solution minimize() const;

 private:
  struct Row {
    std::vector<std::pair<int, double>> terms;
    double rhs;
    int type;  // -1 le, 0 eq, +1 ge
  };
  std::vector<double> obj_;
  std::vector<bool> free_;
  std::vector<Row> rows_;
};

}  // namespace lipext
