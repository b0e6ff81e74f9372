#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lipext/metric_space.hpp"

namespace lipext {

/// A real function given by its values on a subset of a finite metric space.
/// values[k] is the value at domain.indices[k].
struct LipFunction {
  SubsetRef domain;
  std::vector<double> values;

  LipFunction() = default;
  LipFunction(SubsetRef domain_, std::vector<double> values_);

  double at_position(int k) const { return values[k]; }
  /// Value at an ambient index; the index must belong to the domain.
  double at(int ambient_index) const;
};

struct LipNorm {
  double value = 0.0;
  /// Ambient indices of a pair realizing the maximum slope, when one exists.
  std::optional<std::pair<int, int>> witness;
};

/// Exact Lipschitz seminorm: max over domain pairs of |f(x)-f(y)| / d(x,y).
/// Zero (no witness) on single-point domains.
LipNorm lip_norm(const LipFunction& f);

enum class McShaneMode { Inf, Sup, Midpoint };

/// Norm-preserving extension of f to its domain union `targets`:
///   Inf       F(x) = min_s f(s) + L d(x,s)
///   Sup       F(x) = max_s f(s) - L d(x,s)
///   Midpoint  average of the two
/// with L the exact Lipschitz seminorm of f.  Restriction to the original
/// domain reproduces f bitwise, and lip_norm(F) equals L when the domain has
/// at least two points.
LipFunction mcshane_extend(const LipFunction& f, const std::vector<int>& targets,
                           McShaneMode mode = McShaneMode::Inf);

struct ProductRuleCheck {
  double lhs;  // lip norm of the pointwise product
  double rhs;  // lip(f) sup_{supp f}|g| + lip(g) sup_{supp g}|f|
  bool holds;  // lhs <= rhs + tol
};

/// Leibniz-style bound for pointwise products, suprema over supports.
ProductRuleCheck product_rule_check(const LipFunction& f, const LipFunction& g,
                                    double tol = kDefaultTol);

}  // namespace lipext
