#include "lipext/lipfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lipext {

LipFunction::LipFunction(SubsetRef domain_, std::vector<double> values_)
    : domain(std::move(domain_)), values(std::move(values_)) {
  if (domain.indices.empty())
    throw FunctionError(FunctionError::Kind::EmptyDomain, "function on empty domain");
  if (values.size() != domain.indices.size())
    throw FunctionError(FunctionError::Kind::DomainMismatch,
                        "value count does not match domain size");
}

double LipFunction::at(int ambient_index) const {
  int pos = domain.position_of(ambient_index);
  if (pos < 0)
    throw FunctionError(FunctionError::Kind::DomainMismatch,
                        "point " + std::to_string(ambient_index) + " not in function domain");
  return values[pos];
}

LipNorm lip_norm(const LipFunction& f) {
  LipNorm res;
  const FiniteMetricSpace& space = *f.domain.space;
  const auto& idx = f.domain.indices;
  for (size_t a = 0; a < idx.size(); ++a) {
    for (size_t b = a + 1; b < idx.size(); ++b) {
      double slope = std::fabs(f.values[a] - f.values[b]) / space.d(idx[a], idx[b]);
      if (slope > res.value) {
        res.value = slope;
        res.witness = std::make_pair(idx[a], idx[b]);
      }
    }
  }
  return res;
}

LipFunction mcshane_extend(const LipFunction& f, const std::vector<int>& targets,
                           McShaneMode mode) {
  const SpacePtr& space = f.domain.space;
  for (int t : targets)
    if (t < 0 || t >= space->size())
      throw FunctionError(FunctionError::Kind::DomainMismatch,
                          "target index " + std::to_string(t) + " outside ambient space");

  std::vector<int> out_idx = f.domain.indices;
  for (int t : targets)
    if (!f.domain.contains(t)) out_idx.push_back(t);
  std::sort(out_idx.begin(), out_idx.end());
  out_idx.erase(std::unique(out_idx.begin(), out_idx.end()), out_idx.end());

  const double L = lip_norm(f).value;
  const auto& sidx = f.domain.indices;
  std::vector<double> out_vals(out_idx.size());
  for (size_t k = 0; k < out_idx.size(); ++k) {
    const int x = out_idx[k];
    const int pos = f.domain.position_of(x);
    if (pos >= 0) {
      out_vals[k] = f.values[pos];  // extension property, bitwise
      continue;
    }
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (size_t s = 0; s < sidx.size(); ++s) {
      const double dx = space->d(x, sidx[s]);
      hi = std::min(hi, f.values[s] + L * dx);
      lo = std::max(lo, f.values[s] - L * dx);
    }
    switch (mode) {
      case McShaneMode::Inf: out_vals[k] = hi; break;
      case McShaneMode::Sup: out_vals[k] = lo; break;
      case McShaneMode::Midpoint: out_vals[k] = 0.5 * (lo + hi); break;
    }
  }
  return LipFunction(SubsetRef(space, std::move(out_idx)), std::move(out_vals));
}

ProductRuleCheck product_rule_check(const LipFunction& f, const LipFunction& g, double tol) {
  if (f.domain.space != g.domain.space || f.domain.indices != g.domain.indices)
    throw FunctionError(FunctionError::Kind::DomainMismatch,
                        "product rule requires a shared domain");
  std::vector<double> prod(f.values.size());
  for (size_t i = 0; i < prod.size(); ++i) prod[i] = f.values[i] * g.values[i];
  LipFunction fg(f.domain, std::move(prod));

  // sup over supp(f) of |g| and vice versa; sup over an empty support is 0.
  double sup_g_on_f = 0.0, sup_f_on_g = 0.0;
  for (size_t i = 0; i < f.values.size(); ++i) {
    if (f.values[i] != 0.0) sup_g_on_f = std::max(sup_g_on_f, std::fabs(g.values[i]));
    if (g.values[i] != 0.0) sup_f_on_g = std::max(sup_f_on_g, std::fabs(f.values[i]));
  }
  ProductRuleCheck res;
  res.lhs = lip_norm(fg).value;
  res.rhs = lip_norm(f).value * sup_g_on_f + lip_norm(g).value * sup_f_on_g;
  res.holds = res.lhs <= res.rhs + tol;
  return res;
}

}  // namespace lipext
