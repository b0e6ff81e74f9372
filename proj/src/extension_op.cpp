#include "lipext/extension_op.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lipext/rng.hpp"

namespace lipext {

std::vector<double> ExtensionOperator::apply_all(const LipFunction& f) const {
  if (f.domain.space != ambient || f.domain.indices != source.indices)
    throw FunctionError(FunctionError::Kind::DomainMismatch,
                        "function domain does not match operator source");
  std::vector<double> out(ambient->size(), 0.0);
  for (int x = 0; x < ambient->size(); ++x) {
    double s = 0.0;
    for (size_t j = 0; j < f.values.size(); ++j) s += rows[x][j] * f.values[j];
    out[x] = s;
  }
  return out;
}

LipFunction ExtensionOperator::apply(const LipFunction& f, const std::vector<int>& query) const {
  std::vector<double> all = apply_all(f);
  if (query.empty()) {
    std::vector<int> idx(ambient->size());
    for (int i = 0; i < ambient->size(); ++i) idx[i] = i;
    return LipFunction(SubsetRef(ambient, std::move(idx)), std::move(all));
  }
  SubsetRef dom(ambient, query);
  std::vector<double> vals;
  vals.reserve(dom.indices.size());
  for (int i : dom.indices) vals.push_back(all[i]);
  return LipFunction(std::move(dom), std::move(vals));
}

void ExtensionOperator::validate(double tol) const {
  if (!ambient || source.space != ambient)
    throw FunctionError(FunctionError::Kind::DomainMismatch,
                        "operator source must live in the ambient space");
  if (static_cast<int>(rows.size()) != ambient->size())
    throw FreeSpaceError(FreeSpaceError::Kind::NotMaterializable, "row count mismatch");
  for (int x = 0; x < ambient->size(); ++x) {
    if (static_cast<int>(rows[x].size()) != source.size())
      throw FreeSpaceError(FreeSpaceError::Kind::NotMaterializable, "column count mismatch");
    double sum = 0.0;
    for (double v : rows[x]) sum += v;
    if (std::fabs(sum - 1.0) > tol)
      throw FreeSpaceError(FreeSpaceError::Kind::NotMaterializable,
                           "row " + std::to_string(x) + " does not sum to one");
    const int pos = source.position_of(x);
    if (pos >= 0)
      for (int j = 0; j < source.size(); ++j)
        if (std::fabs(rows[x][j] - (j == pos ? 1.0 : 0.0)) > tol)
          throw FreeSpaceError(FreeSpaceError::Kind::NotMaterializable,
                               "extension property fails at source point " + std::to_string(x));
  }
}

ExtensionOperator mcshane_operator(const SubsetRef& S, McShaneMode mode,
                                   bool compute_exact_bound) {
  const SpacePtr& space = S.space;
  ExtensionOperator E;
  E.ambient = space;
  E.source = S;
  E.provenance = "mcshane";
  const int n = space->size();
  const int ns = S.size();
  E.rows.assign(n, std::vector<double>(ns, 0.0));

  int pin_pos = 0;
  {
    const int p = S.position_of(space->base_point());
    if (p >= 0) pin_pos = p;
  }
  // Column for the pin starts as the constant-one extension; each other
  // column is the norm-preserving extension of that point's indicator, and
  // the pin column absorbs the complement so rows sum to one.
  for (int x = 0; x < n; ++x) E.rows[x][pin_pos] = 1.0;
  std::vector<int> everything(n);
  for (int i = 0; i < n; ++i) everything[i] = i;
  for (int p = 0; p < ns; ++p) {
    if (p == pin_pos) continue;
    std::vector<double> indicator(ns, 0.0);
    indicator[p] = 1.0;
    LipFunction basis(S, indicator);
    LipFunction ext = mcshane_extend(basis, everything, mode);
    for (int x = 0; x < n; ++x) {
      const double v = ext.at(x);
      E.rows[x][p] = v;
      E.rows[x][pin_pos] -= v;
    }
  }
  E.claimed_bound = 1.0;
  if (compute_exact_bound && ns >= 2)
    E.claimed_bound = std::max(1.0, exact_operator_norm(*space, S.indices, E.rows));
  return E;
}

ExtensionOperator retraction_operator(const SpacePtr& ambient, const SubsetRef& source,
                                      const std::vector<int>& target_of,
                                      std::string provenance, double claimed_bound) {
  if (static_cast<int>(target_of.size()) != ambient->size())
    throw SizeError("retraction must assign a target to every ambient point");
  ExtensionOperator E;
  E.ambient = ambient;
  E.source = source;
  E.provenance = std::move(provenance);
  E.claimed_bound = claimed_bound;
  E.rows.assign(ambient->size(), std::vector<double>(source.size(), 0.0));
  for (int x = 0; x < ambient->size(); ++x) {
    const int pos = source.position_of(target_of[x]);
    if (pos < 0)
      throw FunctionError(FunctionError::Kind::DomainMismatch,
                          "retraction target " + std::to_string(target_of[x]) +
                              " is not a source point");
    E.rows[x][pos] = 1.0;
  }
  for (int s : source.indices)
    if (target_of[s] != s)
      throw FunctionError(FunctionError::Kind::DomainMismatch,
                          "retraction must fix source point " + std::to_string(s));
  return E;
}

ExtensionOperator glue_pair(const ExtensionOperator& E1, const ExtensionOperator& E2, double r,
                            double tol) {
  if (E1.ambient != E2.ambient)
    throw FunctionError(FunctionError::Kind::DomainMismatch,
                        "glued operators must share the ambient space");
  const SpacePtr& space = E1.ambient;
  const auto& s1 = E1.source.indices;
  const auto& s2 = E2.source.indices;
  for (int x : s1)
    if (E2.source.contains(x))
      throw FamilyError(FamilyError::Kind::OverlappingSets,
                        "glued sources share point " + std::to_string(x), 0, 1, x);
  if (!(r > 0.0)) throw GlueError(GlueError::Kind::SetsTooClose, "cutoff width must be positive");
  const double gap = set_distance(*space, s1, s2);
  if (gap < r - tol)
    throw GlueError(GlueError::Kind::SetsTooClose,
                    "sources at distance " + std::to_string(gap) +
                        " but cutoff width is " + std::to_string(r));

  // Union source; remember where each half lands.
  std::vector<int> uni = s1;
  uni.insert(uni.end(), s2.begin(), s2.end());
  std::sort(uni.begin(), uni.end());
  SubsetRef source(space, uni);

  ExtensionOperator E;
  E.ambient = space;
  E.source = source;
  E.provenance = "glue_pair";
  const int n = space->size();
  E.rows.assign(n, std::vector<double>(source.size(), 0.0));
  for (int x = 0; x < n; ++x) {
    const double h = std::max(0.0, 1.0 - dist_to_set(*space, x, s2) / r);
    for (size_t j = 0; j < s1.size(); ++j)
      E.rows[x][source.position_of(s1[j])] += (1.0 - h) * E1.rows[x][j];
    for (size_t j = 0; j < s2.size(); ++j)
      E.rows[x][source.position_of(s2[j])] += h * E2.rows[x][j];
  }

  // Bound from the blend estimate: the slope of E1 f plus the slope of the
  // cutoff term, with the peak of |E1 f| + |E2 f| over the cutoff support
  // evaluated exactly on the realized support.
  const double c1 = E1.claimed_bound, c2 = E2.claimed_bound;
  int pin = space->base_point();
  if (E1.source.position_of(pin) < 0) pin = s1.front();
  double peak = 0.0;
  bool support_nonempty = false;
  for (int x = 0; x < n; ++x) {
    if (dist_to_set(*space, x, s2) >= r) continue;
    support_nonempty = true;
    double via_s2 = std::numeric_limits<double>::infinity();
    for (int q : s2) via_s2 = std::min(via_s2, c2 * space->d(x, q) + space->d(q, pin));
    peak = std::max(peak, c1 * space->d(x, pin) + via_s2);
  }
  E.claimed_bound = 2.0 * c1 + c2 + (support_nonempty ? peak / r : 0.0);
  return E;
}

GlueFamilyResult glue_family(const std::vector<ExtensionOperator>& extenders, int anchor,
                             double C, const SeparationReport& report,
                             std::vector<int> set_anchors, double tol) {
  if (extenders.empty()) throw GlueError(GlueError::Kind::EmptyFamily, "empty family");
  const SpacePtr& space = extenders[0].ambient;
  std::vector<SubsetRef> family;
  for (size_t i = 0; i < extenders.size(); ++i) {
    if (extenders[i].ambient != space)
      throw FunctionError(FunctionError::Kind::DomainMismatch,
                          "family extenders must share the ambient space");
    if (extenders[i].claimed_bound > C + tol)
      throw GlueError(GlueError::Kind::HypothesisViolation,
                      "extender " + std::to_string(i) + " claims bound " +
                          std::to_string(extenders[i].claimed_bound) + " above C = " +
                          std::to_string(C),
                      static_cast<int>(i));
    family.push_back(extenders[i].source);
  }
  if (static_cast<int>(report.per_set.size()) != static_cast<int>(family.size()))
    throw GlueError(GlueError::Kind::HypothesisViolation,
                    "separation report does not match the family size");
  if (set_anchors.empty())
    for (const auto& s : family) set_anchors.push_back(s.indices.front());
  for (size_t i = 0; i < family.size(); ++i)
    if (!family[i].contains(set_anchors[i]))
      throw GlueError(GlueError::Kind::HypothesisViolation,
                      "reference point of set " + std::to_string(i) + " is not in the set",
                      static_cast<int>(i));

  const double lambda = std::max(1.0, report.lambda);
  const double D = report.diam_ratio;

  GlueFamilyResult out;
  out.report = report;
  out.set_anchors = set_anchors;
  for (const auto& ps : report.per_set) out.radii.push_back(ps.dist_to_anchor / (2.0 * lambda));

  // Union source including the anchor: the certified bound controls slopes
  // against functions pinned there.
  std::vector<int> uni{anchor};
  for (const auto& s : family) {
    if (s.contains(anchor))
      throw FamilyError(FamilyError::Kind::AnchorInSet, "anchor belongs to a family member");
    uni.insert(uni.end(), s.indices.begin(), s.indices.end());
  }
  std::sort(uni.begin(), uni.end());
  uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
  SubsetRef source(space, uni);
  const int anchor_pos = source.position_of(anchor);

  ExtensionOperator E;
  E.ambient = space;
  E.source = source;
  E.provenance = "glue_family";
  const int n = space->size();
  E.rows.assign(n, std::vector<double>(source.size(), 0.0));
  for (int x = 0; x < n; ++x) {
    int member = -1;
    for (size_t i = 0; i < family.size(); ++i) {
      if (dist_to_set(*space, x, family[i].indices) <= out.radii[i] + tol) {
        if (member >= 0)
          throw GlueError(GlueError::Kind::DisjointUiViolation,
                          "point " + std::to_string(x) + " lies in two neighborhoods",
                          member, x);
        member = static_cast<int>(i);
      }
    }
    if (member < 0) {
      E.rows[x][anchor_pos] = 1.0;
      continue;
    }
    const double cutoff =
        std::max(0.0, 1.0 - dist_to_set(*space, x, family[member].indices) / out.radii[member]);
    E.rows[x][anchor_pos] = 1.0 - cutoff;
    const auto& sidx = family[member].indices;
    for (size_t j = 0; j < sidx.size(); ++j)
      E.rows[x][source.position_of(sidx[j])] += cutoff * extenders[member].rows[x][j];
  }

  const double kprime = 2.0 * C + 2.0 * lambda * (1.0 + D + C * D);
  out.bound_simple = kprime;
  E.claimed_bound = kprime + 2.0 * lambda * ((kprime + 1.0) * D + 1.0);
  out.op = std::move(E);
  return out;
}

double operator_norm_from_extension(const ExtensionOperator& E) {
  E.validate();
  return exact_operator_norm(*E.ambient, E.source.indices, E.rows);
}

ProjectionMatrix preadjoint(const ExtensionOperator& E) {
  E.validate();
  return projection_matrix(E.ambient, E.source, E.rows);
}

CertifyResult certify_norm(const ExtensionOperator& E, int trials, const CorpusSpec& corpus,
                           double tol, bool compute_exact) {
  CertifyResult res;
  Rng rng(corpus.seed);
  const int ns = E.source.size();
  for (int t = 0; t < trials; ++t) {
    std::vector<double> vals(ns);
    for (double& v : vals) v = rng.uniform(-1.0, 1.0);
    if (corpus.kind == CorpusSpec::Kind::UniformMcshane && ns >= 2) {
      // Keep a random half as seeds and spread them with a midpoint
      // norm-preserving extension inside the source metric.
      auto perm = rng.permutation(ns);
      const int keep = (ns + 1) / 2;
      std::vector<int> sub_idx;
      std::vector<double> sub_vals;
      for (int i = 0; i < keep; ++i) sub_idx.push_back(E.source.indices[perm[i]]);
      std::sort(sub_idx.begin(), sub_idx.end());
      for (int idx : sub_idx) sub_vals.push_back(vals[E.source.position_of(idx)]);
      LipFunction seed(SubsetRef(E.ambient, sub_idx), sub_vals);
      LipFunction spread = mcshane_extend(seed, E.source.indices, McShaneMode::Midpoint);
      for (int p = 0; p < ns; ++p) vals[p] = spread.at(E.source.indices[p]);
    }
    LipFunction f(E.source, vals);
    const double lf = lip_norm(f).value;
    if (lf < 1e-12) continue;
    ++res.trials_used;
    std::vector<double> ef = E.apply_all(f);
    double le = 0.0;
    const int n = E.ambient->size();
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        le = std::max(le, std::fabs(ef[x] - ef[y]) / E.ambient->d(x, y));
    const double ratio = le / lf;
    if (ratio > res.empirical) {
      res.empirical = ratio;
      res.worst_values = vals;
    }
  }
  if (compute_exact) res.exact = operator_norm_from_extension(E);
  res.bound_ok = res.empirical <= E.claimed_bound + tol;
  return res;
}

}  // namespace lipext
