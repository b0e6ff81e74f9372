#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lipext/metric_space.hpp"

namespace lipext {

/// Separation data for a finite family of sets relative to an anchor point:
///   lambda            max over cross pairs of (d(x,a)+d(y,a)) / d(x,y), clamped to >= 1
///   diam_ratio        max over sets of diam(S_i) / d(S_i, anchor)
///   min_cross_distance  min over cross pairs of d(x,y) (infinity for one set)
///   per_set           (diameter, distance to anchor) per family member
struct SeparationReport {
  double lambda = 1.0;
  double diam_ratio = 0.0;
  double min_cross_distance = 0.0;
  struct PerSet {
    double diameter;
    double dist_to_anchor;
  };
  std::vector<PerSet> per_set;
};

/// Exact scan over all cross pairs.  All sets must live in one space, be
/// non-empty, pairwise disjoint, and avoid the anchor.
SeparationReport separation_constants(const std::vector<SubsetRef>& family, int anchor);

struct NetCheck {
  bool ok = true;
  // Ambient point not covered within eps, if any.
  std::optional<int> density_witness;
  // Candidate pair closer than delta, if any.
  std::optional<std::pair<int, int>> separation_witness;
};

/// Checks that `candidate` is eps-dense in its ambient space and
/// delta-separated.  Comparisons are exact.
NetCheck is_net(const SubsetRef& candidate, double eps, double delta);

/// Greedy maximal delta-separated subset, scanning points in seed_order
/// (a permutation of all indices; empty means natural order).  The result
/// is delta-separated and delta-dense, so is_net(result, delta, delta) holds.
SubsetRef greedy_net(const SpacePtr& space, double delta, std::vector<int> seed_order = {});

}  // namespace lipext
