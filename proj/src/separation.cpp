#include "lipext/separation.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace lipext {

SeparationReport separation_constants(const std::vector<SubsetRef>& family, int anchor) {
  if (family.empty()) throw GlueError(GlueError::Kind::EmptyFamily, "empty family");
  const SpacePtr& space = family[0].space;
  for (size_t i = 0; i < family.size(); ++i) {
    if (family[i].space != space)
      throw FunctionError(FunctionError::Kind::DomainMismatch,
                          "family members live in different spaces");
    if (family[i].indices.empty())
      throw FamilyError(FamilyError::Kind::EmptySet,
                        "family member " + std::to_string(i) + " is empty", static_cast<int>(i));
    if (family[i].contains(anchor))
      throw FamilyError(FamilyError::Kind::AnchorInSet,
                        "anchor belongs to family member " + std::to_string(i),
                        static_cast<int>(i), -1, anchor);
  }
  for (size_t a = 0; a < family.size(); ++a)
    for (size_t b = a + 1; b < family.size(); ++b)
      for (int x : family[a].indices)
        if (family[b].contains(x))
          throw FamilyError(FamilyError::Kind::OverlappingSets,
                            "family members " + std::to_string(a) + " and " + std::to_string(b) +
                                " share point " + std::to_string(x),
                            static_cast<int>(a), static_cast<int>(b), x);

  SeparationReport rep;
  rep.min_cross_distance = std::numeric_limits<double>::infinity();
  double lambda = 1.0;
  for (size_t a = 0; a < family.size(); ++a) {
    for (size_t b = a + 1; b < family.size(); ++b) {
      for (int x : family[a].indices) {
        for (int y : family[b].indices) {
          const double dxy = space->d(x, y);
          if (dxy <= 0.0)
            throw FamilyError(FamilyError::Kind::ZeroCrossDistance,
                              "zero distance between points of members " + std::to_string(a) +
                                  " and " + std::to_string(b),
                              static_cast<int>(a), static_cast<int>(b), x);
          lambda = std::max(lambda, (space->d(x, anchor) + space->d(y, anchor)) / dxy);
          rep.min_cross_distance = std::min(rep.min_cross_distance, dxy);
        }
      }
    }
  }
  rep.lambda = lambda;
  rep.diam_ratio = 0.0;
  for (const auto& s : family) {
    SeparationReport::PerSet ps;
    ps.diameter = set_diameter(*space, s.indices);
    ps.dist_to_anchor = dist_to_set(*space, anchor, s.indices);
    rep.diam_ratio = std::max(rep.diam_ratio, ps.diameter / ps.dist_to_anchor);
    rep.per_set.push_back(ps);
  }
  return rep;
}

NetCheck is_net(const SubsetRef& candidate, double eps, double delta) {
  NetCheck res;
  const FiniteMetricSpace& space = *candidate.space;
  for (int i = 0; i < space.size(); ++i) {
    if (dist_to_set(space, i, candidate.indices) > eps) {
      res.ok = false;
      res.density_witness = i;
      break;
    }
  }
  const auto& idx = candidate.indices;
  for (size_t a = 0; a < idx.size() && !res.separation_witness; ++a)
    for (size_t b = a + 1; b < idx.size(); ++b)
      if (space.d(idx[a], idx[b]) < delta) {
        res.ok = false;
        res.separation_witness = std::make_pair(idx[a], idx[b]);
        break;
      }
  return res;
}

SubsetRef greedy_net(const SpacePtr& space, double delta, std::vector<int> seed_order) {
  if (seed_order.empty()) {
    seed_order.resize(space->size());
    for (int i = 0; i < space->size(); ++i) seed_order[i] = i;
  } else {
    auto sorted = seed_order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
      if (i >= space->size() || sorted[i] != i)
        throw SizeError("seed order must be a permutation of all point indices");
    if (static_cast<int>(sorted.size()) != space->size())
      throw SizeError("seed order must be a permutation of all point indices");
  }
  std::vector<int> kept;
  for (int i : seed_order) {
    bool ok = true;
    for (int k : kept)
      if (space->d(i, k) < delta) {
        ok = false;
        break;
      }
    if (ok) kept.push_back(i);
  }
  return SubsetRef(space, std::move(kept));
}

}  // namespace lipext
