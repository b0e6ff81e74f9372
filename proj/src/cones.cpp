#include "lipext/cones.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lipext {

std::vector<double> coordinate_project(const std::vector<int>& axes,
                                       const std::vector<double>& x) {
  std::vector<double> p(x.size(), 0.0);
  for (int a : axes) {
    if (a < 0 || a >= static_cast<int>(x.size()))
      throw ConeError(ConeError::Kind::BadPartition, "axis " + std::to_string(a) + " out of range");
    p[a] = x[a];
  }
  return p;
}

double cone_height(const std::vector<int>& axes, const std::vector<double>& x) {
  const std::vector<double> p = coordinate_project(axes, x);
  double inside = 0.0, outside = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    inside += std::fabs(p[i]);
    outside += std::fabs(x[i] - p[i]);
  }
  if (inside == 0.0) return 0.0;
  return std::max(1.0 - outside / inside, 0.0);
}

std::vector<double> cone_retract(const std::vector<int>& axes, const std::vector<double>& x) {
  const double h = cone_height(axes, x);
  std::vector<double> p = coordinate_project(axes, x);
  for (double& c : p) c *= h;
  return p;
}

void validate_partition(int dim, const std::vector<std::vector<int>>& partition) {
  std::vector<int> owner(dim, -1);
  for (size_t j = 0; j < partition.size(); ++j) {
    if (partition[j].empty())
      throw ConeError(ConeError::Kind::BadPartition, "block " + std::to_string(j) + " is empty");
    for (int a : partition[j]) {
      if (a < 0 || a >= dim)
        throw ConeError(ConeError::Kind::BadPartition,
                        "axis " + std::to_string(a) + " outside dimension " + std::to_string(dim));
      if (owner[a] != -1)
        throw ConeError(ConeError::Kind::BadPartition,
                        "axis " + std::to_string(a) + " appears in blocks " +
                            std::to_string(owner[a]) + " and " + std::to_string(j));
      owner[a] = static_cast<int>(j);
    }
  }
  for (int a = 0; a < dim; ++a)
    if (owner[a] == -1)
      throw ConeError(ConeError::Kind::BadPartition,
                      "axis " + std::to_string(a) + " not covered by any block");
}

int active_cone(const std::vector<std::vector<int>>& partition, const std::vector<double>& x) {
  int best = -1;
  double best_h = 0.0;
  for (size_t j = 0; j < partition.size(); ++j) {
    const double h = cone_height(partition[j], x);
    if (h > best_h) {
      best_h = h;
      best = static_cast<int>(j);
    }
  }
  return best;
}

double cone_partition_extend(
    const std::vector<std::vector<int>>& partition,
    const std::vector<std::function<double(const std::vector<double>&)>>& block_fns,
    const std::vector<double>& query) {
  if (block_fns.size() != partition.size())
    throw SizeError("one function per partition block required");
  const int j = active_cone(partition, query);
  if (j < 0) return 0.0;
  return block_fns[j](cone_retract(partition[j], query));
}

ConeOperatorResult cone_partition_operator(int dim, std::vector<std::vector<int>> partition,
                                           std::vector<GridBox> boxes,
                                           const std::vector<std::vector<double>>& samples,
                                           int cap, double tol) {
  validate_partition(dim, partition);
  if (boxes.size() != partition.size()) throw SizeError("one box per partition block required");
  for (auto& block : partition) std::sort(block.begin(), block.end());
  const size_t m = partition.size();
  for (size_t j = 0; j < m; ++j) {
    if (boxes[j].dim() != static_cast<int>(partition[j].size()))
      throw ConeError(ConeError::Kind::BadPartition,
                      "box " + std::to_string(j) + " dimension does not match its block");
    for (int i = 0; i < boxes[j].dim(); ++i)
      if (boxes[j].lo[i] > 0 || boxes[j].hi[i] < 0)
        throw ConeError(ConeError::Kind::BadPartition,
                        "box " + std::to_string(j) + " must contain the origin");
  }
  if (cap < 0) cap = max_points_cap();

  // Source: origin first, then each block's nonzero lattice points in lattice
  // order. block_col[j][k] is the source column of block j's k-th lattice point.
  std::vector<std::vector<double>> coords;
  coords.push_back(std::vector<double>(dim, 0.0));
  std::vector<std::vector<int>> block_col(m);
  for (size_t j = 0; j < m; ++j) {
    const long long count = boxes[j].point_count();
    block_col[j].resize(count);
    for (long long k = 0; k < count; ++k) {
      const std::vector<long long> v = boxes[j].point_at(k);
      bool zero = true;
      std::vector<double> p(dim, 0.0);
      for (size_t t = 0; t < partition[j].size(); ++t) {
        p[partition[j][t]] = static_cast<double>(v[t]);
        if (v[t] != 0) zero = false;
      }
      if (zero) {
        block_col[j][k] = 0;
      } else {
        block_col[j][k] = static_cast<int>(coords.size());
        coords.push_back(std::move(p));
      }
    }
  }
  const int source_count = static_cast<int>(coords.size());
  if (source_count + static_cast<int>(samples.size()) > cap)
    throw SizeError("cone operator would materialize up to " +
                    std::to_string(source_count + samples.size()) + " points, cap " +
                    std::to_string(cap));

  ConeOperatorResult res;
  res.partition = partition;
  res.boxes = boxes;
  res.sample_index.reserve(samples.size());
  for (const auto& s : samples) {
    if (static_cast<int>(s.size()) != dim) throw SizeError("sample dimension mismatch");
    int found = -1;
    for (size_t i = 0; i < coords.size(); ++i)
      if (coords[i] == s) {
        found = static_cast<int>(i);
        break;
      }
    if (found < 0) {
      coords.push_back(s);
      found = static_cast<int>(coords.size()) - 1;
    }
    res.sample_index.push_back(found);
  }

  res.points = std::make_shared<L1PointSet>(dim, coords, 0);
  SpacePtr space = res.points->to_metric_space(cap);

  std::vector<int> source_indices(source_count);
  for (int i = 0; i < source_count; ++i) source_indices[i] = i;

  ExtensionOperator E;
  E.ambient = space;
  E.source = SubsetRef(space, source_indices);
  E.provenance = "cone-partition";
  E.claimed_bound = 2.0;
  const int n = space->size();
  E.rows.assign(n, std::vector<double>(source_count, 0.0));
  for (int i = 0; i < source_count; ++i) E.rows[i][i] = 1.0;

  for (int x = source_count; x < n; ++x) {
    const std::vector<double>& pt = coords[x];
    const int j = active_cone(partition, pt);
    if (j < 0) {
      E.rows[x][0] = 1.0;
      continue;
    }
    const std::vector<double> r = cone_retract(partition[j], pt);
    std::vector<double> q(partition[j].size());
    for (size_t t = 0; t < partition[j].size(); ++t) q[t] = r[partition[j][t]];
    if (!boxes[j].contains(q, tol)) {
      std::string qs;
      for (double c : q) qs += (qs.empty() ? "" : ",") + std::to_string(c);
      throw ConeError(ConeError::Kind::RetractedPointOutsideDomain,
                      "retracted point (" + qs + ") escapes box " + std::to_string(j));
    }
    const long long count = boxes[j].point_count();
    std::vector<double> indicator(count, 0.0);
    for (long long k = 0; k < count; ++k) {
      indicator[k] = 1.0;
      const double w = hypercube_interpolate(boxes[j], indicator, q, tol);
      indicator[k] = 0.0;
      if (w != 0.0) E.rows[x][block_col[j][k]] += w;
    }
  }
  res.op = std::move(E);
  return res;
}

}  // namespace lipext
