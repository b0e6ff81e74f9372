#include "lipext/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace lipext {

std::shared_ptr<const FiniteMetricSpace> FiniteMetricSpace::validated(
    std::vector<std::vector<double>> matrix, std::vector<std::string> ids, int base_point,
    double tol, int cap) {
  const int n = static_cast<int>(matrix.size());
  if (n == 0) throw SizeError("metric space must contain at least one point");
  if (cap < 0) cap = max_points_cap();
  if (n > cap)
    throw SizeError("point count " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(matrix[i].size()) != n)
      throw SizeError("distance matrix is not square at row " + std::to_string(i));
  if (base_point < 0 || base_point >= n) throw SizeError("base point index out of range");

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double dij = matrix[i][j];
      if (std::isnan(dij) || dij < -tol)
        throw MetricError(MetricError::Kind::NegativeDistance,
                          "negative distance at (" + std::to_string(i) + "," + std::to_string(j) +
                              ")",
                          i, j);
      if (std::fabs(dij - matrix[j][i]) > tol)
        throw MetricError(MetricError::Kind::Asymmetry,
                          "asymmetric distances at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")",
                          i, j);
      if (i == j && std::fabs(dij) > tol)
        throw MetricError(MetricError::Kind::ZeroOffDiagonal,
                          "nonzero diagonal at " + std::to_string(i), i, i);
      if (i != j && std::fabs(dij) <= tol)
        throw MetricError(MetricError::Kind::ZeroOffDiagonal,
                          "zero distance between distinct points (" + std::to_string(i) + "," +
                              std::to_string(j) + ")",
                          i, j);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (matrix[i][k] > matrix[i][j] + matrix[j][k] + tol)
          throw MetricError(MetricError::Kind::TriangleViolation,
                            "triangle inequality fails: d(" + std::to_string(i) + "," +
                                std::to_string(k) + ") > d(" + std::to_string(i) + "," +
                                std::to_string(j) + ") + d(" + std::to_string(j) + "," +
                                std::to_string(k) + ")",
                            i, j, k);

  auto space = std::shared_ptr<FiniteMetricSpace>(new FiniteMetricSpace());
  space->n_ = n;
  space->base_ = base_point;
  space->dist_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    space->dist_[static_cast<size_t>(i) * n + i] = 0.0;
    for (int j = 0; j < n; ++j)
      if (i != j) space->dist_[static_cast<size_t>(i) * n + j] = matrix[i][j];
  }
  if (ids.empty()) {
    ids.resize(n);
    for (int i = 0; i < n; ++i) ids[i] = "p" + std::to_string(i);
  } else if (static_cast<int>(ids.size()) != n) {
    throw SizeError("id list length does not match point count");
  }
  space->ids_ = std::move(ids);
  return space;
}

double FiniteMetricSpace::diameter() const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) m = std::max(m, d(i, j));
  return m;
}

SubsetRef::SubsetRef(SpacePtr space_, std::vector<int> indices_, bool allow_empty)
    : space(std::move(space_)), indices(std::move(indices_)) {
  if (!space) throw SizeError("subset requires a space");
  std::sort(indices.begin(), indices.end());
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= space->size())
      throw SizeError("subset index " + std::to_string(indices[i]) + " out of range");
    if (i > 0 && indices[i] == indices[i - 1])
      throw SizeError("duplicate subset index " + std::to_string(indices[i]));
  }
  if (indices.empty() && !allow_empty)
    throw FamilyError(FamilyError::Kind::EmptySet, "empty subset");
}

bool SubsetRef::contains(int ambient_index) const {
  return std::binary_search(indices.begin(), indices.end(), ambient_index);
}

int SubsetRef::position_of(int ambient_index) const {
  auto it = std::lower_bound(indices.begin(), indices.end(), ambient_index);
  if (it == indices.end() || *it != ambient_index) return -1;
  return static_cast<int>(it - indices.begin());
}

double dist_to_set(const FiniteMetricSpace& space, int point, const std::vector<int>& set) {
  double m = std::numeric_limits<double>::infinity();
  for (int s : set) m = std::min(m, space.d(point, s));
  return m;
}

double set_diameter(const FiniteMetricSpace& space, const std::vector<int>& set) {
  double m = 0.0;
  for (size_t a = 0; a < set.size(); ++a)
    for (size_t b = a + 1; b < set.size(); ++b) m = std::max(m, space.d(set[a], set[b]));
  return m;
}

double set_distance(const FiniteMetricSpace& space, const std::vector<int>& a,
                    const std::vector<int>& b) {
  double m = std::numeric_limits<double>::infinity();
  for (int x : a)
    for (int y : b) m = std::min(m, space.d(x, y));
  return m;
}

SubsetRef ball(const SpacePtr& space, int center, double r) {
  if (!space) throw SizeError("ball requires a space");
  if (center < 0 || center >= space->size()) throw SizeError("ball center out of range");
  std::vector<int> idx;
  for (int i = 0; i < space->size(); ++i)
    if (space->d(center, i) <= r) idx.push_back(i);
  return SubsetRef(space, std::move(idx), /*allow_empty=*/true);
}

L1PointSet::L1PointSet(int dim, std::vector<std::vector<double>> coords, int base_point)
    : dim_(dim), base_(base_point), coords_(std::move(coords)) {
  if (dim_ <= 0) throw SizeError("l1 point set needs positive dimension");
  if (coords_.empty()) throw SizeError("l1 point set must contain at least one point");
  if (base_ < 0 || base_ >= size()) throw SizeError("base point index out of range");
  for (const auto& p : coords_)
    if (static_cast<int>(p.size()) != dim_)
      throw SizeError("point dimension mismatch in l1 point set");
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (coords_[i] == coords_[j])
        throw MetricError(MetricError::Kind::ZeroOffDiagonal,
                          "duplicate point at indices " + std::to_string(i) + "," +
                              std::to_string(j),
                          i, j);
}

double L1PointSet::d(int i, int j) const { return l1_dist(coords_[i], coords_[j]); }

double L1PointSet::d_to(int i, const std::vector<double>& q) const {
  return l1_dist(coords_[i], q);
}

int L1PointSet::find(const std::vector<double>& q) const {
  for (int i = 0; i < size(); ++i)
    if (coords_[i] == q) return i;
  return -1;
}

SpacePtr L1PointSet::to_metric_space(int cap) const {
  if (cap < 0) cap = max_points_cap();
  if (size() > cap)
    throw SizeError("l1 point set with " + std::to_string(size()) +
                    " points exceeds cap " + std::to_string(cap));
  std::vector<std::vector<double>> m(size(), std::vector<double>(size(), 0.0));
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) m[i][j] = m[j][i] = d(i, j);
  std::vector<std::string> ids(size());
  for (int i = 0; i < size(); ++i) ids[i] = point_id(coords_[i]);
  return FiniteMetricSpace::validated(std::move(m), std::move(ids), base_, kDefaultTol, cap);
}

std::string L1PointSet::point_id(const std::vector<double>& q) {
  std::string s = "(";
  char buf[40];
  for (size_t i = 0; i < q.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6g", q[i]);
    if (i) s += ",";
    s += buf;
  }
  return s + ")";
}

double l1_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::fabs(a[i] - b[i]);
  return s;
}

double l1_norm(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s += std::fabs(v);
  return s;
}

}  // namespace lipext
