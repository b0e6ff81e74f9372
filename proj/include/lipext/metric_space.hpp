#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lipext/errors.hpp"
#include "lipext/tolerances.hpp"

namespace lipext {

/// A finite metric space with a designated base point.  Immutable after
/// construction; shared by reference between subsets, functions and
/// operators.  Distances are stored as a dense row-major matrix.
class FiniteMetricSpace {
 public:
  /// Validates the matrix (symmetry, nonnegativity, zero diagonal only,
  /// triangle inequality, all within tol) and returns the space.  Throws
  /// MetricError naming the first violated axiom and its witness indices.
  static std::shared_ptr<const FiniteMetricSpace> validated(
      std::vector<std::vector<double>> matrix, std::vector<std::string> ids = {},
      int base_point = 0, double tol = kDefaultTol, int cap = -1);

  int size() const { return n_; }
  double d(int i, int j) const { return dist_[static_cast<size_t>(i) * n_ + j]; }
  int base_point() const { return base_; }
  const std::string& id(int i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }

  double diameter() const;

 private:
  FiniteMetricSpace() = default;
  int n_ = 0;
  int base_ = 0;
  std::vector<double> dist_;
  std::vector<std::string> ids_;
};

using SpacePtr = std::shared_ptr<const FiniteMetricSpace>;

/// A subset of a finite metric space: the space plus sorted distinct indices.
struct SubsetRef {
  SpacePtr space;
  std::vector<int> indices;

  SubsetRef() = default;
  /// Sorts and validates the index list.  Empty subsets must be requested
  /// explicitly; operations that require non-empty input throw FamilyError.
  SubsetRef(SpacePtr space_, std::vector<int> indices_, bool allow_empty = false);

  int size() const { return static_cast<int>(indices.size()); }
  bool contains(int ambient_index) const;
  /// Position of an ambient index inside the subset, or -1.
  int position_of(int ambient_index) const;
  bool is_full() const { return space && size() == space->size(); }
};

/// Point-to-set and set geometry helpers (exact scans).
double dist_to_set(const FiniteMetricSpace& space, int point, const std::vector<int>& set);
double set_diameter(const FiniteMetricSpace& space, const std::vector<int>& set);
double set_distance(const FiniteMetricSpace& space, const std::vector<int>& a,
                    const std::vector<int>& b);

/// Closed ball {x : d(x, center) <= r} as a subset.
SubsetRef ball(const SpacePtr& space, int center, double r);

/// A finite set of points in l1^dim.  Distances are computed on demand;
/// conversion to a FiniteMetricSpace materializes the matrix and is guarded
/// by the point cap.
class L1PointSet {
 public:
  L1PointSet(int dim, std::vector<std::vector<double>> coords, int base_point = 0);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(coords_.size()); }
  int base_point() const { return base_; }
  const std::vector<double>& point(int i) const { return coords_[i]; }
  const std::vector<std::vector<double>>& points() const { return coords_; }

  double d(int i, int j) const;
  double d_to(int i, const std::vector<double>& q) const;

  /// Index of the point with the given coordinates (exact match), or -1.
  int find(const std::vector<double>& q) const;

  /// Materializes the distance matrix.  cap < 0 means the global cap.
  SpacePtr to_metric_space(int cap = -1) const;

  static std::string point_id(const std::vector<double>& q);

 private:
  int dim_;
  int base_;
  std::vector<std::vector<double>> coords_;
};

double l1_dist(const std::vector<double>& a, const std::vector<double>& b);
double l1_norm(const std::vector<double>& a);

}  // namespace lipext
