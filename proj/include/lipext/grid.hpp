#pragma once

#include <memory>
#include <vector>

#include "lipext/extension_op.hpp"

namespace lipext {

/// An axis-aligned box of integer lattice points, hi[i] >= lo[i] per axis.
/// Lattice points are ordered row-major with the last axis fastest.
struct GridBox {
  std::vector<long long> lo, hi;

  int dim() const { return static_cast<int>(lo.size()); }
  long long side(int axis) const { return hi[axis] - lo[axis] + 1; }
  long long point_count() const;
  long long index_of(const std::vector<long long>& v) const;
  std::vector<long long> point_at(long long index) const;
  bool contains(const std::vector<double>& q, double tol = kDefaultTol) const;
  std::vector<std::vector<double>> lattice_points() const;
};

GridBox make_box(std::vector<long long> lo, std::vector<long long> hi);

/// Multilinear interpolation of lattice values inside the unit cube
/// containing the query: the value is the sum over cube corners of the
/// corner value times the product of per-axis weights t_i or (1 - t_i).
/// Coordinatewise affine, continuous across shared cube faces, and
/// norm-preserving as an extension of the lattice restriction.
/// `values` is indexed by box lattice order; NaN marks a missing vertex.
/// `base` optionally fixes the cube's lower corner (used to check agreement
/// across faces); by default the cube is chosen canonically.
double hypercube_interpolate(const GridBox& box, const std::vector<double>& values,
                             const std::vector<double>& query, double tol = kDefaultTol,
                             const std::vector<long long>* base = nullptr);

struct GridOperatorResult {
  ExtensionOperator op;  // source = lattice points, claimed bound 1
  GridBox box;
  std::shared_ptr<L1PointSet> points;
  std::vector<int> grid_index;    // ambient index per lattice point
  std::vector<int> sample_index;  // ambient index per input sample point
};

/// Compiles the interpolation into a finite extension operator on the
/// lattice points of the box together with the given sample points (which
/// must lie inside the real box; samples on lattice points are merged).
GridOperatorResult grid_extension_operator(const GridBox& box,
                                           const std::vector<std::vector<double>>& samples,
                                           int cap = -1, double tol = kDefaultTol);

}  // namespace lipext
