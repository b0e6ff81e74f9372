#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "lipext/extension_op.hpp"
#include "lipext/grid.hpp"

namespace lipext {

// Zero out every coordinate of x whose axis is not listed.
std::vector<double> coordinate_project(const std::vector<int>& axes, const std::vector<double>& x);

// Height max{1 - |x - Px|_1 / |Px|_1, 0} of x inside the cone over the axes'
// coordinate subspace. Zero when the projection vanishes.
double cone_height(const std::vector<int>& axes, const std::vector<double>& x);

// Retraction x -> height * projection. Maps the cone onto its subspace, fixes
// the subspace pointwise, sends everything outside the cone to the origin.
std::vector<double> cone_retract(const std::vector<int>& axes, const std::vector<double>& x);

// Blocks must be disjoint, within range, and cover every axis exactly once.
void validate_partition(int dim, const std::vector<std::vector<int>>& partition);

// Index of the block whose open cone contains x, or -1. Disjoint blocks have
// disjoint open cones, so at most one height is positive.
int active_cone(const std::vector<std::vector<int>>& partition, const std::vector<double>& x);

// Piecewise extension: evaluate the active block's function at the retracted
// point, or 0 outside every cone.
double cone_partition_extend(
    const std::vector<std::vector<int>>& partition,
    const std::vector<std::function<double(const std::vector<double>&)>>& block_fns,
    const std::vector<double>& query);

struct ConeOperatorResult {
  ExtensionOperator op;
  std::shared_ptr<L1PointSet> points;
  std::vector<std::vector<int>> partition;  // blocks, each sorted ascending
  std::vector<GridBox> boxes;               // one per block, in block order
  std::vector<int> sample_index;            // ambient index of each input sample
};

// Operator from the union of blockwise lattices (each box embedded in its
// block's coordinate subspace, all sharing the origin) to the lattices plus
// the given sample points. Each sample row interpolates the retracted point
// inside its block's box; samples outside every cone select the origin.
ConeOperatorResult cone_partition_operator(int dim, std::vector<std::vector<int>> partition,
                                           std::vector<GridBox> boxes,
                                           const std::vector<std::vector<double>>& samples,
                                           int cap = -1, double tol = kDefaultTol);

}  // namespace lipext
