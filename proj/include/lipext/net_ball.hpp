#pragma once

#include <memory>
#include <vector>

#include "lipext/extension_op.hpp"

namespace lipext {

// Fix the ball |x - center|_1 <= radius pointwise, map everything outside onto
// its boundary along the ray from the center.
std::vector<double> radial_project(const std::vector<double>& center, double radius,
                                   const std::vector<double>& x);

// Index of the point closest to q in the l1 distance, ties to the lowest index.
int nearest_point(const std::vector<std::vector<double>>& pts, const std::vector<double>& q);

// Covering radius of the integer lattice in l1: largest distance from any point
// to the lattice. Piecewise linear over each unit cell with breakpoints on the
// half-integer grid, so a scan of {0, 1/2, 1}^dim is exact.
double integer_lattice_covering_radius(int dim);

// Retraction onto the net points inside the ball: radial projection followed by
// the nearest in-ball net point. Returns an index into the full net.
int net_ball_retract_index(const std::vector<std::vector<double>>& net,
                           const std::vector<double>& center, double radius,
                           const std::vector<double>& x, double tol = kDefaultTol);
std::vector<double> net_ball_retract(const std::vector<std::vector<double>>& net,
                                     const std::vector<double>& center, double radius,
                                     const std::vector<double>& x, double tol = kDefaultTol);

struct NetBallOperatorResult {
  ExtensionOperator op;
  std::shared_ptr<L1PointSet> points;
  std::vector<int> net_index;     // ambient index of each selected net point
  std::vector<int> sample_index;  // ambient index of each input sample
  double delta = 0.0;             // min pairwise distance among selected net points
  double eps = 0.0;               // density radius of the net, as supplied
};

// Selector-row operator realizing the retraction on a finite sample set. The
// source is the net clipped to the ball; eps is the covering radius of the
// full net in the ambient space and enters the claimed bound 2 + 4 eps / delta.
NetBallOperatorResult net_ball_operator(const std::vector<std::vector<double>>& net,
                                        const std::vector<double>& center, double radius,
                                        double eps,
                                        const std::vector<std::vector<double>>& samples,
                                        int cap = -1, double tol = kDefaultTol);

}  // namespace lipext
