#pragma once

#include <memory>
#include <vector>

#include "lipext/extension_op.hpp"
#include "lipext/grid.hpp"

namespace lipext {

struct DyadicPlacement {
  std::vector<int> k;                       // dyadic level per shape
  std::vector<std::vector<long long>> shifts;  // translation applied per shape
  std::shared_ptr<L1PointSet> points;       // origin anchor, then placed shapes
  SpacePtr space;
  std::vector<SubsetRef> sets;
  int anchor = 0;
};

// Translates each integer shape so its first point sits at (-2^(k+2), 0, ...)
// where k is at least 4 above the previous level and 2^k exceeds the shape's
// diameter.  Successive shapes then live on disjoint dyadic norm bands, which
// keeps every separation ratio small and every diameter below the distance
// to the origin anchor.
DyadicPlacement place_dyadic(int dim,
                             const std::vector<std::vector<std::vector<long long>>>& shapes,
                             int cap = -1);

struct LatticeBallFamily {
  std::shared_ptr<L1PointSet> points;  // origin anchor, then the balls
  SpacePtr space;
  std::vector<SubsetRef> sets;
  int anchor = 0;
  long long window = 0;  // half-width of the integer window used
};

// Family of integer-lattice balls B(2^(n+2) e1, 2^n), n = 1..count.  Each
// ball's diameter is exactly 2/3 of its distance to the origin and the
// separation constant of the family stays below 20.
LatticeBallFamily ball_sequence_lambda20(int dim, int count, long long window = -1,
                                         int cap = -1);

struct ShrinkingFamily {
  std::vector<int> N;     // scale exponents, N_{n+1} = N_n + 2
  double mesh = 0.0;      // dyadic grid containing every coordinate
  std::shared_ptr<L1PointSet> points;
  SpacePtr space;
  std::vector<SubsetRef> sets;
  int anchor = 0;
  std::vector<double> exact_diameter;  // 2^-N_n per set
  std::vector<double> exact_distance;  // 2^-(N_n+1) per set
};

// Family of shrinking cross-polytope balls accumulating at the origin:
// set n is the l1 ball of radius 2^-(N_n+1) around 2^-N_n e1, sampled at its
// center and vertices.  Diameters and distances to the anchor are exact
// powers of two with ratio 2.  A mesh override must be a power of two fine
// enough to carry all coordinates.
ShrinkingFamily shrinking_ball_sequence(int dims, int count, int first_exponent = 1,
                                        double mesh = -1.0, int cap = -1);

// Axis box [-4^level, 4^level]^level and its lattice point count.  Levels
// beyond 3 are rejected; level 3 already exceeds two million points, so only
// the count is reachable in practice.
GridBox grid_box_level(int level);
long long grid_box_count(int level);

struct GridBoxRetraction {
  ExtensionOperator op;  // claimed bound 1
  std::shared_ptr<L1PointSet> points;
  GridBox box;
  std::vector<int> sample_index;  // ambient index per input sample
};

// Norm-one operator from the box lattice to the lattice plus arbitrary
// sample points: each sample row interpolates at the coordinatewise clamp of
// the sample into the box.  Clamping is 1-Lipschitz per axis, so composing
// it with the interpolation keeps the bound at one.
GridBoxRetraction grid_box_retraction(int level, const std::vector<std::vector<double>>& samples,
                                      int cap = -1, double tol = kDefaultTol);

}  // namespace lipext
