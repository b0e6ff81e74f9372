#pragma once

#include <map>
#include <vector>

#include "lipext/metric_space.hpp"

namespace lipext {

/// A finitely supported signed measure with zero total mass, the coordinate
/// form of elements of the free space over a finite metric space.
struct Molecule {
  SpacePtr space;
  std::map<int, double> weights;  // ambient index -> weight, sums to zero

  /// Balances raw weights by subtracting the residual mass at the base
  /// point, so the invariant holds by construction.
  static Molecule balanced(SpacePtr space, std::map<int, double> raw);

  /// The elementary molecule (delta_x - delta_y).
  static Molecule pair(SpacePtr space, int x, int y);

  double mass() const;
};

struct KrCertificate {
  double primal;  // minimum-cost transport value
  double dual;    // best Lipschitz potential value
};

/// Transportation norm of a zero-mass molecule, computed twice: as a
/// minimum-cost flow between the positive and negative parts (direct edges
/// suffice because costs obey the triangle inequality) and as the optimal
/// value of the pairwise-slope potential program.  The two values agree up
/// to LP duality; callers assert the gap.
KrCertificate kr_norm_certified(const Molecule& mu, double mass_tol = kDefaultTol);

/// Certified norm: runs both routes, throws if they disagree beyond
/// cross_tol, returns the flow value.
double kr_norm(const Molecule& mu, double cross_tol = 1e-7);

/// Flow route only.  Used inside pair scans where running the potential
/// program per pair would be wasteful; its agreement with the dual route is
/// covered by the certified entry point.
double kr_norm_fast(const Molecule& mu, double mass_tol = kDefaultTol);

/// Vertices of the unit ball {f : |f(x)-f(y)| <= d(x,y), f(pin) = 0} of
/// Lipschitz functions on S, pinned at the space base point when it belongs
/// to S and at the lowest index otherwise.  Returned as full value vectors
/// in subset order (zero at the pin position), sorted lexicographically.
/// Incremental halfspace cutting with a rank test on active constraints.
std::vector<std::vector<double>> lip_ball_vertices(const SubsetRef& S, int cap = 9);

/// Exact Lipschitz operator norm of a linear unital extension matrix
/// (|M| x |S|, rows at source points are selectors, every row sums to 1):
/// the maximum over ambient pairs x != y of the transportation norm of the
/// row-difference molecule divided by d(x,y).  Equals the norm of the
/// preadjoint projection onto the free space over S.
double exact_operator_norm(const FiniteMetricSpace& M, const std::vector<int>& source,
                           const std::vector<std::vector<double>>& rows);

/// Same value computed through the other route: the maximum of
/// lip_norm(E v) over the vertices v of the source Lipschitz ball.
/// Subject to the vertex-enumeration cap; used to cross-check the
/// molecule-pair route.
double operator_norm_via_lip_vertices(const FiniteMetricSpace& M, const std::vector<int>& source,
                                      const std::vector<std::vector<double>>& rows, int cap = 9);

/// Preadjoint in pinned coordinates: rows indexed by M minus its base
/// point, columns by S minus its pin.
struct ProjectionMatrix {
  SubsetRef source;
  std::vector<int> row_points;  // ambient indices in row order
  std::vector<int> col_points;  // source ambient indices in column order
  std::vector<std::vector<double>> entries;
};

ProjectionMatrix projection_matrix(const SpacePtr& ambient, const SubsetRef& source,
                                   const std::vector<std::vector<double>>& rows);

/// True when the projection restricted to the free space over S is the
/// identity, checked on the elementary molecule basis.
bool projection_property_holds(const ProjectionMatrix& pm, double tol = kDefaultTol);

struct ExtensionConstant {
  double e = 1.0;
  std::vector<std::vector<double>> optimal_rows;  // |M| x |S| unital matrix
  int vertices_used = 0;
};

/// Least Lipschitz operator norm over all linear extension matrices from S
/// to its ambient space: a linear program whose rows constrain the slopes of
/// the images of every vertex of the source Lipschitz ball, solved with lazy
/// constraint generation.  Requires the ambient base point to lie in S.
ExtensionConstant extension_constant_lp(const SubsetRef& S, int point_cap = 12,
                                        int vertex_cap = 9, double tol = kDefaultTol);

}  // namespace lipext
