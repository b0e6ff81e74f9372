#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lipext/free_space.hpp"
#include "lipext/lipfn.hpp"
#include "lipext/separation.hpp"

namespace lipext {

/// A linear extension operator from functions on a source subset to
/// functions on the whole ambient space, stored as its matrix: one row per
/// ambient point, one column per source point.  Every row sums to one
/// (constants extend to constants) and rows at source points are coordinate
/// selectors (extension property).  Norm bounds are with respect to
/// Lipschitz seminorms, which the row-sum convention makes independent of
/// any base-point pinning.
struct ExtensionOperator {
  SpacePtr ambient;
  SubsetRef source;
  std::vector<std::vector<double>> rows;
  double claimed_bound = 1.0;
  std::string provenance;

  /// Values of Ef at every ambient point; f must live on the source.
  std::vector<double> apply_all(const LipFunction& f) const;
  /// Ef restricted to the given ambient indices (all of M when empty).
  LipFunction apply(const LipFunction& f, const std::vector<int>& query = {}) const;
  /// The matrix; identical to evaluating apply on indicator functions.
  const std::vector<std::vector<double>>& materialize_matrix() const { return rows; }

  /// Checks the structural invariants (row sums, selector rows).
  void validate(double tol = kDefaultTol) const;
};

/// Linear operator built from norm-preserving extensions of the pinned
/// indicator basis of the source.  Exact for constants and on the source;
/// its operator norm can exceed 1 on sources with three or more points and
/// is computed exactly (and stored as claimed_bound) when requested.
ExtensionOperator mcshane_operator(const SubsetRef& S, McShaneMode mode = McShaneMode::Inf,
                                   bool compute_exact_bound = true);

/// Composition with a retraction of the ambient space onto the source:
/// row x selects target_of[x].  target_of must fix source points.
ExtensionOperator retraction_operator(const SpacePtr& ambient, const SubsetRef& source,
                                      const std::vector<int>& target_of,
                                      std::string provenance = "composed",
                                      double claimed_bound = 1.0);

/// Blend of two extension operators across a cutoff function
/// h(x) = max(0, 1 - d(x, S2)/r):  Ef = E1 f + h (E2 f - E1 f).
/// Requires disjoint sources at distance >= r > 0.  The claimed bound is
/// the exact supremum, over the realized support of h, of the proof's
/// estimate in terms of the claimed bounds of the two inputs.
ExtensionOperator glue_pair(const ExtensionOperator& E1, const ExtensionOperator& E2, double r,
                            double tol = kDefaultTol);

struct GlueFamilyResult {
  ExtensionOperator op;           // source = union of the sets and the anchor
  SeparationReport report;        // the separation data used
  std::vector<double> radii;      // r_i = d(S_i, anchor) / (2 lambda)
  std::vector<int> set_anchors;   // chosen reference point per set
  double bound_simple = 0.0;      // first-stage constant (same-neighborhood case)
};

/// Glues a family of extension operators with pairwise-disjoint sources
/// into one operator on their union plus the anchor.  Each member acts
/// inside the neighborhood U_i = {x : d(x, S_i) <= r_i} through the cutoff
/// Pi_i(x) = max(0, 1 - d(x, S_i)/r_i) and the result vanishes (relative to
/// the anchor value) elsewhere.  C must dominate every claimed bound of the
/// inputs; the claimed bound of the result is
///   K' = 2C + 2 lambda (1 + D + C D),   K = K' + 2 lambda ((K'+1) D + 1)
/// with lambda and D taken from the separation report.
/// set_anchors picks the reference point of each set (lowest index when
/// empty); the choice is recorded but does not alter the operator.
GlueFamilyResult glue_family(const std::vector<ExtensionOperator>& extenders, int anchor,
                             double C, const SeparationReport& report,
                             std::vector<int> set_anchors = {}, double tol = kDefaultTol);

/// Exact operator norm via the free-space pair scan, together with the
/// pinned projection view.
double operator_norm_from_extension(const ExtensionOperator& E);
ProjectionMatrix preadjoint(const ExtensionOperator& E);

struct CorpusSpec {
  enum class Kind { Uniform, UniformMcshane };
  Kind kind = Kind::Uniform;
  std::uint64_t seed = 0;
  std::string name() const { return kind == Kind::Uniform ? "uniform" : "uniform-mcshane"; }
};

struct CertifyResult {
  double empirical = 0.0;            // max lip(Ef)/lip(f) over the corpus
  std::optional<double> exact;       // free-space operator norm, when computed
  bool bound_ok = false;             // empirical <= claimed + tol
  std::vector<double> worst_values;  // source values attaining the empirical max
  int trials_used = 0;
};

/// Random-function certification of the claimed bound.  Draws `trials`
/// functions on the source (uniform values in [-1,1], optionally smoothed
/// by a midpoint norm-preserving extension from a random half of the
/// source), skips near-constant draws, and reports the worst ratio.
CertifyResult certify_norm(const ExtensionOperator& E, int trials, const CorpusSpec& corpus,
                           double tol = kDefaultTol, bool compute_exact = true);

}  // namespace lipext
