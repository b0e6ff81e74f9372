#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lipext/constructions.hpp"
#include "lipext/extension_op.hpp"
#include "lipext/report.hpp"
#include "lipext/rng.hpp"

namespace lipext {

// Report rows with fixed pass/margin conventions:
//   bound     computed <= claimed + tol
//   at-least  computed >= claimed - tol
//   equals    |computed - claimed| <= tol
//   property  claimed 1, computed 1 or 0
ResultRow bound_row(const std::string& name, double claimed, double computed, double tol);
ResultRow atleast_row(const std::string& name, double claimed, double computed, double tol);
ResultRow equals_row(const std::string& name, double claimed, double computed, double tol);
ResultRow property_row(const std::string& name, bool ok);

// Random metric space: symmetric uniform draws in [1, 10] repaired into a
// metric by shortest paths, then validated.
SpacePtr random_space(Rng& rng, int n, int cap = -1);

// Random zero-mass molecule supported on up to max_support points.
Molecule random_molecule(Rng& rng, const SpacePtr& space, int max_support = 4);

// The space restricted to a subset of its points.  new_base must be one of
// the listed indices; ids carry over.
SpacePtr restrict_space(const SpacePtr& space, const std::vector<int>& indices, int new_base);

struct GlueFamilyInstance {
  SpacePtr space;            // anchor, placed sets, extra ambient points
  std::vector<SubsetRef> sets;
  int anchor = 0;
  std::vector<ExtensionOperator> extenders;  // one McShane operator per set
  SeparationReport report;
};

// Random family of one- and two-point integer shapes placed on dyadic norm
// bands, with extra ambient points scattered around and between the bands.
// The McShane operators on such small sets have exact norm 1.
GlueFamilyInstance random_glue_family_instance(Rng& rng, int dim, int set_count,
                                               int ambient_extra);

struct VerifyOptions {
  std::uint64_t seed = 0;
  int trials = 0;   // random functions per certification; 0 means the target default
  double tol = kDefaultTol;
  int n = 0;        // dimension, where the target takes one
  int box = 0;      // lattice points per axis (grid-interp)
  int count = -1;   // family size, where the target takes one
};

const std::vector<std::string>& verify_targets();

// Runs one verification target and assembles its report.  Unknown targets
// and invalid parameters throw; row failures only clear the pass flag.
RunReport verify_target(const std::string& target, const VerifyOptions& opt);

// Extension constant of S in its ambient space: LP value, structural checks
// on the optimal rows, and upper bounds from the McShane operators.
RunReport compute_e_report(const SubsetRef& S, double tol,
                           std::map<std::string, std::string> inputs);

}  // namespace lipext
