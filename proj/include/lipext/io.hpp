#pragma once

#include <string>
#include <vector>

#include "lipext/free_space.hpp"
#include "lipext/lipfn.hpp"
#include "lipext/metric_space.hpp"

namespace lipext {

// Space files hold either an explicit matrix
//   {"points": ["a","b",...], "dist": [[...],...], "base_point": 0}
// or an l1 point set
//   {"l1": {"dim": 2, "coords": [[...],...], "base_point": 0}}
// Both forms are validated on load.
SpacePtr parse_space(const std::string& text, int cap = -1);
SpacePtr load_space(const std::string& path, int cap = -1);

// Subset files: {"indices": [0, 2, 5]} or a bare array.  An optional "space"
// entry naming the space file is accepted and ignored.
std::vector<int> parse_indices(const std::string& text);
SubsetRef load_subset(const SpacePtr& space, const std::string& path);

// Function files: {"indices": [...], "values": [...]} aligned by position.
LipFunction parse_function(const SpacePtr& space, const std::string& text);
LipFunction load_function(const SpacePtr& space, const std::string& path);

// Molecule files: {"weights": {"3": 1.5, ...}} keyed by point index; the
// weights are balanced at the base point on load.
Molecule parse_molecule(const SpacePtr& space, const std::string& text);
Molecule load_molecule(const SpacePtr& space, const std::string& path);

}  // namespace lipext
