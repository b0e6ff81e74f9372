#pragma once

#include <vector>

#include "lipext/errors.hpp"

namespace lipext {

/// Minimum-cost flow by successive shortest augmenting paths (Bellman-Ford
/// on the residual network).  Real-valued capacities; costs must make every
/// residual cycle nonnegative, which holds for the transportation instances
/// built here.
class MinCostFlow {
 public:
  explicit MinCostFlow(int nodes) : n_(nodes), head_(nodes, -1) {}

  void add_edge(int from, int to, double capacity, double cost);

  /// Sends `amount` of flow from s to t; returns the total cost.
  /// Throws LpError::Infeasible if the demand cannot be routed.
  double send(int s, int t, double amount);

 private:
  struct Edge {
    int to;
    double cap;
    double cost;
    int next;
  };
  int n_;
  std::vector<int> head_;
  std::vector<Edge> edges_;
};

}  // namespace lipext
