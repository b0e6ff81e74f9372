#include "lipext/min_cost_flow.hpp"

#include <limits>

namespace lipext {

namespace {
constexpr double kFlowEps = 1e-12;
}

void MinCostFlow::add_edge(int from, int to, double capacity, double cost) {
  edges_.push_back({to, capacity, cost, head_[from]});
  head_[from] = static_cast<int>(edges_.size()) - 1;
  edges_.push_back({from, 0.0, -cost, head_[to]});
  head_[to] = static_cast<int>(edges_.size()) - 1;
}

double MinCostFlow::send(int s, int t, double amount) {
  double total_cost = 0.0;
  const double inf = std::numeric_limits<double>::infinity();
  while (amount > kFlowEps) {
    // Bellman-Ford over residual edges.
    std::vector<double> dist(n_, inf);
    std::vector<int> pre_edge(n_, -1);
    dist[s] = 0.0;
    for (int round = 0; round < n_; ++round) {
      bool changed = false;
      for (int u = 0; u < n_; ++u) {
        if (dist[u] == inf) continue;
        for (int e = head_[u]; e >= 0; e = edges_[e].next) {
          if (edges_[e].cap <= kFlowEps) continue;
          const double nd = dist[u] + edges_[e].cost;
          if (nd < dist[edges_[e].to] - 1e-15) {
            dist[edges_[e].to] = nd;
            pre_edge[edges_[e].to] = e;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (dist[t] == inf)
      throw LpError(LpError::Kind::Infeasible, "flow demand cannot be satisfied");

    double push = amount;
    for (int v = t; v != s;) {
      const Edge& e = edges_[pre_edge[v]];
      push = std::min(push, e.cap);
      v = edges_[pre_edge[v] ^ 1].to;
    }
    for (int v = t; v != s;) {
      edges_[pre_edge[v]].cap -= push;
      edges_[pre_edge[v] ^ 1].cap += push;
      v = edges_[pre_edge[v] ^ 1].to;
    }
    total_cost += push * dist[t];
    amount -= push;
  }
  return total_cost;
}

}  // namespace lipext
