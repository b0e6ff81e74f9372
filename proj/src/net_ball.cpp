#include "lipext/net_ball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace lipext {

std::vector<double> radial_project(const std::vector<double>& center, double radius,
                                   const std::vector<double>& x) {
  if (center.size() != x.size()) throw SizeError("center and point dimension mismatch");
  if (radius <= 0.0) throw SizeError("ball radius must be positive");
  const double dist = l1_dist(x, center);
  if (dist <= radius) return x;
  std::vector<double> p(x.size());
  const double scale = radius / dist;
  for (size_t i = 0; i < x.size(); ++i) p[i] = center[i] + (x[i] - center[i]) * scale;
  return p;
}

int nearest_point(const std::vector<std::vector<double>>& pts, const std::vector<double>& q) {
  if (pts.empty()) throw NetBallError(NetBallError::Kind::EmptyIntersection, "no candidate points");
  int best = 0;
  double best_d = l1_dist(pts[0], q);
  for (size_t i = 1; i < pts.size(); ++i) {
    const double d = l1_dist(pts[i], q);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

double integer_lattice_covering_radius(int dim) {
  if (dim < 1 || dim > 12) throw SizeError("covering radius scan limited to 12 axes");
  long long total = 1;
  for (int i = 0; i < dim; ++i) total *= 3;
  double worst = 0.0;
  for (long long k = 0; k < total; ++k) {
    long long rem = k;
    double d = 0.0;
    for (int i = 0; i < dim; ++i) {
      const double c = 0.5 * static_cast<double>(rem % 3);
      rem /= 3;
      d += std::min(c, 1.0 - c);
    }
    worst = std::max(worst, d);
  }
  return worst;
}

namespace {

std::vector<int> in_ball_indices(const std::vector<std::vector<double>>& net,
                                 const std::vector<double>& center, double radius, double tol) {
  std::vector<int> sel;
  for (size_t i = 0; i < net.size(); ++i)
    if (l1_dist(net[i], center) <= radius + tol) sel.push_back(static_cast<int>(i));
  if (sel.empty())
    throw NetBallError(NetBallError::Kind::EmptyIntersection,
                       "no net point within radius " + std::to_string(radius));
  return sel;
}

}  // namespace

int net_ball_retract_index(const std::vector<std::vector<double>>& net,
                           const std::vector<double>& center, double radius,
                           const std::vector<double>& x, double tol) {
  const std::vector<int> sel = in_ball_indices(net, center, radius, tol);
  const std::vector<double> p = radial_project(center, radius, x);
  int best = sel[0];
  double best_d = l1_dist(net[sel[0]], p);
  for (size_t k = 1; k < sel.size(); ++k) {
    const double d = l1_dist(net[sel[k]], p);
    if (d < best_d) {
      best_d = d;
      best = sel[k];
    }
  }
  return best;
}

std::vector<double> net_ball_retract(const std::vector<std::vector<double>>& net,
                                     const std::vector<double>& center, double radius,
                                     const std::vector<double>& x, double tol) {
  return net[net_ball_retract_index(net, center, radius, x, tol)];
}

NetBallOperatorResult net_ball_operator(const std::vector<std::vector<double>>& net,
                                        const std::vector<double>& center, double radius,
                                        double eps,
                                        const std::vector<std::vector<double>>& samples,
                                        int cap, double tol) {
  if (eps < 0.0) throw SizeError("net density radius must be nonnegative");
  if (cap < 0) cap = max_points_cap();
  const std::vector<int> sel = in_ball_indices(net, center, radius, tol);
  const int source_count = static_cast<int>(sel.size());
  if (source_count + static_cast<int>(samples.size()) > cap)
    throw SizeError("net-ball operator would materialize up to " +
                    std::to_string(source_count + samples.size()) + " points, cap " +
                    std::to_string(cap));

  NetBallOperatorResult res;
  res.eps = eps;
  res.delta = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> coords;
  coords.reserve(source_count + samples.size());
  for (int i : sel) coords.push_back(net[i]);
  for (int a = 0; a < source_count; ++a)
    for (int b = a + 1; b < source_count; ++b)
      res.delta = std::min(res.delta, l1_dist(coords[a], coords[b]));

  res.net_index.resize(source_count);
  for (int i = 0; i < source_count; ++i) res.net_index[i] = i;

  res.sample_index.reserve(samples.size());
  for (const auto& s : samples) {
    int found = -1;
    for (size_t i = 0; i < coords.size(); ++i)
      if (coords[i] == s) {
        found = static_cast<int>(i);
        break;
      }
    if (found < 0) {
      coords.push_back(s);
      found = static_cast<int>(coords.size()) - 1;
    }
    res.sample_index.push_back(found);
  }

  res.points = std::make_shared<L1PointSet>(static_cast<int>(center.size()), coords, 0);
  SpacePtr space = res.points->to_metric_space(cap);

  ExtensionOperator E;
  E.ambient = space;
  E.source = SubsetRef(space, res.net_index);
  E.provenance = "net-ball";
  E.claimed_bound = std::isfinite(res.delta) ? 2.0 + 4.0 * eps / res.delta : 2.0;
  const int n = space->size();
  E.rows.assign(n, std::vector<double>(source_count, 0.0));
  for (int i = 0; i < source_count; ++i) E.rows[i][i] = 1.0;
  for (int x = source_count; x < n; ++x) {
    const std::vector<double> p = radial_project(center, radius, coords[x]);
    int best = 0;
    double best_d = l1_dist(coords[0], p);
    for (int i = 1; i < source_count; ++i) {
      const double d = l1_dist(coords[i], p);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    E.rows[x][best] = 1.0;
  }
  res.op = std::move(E);
  return res;
}

}  // namespace lipext
