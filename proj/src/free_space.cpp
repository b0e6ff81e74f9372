#include "lipext/free_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lipext/lipfn.hpp"
#include "lipext/min_cost_flow.hpp"
#include "lipext/simplex.hpp"

namespace lipext {

Molecule Molecule::balanced(SpacePtr space, std::map<int, double> raw) {
  Molecule mu;
  mu.space = std::move(space);
  mu.weights = std::move(raw);
  for (const auto& [i, w] : mu.weights) {
    (void)w;
    if (i < 0 || i >= mu.space->size()) throw SizeError("molecule index out of range");
  }
  double mass = 0.0;
  for (const auto& [i, w] : mu.weights) {
    (void)i;
    mass += w;
  }
  if (mass != 0.0) mu.weights[mu.space->base_point()] -= mass;
  // Drop exact zeros to keep supports tight.
  for (auto it = mu.weights.begin(); it != mu.weights.end();)
    it = it->second == 0.0 ? mu.weights.erase(it) : std::next(it);
  return mu;
}

Molecule Molecule::pair(SpacePtr space, int x, int y) {
  Molecule mu;
  mu.space = std::move(space);
  if (x != y) {
    mu.weights[x] = 1.0;
    mu.weights[y] = -1.0;
  }
  return mu;
}

double Molecule::mass() const {
  double m = 0.0;
  for (const auto& [i, w] : weights) {
    (void)i;
    m += w;
  }
  return m;
}

double kr_norm_fast(const Molecule& mu, double mass_tol) {
  if (std::fabs(mu.mass()) > mass_tol)
    throw FreeSpaceError(FreeSpaceError::Kind::NonzeroMass,
                         "molecule mass " + std::to_string(mu.mass()) + " is not zero");
  std::vector<int> pos, neg;
  std::vector<double> supply, demand;
  for (const auto& [i, w] : mu.weights) {
    if (w > 0.0) {
      pos.push_back(i);
      supply.push_back(w);
    } else if (w < 0.0) {
      neg.push_back(i);
      demand.push_back(-w);
    }
  }
  if (pos.empty()) return 0.0;

  const int np = static_cast<int>(pos.size()), nn = static_cast<int>(neg.size());
  // Node layout: 0 = source, 1 = sink, then supplies, then demands.
  MinCostFlow flow(2 + np + nn);
  double total = 0.0;
  for (int a = 0; a < np; ++a) {
    flow.add_edge(0, 2 + a, supply[a], 0.0);
    total += supply[a];
  }
  for (int b = 0; b < nn; ++b) flow.add_edge(2 + np + b, 1, demand[b], 0.0);
  for (int a = 0; a < np; ++a)
    for (int b = 0; b < nn; ++b)
      flow.add_edge(2 + a, 2 + np + b, std::numeric_limits<double>::infinity(),
                    mu.space->d(pos[a], neg[b]));
  return flow.send(0, 1, total);
}

namespace {

// max <f, mu> over 1-Lipschitz f, as a linear program on the support.
double kr_norm_dual(const Molecule& mu) {
  std::vector<int> sup;
  std::vector<double> w;
  for (const auto& [i, wi] : mu.weights) {
    if (wi != 0.0) {
      sup.push_back(i);
      w.push_back(wi);
    }
  }
  const int k = static_cast<int>(sup.size());
  if (k == 0) return 0.0;
  LinearProgram lp;
  std::vector<int> var(k, -1);
  // Pin the first support point; <f, mu> is invariant under constants.
  for (int i = 1; i < k; ++i) var[i] = lp.add_var(-w[i], /*free_sign=*/true);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      std::vector<std::pair<int, double>> terms;
      if (var[i] >= 0) terms.push_back({var[i], 1.0});
      if (var[j] >= 0) terms.push_back({var[j], -1.0});
      if (terms.empty()) continue;
      lp.add_le(terms, mu.space->d(sup[i], sup[j]));
    }
  }
  return -lp.minimize().objective;
}

}  // namespace

KrCertificate kr_norm_certified(const Molecule& mu, double mass_tol) {
  KrCertificate cert;
  cert.primal = kr_norm_fast(mu, mass_tol);
  cert.dual = kr_norm_dual(mu);
  return cert;
}

double kr_norm(const Molecule& mu, double cross_tol) {
  KrCertificate cert = kr_norm_certified(mu);
  if (std::fabs(cert.primal - cert.dual) > cross_tol)
    throw LpError(LpError::Kind::Infeasible,
                  "transport and potential routes disagree: " + std::to_string(cert.primal) +
                      " vs " + std::to_string(cert.dual));
  return cert.primal;
}

namespace {

struct Halfspace {
  std::vector<double> normal;  // dense over the pinned coordinates
  double offset;               // normal . f <= offset
};

int matrix_rank(std::vector<std::vector<double>> rows, int cols, double tol = 1e-7) {
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    double best = tol;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (std::fabs(rows[r][c]) > best) {
        best = std::fabs(rows[r][c]);
        piv = r;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank) continue;
      const double factor = rows[r][c] / rows[rank][c];
      if (factor == 0.0) continue;
      for (int cc = c; cc < cols; ++cc) rows[r][cc] -= factor * rows[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<std::vector<double>> lip_ball_vertices(const SubsetRef& S, int cap) {
  const int ns = S.size();
  if (ns > cap)
    throw FreeSpaceError(FreeSpaceError::Kind::TooLarge,
                         "vertex enumeration capped at " + std::to_string(cap) + " points");
  const FiniteMetricSpace& space = *S.space;
  int pin_pos = 0;
  {
    int p = S.position_of(space.base_point());
    if (p >= 0) pin_pos = p;
  }
  const int m = ns - 1;  // pinned dimension
  std::vector<int> coord_pos;  // subset positions carrying coordinates
  for (int p = 0; p < ns; ++p)
    if (p != pin_pos) coord_pos.push_back(p);

  auto expand = [&](const std::vector<double>& y) {
    std::vector<double> full(ns, 0.0);
    for (int c = 0; c < m; ++c) full[coord_pos[c]] = y[c];
    return full;
  };

  if (m == 0) return {expand({})};

  const double geom_tol = 1e-9;

  // Initial polytope: the box cut out by the pairs through the pin.
  std::vector<std::vector<double>> verts;
  {
    std::vector<double> radius(m);
    for (int c = 0; c < m; ++c)
      radius[c] = space.d(S.indices[coord_pos[c]], S.indices[pin_pos]);
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<double> v(m);
      for (int c = 0; c < m; ++c) v[c] = (mask >> c & 1) ? radius[c] : -radius[c];
      verts.push_back(std::move(v));
    }
  }
  std::vector<Halfspace> processed;
  for (int c = 0; c < m; ++c) {
    const double r = space.d(S.indices[coord_pos[c]], S.indices[pin_pos]);
    Halfspace hplus{std::vector<double>(m, 0.0), r};
    hplus.normal[c] = 1.0;
    Halfspace hminus{std::vector<double>(m, 0.0), r};
    hminus.normal[c] = -1.0;
    processed.push_back(hplus);
    processed.push_back(hminus);
  }

  // Remaining constraints: one pair of halfspaces per off-pin pair.
  std::vector<Halfspace> pending;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const double dab = space.d(S.indices[coord_pos[a]], S.indices[coord_pos[b]]);
      Halfspace h1{std::vector<double>(m, 0.0), dab};
      h1.normal[a] = 1.0;
      h1.normal[b] = -1.0;
      Halfspace h2{std::vector<double>(m, 0.0), dab};
      h2.normal[a] = -1.0;
      h2.normal[b] = 1.0;
      pending.push_back(h1);
      pending.push_back(h2);
    }
  }

  auto dot = [&](const std::vector<double>& a, const std::vector<double>& x) {
    double s = 0.0;
    for (int c = 0; c < m; ++c) s += a[c] * x[c];
    return s;
  };

  for (const Halfspace& h : pending) {
    std::vector<double> val(verts.size());
    bool any_out = false;
    for (size_t i = 0; i < verts.size(); ++i) {
      val[i] = dot(h.normal, verts[i]) - h.offset;
      if (val[i] > geom_tol) any_out = true;
    }
    processed.push_back(h);
    if (!any_out) continue;

    std::vector<std::vector<double>> next;
    for (size_t i = 0; i < verts.size(); ++i)
      if (val[i] <= geom_tol) next.push_back(verts[i]);

    auto is_vertex = [&](const std::vector<double>& p) {
      std::vector<std::vector<double>> active;
      for (const Halfspace& hc : processed)
        if (std::fabs(dot(hc.normal, p) - hc.offset) <= 1e-7) active.push_back(hc.normal);
      return matrix_rank(std::move(active), m) == m;
    };

    for (size_t i = 0; i < verts.size(); ++i) {
      if (val[i] <= geom_tol) continue;
      for (size_t j = 0; j < verts.size(); ++j) {
        if (val[j] >= -geom_tol) continue;
        const double s = val[i] / (val[i] - val[j]);
        std::vector<double> p(m);
        for (int c = 0; c < m; ++c) p[c] = verts[i][c] + s * (verts[j][c] - verts[i][c]);
        if (!is_vertex(p)) continue;
        bool dup = false;
        for (const auto& q : next) {
          double diff = 0.0;
          for (int c = 0; c < m; ++c) diff = std::max(diff, std::fabs(p[c] - q[c]));
          if (diff <= 1e-7) {
            dup = true;
            break;
          }
        }
        if (!dup) next.push_back(std::move(p));
      }
    }
    verts = std::move(next);
  }

  std::sort(verts.begin(), verts.end());
  std::vector<std::vector<double>> out;
  out.reserve(verts.size());
  for (const auto& v : verts) out.push_back(expand(v));
  return out;
}

static void check_unital_rows(const FiniteMetricSpace& M, const std::vector<int>& source,
                              const std::vector<std::vector<double>>& rows) {
  if (static_cast<int>(rows.size()) != M.size())
    throw FreeSpaceError(FreeSpaceError::Kind::NotMaterializable,
                         "row count does not match ambient size");
  for (const auto& r : rows)
    if (r.size() != source.size())
      throw FreeSpaceError(FreeSpaceError::Kind::NotMaterializable,
                           "column count does not match source size");
}

double exact_operator_norm(const FiniteMetricSpace& M, const std::vector<int>& source,
                           const std::vector<std::vector<double>>& rows) {
  check_unital_rows(M, source, rows);
  // The space pointer is only used for distances inside kr_norm_fast; wrap
  // the metric in a molecule per ambient pair of rows.
  double best = 0.0;
  const int n = M.size();
  const int ns = static_cast<int>(source.size());
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      std::map<int, double> w;
      for (int j = 0; j < ns; ++j) {
        const double diff = rows[x][j] - rows[y][j];
        if (diff != 0.0) w[source[j]] += diff;
      }
      if (w.empty()) continue;
      Molecule mu;
      mu.space = nullptr;  // set below
      // kr_norm_fast needs a SpacePtr; exact_operator_norm is called with
      // the ambient space owned elsewhere, so alias it without copying.
      mu.space = SpacePtr(&M, [](const FiniteMetricSpace*) {});
      mu.weights = std::move(w);
      best = std::max(best, kr_norm_fast(mu) / M.d(x, y));
    }
  }
  return best;
}

double operator_norm_via_lip_vertices(const FiniteMetricSpace& M, const std::vector<int>& source,
                                      const std::vector<std::vector<double>>& rows, int cap) {
  check_unital_rows(M, source, rows);
  SpacePtr alias(&M, [](const FiniteMetricSpace*) {});
  SubsetRef S(alias, source);
  auto vertices = lip_ball_vertices(S, cap);
  double best = 0.0;
  const int n = M.size();
  for (const auto& v : vertices) {
    std::vector<double> ev(n, 0.0);
    for (int x = 0; x < n; ++x)
      for (size_t j = 0; j < v.size(); ++j) ev[x] += rows[x][j] * v[j];
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        best = std::max(best, std::fabs(ev[x] - ev[y]) / M.d(x, y));
  }
  return best;
}

ProjectionMatrix projection_matrix(const SpacePtr& ambient, const SubsetRef& source,
                                   const std::vector<std::vector<double>>& rows) {
  check_unital_rows(*ambient, source.indices, rows);
  ProjectionMatrix pm;
  pm.source = source;
  int pin_pos = 0;
  {
    int p = source.position_of(ambient->base_point());
    if (p >= 0) pin_pos = p;
  }
  for (int i = 0; i < ambient->size(); ++i)
    if (i != ambient->base_point()) pm.row_points.push_back(i);
  for (int p = 0; p < source.size(); ++p)
    if (p != pin_pos) pm.col_points.push_back(source.indices[p]);
  for (int i : pm.row_points) {
    std::vector<double> row;
    for (int p = 0; p < source.size(); ++p)
      if (p != pin_pos) row.push_back(rows[i][p]);
    pm.entries.push_back(std::move(row));
  }
  return pm;
}

bool projection_property_holds(const ProjectionMatrix& pm, double tol) {
  // Rows at source points must be coordinate selectors in pinned form.
  for (size_t r = 0; r < pm.row_points.size(); ++r) {
    const int ambient_idx = pm.row_points[r];
    const int pos = pm.source.position_of(ambient_idx);
    if (pos < 0) continue;
    for (size_t c = 0; c < pm.col_points.size(); ++c) {
      const double expected = pm.col_points[c] == ambient_idx ? 1.0 : 0.0;
      if (std::fabs(pm.entries[r][c] - expected) > tol) return false;
    }
  }
  return true;
}

ExtensionConstant extension_constant_lp(const SubsetRef& S, int point_cap, int vertex_cap,
                                        double tol) {
  const SpacePtr& space = S.space;
  const int n = space->size();
  const int ns = S.size();
  if (n > point_cap)
    throw FreeSpaceError(FreeSpaceError::Kind::TooLarge,
                         "extension constant program capped at " + std::to_string(point_cap) +
                             " ambient points");
  if (S.position_of(space->base_point()) < 0)
    throw FreeSpaceError(FreeSpaceError::Kind::BasePointNotInS,
                         "ambient base point must belong to the subset");

  ExtensionConstant out;
  out.optimal_rows.assign(n, std::vector<double>(ns, 0.0));
  for (int p = 0; p < ns; ++p) out.optimal_rows[S.indices[p]][p] = 1.0;
  if (ns == 1) {
    // One-point subset: only constant functions, extended by constants.
    out.e = 1.0;
    for (int x = 0; x < n; ++x)
      if (S.position_of(x) < 0) out.optimal_rows[x][0] = 1.0;
    return out;
  }

  const auto vertices = lip_ball_vertices(S, vertex_cap);
  out.vertices_used = static_cast<int>(vertices.size());
  const int pin_pos = S.position_of(space->base_point());

  std::vector<int> unknown;  // ambient points with free rows
  for (int x = 0; x < n; ++x)
    if (S.position_of(x) < 0) unknown.push_back(x);
  std::vector<int> coord_pos;
  for (int p = 0; p < ns; ++p)
    if (p != pin_pos) coord_pos.push_back(p);
  const int k = static_cast<int>(coord_pos.size());

  // Slope of a vertex image between ambient points x and y given candidate
  // coefficients B (unknown-major, then coordinate).
  auto image_at = [&](const std::vector<double>& B, const std::vector<double>& v, int x) {
    const int pos = S.position_of(x);
    if (pos >= 0) return v[pos];
    const int u = static_cast<int>(std::lower_bound(unknown.begin(), unknown.end(), x) -
                                   unknown.begin());
    double s = 0.0;
    for (int c = 0; c < k; ++c) s += B[static_cast<size_t>(u) * k + c] * v[coord_pos[c]];
    return s;
  };

  // Lazy constraint generation over (vertex, ambient pair, sign).
  struct Cut {
    int vertex, x, y;  // sign folded into (x, y) order
  };
  std::vector<Cut> cuts;
  double lower_seed = 0.0;
  for (const auto& v : vertices)
    for (int a = 0; a < ns; ++a)
      for (int b = a + 1; b < ns; ++b)
        lower_seed = std::max(lower_seed, std::fabs(v[a] - v[b]) /
                                              space->d(S.indices[a], S.indices[b]));

  std::vector<double> B(static_cast<size_t>(unknown.size()) * k, 0.0);
  double t_opt = lower_seed;
  const int max_rounds = 200;
  for (int round = 0;; ++round) {
    if (round >= max_rounds)
      throw LpError(LpError::Kind::IterationLimit, "constraint generation did not converge");

    LinearProgram lp;
    const int t_var = lp.add_var(1.0, /*free_sign=*/false);
    std::vector<int> bvar(B.size());
    for (size_t i = 0; i < B.size(); ++i) bvar[i] = lp.add_var(0.0, /*free_sign=*/true);
    lp.add_ge({{t_var, 1.0}}, lower_seed);

    for (const Cut& cut : cuts) {
      const auto& v = vertices[cut.vertex];
      // image(x) - image(y) <= t d(x,y)
      std::vector<std::pair<int, double>> terms;
      double constant = 0.0;
      auto accumulate = [&](int pt, double sgn) {
        const int pos = S.position_of(pt);
        if (pos >= 0) {
          constant += sgn * v[pos];
          return;
        }
        const int u = static_cast<int>(std::lower_bound(unknown.begin(), unknown.end(), pt) -
                                       unknown.begin());
        for (int c = 0; c < k; ++c)
          if (v[coord_pos[c]] != 0.0)
            terms.push_back({bvar[static_cast<size_t>(u) * k + c], sgn * v[coord_pos[c]]});
      };
      accumulate(cut.x, +1.0);
      accumulate(cut.y, -1.0);
      terms.push_back({t_var, -space->d(cut.x, cut.y)});
      lp.add_le(terms, -constant);
    }

    auto sol = lp.minimize();
    t_opt = sol.x[t_var];
    for (size_t i = 0; i < B.size(); ++i) B[i] = sol.x[bvar[i]];

    // Separation: find violated slopes.
    struct Violation {
      double amount;
      Cut cut;
    };
    std::vector<Violation> viols;
    for (size_t vi = 0; vi < vertices.size(); ++vi) {
      const auto& v = vertices[vi];
      std::vector<double> img(n);
      for (int x = 0; x < n; ++x) img[x] = image_at(B, v, x);
      for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
          const double slack = std::fabs(img[x] - img[y]) - t_opt * space->d(x, y);
          if (slack > 1e-10) {
            Cut c{static_cast<int>(vi), x, y};
            if (img[x] < img[y]) std::swap(c.x, c.y);
            viols.push_back({slack, c});
          }
        }
      }
    }
    if (viols.empty()) break;
    std::sort(viols.begin(), viols.end(), [](const Violation& a, const Violation& b) {
      if (a.amount != b.amount) return a.amount > b.amount;
      if (a.cut.vertex != b.cut.vertex) return a.cut.vertex < b.cut.vertex;
      if (a.cut.x != b.cut.x) return a.cut.x < b.cut.x;
      return a.cut.y < b.cut.y;
    });
    const size_t add = std::min<size_t>(viols.size(), 100);
    for (size_t i = 0; i < add; ++i) cuts.push_back(viols[i].cut);
  }

  out.e = t_opt;
  for (size_t u = 0; u < unknown.size(); ++u) {
    double coef_sum = 0.0;
    for (int c = 0; c < k; ++c) {
      const double coef = B[u * k + c];
      out.optimal_rows[unknown[u]][coord_pos[c]] = coef;
      coef_sum += coef;
    }
    out.optimal_rows[unknown[u]][pin_pos] = 1.0 - coef_sum;
  }
  (void)tol;
  return out;
}

}  // namespace lipext
