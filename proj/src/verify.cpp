#include "lipext/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lipext/cones.hpp"
#include "lipext/free_space.hpp"
#include "lipext/grid.hpp"
#include "lipext/net_ball.hpp"

namespace lipext {

ResultRow bound_row(const std::string& name, double claimed, double computed, double tol) {
  ResultRow r;
  r.row = name;
  r.kind = "bound";
  r.claimed = claimed;
  r.computed = computed;
  r.margin = claimed + tol - computed;
  r.pass = computed <= claimed + tol;
  return r;
}

ResultRow atleast_row(const std::string& name, double claimed, double computed, double tol) {
  ResultRow r;
  r.row = name;
  r.kind = "at-least";
  r.claimed = claimed;
  r.computed = computed;
  r.margin = computed - claimed + tol;
  r.pass = computed >= claimed - tol;
  return r;
}

ResultRow equals_row(const std::string& name, double claimed, double computed, double tol) {
  ResultRow r;
  r.row = name;
  r.kind = "equals";
  r.claimed = claimed;
  r.computed = computed;
  r.margin = tol - std::fabs(computed - claimed);
  r.pass = r.margin >= 0.0;
  return r;
}

ResultRow property_row(const std::string& name, bool ok) {
  ResultRow r;
  r.row = name;
  r.kind = "property";
  r.claimed = 1.0;
  r.computed = ok ? 1.0 : 0.0;
  r.margin = r.computed - 1.0;
  r.pass = ok;
  return r;
}

SpacePtr random_space(Rng& rng, int n, int cap) {
  if (n < 1) throw SizeError("space needs at least one point");
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d[i][j] = d[j][i] = rng.uniform(1.0, 10.0);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return FiniteMetricSpace::validated(std::move(d), {}, 0, kDefaultTol, cap);
}

Molecule random_molecule(Rng& rng, const SpacePtr& space, int max_support) {
  const int hi = std::min(max_support, space->size());
  const int k = hi <= 2 ? hi : 2 + rng.below(hi - 1);
  const std::vector<int> perm = rng.permutation(space->size());
  std::map<int, double> raw;
  for (int i = 0; i < k; ++i) raw[perm[i]] = rng.uniform(-1.0, 1.0);
  return Molecule::balanced(space, std::move(raw));
}

SpacePtr restrict_space(const SpacePtr& space, const std::vector<int>& indices, int new_base) {
  int base_pos = -1;
  for (size_t i = 0; i < indices.size(); ++i)
    if (indices[i] == new_base) base_pos = static_cast<int>(i);
  if (base_pos < 0) throw SizeError("new base point must be among the restricted indices");
  const int m = static_cast<int>(indices.size());
  std::vector<std::vector<double>> d(m, std::vector<double>(m));
  std::vector<std::string> ids(m);
  for (int i = 0; i < m; ++i) {
    ids[i] = space->id(indices[i]);
    for (int j = 0; j < m; ++j) d[i][j] = space->d(indices[i], indices[j]);
  }
  return FiniteMetricSpace::validated(std::move(d), std::move(ids), base_pos);
}

namespace {

std::vector<std::vector<std::vector<long long>>> random_shapes(Rng& rng, int dim, int count) {
  std::vector<std::vector<std::vector<long long>>> shapes;
  shapes.reserve(count);
  for (int s = 0; s < count; ++s) {
    std::vector<std::vector<long long>> shape;
    std::vector<long long> p0(dim);
    for (int a = 0; a < dim; ++a) p0[a] = rng.below(7) - 3;
    shape.push_back(p0);
    if (rng.below(2) == 1) {
      std::vector<long long> p1(dim);
      for (;;) {
        bool zero = true;
        for (int a = 0; a < dim; ++a) {
          p1[a] = p0[a] + rng.below(9) - 4;
          if (p1[a] != p0[a]) zero = false;
        }
        if (!zero) break;
      }
      shape.push_back(p1);
    }
    shapes.push_back(std::move(shape));
  }
  return shapes;
}

}  // namespace

GlueFamilyInstance random_glue_family_instance(Rng& rng, int dim, int set_count,
                                               int ambient_extra) {
  const auto shapes = random_shapes(rng, dim, set_count);
  DyadicPlacement placement = place_dyadic(dim, shapes);

  std::vector<std::vector<double>> coords = placement.points->points();
  const int placed_count = static_cast<int>(coords.size());
  const double reach = std::ldexp(1.0, placement.k.back() + 3);
  for (int e = 0; e < ambient_extra; ++e) {
    std::vector<double> q(dim);
    for (;;) {
      if (e % 2 == 0) {
        for (int a = 0; a < dim; ++a) q[a] = rng.uniform(-reach, reach);
      } else {
        const int near = 1 + rng.below(placed_count - 1);
        const double spread = std::ldexp(1.0, placement.k[0]);
        for (int a = 0; a < dim; ++a) q[a] = coords[near][a] + rng.uniform(-spread, spread);
      }
      bool clash = false;
      for (const auto& c : coords)
        if (c == q) {
          clash = true;
          break;
        }
      if (!clash) break;
    }
    coords.push_back(std::move(q));
  }

  GlueFamilyInstance inst;
  auto points = std::make_shared<L1PointSet>(dim, std::move(coords), 0);
  inst.space = points->to_metric_space(-1);
  inst.anchor = 0;
  for (const SubsetRef& s : placement.sets) inst.sets.emplace_back(inst.space, s.indices);
  inst.report = separation_constants(inst.sets, inst.anchor);
  for (const SubsetRef& s : inst.sets)
    inst.extenders.push_back(mcshane_operator(s, McShaneMode::Inf, true));
  return inst;
}

namespace {

RunReport assemble(std::string command, std::map<std::string, std::string> inputs,
                   std::vector<ResultRow> rows) {
  RunReport rep;
  rep.command = std::move(command);
  rep.inputs = std::move(inputs);
  rep.results = std::move(rows);
  rep.pass = rep.all_pass();
  return rep;
}

bool operator_checks_out(const ExtensionOperator& op, double tol) {
  try {
    op.validate(tol);
    return true;
  } catch (const Error&) {
    return false;
  }
}

RunReport run_glue_pair(const VerifyOptions& opt, std::map<std::string, std::string> inputs) {
  const int trials = opt.trials > 0 ? opt.trials : 50;
  inputs["trials"] = std::to_string(trials);
  Rng rng(opt.seed);
  SpacePtr space = random_space(rng, 12);

  std::vector<int> order(space->size());
  std::iota(order.begin(), order.end(), 0);
  const int base = space->base_point();
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return space->d(base, a) < space->d(base, b); });
  const std::vector<int> s1(order.begin(), order.begin() + 3);
  const std::vector<int> s2(order.end() - 3, order.end());
  const double gap = set_distance(*space, s1, s2);

  const ExtensionOperator e1 = mcshane_operator(SubsetRef(space, s1), McShaneMode::Inf, true);
  const ExtensionOperator e2 = mcshane_operator(SubsetRef(space, s2), McShaneMode::Inf, true);
  const ExtensionOperator glued = glue_pair(e1, e2, gap, opt.tol);

  const CertifyResult cert =
      certify_norm(glued, trials, CorpusSpec{CorpusSpec::Kind::Uniform, opt.seed}, opt.tol, true);
  const double exact = cert.exact.value();

  std::vector<ResultRow> rows;
  rows.push_back(property_row("operator-valid", operator_checks_out(glued, opt.tol)));
  rows.push_back(bound_row("exact-norm-le-claimed", glued.claimed_bound, exact, opt.tol));
  rows.push_back(bound_row("empirical-le-exact", exact, cert.empirical, opt.tol));
  return assemble("verify glue-pair", std::move(inputs), std::move(rows));
}

RunReport run_glue_family(const VerifyOptions& opt, std::map<std::string, std::string> inputs) {
  const int count = opt.count >= 0 ? opt.count : 4;
  const int trials = opt.trials > 0 ? opt.trials : 50;
  const int dim = opt.n > 0 ? opt.n : 2;
  inputs["count"] = std::to_string(count);
  inputs["trials"] = std::to_string(trials);
  inputs["dim"] = std::to_string(dim);

  if (count == 0) {
    // Degenerate request: let the construction report the empty family.
    glue_family({}, 0, 1.0, SeparationReport{});
  }
  Rng rng(opt.seed);
  GlueFamilyInstance inst = random_glue_family_instance(rng, dim, count, 20);
  const GlueFamilyResult glued = glue_family(inst.extenders, inst.anchor, 1.0, inst.report, {},
                                             opt.tol);

  const CertifyResult cert = certify_norm(
      glued.op, trials, CorpusSpec{CorpusSpec::Kind::Uniform, opt.seed}, opt.tol, true);
  const double exact = cert.exact.value();
  const double lambda = inst.report.lambda;
  const double dmax = std::max(inst.report.diam_ratio, 1.0);

  std::vector<ResultRow> rows;
  rows.push_back(bound_row("lambda-le-32", 32.0, lambda, opt.tol));
  rows.push_back(bound_row("diam-ratio-le-1", 1.0, inst.report.diam_ratio, opt.tol));
  rows.push_back(property_row("operator-valid", operator_checks_out(glued.op, opt.tol)));
  rows.push_back(bound_row("exact-norm-le-K", glued.op.claimed_bound, exact, opt.tol));
  rows.push_back(
      bound_row("K-le-28CDDll", 28.0 * dmax * dmax * lambda * lambda, glued.op.claimed_bound,
                opt.tol));
  rows.push_back(bound_row("empirical-le-exact", exact, cert.empirical, opt.tol));
  return assemble("verify glue-family", std::move(inputs), std::move(rows));
}

RunReport run_grid_interp(const VerifyOptions& opt, std::map<std::string, std::string> inputs) {
  const int n = opt.n > 0 ? opt.n : 2;
  const int per_axis = opt.box > 0 ? opt.box : 3;
  const int trials = opt.trials > 0 ? opt.trials : 200;
  if (n > 3) throw SizeError("grid-interp dimension limited to 3");
  if (per_axis < 2) throw SizeError("box needs at least two points per axis");
  inputs["n"] = std::to_string(n);
  inputs["box"] = std::to_string(per_axis);
  inputs["trials"] = std::to_string(trials);

  const GridBox box =
      make_box(std::vector<long long>(n, 0), std::vector<long long>(n, per_axis - 1));
  Rng rng(opt.seed);
  std::vector<std::vector<double>> samples;
  for (int s = 0; s < 12; ++s) {
    std::vector<double> q(n);
    for (int a = 0; a < n; ++a)
      q[a] = rng.uniform(static_cast<double>(box.lo[a]), static_cast<double>(box.hi[a]));
    samples.push_back(std::move(q));
  }
  const GridOperatorResult grid = grid_extension_operator(box, samples);

  // Interpolation agrees across the two cubes sharing an interior face.
  bool faces_ok = true;
  const long long lattice = box.point_count();
  std::vector<double> values(lattice);
  for (long long k = 0; k < lattice; ++k) values[k] = rng.uniform(-1.0, 1.0);
  if (per_axis >= 3) {
    for (int t = 0; t < 20; ++t) {
      const int axis = rng.below(n);
      const long long c = box.lo[axis] + 1 + rng.below(static_cast<int>(box.side(axis)) - 2);
      std::vector<double> q(n);
      std::vector<long long> lower(n), upper(n);
      for (int a = 0; a < n; ++a) {
        if (a == axis) {
          q[a] = static_cast<double>(c);
          lower[a] = c - 1;
          upper[a] = c;
        } else {
          q[a] = rng.uniform(static_cast<double>(box.lo[a]), static_cast<double>(box.hi[a]));
          long long f = static_cast<long long>(std::floor(q[a]));
          f = std::min(std::max(f, box.lo[a]), box.hi[a] - 1);
          lower[a] = upper[a] = f;
        }
      }
      const double v1 = hypercube_interpolate(box, values, q, opt.tol, &lower);
      const double v2 = hypercube_interpolate(box, values, q, opt.tol, &upper);
      if (std::fabs(v1 - v2) > opt.tol) faces_ok = false;
    }
  }

  const CertifyResult cert = certify_norm(
      grid.op, trials, CorpusSpec{CorpusSpec::Kind::Uniform, opt.seed}, opt.tol, true);
  const double exact = cert.exact.value();

  std::vector<ResultRow> rows;
  rows.push_back(property_row("operator-valid", operator_checks_out(grid.op, opt.tol)));
  rows.push_back(property_row("face-agreement", faces_ok));
  rows.push_back(equals_row("exact-norm-is-1", 1.0, exact, opt.tol));
  rows.push_back(bound_row("empirical-le-exact", exact, cert.empirical, opt.tol));
  return assemble("verify grid-interp", std::move(inputs), std::move(rows));
}

RunReport run_cone(const VerifyOptions& opt, std::map<std::string, std::string> inputs) {
  const int n = opt.n > 0 ? opt.n : 3;
  const int trials = opt.trials > 0 ? opt.trials : 500;
  if (n > 5) throw SizeError("cone dimension limited to 5");
  inputs["n"] = std::to_string(n);
  inputs["trials"] = std::to_string(trials);

  Rng rng(opt.seed);
  std::vector<std::vector<int>> partition;
  if (n == 1) {
    partition = {{0}};
  } else {
    partition.assign(2, {});
    partition[0].push_back(0);
    for (int a = 1; a < n; ++a) partition[rng.below(2)].push_back(a);
    if (partition[1].empty()) {
      partition[1].push_back(partition[0].back());
      partition[0].pop_back();
    }
  }
  std::vector<GridBox> boxes;
  for (const auto& block : partition)
    boxes.push_back(make_box(std::vector<long long>(block.size(), -2),
                             std::vector<long long>(block.size(), 2)));

  std::vector<std::vector<double>> samples;
  for (int s = 0; s < 16; ++s) {
    std::vector<double> q(n);
    for (int a = 0; a < n; ++a) q[a] = rng.uniform(-2.0, 2.0);
    samples.push_back(std::move(q));
  }
  const ConeOperatorResult cone = cone_partition_operator(n, partition, boxes, samples);

  double worst_ratio = 0.0;
  bool disjoint_ok = true;
  for (int t = 0; t < trials; ++t) {
    const auto& block = partition[t % partition.size()];
    std::vector<double> x(n), y(n);
    for (int a = 0; a < n; ++a) {
      x[a] = rng.uniform(-4.0, 4.0);
      y[a] = rng.uniform(-4.0, 4.0);
    }
    const double dist = l1_dist(x, y);
    if (dist > 0.0)
      worst_ratio =
          std::max(worst_ratio, l1_dist(cone_retract(block, x), cone_retract(block, y)) / dist);
    int positive = 0;
    for (const auto& b : partition)
      if (cone_height(b, x) > 0.0) ++positive;
    if (positive > 1) disjoint_ok = false;
  }

  const CertifyResult cert = certify_norm(
      cone.op, std::min(trials, 200), CorpusSpec{CorpusSpec::Kind::Uniform, opt.seed}, opt.tol,
      true);
  const double exact = cert.exact.value();

  std::vector<ResultRow> rows;
  rows.push_back(bound_row("retract-2-lipschitz", 2.0, worst_ratio, opt.tol));
  rows.push_back(property_row("cones-disjoint", disjoint_ok));
  rows.push_back(property_row("operator-valid", operator_checks_out(cone.op, opt.tol)));
  rows.push_back(bound_row("exact-norm-le-2", 2.0, exact, opt.tol));
  rows.push_back(bound_row("empirical-le-exact", exact, cert.empirical, opt.tol));
  return assemble("verify cone", std::move(inputs), std::move(rows));
}

RunReport run_net_ball(const VerifyOptions& opt, std::map<std::string, std::string> inputs) {
  const int n = opt.n > 0 ? opt.n : 2;
  const int trials = opt.trials > 0 ? opt.trials : 400;
  if (n > 3) throw SizeError("net-ball dimension limited to 3");
  inputs["n"] = std::to_string(n);
  inputs["trials"] = std::to_string(trials);

  const long long window = n >= 3 ? 4 : 6;
  std::vector<std::vector<double>> net;
  std::vector<long long> z(n, -window);
  for (;;) {
    std::vector<double> q(n);
    for (int a = 0; a < n; ++a) q[a] = static_cast<double>(z[a]);
    net.push_back(std::move(q));
    int a = n - 1;
    for (; a >= 0; --a) {
      if (z[a] < window) {
        ++z[a];
        break;
      }
      z[a] = -window;
    }
    if (a < 0) break;
  }

  const std::vector<double> center(n, 0.0);
  const double radius = 2.5;
  const double eps = integer_lattice_covering_radius(n);
  Rng rng(opt.seed);
  std::vector<std::vector<double>> samples;
  for (int s = 0; s < 20; ++s) {
    std::vector<double> q(n);
    for (int a = 0; a < n; ++a) q[a] = rng.uniform(-4.5, 4.5);
    samples.push_back(std::move(q));
  }
  const NetBallOperatorResult nb = net_ball_operator(net, center, radius, eps, samples);

  double worst_ratio = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::vector<double> x(n), y(n);
    for (int a = 0; a < n; ++a) {
      x[a] = rng.uniform(-4.5, 4.5);
      y[a] = rng.uniform(-4.5, 4.5);
    }
    const double dist = l1_dist(x, y);
    if (dist > 0.0)
      worst_ratio = std::max(worst_ratio, l1_dist(net_ball_retract(net, center, radius, x),
                                                  net_ball_retract(net, center, radius, y)) /
                                              dist);
  }

  const double exact = operator_norm_from_extension(nb.op);

  std::vector<ResultRow> rows;
  rows.push_back(equals_row("covering-radius", 0.5 * n, eps, opt.tol));
  rows.push_back(property_row("operator-valid", operator_checks_out(nb.op, opt.tol)));
  rows.push_back(bound_row("exact-norm-le-claimed", nb.op.claimed_bound, exact, opt.tol));
  rows.push_back(bound_row("retract-pairs-le-claimed", nb.op.claimed_bound, worst_ratio,
                           opt.tol));
  return assemble("verify net-ball", std::move(inputs), std::move(rows));
}

RunReport run_place_dyadic(const VerifyOptions& opt, std::map<std::string, std::string> inputs) {
  const int count = opt.count >= 0 ? opt.count : 4;
  const int dim = opt.n > 0 ? opt.n : 2;
  inputs["count"] = std::to_string(count);
  inputs["dim"] = std::to_string(dim);

  Rng rng(opt.seed);
  const auto shapes = random_shapes(rng, dim, count);
  const DyadicPlacement placement = place_dyadic(dim, shapes);
  const SeparationReport report = separation_constants(placement.sets, placement.anchor);

  bool bands_ok = true;
  for (size_t i = 0; i < placement.sets.size(); ++i) {
    const auto& first = placement.points->point(placement.sets[i].indices.front());
    if (first[0] != -std::ldexp(1.0, placement.k[i] + 2)) bands_ok = false;
    for (int a = 1; a < dim; ++a)
      if (first[a] != 0.0) bands_ok = false;
    if (i > 0 && placement.k[i] < placement.k[i - 1] + 4) bands_ok = false;
  }

  std::vector<ResultRow> rows;
  rows.push_back(bound_row("lambda-le-32", 32.0, report.lambda, opt.tol));
  rows.push_back(bound_row("diam-ratio-le-1", 1.0, report.diam_ratio, opt.tol));
  rows.push_back(property_row("band-anchored", bands_ok));
  rows.push_back(property_row("cross-distances-positive", report.min_cross_distance > 0.0));
  return assemble("verify place-dyadic", std::move(inputs), std::move(rows));
}

RunReport run_balls_20(const VerifyOptions& opt, std::map<std::string, std::string> inputs) {
  const int count = opt.count >= 0 ? opt.count : 3;
  const int dim = opt.n > 0 ? opt.n : 2;
  inputs["count"] = std::to_string(count);
  inputs["dim"] = std::to_string(dim);

  const LatticeBallFamily fam = ball_sequence_lambda20(dim, count);
  const SeparationReport report = separation_constants(fam.sets, fam.anchor);

  std::vector<ResultRow> rows;
  rows.push_back(bound_row("lambda-le-20", 20.0, report.lambda, opt.tol));
  rows.push_back(equals_row("diam-ratio-two-thirds", 2.0 / 3.0, report.diam_ratio, opt.tol));
  rows.push_back(property_row("min-cross-positive", report.min_cross_distance > 0.0));
  return assemble("verify balls-20", std::move(inputs), std::move(rows));
}

RunReport run_balls_24(const VerifyOptions& opt, std::map<std::string, std::string> inputs) {
  const int count = opt.count >= 0 ? opt.count : 3;
  const int dims = opt.n > 0 ? opt.n : 2;
  inputs["count"] = std::to_string(count);
  inputs["dim"] = std::to_string(dims);

  const ShrinkingFamily fam = shrinking_ball_sequence(dims, count);
  const SeparationReport report = separation_constants(fam.sets, fam.anchor);

  double diam_dev = 0.0, dist_dev = 0.0;
  for (size_t i = 0; i < fam.sets.size(); ++i) {
    diam_dev = std::max(diam_dev,
                        std::fabs(report.per_set[i].diameter - fam.exact_diameter[i]));
    dist_dev = std::max(dist_dev,
                        std::fabs(report.per_set[i].dist_to_anchor - fam.exact_distance[i]));
  }

  std::vector<ResultRow> rows;
  rows.push_back(bound_row("lambda-le-24", 24.0, report.lambda, opt.tol));
  rows.push_back(equals_row("diameters-exact", 0.0, diam_dev, opt.tol));
  rows.push_back(equals_row("distances-exact", 0.0, dist_dev, opt.tol));
  rows.push_back(equals_row("diam-dist-ratio", 2.0, report.diam_ratio, opt.tol));
  return assemble("verify balls-24", std::move(inputs), std::move(rows));
}

}  // namespace

const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> targets = {
      "glue-pair", "glue-family", "grid-interp", "cone",
      "net-ball",  "place-dyadic", "balls-20",   "balls-24"};
  return targets;
}

RunReport verify_target(const std::string& target, const VerifyOptions& opt) {
  std::map<std::string, std::string> inputs;
  inputs["target"] = target;
  inputs["seed"] = std::to_string(opt.seed);
  inputs["tol"] = format_double(opt.tol);

  if (target == "glue-pair") return run_glue_pair(opt, std::move(inputs));
  if (target == "glue-family") return run_glue_family(opt, std::move(inputs));
  if (target == "grid-interp") return run_grid_interp(opt, std::move(inputs));
  if (target == "cone") return run_cone(opt, std::move(inputs));
  if (target == "net-ball") return run_net_ball(opt, std::move(inputs));
  if (target == "place-dyadic") return run_place_dyadic(opt, std::move(inputs));
  if (target == "balls-20") return run_balls_20(opt, std::move(inputs));
  if (target == "balls-24") return run_balls_24(opt, std::move(inputs));
  throw SizeError("unknown verify target: " + target);
}

RunReport compute_e_report(const SubsetRef& S, double tol,
                           std::map<std::string, std::string> inputs) {
  const ExtensionConstant ec = extension_constant_lp(S, 12, 9, tol);

  ExtensionOperator optimal;
  optimal.ambient = S.space;
  optimal.source = S;
  optimal.rows = ec.optimal_rows;
  optimal.claimed_bound = ec.e;
  optimal.provenance = "lp";
  const double lp_tol = std::max(tol, 1e-7);

  std::vector<ResultRow> rows;
  rows.push_back(atleast_row("e-at-least-1", 1.0, ec.e, tol));
  rows.push_back(property_row("optimal-rows-valid", operator_checks_out(optimal, lp_tol)));
  rows.push_back(equals_row("optimal-norm-matches-e", ec.e,
                            operator_norm_from_extension(optimal), 1e-6));

  const struct {
    McShaneMode mode;
    const char* name;
  } modes[] = {{McShaneMode::Inf, "inf"},
               {McShaneMode::Sup, "sup"},
               {McShaneMode::Midpoint, "mid"}};
  for (const auto& m : modes) {
    const ExtensionOperator E = mcshane_operator(S, m.mode, true);
    rows.push_back(
        bound_row(std::string("e-le-mcshane-") + m.name, E.claimed_bound, ec.e, tol));
  }

  inputs["points"] = std::to_string(S.space->size());
  inputs["subset-size"] = std::to_string(S.size());
  inputs["vertices-used"] = std::to_string(ec.vertices_used);
  RunReport rep;
  rep.command = "compute-e";
  rep.inputs = std::move(inputs);
  rep.results = std::move(rows);
  rep.pass = rep.all_pass();
  return rep;
}

}  // namespace lipext
