#include "lipext/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

namespace lipext {

namespace {

constexpr long long kCoordLimit = 1LL << 40;

long long int_l1_dist(const std::vector<long long>& a, const std::vector<long long>& b) {
  long long d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += std::llabs(a[i] - b[i]);
  return d;
}

}  // namespace

DyadicPlacement place_dyadic(int dim,
                             const std::vector<std::vector<std::vector<long long>>>& shapes,
                             int cap) {
  if (dim < 1) throw SizeError("dimension must be at least 1");
  if (shapes.empty()) throw SizeError("at least one shape required");
  if (cap < 0) cap = max_points_cap();

  DyadicPlacement res;
  std::vector<std::vector<double>> coords;
  coords.push_back(std::vector<double>(dim, 0.0));

  int prev_k = 0;
  std::vector<std::pair<int, int>> ranges;  // [first, last] ambient indices per set
  for (size_t s = 0; s < shapes.size(); ++s) {
    const auto& shape = shapes[s];
    if (shape.empty())
      throw FamilyError(FamilyError::Kind::EmptySet, "shape " + std::to_string(s) + " is empty",
                        static_cast<int>(s));
    long long diam = 0;
    for (const auto& p : shape) {
      if (static_cast<int>(p.size()) != dim) throw SizeError("shape point dimension mismatch");
      for (long long c : p)
        if (std::llabs(c) > kCoordLimit)
          throw ConstructionError(ConstructionError::Kind::TooLarge,
                                  "shape coordinate exceeds the exact integer range");
    }
    for (size_t a = 0; a < shape.size(); ++a)
      for (size_t b = a + 1; b < shape.size(); ++b)
        diam = std::max(diam, int_l1_dist(shape[a], shape[b]));

    const int k_diam = static_cast<int>(std::bit_width(static_cast<unsigned long long>(diam)));
    const int k = std::max((s == 0 ? 0 : prev_k + 4), k_diam);
    if (k + 2 >= 60)
      throw ConstructionError(ConstructionError::Kind::NoAdmissiblePoint,
                              "placement level " + std::to_string(k) +
                                  " leaves no representable band point");
    prev_k = k;
    res.k.push_back(k);

    std::vector<long long> shift(dim, 0);
    shift[0] = -(1LL << (k + 2)) - shape[0][0];
    for (int a = 1; a < dim; ++a) shift[a] = -shape[0][a];
    res.shifts.push_back(shift);

    const int first = static_cast<int>(coords.size());
    for (const auto& p : shape) {
      std::vector<double> q(dim);
      for (int a = 0; a < dim; ++a) q[a] = static_cast<double>(p[a] + shift[a]);
      coords.push_back(std::move(q));
    }
    ranges.emplace_back(first, static_cast<int>(coords.size()) - 1);
  }

  if (static_cast<int>(coords.size()) > cap)
    throw ConstructionError(ConstructionError::Kind::TooLarge,
                            "placement materializes " + std::to_string(coords.size()) +
                                " points, cap " + std::to_string(cap));
  res.points = std::make_shared<L1PointSet>(dim, coords, 0);
  res.space = res.points->to_metric_space(cap);
  res.anchor = 0;
  for (const auto& [first, last] : ranges) {
    std::vector<int> idx(last - first + 1);
    for (int i = first; i <= last; ++i) idx[i - first] = i;
    res.sets.emplace_back(res.space, idx);
  }
  return res;
}

LatticeBallFamily ball_sequence_lambda20(int dim, int count, long long window, int cap) {
  if (dim < 1) throw SizeError("dimension must be at least 1");
  if (count < 1) throw SizeError("at least one ball required");
  if (count > 20) throw ConstructionError(ConstructionError::Kind::TooLarge,
                                          "ball sequence limited to 20 members");
  if (cap < 0) cap = max_points_cap();

  const long long needed = 5LL << count;  // rightmost coordinate of the last ball
  if (window < 0) window = needed;
  if (window < needed)
    throw ConstructionError(ConstructionError::Kind::WindowTooSmall,
                            "window " + std::to_string(window) + " clips the last ball, need " +
                                std::to_string(needed));

  LatticeBallFamily res;
  res.window = window;
  std::vector<std::vector<double>> coords;
  coords.push_back(std::vector<double>(dim, 0.0));
  std::vector<std::pair<int, int>> ranges;

  for (int n = 1; n <= count; ++n) {
    const long long r = 1LL << n;
    const long long c1 = 1LL << (n + 2);
    const long long box_side = 2 * r + 1;
    double scan = 1.0;
    for (int a = 0; a < dim; ++a) scan *= static_cast<double>(box_side);
    if (scan > 8e6)
      throw ConstructionError(ConstructionError::Kind::TooLarge,
                              "lattice scan for ball " + std::to_string(n) + " is infeasible");

    const int first = static_cast<int>(coords.size());
    std::vector<long long> z(dim, -r);
    z[0] = c1 - r;
    bool done = false;
    while (!done) {
      long long dist = std::llabs(z[0] - c1);
      for (int a = 1; a < dim; ++a) dist += std::llabs(z[a]);
      if (dist <= r) {
        std::vector<double> q(dim);
        for (int a = 0; a < dim; ++a) q[a] = static_cast<double>(z[a]);
        coords.push_back(std::move(q));
      }
      int a = dim - 1;
      for (;; --a) {
        const long long hi = (a == 0) ? c1 + r : r;
        if (z[a] < hi) {
          ++z[a];
          break;
        }
        z[a] = (a == 0) ? c1 - r : -r;
        if (a == 0) {
          done = true;
          break;
        }
      }
    }
    ranges.emplace_back(first, static_cast<int>(coords.size()) - 1);
  }

  if (static_cast<int>(coords.size()) > cap)
    throw ConstructionError(ConstructionError::Kind::TooLarge,
                            "ball family materializes " + std::to_string(coords.size()) +
                                " points, cap " + std::to_string(cap));
  res.points = std::make_shared<L1PointSet>(dim, coords, 0);
  res.space = res.points->to_metric_space(cap);
  res.anchor = 0;
  for (const auto& [first, last] : ranges) {
    std::vector<int> idx(last - first + 1);
    for (int i = first; i <= last; ++i) idx[i - first] = i;
    res.sets.emplace_back(res.space, idx);
  }
  return res;
}

ShrinkingFamily shrinking_ball_sequence(int dims, int count, int first_exponent, double mesh,
                                        int cap) {
  if (dims < 1) throw SizeError("dimension must be at least 1");
  if (count < 1) throw SizeError("at least one set required");
  if (first_exponent < 0) throw SizeError("first exponent must be nonnegative");
  if (cap < 0) cap = max_points_cap();

  ShrinkingFamily res;
  for (int n = 0; n < count; ++n) res.N.push_back(first_exponent + 2 * n);
  const int last_N = res.N.back();
  if (last_N + 3 > 60)
    throw ConstructionError(ConstructionError::Kind::TooLarge,
                            "scale exponent " + std::to_string(last_N) + " too deep");

  const double finest = std::ldexp(1.0, -(last_N + 1));  // coarsest grid carrying every set
  if (mesh < 0.0) {
    mesh = std::ldexp(1.0, -(last_N + 3));
  } else {
    int exp = 0;
    const double mant = std::frexp(mesh, &exp);
    if (mesh <= 0.0 || mant != 0.5)
      throw ConstructionError(ConstructionError::Kind::MeshTooCoarse,
                              "mesh must be a positive power of two");
    if (mesh > finest)
      throw ConstructionError(ConstructionError::Kind::MeshTooCoarse,
                              "mesh " + std::to_string(mesh) + " cannot carry coordinates of " +
                                  std::to_string(finest));
  }
  res.mesh = mesh;

  std::vector<std::vector<double>> coords;
  coords.push_back(std::vector<double>(dims, 0.0));
  std::vector<std::pair<int, int>> ranges;
  for (int n = 0; n < count; ++n) {
    const double r = std::ldexp(1.0, -(res.N[n] + 1));
    std::vector<double> c(dims, 0.0);
    c[0] = 2.0 * r;
    const int first = static_cast<int>(coords.size());
    coords.push_back(c);
    for (int a = 0; a < dims; ++a) {
      std::vector<double> p = c;
      p[a] += r;
      coords.push_back(p);
      p[a] = c[a] - r;
      coords.push_back(std::move(p));
    }
    ranges.emplace_back(first, static_cast<int>(coords.size()) - 1);
    res.exact_diameter.push_back(2.0 * r);
    res.exact_distance.push_back(r);
  }

  if (static_cast<int>(coords.size()) > cap)
    throw ConstructionError(ConstructionError::Kind::TooLarge,
                            "shrinking family materializes " + std::to_string(coords.size()) +
                                " points, cap " + std::to_string(cap));
  res.points = std::make_shared<L1PointSet>(dims, coords, 0);
  res.space = res.points->to_metric_space(cap);
  res.anchor = 0;
  for (const auto& [first, last] : ranges) {
    std::vector<int> idx(last - first + 1);
    for (int i = first; i <= last; ++i) idx[i - first] = i;
    res.sets.emplace_back(res.space, idx);
  }
  return res;
}

GridBox grid_box_level(int level) {
  if (level < 1) throw SizeError("level must be at least 1");
  if (level > 3)
    throw ConstructionError(ConstructionError::Kind::TooLarge,
                            "box levels beyond 3 are not supported");
  long long half = 1;
  for (int i = 0; i < level; ++i) half *= 4;
  return make_box(std::vector<long long>(level, -half), std::vector<long long>(level, half));
}

long long grid_box_count(int level) { return grid_box_level(level).point_count(); }

GridBoxRetraction grid_box_retraction(int level, const std::vector<std::vector<double>>& samples,
                                      int cap, double tol) {
  const GridBox box = grid_box_level(level);
  if (cap < 0) cap = max_points_cap();
  const long long grid_count = box.point_count();
  if (grid_count + static_cast<long long>(samples.size()) > cap)
    throw ConstructionError(ConstructionError::Kind::TooLarge,
                            "box level " + std::to_string(level) + " materializes " +
                                std::to_string(grid_count + samples.size()) + " points, cap " +
                                std::to_string(cap));

  GridBoxRetraction res;
  res.box = box;
  std::vector<std::vector<double>> coords = box.lattice_points();
  res.sample_index.reserve(samples.size());
  for (const auto& s : samples) {
    if (static_cast<int>(s.size()) != level) throw SizeError("sample dimension mismatch");
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

  res.points = std::make_shared<L1PointSet>(level, coords, 0);
  SpacePtr space = res.points->to_metric_space(cap);

  std::vector<int> source_indices(grid_count);
  for (long long i = 0; i < grid_count; ++i) source_indices[i] = static_cast<int>(i);

  ExtensionOperator E;
  E.ambient = space;
  E.source = SubsetRef(space, source_indices);
  E.provenance = "grid-box";
  E.claimed_bound = 1.0;
  const int n = space->size();
  E.rows.assign(n, std::vector<double>(grid_count, 0.0));
  for (long long i = 0; i < grid_count; ++i) E.rows[i][i] = 1.0;

  std::vector<double> indicator(grid_count, 0.0);
  for (int x = static_cast<int>(grid_count); x < n; ++x) {
    std::vector<double> q(level);
    for (int a = 0; a < level; ++a)
      q[a] = std::min(std::max(coords[x][a], static_cast<double>(box.lo[a])),
                      static_cast<double>(box.hi[a]));
    for (long long k = 0; k < grid_count; ++k) {
      indicator[k] = 1.0;
      const double w = hypercube_interpolate(box, indicator, q, tol);
      indicator[k] = 0.0;
      if (w != 0.0) E.rows[x][k] = w;
    }
  }
  res.op = std::move(E);
  return res;
}

}  // namespace lipext
