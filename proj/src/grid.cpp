#include "lipext/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lipext {

GridBox make_box(std::vector<long long> lo, std::vector<long long> hi) {
  if (lo.size() != hi.size() || lo.empty()) throw SizeError("box bounds must match and be nonempty");
  for (size_t i = 0; i < lo.size(); ++i)
    if (hi[i] < lo[i]) throw SizeError("box upper bound below lower bound");
  return GridBox{std::move(lo), std::move(hi)};
}

long long GridBox::point_count() const {
  long long c = 1;
  for (int i = 0; i < dim(); ++i) {
    if (c > (1LL << 40) / side(i)) throw SizeError("box lattice too large to enumerate");
    c *= side(i);
  }
  return c;
}

long long GridBox::index_of(const std::vector<long long>& v) const {
  long long idx = 0;
  for (int i = 0; i < dim(); ++i) {
    if (v[i] < lo[i] || v[i] > hi[i]) throw SizeError("lattice point outside box");
    idx = idx * side(i) + (v[i] - lo[i]);
  }
  return idx;
}

std::vector<long long> GridBox::point_at(long long index) const {
  std::vector<long long> v(dim());
  for (int i = dim() - 1; i >= 0; --i) {
    v[i] = lo[i] + index % side(i);
    index /= side(i);
  }
  return v;
}

bool GridBox::contains(const std::vector<double>& q, double tol) const {
  if (static_cast<int>(q.size()) != dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (q[i] < static_cast<double>(lo[i]) - tol || q[i] > static_cast<double>(hi[i]) + tol)
      return false;
  return true;
}

std::vector<std::vector<double>> GridBox::lattice_points() const {
  const long long count = point_count();
  std::vector<std::vector<double>> pts;
  pts.reserve(count);
  for (long long k = 0; k < count; ++k) {
    auto v = point_at(k);
    std::vector<double> p(dim());
    for (int i = 0; i < dim(); ++i) p[i] = static_cast<double>(v[i]);
    pts.push_back(std::move(p));
  }
  return pts;
}

double hypercube_interpolate(const GridBox& box, const std::vector<double>& values,
                             const std::vector<double>& query, double tol,
                             const std::vector<long long>* base) {
  const int n = box.dim();
  if (static_cast<int>(query.size()) != n)
    throw GridError(GridError::Kind::QueryOutsideBox, "query dimension mismatch");
  if (values.size() != static_cast<size_t>(box.point_count()))
    throw GridError(GridError::Kind::MissingVertex, "value vector does not cover the box");
  if (n > 24) throw SizeError("interpolation limited to 24 axes");
  if (!box.contains(query, tol)) {
    std::string qs;
    for (double c : query) qs += (qs.empty() ? "" : ",") + std::to_string(c);
    throw GridError(GridError::Kind::QueryOutsideBox, "query (" + qs + ") outside box");
  }

  std::vector<long long> corner(n);
  std::vector<double> t(n);
  std::vector<bool> flat(n);  // axis with a single lattice plane
  for (int i = 0; i < n; ++i) {
    double qi = std::min(std::max(query[i], static_cast<double>(box.lo[i])),
                         static_cast<double>(box.hi[i]));
    if (box.lo[i] == box.hi[i]) {
      corner[i] = box.lo[i];
      t[i] = 0.0;
      flat[i] = true;
      continue;
    }
    long long c;
    if (base) {
      c = (*base)[i];
      if (c < box.lo[i] || c >= box.hi[i] || qi < static_cast<double>(c) - tol ||
          qi > static_cast<double>(c + 1) + tol)
        throw GridError(GridError::Kind::QueryOutsideBox,
                        "query outside the requested unit cube");
    } else {
      c = static_cast<long long>(std::floor(qi));
      c = std::min(std::max(c, box.lo[i]), box.hi[i] - 1);
    }
    corner[i] = c;
    t[i] = qi - static_cast<double>(c);
    flat[i] = false;
  }

  double acc = 0.0;
  std::vector<long long> vertex(n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    double w = 1.0;
    bool valid = true;
    for (int i = 0; i < n; ++i) {
      const bool up = (mask >> i) & 1u;
      if (flat[i]) {
        if (up) {
          valid = false;
          break;
        }
        vertex[i] = corner[i];
        continue;
      }
      w *= up ? t[i] : 1.0 - t[i];
      vertex[i] = corner[i] + (up ? 1 : 0);
    }
    if (!valid || w == 0.0) continue;
    const double fv = values[box.index_of(vertex)];
    if (std::isnan(fv)) {
      std::string vs;
      for (long long c : vertex) vs += (vs.empty() ? "" : ",") + std::to_string(c);
      throw GridError(GridError::Kind::MissingVertex, "no value at lattice vertex (" + vs + ")");
    }
    acc += w * fv;
  }
  return acc;
}

GridOperatorResult grid_extension_operator(const GridBox& box,
                                           const std::vector<std::vector<double>>& samples,
                                           int cap, double tol) {
  const long long grid_count = box.point_count();
  if (cap < 0) cap = max_points_cap();
  if (grid_count + static_cast<long long>(samples.size()) > cap)
    throw SizeError("grid operator would materialize " +
                    std::to_string(grid_count + samples.size()) + " points, cap " +
                    std::to_string(cap));

  GridOperatorResult res;
  res.box = box;
  std::vector<std::vector<double>> coords = box.lattice_points();
  res.grid_index.resize(grid_count);
  for (long long k = 0; k < grid_count; ++k) res.grid_index[k] = static_cast<int>(k);

  res.sample_index.reserve(samples.size());
  for (const auto& s : samples) {
    if (!box.contains(s, tol)) {
      std::string qs;
      for (double c : s) qs += (qs.empty() ? "" : ",") + std::to_string(c);
      throw GridError(GridError::Kind::QueryOutsideBox, "sample (" + qs + ") outside box");
    }
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

  res.points = std::make_shared<L1PointSet>(box.dim(), coords, 0);
  SpacePtr space = res.points->to_metric_space(cap);

  ExtensionOperator E;
  E.ambient = space;
  E.source = SubsetRef(space, res.grid_index);
  E.provenance = "hypercube";
  E.claimed_bound = 1.0;
  const int n = space->size();
  E.rows.assign(n, std::vector<double>(grid_count, 0.0));
  for (long long k = 0; k < grid_count; ++k) E.rows[k][k] = 1.0;
  // Sample rows carry the interpolation weights of the containing cube,
  // written by evaluating the interpolation on lattice indicators.
  std::vector<double> indicator(grid_count, 0.0);
  for (int x = static_cast<int>(grid_count); x < n; ++x) {
    for (long long k = 0; k < grid_count; ++k) {
      indicator[k] = 1.0;
      const double w = hypercube_interpolate(box, indicator, coords[x], tol);
      indicator[k] = 0.0;
      E.rows[x][k] = w;
    }
  }
  res.op = std::move(E);
  return res;
}

}  // namespace lipext
