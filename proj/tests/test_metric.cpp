#include <doctest.h>

#include <cmath>

#include "lipext/metric_space.hpp"

using namespace lipext;

namespace {

SpacePtr path_space(int n) {
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i][j] = std::abs(i - j);
  return FiniteMetricSpace::validated(std::move(d));
}

}  // namespace

TEST_CASE("validation accepts a path metric") {
  const SpacePtr s = path_space(4);
  CHECK(s->size() == 4);
  CHECK(s->base_point() == 0);
  CHECK(s->d(1, 3) == 2.0);
  CHECK(s->diameter() == 3.0);
}

TEST_CASE("validation names the violated axiom") {
  CHECK_THROWS_AS(FiniteMetricSpace::validated({{0, 1}, {2, 0}}), MetricError);
  try {
    FiniteMetricSpace::validated({{0, 1}, {2, 0}});
  } catch (const MetricError& e) {
    CHECK(e.kind == MetricError::Kind::Asymmetry);
  }

  CHECK_THROWS_AS(FiniteMetricSpace::validated({{0, -1}, {-1, 0}}), MetricError);
  try {
    FiniteMetricSpace::validated({{0, -1}, {-1, 0}});
  } catch (const MetricError& e) {
    CHECK(e.kind == MetricError::Kind::NegativeDistance);
  }

  CHECK_THROWS_AS(FiniteMetricSpace::validated({{0, 0}, {0, 0}}), MetricError);
  try {
    FiniteMetricSpace::validated({{0, 0}, {0, 0}});
  } catch (const MetricError& e) {
    CHECK(e.kind == MetricError::Kind::ZeroOffDiagonal);
  }
}

TEST_CASE("triangle violations come with a checkable witness") {
  const std::vector<std::vector<double>> bad = {{0, 1, 3}, {1, 0, 1}, {3, 1, 0}};
  CHECK_THROWS_AS(FiniteMetricSpace::validated(bad), MetricError);
  try {
    FiniteMetricSpace::validated(bad);
  } catch (const MetricError& e) {
    REQUIRE(e.kind == MetricError::Kind::TriangleViolation);
    CHECK(bad[e.i][e.k] > bad[e.i][e.j] + bad[e.j][e.k]);
  }
}

TEST_CASE("point cap guards materialization") {
  std::vector<std::vector<double>> d = {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
  CHECK_THROWS_AS(FiniteMetricSpace::validated(d, {}, 0, kDefaultTol, 2), SizeError);
}

TEST_CASE("subsets sort their indices and answer membership") {
  const SpacePtr s = path_space(5);
  const SubsetRef sub(s, {4, 0, 2});
  CHECK(sub.indices == std::vector<int>{0, 2, 4});
  CHECK(sub.contains(2));
  CHECK_FALSE(sub.contains(3));
  CHECK(sub.position_of(4) == 2);
  CHECK(sub.position_of(1) == -1);
  CHECK_FALSE(sub.is_full());
  CHECK(SubsetRef(s, {0, 1, 2, 3, 4}).is_full());

  CHECK_THROWS_AS(SubsetRef(s, {}), FamilyError);
  CHECK_NOTHROW(SubsetRef(s, {}, true));
  CHECK_THROWS_AS(SubsetRef(s, {0, 0}), SizeError);
  CHECK_THROWS_AS(SubsetRef(s, {5}), SizeError);
}

TEST_CASE("set geometry helpers are exact scans") {
  const SpacePtr s = path_space(6);
  CHECK(dist_to_set(*s, 5, {0, 2}) == 3.0);
  CHECK(set_diameter(*s, {0, 2, 3}) == 3.0);
  CHECK(set_diameter(*s, {1}) == 0.0);
  CHECK(set_distance(*s, {0, 1}, {4, 5}) == 3.0);
}

TEST_CASE("balls are closed") {
  const SpacePtr s = path_space(4);
  CHECK(ball(s, 1, 1.0).indices == std::vector<int>{0, 1, 2});
  CHECK(ball(s, 0, 0.0).indices == std::vector<int>{0});
}

TEST_CASE("l1 point sets compute distances on demand") {
  const L1PointSet pts(2, {{0, 0}, {1, 2}, {-1, 0}});
  CHECK(pts.d(0, 1) == 3.0);
  CHECK(pts.d(1, 2) == 4.0);
  CHECK(pts.d_to(0, {0.5, 0.5}) == 1.0);
  CHECK(pts.find({-1, 0}) == 2);
  CHECK(pts.find({-1, 0.5}) == -1);

  const SpacePtr s = pts.to_metric_space();
  CHECK(s->size() == 3);
  CHECK(s->d(0, 1) == 3.0);
  CHECK(s->base_point() == 0);
}

TEST_CASE("l1 materialization respects the cap") {
  const L1PointSet pts(1, {{0}, {1}, {2}});
  CHECK_THROWS_AS(pts.to_metric_space(2), SizeError);
}

TEST_CASE("duplicate l1 points are rejected") {
  CHECK_THROWS_AS(L1PointSet(2, {{0, 0}, {0, 0}}), MetricError);
}

TEST_CASE("l1 distance helpers") {
  CHECK(l1_dist({1, 2}, {3, 0}) == 4.0);
  CHECK(l1_norm({-1, 2, -3}) == 6.0);
}
