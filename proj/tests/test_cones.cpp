#include <doctest.h>

#include <cmath>

#include "lipext/cones.hpp"
#include "lipext/metric_space.hpp"

using namespace lipext;

TEST_CASE("cone height and retraction by hand") {
  const std::vector<int> first_axis = {0};
  CHECK(cone_height(first_axis, {2, 1}) == doctest::Approx(0.5));
  CHECK(cone_retract(first_axis, {2, 1}) == std::vector<double>{1.0, 0.0});

  // Outside the cone: as much mass off the axis as on it.
  CHECK(cone_height(first_axis, {1, 1}) == 0.0);
  CHECK(cone_retract(first_axis, {1, 1}) == std::vector<double>{0.0, 0.0});

  // On the axis: fixed pointwise.
  CHECK(cone_height(first_axis, {3, 0}) == 1.0);
  CHECK(cone_retract(first_axis, {3, 0}) == std::vector<double>{3.0, 0.0});

  // Vanishing projection.
  CHECK(cone_height(first_axis, {0, 2}) == 0.0);
  CHECK(cone_retract(first_axis, {0, 2}) == std::vector<double>{0.0, 0.0});
}

TEST_CASE("retraction is 2-lipschitz on a deterministic sweep") {
  const std::vector<int> axes = {0, 2};
  std::vector<std::vector<double>> pts;
  for (double a : {-2.0, -0.5, 0.0, 1.0, 2.5})
    for (double b : {-1.0, 0.0, 2.0})
      for (double c : {-1.5, 0.5, 3.0}) pts.push_back({a, b, c});
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      const double gap = l1_dist(pts[i], pts[j]);
      const double moved = l1_dist(cone_retract(axes, pts[i]), cone_retract(axes, pts[j]));
      CHECK(moved <= 2.0 * gap + 1e-9);
    }
}

TEST_CASE("disjoint blocks have disjoint open cones") {
  const std::vector<std::vector<int>> partition = {{0}, {1, 2}};
  validate_partition(3, partition);
  for (double a : {-2.0, -1.0, 0.0, 0.5, 2.0})
    for (double b : {-1.0, 0.0, 1.5})
      for (double c : {-0.5, 0.0, 1.0}) {
        int positive = 0;
        for (const auto& block : partition)
          if (cone_height(block, {a, b, c}) > 0.0) ++positive;
        CHECK(positive <= 1);
      }
  CHECK(active_cone(partition, {2, 0.5, 0}) == 0);
  CHECK(active_cone(partition, {0.5, 2, 0}) == 1);
  CHECK(active_cone(partition, {1, 1, 0}) == -1);
  CHECK(active_cone(partition, {0, 0, 0}) == -1);
}

TEST_CASE("bad partitions are rejected with a reason") {
  CHECK_THROWS_AS(validate_partition(2, {{0}, {0, 1}}), ConeError);
  CHECK_THROWS_AS(validate_partition(2, {{0}}), ConeError);
  CHECK_THROWS_AS(validate_partition(2, {{0, 2}, {1}}), ConeError);
  CHECK_THROWS_AS(validate_partition(2, {{}, {0, 1}}), ConeError);
  CHECK_THROWS_AS(cone_height({5}, {1, 1}), ConeError);
}

TEST_CASE("piecewise extension routes through the active cone") {
  const std::vector<std::vector<int>> partition = {{0}, {1}};
  const std::vector<std::function<double(const std::vector<double>&)>> fns = {
      [](const std::vector<double>& p) { return p[0]; },
      [](const std::vector<double>& p) { return 10.0 + p[1]; }};
  CHECK(cone_partition_extend(partition, fns, {2, 1}) == doctest::Approx(1.0));
  // (1,2) has height 1/2 in the second cone, retracting to (0,1).
  CHECK(cone_partition_extend(partition, fns, {1, 2}) == doctest::Approx(11.0));
  CHECK(cone_partition_extend(partition, fns, {1, 1}) == 0.0);
  CHECK(cone_partition_extend(partition, fns, {0, 0}) == 0.0);
  CHECK_THROWS_AS(cone_partition_extend(partition, {fns[0]}, {1, 0}), SizeError);
}

TEST_CASE("cone operator interpolates the retracted point") {
  const std::vector<std::vector<int>> partition = {{0}, {1}};
  const std::vector<GridBox> boxes = {make_box({-2}, {2}), make_box({-2}, {2})};
  const ConeOperatorResult res =
      cone_partition_operator(2, partition, boxes, {{1.5, 0.25}, {0.5, 0.5}, {0.0, -1.75}});
  CHECK_NOTHROW(res.op.validate());
  CHECK(res.op.claimed_bound == 2.0);
  // Source: shared origin plus four nonzero lattice points per block.
  CHECK(res.op.source.size() == 9);

  // f = first coordinate on block 0, zero on block 1 and at the origin.
  std::vector<double> vals(res.op.source.size(), 0.0);
  for (int p = 0; p < res.op.source.size(); ++p) {
    const auto& q = res.points->point(res.op.source.indices[p]);
    vals[p] = q[0];
  }
  const LipFunction f(res.op.source, vals);
  const std::vector<double> ef = res.op.apply_all(f);

  // (1.5, 0.25): height 5/6, retracted to (1.25, 0).
  CHECK(ef[res.sample_index[0]] == doctest::Approx(1.25));
  // (0.5, 0.5): outside both cones, pinned to the origin value 0.
  CHECK(ef[res.sample_index[1]] == 0.0);
  // (0, -1.75): inside the second cone, f vanishes there.
  CHECK(ef[res.sample_index[2]] == 0.0);

  CHECK(operator_norm_from_extension(res.op) <= 2.0 + 1e-9);
}

TEST_CASE("cone operator rejects retractions leaving the box") {
  const std::vector<std::vector<int>> partition = {{0}, {1}};
  const std::vector<GridBox> boxes = {make_box({-1}, {1}), make_box({-1}, {1})};
  CHECK_THROWS_AS(cone_partition_operator(2, partition, boxes, {{1.9, 0.05}}), ConeError);
}

TEST_CASE("cone boxes must contain the origin and match block dims") {
  const std::vector<std::vector<int>> partition = {{0}, {1}};
  CHECK_THROWS_AS(
      cone_partition_operator(2, partition, {make_box({1}, {2}), make_box({-1}, {1})}, {}),
      ConeError);
  CHECK_THROWS_AS(
      cone_partition_operator(2, partition, {make_box({-1, -1}, {1, 1}), make_box({-1}, {1})},
                              {}),
      ConeError);
}
