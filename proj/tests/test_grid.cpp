#include <doctest.h>

#include <cmath>
#include <limits>

#include "lipext/free_space.hpp"
#include "lipext/grid.hpp"

using namespace lipext;

TEST_CASE("lattice indexing round-trips") {
  const GridBox box = make_box({0, -1}, {2, 1});
  CHECK(box.point_count() == 9);
  for (long long k = 0; k < 9; ++k) CHECK(box.index_of(box.point_at(k)) == k);
  CHECK(box.point_at(0) == std::vector<long long>{0, -1});
  CHECK(box.point_at(1) == std::vector<long long>{0, 0});  // last axis fastest
  CHECK(box.contains({1.5, 0.0}));
  CHECK_FALSE(box.contains({3.5, 0.0}));
  CHECK(box.lattice_points().size() == 9);
}

TEST_CASE("interpolation at the cube center averages the corners") {
  const GridBox box = make_box({0, 0}, {1, 1});
  // Lattice order (0,0),(0,1),(1,0),(1,1).
  const std::vector<double> values = {0, 1, 1, 2};
  CHECK(hypercube_interpolate(box, values, {0.5, 0.5}) == doctest::Approx(1.0));
  CHECK(hypercube_interpolate(box, values, {0.0, 0.0}) == 0.0);
  CHECK(hypercube_interpolate(box, values, {1.0, 1.0}) == 2.0);
}

TEST_CASE("interpolation reproduces affine functions") {
  const GridBox box = make_box({-1, 0}, {2, 3});
  std::vector<double> values(box.point_count());
  for (long long k = 0; k < box.point_count(); ++k) {
    const auto p = box.point_at(k);
    values[k] = 2.0 * p[0] - 3.0 * p[1] + 0.5;
  }
  for (const auto& q : std::vector<std::vector<double>>{
           {0.25, 1.75}, {-1.0, 3.0}, {1.9, 0.1}, {0.0, 2.5}}) {
    CHECK(hypercube_interpolate(box, values, q) ==
          doctest::Approx(2.0 * q[0] - 3.0 * q[1] + 0.5));
  }
}

TEST_CASE("adjacent cubes agree on their shared face") {
  const GridBox box = make_box({0, 0}, {2, 1});
  const std::vector<double> values = {0.3, -1.2, 2.0, 0.7, -0.5, 1.1};
  const std::vector<double> q = {1.0, 0.4};
  const std::vector<long long> left = {0, 0}, right = {1, 0};
  CHECK(hypercube_interpolate(box, values, q, kDefaultTol, &left) ==
        doctest::Approx(hypercube_interpolate(box, values, q, kDefaultTol, &right)));
}

TEST_CASE("interpolation failure modes") {
  const GridBox box = make_box({0, 0}, {1, 1});
  std::vector<double> values = {0, 1, 1, 2};
  CHECK_THROWS_AS(hypercube_interpolate(box, values, {3.0, 0.0}), GridError);
  try {
    hypercube_interpolate(box, values, {3.0, 0.0});
  } catch (const GridError& e) {
    CHECK(e.kind == GridError::Kind::QueryOutsideBox);
  }

  values[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(hypercube_interpolate(box, values, {0.5, 0.5}), GridError);
  // A missing vertex with zero interpolation weight is never touched.
  CHECK(hypercube_interpolate(box, values, {0.0, 0.0}) == 0.0);
}

TEST_CASE("flat axes carry no interpolation weight") {
  const GridBox box = make_box({0, 2}, {1, 2});
  const std::vector<double> values = {1.0, 3.0};
  CHECK(hypercube_interpolate(box, values, {0.5, 2.0}) == doctest::Approx(2.0));
}

TEST_CASE("grid operator fixes the lattice and interpolates samples") {
  const GridBox box = make_box({0, 0}, {2, 2});
  const GridOperatorResult res =
      grid_extension_operator(box, {{0.5, 0.5}, {1.0, 1.0}, {1.25, 0.0}});
  CHECK_NOTHROW(res.op.validate());
  CHECK(res.op.claimed_bound == 1.0);
  CHECK(res.op.source.size() == 9);
  // The sample sitting on the lattice point (1,1) is merged into it.
  CHECK(res.sample_index[1] == res.grid_index[box.index_of({1, 1})]);
  CHECK(res.op.ambient->size() == 11);

  // A linear function extends linearly.
  std::vector<double> f(9);
  for (long long k = 0; k < 9; ++k) {
    const auto p = box.point_at(k);
    f[k] = p[0] + p[1];
  }
  const LipFunction fn(res.op.source, f);
  const std::vector<double> ef = res.op.apply_all(fn);
  CHECK(ef[res.sample_index[0]] == doctest::Approx(1.0));
  CHECK(ef[res.sample_index[2]] == doctest::Approx(1.25));

  CHECK(operator_norm_from_extension(res.op) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("grid operator rejects out-of-box samples") {
  const GridBox box = make_box({0, 0}, {1, 1});
  CHECK_THROWS_AS(grid_extension_operator(box, {{5.0, 0.0}}), GridError);
}

TEST_CASE("oversized lattices are rejected") {
  CHECK_THROWS_AS(grid_extension_operator(make_box({0, 0}, {511, 511}), {}), SizeError);
}
