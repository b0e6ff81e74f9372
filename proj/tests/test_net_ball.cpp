#include <doctest.h>

#include <cmath>
#include <vector>

#include "lipext/net_ball.hpp"

using namespace lipext;

namespace {

std::vector<std::vector<double>> integer_segment(int lo, int hi) {
  std::vector<std::vector<double>> pts;
  for (int v = lo; v <= hi; ++v) pts.push_back({static_cast<double>(v)});
  return pts;
}

}  // namespace

TEST_CASE("radial projection fixes the ball and clamps the rest") {
  CHECK(radial_project({0.0}, 2.5, {1.0}) == std::vector<double>{1.0});
  CHECK(radial_project({0.0}, 2.5, {7.0})[0] == doctest::Approx(2.5));
  CHECK(radial_project({0.0}, 2.5, {-7.0})[0] == doctest::Approx(-2.5));
  const std::vector<double> p = radial_project({1.0, 1.0}, 1.0, {3.0, 1.0});
  CHECK(p[0] == doctest::Approx(2.0));
  CHECK(p[1] == doctest::Approx(1.0));
  CHECK_THROWS_AS(radial_project({0.0, 0.0}, 1.0, {1.0}), SizeError);
  CHECK_THROWS_AS(radial_project({0.0}, 0.0, {1.0}), SizeError);
}

TEST_CASE("nearest point breaks ties toward the lowest index") {
  const std::vector<std::vector<double>> pts = {{0.0}, {1.0}, {0.5}};
  CHECK(nearest_point(pts, {0.5}) == 2);
  CHECK(nearest_point(pts, {0.75}) == 1);
  CHECK(nearest_point({{0.0}, {1.0}}, {0.5}) == 0);
  CHECK_THROWS_AS(nearest_point({}, {0.5}), NetBallError);
}

TEST_CASE("integer lattice covering radius is dim over two") {
  CHECK(integer_lattice_covering_radius(1) == doctest::Approx(0.5));
  CHECK(integer_lattice_covering_radius(2) == doctest::Approx(1.0));
  CHECK(integer_lattice_covering_radius(3) == doctest::Approx(1.5));
  CHECK_THROWS_AS(integer_lattice_covering_radius(0), SizeError);
  CHECK_THROWS_AS(integer_lattice_covering_radius(13), SizeError);
}

TEST_CASE("net-ball retraction lands on an in-ball net point") {
  const auto net = integer_segment(-6, 6);
  CHECK(net_ball_retract(net, {0.0}, 2.5, {7.0}) == std::vector<double>{2.0});
  CHECK(net_ball_retract(net, {0.0}, 2.5, {-7.0}) == std::vector<double>{-2.0});
  CHECK(net_ball_retract(net, {0.0}, 2.5, {0.4}) == std::vector<double>{0.0});
  // Net points outside the ball are not eligible targets.
  CHECK(net_ball_retract_index(net, {0.0}, 2.5, {7.0}) == 8);
  CHECK_THROWS_AS(net_ball_retract({{0.0}, {1.0}}, {0.5}, 0.4, {0.5}), NetBallError);
}

TEST_CASE("net-ball operator on an interval net") {
  const auto net = integer_segment(-6, 6);
  const std::vector<std::vector<double>> samples = {{7.0}, {-7.0}, {0.4}, {2.0}};
  const NetBallOperatorResult res = net_ball_operator(net, {0.0}, 2.5, 0.5, samples);
  CHECK_NOTHROW(res.op.validate());
  CHECK(res.op.source.size() == 5);
  CHECK(res.delta == 1.0);
  CHECK(res.eps == 0.5);
  CHECK(res.op.claimed_bound == doctest::Approx(4.0));
  // Sample equal to a net point is merged, not duplicated.
  CHECK(res.sample_index[3] == 4);
  CHECK(res.points->size() == 8);

  // Sample rows select exactly the retraction target.
  for (size_t s = 0; s < samples.size(); ++s) {
    const auto& row = res.op.rows[res.sample_index[s]];
    int col = -1;
    for (size_t j = 0; j < row.size(); ++j)
      if (row[j] == 1.0) col = static_cast<int>(j);
    REQUIRE(col >= 0);
    const auto target = net_ball_retract(net, {0.0}, 2.5, samples[s]);
    CHECK(res.points->point(res.op.source.indices[col]) == target);
  }

  CHECK(operator_norm_from_extension(res.op) <= 4.0 + 1e-9);
  CHECK_THROWS_AS(net_ball_operator(net, {0.0}, 2.5, 0.5, samples, 3), SizeError);
  CHECK_THROWS_AS(net_ball_operator(net, {0.0}, 2.5, -0.1, samples), SizeError);
}
