#include <doctest.h>

#include <cmath>
#include <vector>

#include "lipext/constructions.hpp"
#include "lipext/separation.hpp"

using namespace lipext;

TEST_CASE("dyadic placement of a point and a pair") {
  const std::vector<std::vector<std::vector<long long>>> shapes = {{{0}}, {{0}, {1}}};
  const DyadicPlacement res = place_dyadic(1, shapes);
  CHECK(res.k == std::vector<int>{0, 4});
  CHECK(res.points->point(1) == std::vector<double>{-4.0});
  CHECK(res.points->point(2) == std::vector<double>{-64.0});
  CHECK(res.points->point(3) == std::vector<double>{-63.0});
  CHECK(res.sets.size() == 2);
  CHECK(res.sets[0].indices == std::vector<int>{1});
  CHECK(res.sets[1].indices == std::vector<int>{2, 3});

  // Placement is a translation, so within-shape distances survive.
  CHECK(res.space->d(2, 3) == 1.0);

  const SeparationReport rep = separation_constants(res.sets, res.anchor);
  CHECK(rep.lambda == doctest::Approx(67.0 / 59.0));
  CHECK(rep.diam_ratio == doctest::Approx(1.0 / 63.0));
  CHECK(rep.min_cross_distance == 59.0);

  // Every cross pair satisfies the band inequality with a wide margin.
  for (int x : res.sets[0].indices)
    for (int y : res.sets[1].indices)
      CHECK(res.space->d(x, res.anchor) + res.space->d(y, res.anchor) <=
            32.0 * res.space->d(x, y));
}

TEST_CASE("dyadic placement rejections") {
  CHECK_THROWS_AS(place_dyadic(1, {{{0}}, {}}), FamilyError);
  CHECK_THROWS_AS(place_dyadic(0, {{{0}}}), SizeError);
  CHECK_THROWS_AS(place_dyadic(1, {}), SizeError);
  CHECK_THROWS_AS(place_dyadic(2, {{{0}}}), SizeError);
  // Sixteen shapes of growing level exhaust the representable bands.
  std::vector<std::vector<std::vector<long long>>> many(16, {{0}});
  CHECK_THROWS_AS(place_dyadic(1, many), ConstructionError);
}

TEST_CASE("lattice ball family on a line") {
  const LatticeBallFamily fam = ball_sequence_lambda20(1, 2);
  CHECK(fam.window == 20);
  REQUIRE(fam.sets.size() == 2);
  CHECK(fam.sets[0].size() == 5);
  CHECK(fam.sets[1].size() == 9);
  CHECK(fam.points->point(fam.sets[0].indices.front()) == std::vector<double>{6.0});
  CHECK(fam.points->point(fam.sets[0].indices.back()) == std::vector<double>{10.0});
  CHECK(fam.points->point(fam.sets[1].indices.front()) == std::vector<double>{12.0});
  CHECK(fam.points->point(fam.sets[1].indices.back()) == std::vector<double>{20.0});

  const SeparationReport rep = separation_constants(fam.sets, fam.anchor);
  CHECK(rep.lambda == doctest::Approx(11.0));
  CHECK(rep.lambda <= 20.0);
  CHECK(rep.min_cross_distance == 2.0);
  CHECK(rep.per_set[0].diameter == 4.0);
  CHECK(rep.per_set[0].dist_to_anchor == 6.0);
  CHECK(rep.per_set[1].diameter == 8.0);
  CHECK(rep.per_set[1].dist_to_anchor == 12.0);
  CHECK(rep.diam_ratio == doctest::Approx(2.0 / 3.0));

  CHECK_THROWS_AS(ball_sequence_lambda20(1, 2, 10), ConstructionError);
  CHECK_THROWS_AS(ball_sequence_lambda20(1, 21), ConstructionError);
  CHECK_THROWS_AS(ball_sequence_lambda20(1, 0), SizeError);
}

TEST_CASE("shrinking cross-polytope family") {
  const ShrinkingFamily fam = shrinking_ball_sequence(1, 2, 1);
  CHECK(fam.N == std::vector<int>{1, 3});
  CHECK(fam.mesh == std::ldexp(1.0, -6));
  REQUIRE(fam.sets.size() == 2);
  CHECK(fam.sets[0].indices == std::vector<int>{1, 2, 3});
  CHECK(fam.points->point(1) == std::vector<double>{0.5});
  CHECK(fam.points->point(2) == std::vector<double>{0.75});
  CHECK(fam.points->point(3) == std::vector<double>{0.25});
  CHECK(fam.points->point(4) == std::vector<double>{0.125});
  CHECK(fam.points->point(5) == std::vector<double>{0.1875});
  CHECK(fam.points->point(6) == std::vector<double>{0.0625});
  CHECK(fam.exact_diameter == std::vector<double>{0.5, 0.125});
  CHECK(fam.exact_distance == std::vector<double>{0.25, 0.0625});

  const SeparationReport rep = separation_constants(fam.sets, fam.anchor);
  CHECK(rep.lambda == doctest::Approx(7.0));
  CHECK(rep.diam_ratio == 2.0);
  for (size_t i = 0; i < fam.sets.size(); ++i) {
    CHECK(rep.per_set[i].diameter == fam.exact_diameter[i]);
    CHECK(rep.per_set[i].dist_to_anchor == fam.exact_distance[i]);
  }

  // Mesh overrides must be powers of two at least as fine as the sets.
  CHECK(shrinking_ball_sequence(1, 2, 1, 0.03125).mesh == 0.03125);
  CHECK_THROWS_AS(shrinking_ball_sequence(1, 2, 1, 0.3), ConstructionError);
  CHECK_THROWS_AS(shrinking_ball_sequence(1, 2, 1, 0.125), ConstructionError);
  CHECK_THROWS_AS(shrinking_ball_sequence(1, 30), ConstructionError);
  CHECK_THROWS_AS(shrinking_ball_sequence(1, 2, -1), SizeError);
}

TEST_CASE("two-dimensional shrinking family keeps exact constants") {
  const ShrinkingFamily fam = shrinking_ball_sequence(2, 3, 2);
  CHECK(fam.N == std::vector<int>{2, 4, 6});
  REQUIRE(fam.sets.size() == 3);
  for (size_t i = 0; i < fam.sets.size(); ++i) {
    CHECK(fam.sets[i].size() == 5);
    const SubsetRef& s = fam.sets[i];
    CHECK(set_diameter(*fam.space, s.indices) == fam.exact_diameter[i]);
    CHECK(dist_to_set(*fam.space, fam.anchor, s.indices) == fam.exact_distance[i]);
  }
}

TEST_CASE("grid boxes per level") {
  const GridBox b1 = grid_box_level(1);
  CHECK(b1.dim() == 1);
  CHECK(b1.lo == std::vector<long long>{-4});
  CHECK(b1.hi == std::vector<long long>{4});
  CHECK(b1.point_count() == 9);
  CHECK(grid_box_count(2) == 33 * 33);
  CHECK(grid_box_count(3) == 2146689);
  CHECK_THROWS_AS(grid_box_level(0), SizeError);
  CHECK_THROWS_AS(grid_box_level(4), ConstructionError);
}

TEST_CASE("grid box retraction clamps and interpolates") {
  const GridBoxRetraction res = grid_box_retraction(1, {{7.0}, {2.5}});
  CHECK_NOTHROW(res.op.validate());
  CHECK(res.op.claimed_bound == 1.0);
  CHECK(res.op.source.size() == 9);
  CHECK(res.points->size() == 11);

  // 7 clamps to the box edge 4, lattice column 8.
  const auto& clamped = res.op.rows[res.sample_index[0]];
  CHECK(clamped[8] == doctest::Approx(1.0));
  // 2.5 stays put and splits evenly between 2 and 3.
  const auto& mid = res.op.rows[res.sample_index[1]];
  CHECK(mid[6] == doctest::Approx(0.5));
  CHECK(mid[7] == doctest::Approx(0.5));

  const double norm = operator_norm_from_extension(res.op);
  CHECK(norm >= 1.0 - 1e-9);
  CHECK(norm <= 1.0 + 1e-9);

  CHECK_THROWS_AS(grid_box_retraction(2, {}), ConstructionError);
  CHECK_THROWS_AS(grid_box_retraction(1, {{1.0, 2.0}}), SizeError);
}
