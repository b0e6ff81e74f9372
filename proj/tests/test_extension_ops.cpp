#include <doctest.h>

#include <cmath>

#include "lipext/extension_op.hpp"

using namespace lipext;

namespace {

SpacePtr line_points(const std::vector<double>& xs) {
  const int n = static_cast<int>(xs.size());
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i][j] = std::fabs(xs[i] - xs[j]);
  return FiniteMetricSpace::validated(std::move(d));
}

}  // namespace

TEST_CASE("two-point sources always give norm one") {
  const SpacePtr space = line_points({0, 2, 3});
  const SubsetRef S(space, {0, 1});

  const ExtensionOperator E = mcshane_operator(S, McShaneMode::Inf);
  CHECK(E.claimed_bound == 1.0);
  CHECK_NOTHROW(E.validate());
  CHECK(E.rows[2][0] == doctest::Approx(-0.5));
  CHECK(E.rows[2][1] == doctest::Approx(1.5));

  const LipFunction f(S, {4.0, 10.0});
  const std::vector<double> vals = E.apply_all(f);
  CHECK(vals[0] == 4.0);  // extension property, exact
  CHECK(vals[1] == 10.0);
  CHECK(vals[2] == doctest::Approx(13.0));

  CHECK(mcshane_operator(S, McShaneMode::Sup).apply_all(f)[2] == doctest::Approx(7.0));
  CHECK(mcshane_operator(S, McShaneMode::Midpoint).apply_all(f)[2] == doctest::Approx(10.0));
}

TEST_CASE("the linear operator can exceed norm one on three points") {
  // Star: three outer points pairwise at 2, a hub at 1 from all of them.
  const std::vector<std::vector<double>> d = {
      {0, 2, 2, 1}, {2, 0, 2, 1}, {2, 2, 0, 1}, {1, 1, 1, 0}};
  const SpacePtr space = FiniteMetricSpace::validated(d);
  const ExtensionOperator E = mcshane_operator(SubsetRef(space, {0, 1, 2}));
  CHECK(E.rows[3][1] == doctest::Approx(0.5));
  CHECK(E.rows[3][2] == doctest::Approx(0.5));
  // The hub averages the two non-pin values, so the slope against the pin
  // doubles: exact norm 2, recorded as the claimed bound.
  CHECK(E.claimed_bound == doctest::Approx(2.0));
  CHECK(operator_norm_from_extension(E) == doctest::Approx(2.0));
}

TEST_CASE("retraction operators select their targets") {
  const SpacePtr space = line_points({0, 1, 2});
  const SubsetRef S(space, {0, 1});
  const ExtensionOperator E = retraction_operator(space, S, {0, 1, 1});
  CHECK_NOTHROW(E.validate());
  CHECK(E.rows[2] == std::vector<double>{0.0, 1.0});
  CHECK(operator_norm_from_extension(E) == doctest::Approx(1.0));

  CHECK_THROWS_AS(retraction_operator(space, S, {0, 0, 1}), FunctionError);
  CHECK_THROWS_AS(retraction_operator(space, S, {0, 2, 1}), FunctionError);
  CHECK_THROWS_AS(retraction_operator(space, S, {0, 1}), SizeError);
}

TEST_CASE("blending two operators across a cutoff") {
  const SpacePtr space = line_points({0, 1, 5, 10, 11});
  const SubsetRef S1(space, {0, 1}), S2(space, {3, 4});
  const ExtensionOperator E1 = mcshane_operator(S1);
  const ExtensionOperator E2 = mcshane_operator(S2);
  const double r = 9.0;
  const ExtensionOperator glued = glue_pair(E1, E2, r);
  CHECK_NOTHROW(glued.validate());

  const LipFunction f(glued.source, {0, 1, 5, 6});
  const LipFunction f1(S1, {0, 1});
  const LipFunction f2(S2, {5, 6});
  const std::vector<double> ef = glued.apply_all(f);
  const std::vector<double> e1 = E1.apply_all(f1);
  const std::vector<double> e2 = E2.apply_all(f2);
  for (int x = 0; x < space->size(); ++x) {
    const double h = std::max(0.0, 1.0 - dist_to_set(*space, x, S2.indices) / r);
    CHECK(ef[x] == doctest::Approx(e1[x] + h * (e2[x] - e1[x])));
  }
  CHECK(ef[2] == doctest::Approx(65.0 / 9.0));
  CHECK(operator_norm_from_extension(glued) <= glued.claimed_bound + 1e-9);
}

TEST_CASE("blending rejects bad geometry") {
  const SpacePtr space = line_points({0, 1, 5, 10, 11});
  const ExtensionOperator E1 = mcshane_operator(SubsetRef(space, {0, 1}));
  const ExtensionOperator E2 = mcshane_operator(SubsetRef(space, {3, 4}));
  CHECK_THROWS_AS(glue_pair(E1, E1, 1.0), FamilyError);
  CHECK_THROWS_AS(glue_pair(E1, E2, 0.0), GlueError);
  CHECK_THROWS_AS(glue_pair(E1, E2, 20.0), GlueError);
  try {
    glue_pair(E1, E2, 20.0);
  } catch (const GlueError& e) {
    CHECK(e.kind == GlueError::Kind::SetsTooClose);
  }
}

TEST_CASE("family glue matches its closed-form constants") {
  // Two singletons {1} and {8} on a 50-point integer grid anchored at 0.
  std::vector<double> xs(50);
  for (int i = 0; i < 50; ++i) xs[i] = i;
  const SpacePtr space = line_points(xs);
  const std::vector<SubsetRef> sets = {SubsetRef(space, {1}), SubsetRef(space, {8})};
  const SeparationReport rep = separation_constants(sets, 0);
  CHECK(rep.lambda == doctest::Approx(9.0 / 7.0));
  CHECK(rep.diam_ratio == 0.0);

  std::vector<ExtensionOperator> extenders;
  for (const auto& s : sets) extenders.push_back(mcshane_operator(s));
  const GlueFamilyResult glued = glue_family(extenders, 0, 1.0, rep);
  CHECK(glued.radii[0] == doctest::Approx(7.0 / 18.0));
  CHECK(glued.radii[1] == doctest::Approx(28.0 / 9.0));
  CHECK(glued.bound_simple == doctest::Approx(32.0 / 7.0));
  CHECK(glued.op.claimed_bound == doctest::Approx(50.0 / 7.0));
  CHECK_NOTHROW(glued.op.validate());

  const CertifyResult cert =
      certify_norm(glued.op, 100, CorpusSpec{CorpusSpec::Kind::Uniform, 17});
  REQUIRE(cert.exact.has_value());
  CHECK(cert.empirical <= *cert.exact + 1e-12);
  CHECK(*cert.exact <= glued.op.claimed_bound + 1e-9);
  CHECK(cert.bound_ok);
}

TEST_CASE("single-member families act inside one neighborhood") {
  const SpacePtr space = line_points({0, 5, 6, 7, 12});
  const std::vector<SubsetRef> sets = {SubsetRef(space, {1, 2, 3})};
  const SeparationReport rep = separation_constants(sets, 0);
  CHECK(rep.lambda == 1.0);
  CHECK(rep.diam_ratio == doctest::Approx(0.4));

  const ExtensionOperator inner = mcshane_operator(sets[0]);
  const GlueFamilyResult glued = glue_family({inner}, 0, inner.claimed_bound, rep);
  CHECK(glued.radii[0] == doctest::Approx(2.5));

  const double C = inner.claimed_bound;
  const double kprime = 2.0 * C + 2.0 * (1.0 + 0.4 + C * 0.4);
  CHECK(glued.bound_simple == doctest::Approx(kprime));
  CHECK(glued.op.claimed_bound == doctest::Approx(kprime + 2.0 * ((kprime + 1) * 0.4 + 1)));

  // The neighborhood only reaches the set itself here, so the operator
  // fixes the set and sends both far points to the anchor value.
  const LipFunction f(glued.op.source, {0.0, 2.0, 3.0, 5.0});
  const std::vector<double> ef = glued.op.apply_all(f);
  CHECK(ef[0] == 0.0);
  CHECK(ef[1] == 2.0);
  CHECK(ef[2] == 3.0);
  CHECK(ef[3] == 5.0);
  CHECK(ef[4] == 0.0);
}

TEST_CASE("family hypotheses are enforced") {
  const SpacePtr space = line_points({0, 1, 8});
  const std::vector<SubsetRef> sets = {SubsetRef(space, {1}), SubsetRef(space, {2})};
  const SeparationReport rep = separation_constants(sets, 0);
  std::vector<ExtensionOperator> extenders;
  for (const auto& s : sets) extenders.push_back(mcshane_operator(s));

  CHECK_THROWS_AS(glue_family({}, 0, 1.0, rep), GlueError);
  CHECK_THROWS_AS(glue_family(extenders, 0, 0.5, rep), GlueError);
  try {
    glue_family(extenders, 0, 0.5, rep);
  } catch (const GlueError& e) {
    CHECK(e.kind == GlueError::Kind::HypothesisViolation);
  }
  CHECK_THROWS_AS(glue_family(extenders, 1, 1.0, rep), FamilyError);

  SeparationReport wrong = rep;
  wrong.per_set.pop_back();
  CHECK_THROWS_AS(glue_family(extenders, 0, 1.0, wrong), GlueError);
}

TEST_CASE("certification stays below the exact norm") {
  const SpacePtr space = line_points({0, 1, 3, 7});
  const ExtensionOperator E = mcshane_operator(SubsetRef(space, {0, 2, 3}));
  for (const auto kind : {CorpusSpec::Kind::Uniform, CorpusSpec::Kind::UniformMcshane}) {
    const CertifyResult cert = certify_norm(E, 50, CorpusSpec{kind, 5});
    REQUIRE(cert.exact.has_value());
    CHECK(cert.trials_used >= 1);
    CHECK(cert.trials_used <= 50);
    CHECK(cert.empirical <= *cert.exact + 1e-12);
    CHECK(cert.bound_ok);
    CHECK(cert.worst_values.size() == 3);
  }
}

TEST_CASE("preadjoints restrict to the identity on the source") {
  const SpacePtr space = line_points({0, 1, 3, 7});
  const ExtensionOperator E = mcshane_operator(SubsetRef(space, {0, 2, 3}));
  CHECK(projection_property_holds(preadjoint(E)));
}

TEST_CASE("apply rejects mismatched domains") {
  const SpacePtr space = line_points({0, 1, 2});
  const ExtensionOperator E = mcshane_operator(SubsetRef(space, {0, 1}));
  CHECK_THROWS_AS(E.apply_all(LipFunction(SubsetRef(space, {0, 2}), {1.0, 2.0})),
                  FunctionError);
}
