#include <doctest.h>

#include "oracles.hpp"
#include "polyscribe/errors.hpp"
#include "polyscribe/fixtures.hpp"
#include "polyscribe/inscribability.hpp"

using namespace polyscribe;

namespace {

int count_kind_failures(const WeightReport& rep, const std::string& kind) {
  int n = 0;
  for (const auto& c : rep.checks)
    if (c.kind == kind && !c.pass) ++n;
  return n;
}

}  // namespace

TEST_CASE("rivin: cube is inscribable with a strict certificate") {
  auto v = rivin_feasibility(cube());
  CHECK(v.inscribable);
  REQUIRE(v.slack.has_value());
  CHECK(*v.slack > 0);
  REQUIRE(v.certificate.has_value());
  auto rep = check_weights(cube(), *v.certificate);
  CHECK(rep.all_pass);
  // Substitution oracle: w = 1/3 satisfies everything since all prismatic
  // circuits of the cube have length >= 4.
  auto uniform = WeightFunction::uniform(cube(), Rational(1, 3));
  CHECK(check_weights(cube(), uniform).all_pass);
}

TEST_CASE("rivin: tetrahedron, slack matches the basic-solution oracle") {
  auto g = tetrahedron();
  auto v = rivin_feasibility(g);
  CHECK(v.inscribable);
  CHECK(check_weights(g, *v.certificate).all_pass);
  CHECK(check_weights(g, WeightFunction::uniform(g, Rational(1, 3))).all_pass);

  std::vector<std::vector<int>> circuit_sets;
  for (const auto& pc : prismatic_circuits(g)) circuit_sets.push_back(pc.edges);
  auto best = oracles::slack_lp_by_vertex_enumeration(g, circuit_sets);
  REQUIRE(best.has_value());
  CHECK(*best == *v.slack);
}

TEST_CASE("rivin: triangular prism needs non-uniform weights") {
  auto g = triangular_prism();
  // Uniform 1/3 fails W3 on the waist circuit (sum exactly 1, not > 1).
  auto rep = check_weights(g, WeightFunction::uniform(g, Rational(1, 3)));
  CHECK_FALSE(rep.all_pass);
  CHECK(count_kind_failures(rep, "W3") >= 1);
  // Still inscribable: vertical edges 2/5, triangle edges 3/10.
  WeightFunction w;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge_endpoints(e);
    bool vertical = (u < 3) != (v < 3);
    w.values[e] = vertical ? Rational(2, 5) : Rational(3, 10);
  }
  CHECK(check_weights(g, w).all_pass);
  auto verdict = rivin_feasibility(g);
  CHECK(verdict.inscribable);
  CHECK(check_weights(g, *verdict.certificate).all_pass);
}

TEST_CASE("rivin: square pyramid") {
  auto g = square_pyramid();
  auto v = rivin_feasibility(g);
  CHECK(v.inscribable);
  CHECK(check_weights(g, *v.certificate).all_pass);
  // Substitution oracle: side edges 1/4, base edges 3/8.
  WeightFunction w;
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge_endpoints(e);
    bool side = (a == 4 || b == 4);
    w.values[e] = side ? Rational(1, 4) : Rational(3, 8);
  }
  CHECK(check_weights(g, w).all_pass);
}

TEST_CASE("rivin: singly-truncated cube is not inscribable") {
  auto v = rivin_feasibility(truncated_cube_corner());
  CHECK_FALSE(v.inscribable);
  if (v.slack.has_value()) CHECK(*v.slack <= 0);
  CHECK_FALSE(v.violated.empty());
}

TEST_CASE("rivin: dodecahedron is inscribable") {
  auto g = dodecahedron();
  auto v = rivin_feasibility(g);
  CHECK(v.inscribable);
  CHECK(check_weights(g, *v.certificate).all_pass);
}

TEST_CASE("rivin: monotonicity under added circuits") {
  // Slack with a length cap >= slack of the full system.
  auto g = triangular_prism();
  RivinOptions all;
  RivinOptions capped;
  capped.max_circuit_length = 3;
  auto v_all = rivin_feasibility(g, all);
  auto v_capped = rivin_feasibility(g, capped);
  REQUIRE(v_all.slack.has_value());
  REQUIRE(v_capped.slack.has_value());
  CHECK(*v_capped.slack >= *v_all.slack);
  CHECK(v_all.circuits_used >= v_capped.circuits_used);
}

TEST_CASE("check_weights: cube with w = 1/2 fails W1 and W2") {
  auto g = cube();
  auto rep = check_weights(g, WeightFunction::uniform(g, Rational(1, 2)));
  CHECK_FALSE(rep.all_pass);
  CHECK(count_kind_failures(rep, "W1-upper") == g.edge_count());
  CHECK(count_kind_failures(rep, "W2") == g.vertex_count());
  CHECK(count_kind_failures(rep, "W2-dual") == g.vertex_count());
}

TEST_CASE("check_weights: tetrahedron with one lowered edge fails W2 twice") {
  auto g = tetrahedron();
  auto w = WeightFunction::uniform(g, Rational(1, 3));
  w.values[0] = Rational(1, 6);
  auto rep = check_weights(g, w);
  CHECK(count_kind_failures(rep, "W2") == 2);
  CHECK(count_kind_failures(rep, "W2-dual") == 2);
}

TEST_CASE("check_weights: certificate margins at least t*") {
  auto g = cube();
  auto v = rivin_feasibility(g);
  REQUIRE(v.inscribable);
  const auto& w = *v.certificate;
  const Rational& t = *v.slack;
  for (const auto& c : check_weights(g, w).checks) {
    if (c.kind == "W1-lower") CHECK(c.lhs >= t);
    if (c.kind == "W1-upper") CHECK(c.lhs <= Rational(1, 2) - t);
    if (c.kind == "W3") CHECK(c.lhs >= Rational(1) + t);
  }
}

TEST_CASE("check_weights: missing weight throws") {
  WeightFunction w;
  CHECK_THROWS_AS(check_weights(cube(), w), InputError);
}
