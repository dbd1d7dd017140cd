#include <doctest.h>

#include "polyscribe/simplex.hpp"

using namespace polyscribe;
using namespace polyscribe::lp;

TEST_CASE("simplex: basic maximization") {
  // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6, x,y >= 0 -> x=4, y=0, obj 12.
  Problem p;
  int x = p.add_var(3), y = p.add_var(2);
  p.add_row({{{x, 1}, {y, 1}}, Sense::LE, 4});
  p.add_row({{{x, 1}, {y, 3}}, Sense::LE, 6});
  auto s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.objective == 12);
  CHECK(s.x[x] == 4);
  CHECK(s.x[y] == 0);
}

TEST_CASE("simplex: equality and GE rows") {
  // max x + y s.t. x + y = 2, x >= 1/2 -> obj 2.
  Problem p;
  int x = p.add_var(1), y = p.add_var(1);
  p.add_row({{{x, 1}, {y, 1}}, Sense::EQ, 2});
  p.add_row({{{x, 1}}, Sense::GE, Rational(1, 2)});
  auto s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.objective == 2);
  CHECK(s.x[x] >= Rational(1, 2));
}

TEST_CASE("simplex: infeasible") {
  Problem p;
  int x = p.add_var(1);
  p.add_row({{{x, 1}}, Sense::LE, 1});
  p.add_row({{{x, 1}}, Sense::GE, 2});
  CHECK(solve(p).status == Status::Infeasible);
}

TEST_CASE("simplex: unbounded") {
  Problem p;
  int x = p.add_var(1);
  p.add_row({{{x, 1}}, Sense::GE, 1});
  CHECK(solve(p).status == Status::Unbounded);
}

TEST_CASE("simplex: free variable") {
  // max t s.t. t <= 5, -t <= 7 with t free -> 5; min -> -7.
  Problem p;
  int t = p.add_var(1, true);
  p.add_row({{{t, 1}}, Sense::LE, 5});
  p.add_row({{{t, -1}}, Sense::LE, 7});
  auto s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.x[t] == 5);

  p.maximize = false;
  s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.x[t] == -7);
  CHECK(s.objective == -7);
}

TEST_CASE("simplex: exact rational answer") {
  // max x s.t. 3x <= 1 -> x = 1/3 exactly.
  Problem p;
  int x = p.add_var(1);
  p.add_row({{{x, 3}}, Sense::LE, 1});
  auto s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.x[x] == Rational(1, 3));
}

TEST_CASE("simplex: degenerate problem terminates (Bland)") {
  // Classic degeneracy: multiple tight rows at the optimum.
  Problem p;
  int x = p.add_var(1), y = p.add_var(1);
  p.add_row({{{x, 1}}, Sense::LE, 1});
  p.add_row({{{x, 1}, {y, 1}}, Sense::LE, 1});
  p.add_row({{{x, 1}, {y, 2}}, Sense::LE, 1});
  p.add_row({{{y, 1}}, Sense::LE, 1});
  auto s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.objective == 1);
}

TEST_CASE("simplex: negative rhs normalization") {
  // max -x s.t. -x <= -2  (i.e. x >= 2) -> x = 2.
  Problem p;
  int x = p.add_var(-1);
  p.add_row({{{x, -1}}, Sense::LE, -2});
  auto s = solve(p);
  REQUIRE(s.status == Status::Optimal);
  CHECK(s.x[x] == 2);
}
