#include <doctest.h>

#include "mcmf/simplex.hpp"

using namespace mcmf;

TEST_CASE("basic maximization") {
  // max x + y  s.t.  x <= 2, y <= 3, x,y >= 0
  Matrix a = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  LpResult r = solve_lp(a, {Rat(2), Rat(3)}, {Rat(1), Rat(1)});
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.objective == Rat(5));
  CHECK(r.x[0] == Rat(2));
  CHECK(r.x[1] == Rat(3));
}

TEST_CASE("infeasible and unbounded detection") {
  Matrix a = {{Rat(1)}};
  CHECK(solve_lp(a, {Rat(-1)}, {Rat(0)}).status == LpStatus::kInfeasible);  // x <= -1, x >= 0
  CHECK(solve_lp({}, {}, {Rat(1)}).status == LpStatus::kUnbounded);          // max x, x >= 0
}

TEST_CASE("negative rhs needs phase one") {
  // x >= 1 written as -x <= -1; max -x has optimum -1.
  Matrix a = {{Rat(-1)}};
  LpResult r = solve_lp(a, {Rat(-1)}, {Rat(-1)});
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.objective == Rat(-1));
  CHECK(r.x[0] == Rat(1));
}

TEST_CASE("free variable wrapper") {
  // max -x  with  -x <= 5  (x >= -5): optimum 5 at x = -5.
  Matrix a = {{Rat(-1)}};
  LpResult r = maximize_free(a, {Rat(5)}, {Rat(-1)});
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.objective == Rat(5));
  CHECK(r.x[0] == Rat(-5));

  CHECK(maximize_free(a, {Rat(5)}, {Rat(1)}).status == LpStatus::kUnbounded);
}

TEST_CASE("feasible points satisfy the system") {
  Matrix a = {{Rat(1), Rat(2)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}};
  std::vector<Rat> b = {Rat(2), Rat(0), Rat(0)};
  auto p = feasible_point(a, b);
  REQUIRE(p.has_value());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat lhs = a[i][0] * (*p)[0] + a[i][1] * (*p)[1];
    CHECK(lhs <= b[i]);
  }
  Matrix bad = {{Rat(1)}, {Rat(-1)}};
  CHECK_FALSE(feasible_point(bad, {Rat(0), Rat(-1)}).has_value());  // x <= 0 and x >= 1
}

TEST_CASE("strict feasibility") {
  Matrix closed = {{Rat(1)}};  // x <= 0
  CHECK(strict_feasible(closed, {Rat(0)}, {{Rat(1)}}, {Rat(0)}));        // x < 0 too
  CHECK_FALSE(strict_feasible(closed, {Rat(0)}, {{Rat(-1)}}, {Rat(0)})); // x > 0 impossible
  CHECK(strict_feasible({}, {}, {{Rat(1)}}, {Rat(1)}));                  // x < 1
  // Closed x <= 0 with strict x < 1: satisfiable.
  CHECK(strict_feasible(closed, {Rat(0)}, {{Rat(1)}}, {Rat(1)}));
}

TEST_CASE("degenerate equality chains terminate") {
  // x = 1, y = 1 via paired inequalities; max x + y.
  Matrix a = {{Rat(1), Rat(0)}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}};
  std::vector<Rat> b = {Rat(1), Rat(-1), Rat(1), Rat(-1)};
  LpResult r = solve_lp(a, b, {Rat(1), Rat(1)});
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.objective == Rat(2));
}
