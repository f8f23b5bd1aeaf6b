#include <doctest.h>

#include "mcmf/rational.hpp"

using namespace mcmf;

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("3") == Rat(3));
  CHECK(parse_rat("-3") == Rat(-3));
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("4/6") == Rat(2, 3));
  CHECK(parse_rat("-8/2") == Rat(-4));
  CHECK(rat_str(Rat(2, 3)) == "2/3");
  CHECK(rat_str(Rat(-4)) == "-4");
  CHECK_THROWS_AS(parse_rat(""), InputError);
  CHECK_THROWS_AS(parse_rat("1/0"), InputError);
  CHECK_THROWS_AS(parse_rat("abc"), InputError);
}

TEST_CASE("floor and ceiling") {
  CHECK(floor_rat(Rat(7, 2)) == 3);
  CHECK(ceil_rat(Rat(7, 2)) == 4);
  CHECK(floor_rat(Rat(-7, 2)) == -4);
  CHECK(ceil_rat(Rat(-7, 2)) == -3);
  CHECK(floor_rat(Rat(5)) == 5);
  CHECK(ceil_rat(Rat(5)) == 5);
}

TEST_CASE("vector arithmetic") {
  Vec a{Rat(1), Rat(2)};
  Vec b{Rat(3), Rat(-1)};
  CHECK((a + b) == Vec{Rat(4), Rat(1)});
  CHECK((a - b) == Vec{Rat(-2), Rat(3)});
  CHECK((-a) == Vec{Rat(-1), Rat(-2)});
  CHECK((a * Rat(1, 2)) == Vec{Rat(1, 2), Rat(1)});
  CHECK(a.leq(Vec{Rat(1), Rat(3)}));
  CHECK_FALSE(a.leq(Vec{Rat(0), Rat(3)}));
  CHECK(Vec{Rat(0), Rat(0)}.is_zero());
  CHECK(a.nonnegative());
  CHECK_FALSE(b.nonnegative());
  CHECK(a.integral());
  CHECK_FALSE((a * Rat(1, 2)).integral());
}

TEST_CASE("vector parsing") {
  Vec v = parse_vec("2/1,1");
  CHECK(v.dim() == 2);
  CHECK(v[0] == Rat(2));
  CHECK(v[1] == Rat(1));
  CHECK(parse_vec("1/2,3/4,5").dim() == 3);
  CHECK_THROWS_AS(parse_vec("1,,2"), InputError);
}
