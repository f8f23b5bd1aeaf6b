#include <doctest.h>

#include <random>

#include "mcmf/region.hpp"

using namespace mcmf;

namespace {

ConvexPolygon box(const Rat& xlo, const Rat& xhi, const Rat& ylo, const Rat& yhi) {
  return *ConvexPolygon::from_halfspaces({{Rat(1), Rat(0), xhi},
                                          {Rat(-1), Rat(0), -xlo},
                                          {Rat(0), Rat(1), yhi},
                                          {Rat(0), Rat(-1), -ylo}});
}

ConvexPolygon unit_triangle() {  // x,y >= 0, x+y <= 1
  return *ConvexPolygon::from_halfspaces(
      {{Rat(-1), Rat(0), Rat(0)}, {Rat(0), Rat(-1), Rat(0)}, {Rat(1), Rat(1), Rat(1)}});
}

Vec v2(long long x, long long y) { return Vec{Rat(x), Rat(y)}; }

std::vector<Pt2> verts(std::initializer_list<std::pair<long long, long long>> pts) {
  std::vector<Pt2> out;
  for (auto [x, y] : pts) out.push_back({Rat(x), Rat(y)});
  return out;
}

}  // namespace

TEST_CASE("halfspace polygon construction") {
  ConvexPolygon b = box(0, 1, 0, 2);
  CHECK(b.vertices() == verts({{0, 0}, {1, 0}, {1, 2}, {0, 2}}));

  // Segment x = 0, 0 <= y <= 2 and a single point.
  ConvexPolygon seg = *ConvexPolygon::from_halfspaces(
      {{Rat(1), Rat(0), Rat(0)}, {Rat(-1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(2)},
       {Rat(0), Rat(-1), Rat(0)}});
  CHECK(seg.vertices() == verts({{0, 0}, {0, 2}}));
  ConvexPolygon pt = *ConvexPolygon::from_halfspaces(
      {{Rat(1), Rat(0), Rat(1)}, {Rat(-1), Rat(0), Rat(-1)}, {Rat(0), Rat(1), Rat(1)},
       {Rat(0), Rat(-1), Rat(-1)}});
  CHECK(pt.vertices() == verts({{1, 1}}));

  CHECK_FALSE(ConvexPolygon::from_halfspaces(
      {{Rat(1), Rat(0), Rat(0)}, {Rat(-1), Rat(0), Rat(-1)}}).has_value());  // x<=0, x>=1
  CHECK_THROWS_AS(ConvexPolygon::from_halfspaces({{Rat(1), Rat(0), Rat(1)}}), InputError);
}

TEST_CASE("polygon minkowski sum via edge merge") {
  // Worked sum: unit triangle plus unit box gives the pentagon.
  ConvexPolygon sum = unit_triangle().minkowski(box(0, 1, 0, 1));
  CHECK(sum.vertices() == verts({{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}}));

  // Degenerate summands.
  ConvexPolygon point = ConvexPolygon::from_points(verts({{3, 4}}));
  CHECK(unit_triangle().minkowski(point).vertices() ==
        verts({{3, 4}, {4, 4}, {3, 5}}));
  ConvexPolygon seg = ConvexPolygon::from_points(verts({{0, 0}, {0, 2}}));
  CHECK(box(0, 1, 0, 1).minkowski(seg).vertices() == box(0, 1, 0, 3).vertices());
  CHECK(seg.minkowski(point).vertices() == verts({{3, 4}, {3, 6}}));
}

TEST_CASE("edge merge agrees with the pairwise vertex-sum hull oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-4, 4), count(1, 5);
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<Pt2> pa, pb;
    for (int i = 0; i < count(rng); ++i) pa.push_back({Rat(coord(rng)), Rat(coord(rng))});
    for (int i = 0; i < count(rng); ++i) pb.push_back({Rat(coord(rng)), Rat(coord(rng))});
    ConvexPolygon a = ConvexPolygon::from_points(pa);
    ConvexPolygon b = ConvexPolygon::from_points(pb);
    std::vector<Pt2> sums;
    for (const auto& p : a.vertices())
      for (const auto& q : b.vertices()) sums.push_back(p + q);
    CHECK(a.minkowski(b) == ConvexPolygon::from_points(sums));
  }
}

TEST_CASE("point set region basics") {
  Region r = Region::point_set(2, {v2(2, -3), v2(2, -3), v2(0, 0)});
  CHECK(r.points().size() == 2);  // dedup
  CHECK(r.contains(v2(2, -3)));
  CHECK_FALSE(r.contains(v2(1, 1)));
  CHECK_THROWS_AS(r.contains(Vec{Rat(1)}), InputError);

  Region n = negate(r);
  CHECK(n.contains(v2(-2, 3)));
  CHECK(region_equal(negate(n), r));
}

TEST_CASE("polygonal membership on the union capacity") {
  // x + 2y <= 2 (first quadrant) or the closed triangle (0,1),(2,2),(0,2).
  Region cap = Region::polygonal(
      {*ConvexPolygon::from_halfspaces(
           {{Rat(-1), Rat(0), Rat(0)}, {Rat(0), Rat(-1), Rat(0)}, {Rat(1), Rat(2), Rat(2)}}),
       *ConvexPolygon::from_halfspaces(
           {{Rat(-1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(2)}, {Rat(1), Rat(-2), Rat(-2)}})});
  CHECK(cap.contains(v2(2, 0)));
  CHECK_FALSE(cap.contains(v2(1, 1)));
  CHECK_FALSE(cap.contains(v2(2, 1)));
  CHECK(cap.contains(v2(1, 2)));
  CHECK(cap.contains(v2(0, 1)));  // vertex: regions are closed

  auto pts = integer_points(cap);
  CHECK(pts == std::vector<Vec>{v2(0, 0), v2(0, 1), v2(0, 2), v2(1, 0), v2(1, 2), v2(2, 0),
                                v2(2, 2)});
}

TEST_CASE("negation examples") {
  Region b = Region::polygonal({box(0, 1, 0, 1)});
  Region nb = negate(b);
  REQUIRE(nb.pieces().size() == 1);
  CHECK(nb.pieces()[0].vertices() == verts({{-1, -1}, {0, -1}, {0, 0}, {-1, 0}}));
  CHECK(region_equal(negate(nb), b));
}

TEST_CASE("minkowski sum of regions") {
  Region tri = Region::polygonal({unit_triangle()});
  Region sq = Region::polygonal({box(0, 1, 0, 1)});
  Region sum = minkowski_sum(tri, sq);
  REQUIRE(sum.pieces().size() == 1);
  CHECK(sum.pieces()[0].vertices() == verts({{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}}));

  Region zero = Region::zero(2, Region::Kind::kPolygonal);
  CHECK(region_equal(minkowski_sum(tri, zero), tri));

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coord(-3, 3), count(1, 4);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<Vec> pa, pb;
    for (int i = 0; i < count(rng); ++i) pa.push_back(v2(coord(rng), coord(rng)));
    for (int i = 0; i < count(rng); ++i) pb.push_back(v2(coord(rng), coord(rng)));
    Region a = Region::point_set(2, pa), b = Region::point_set(2, pb);
    std::vector<Vec> oracle;
    for (const auto& p : pa)
      for (const auto& q : pb) oracle.push_back(p + q);
    CHECK(region_equal(minkowski_sum(a, b), Region::point_set(2, oracle)));
  }

  CHECK_THROWS_AS(minkowski_sum(tri, Region::point_set(2, {v2(0, 0)})), InputError);
}

TEST_CASE("intersection") {
  Region a = Region::polygonal({box(0, 1, 0, 2)});
  Region b = Region::polygonal({box(0, 2, 0, 1)});
  Region both = intersect(a, b);
  REQUIRE(both.pieces().size() == 1);
  CHECK(both.pieces()[0].vertices() == box(0, 1, 0, 1).vertices());
  CHECK(region_equal(intersect(a, a), a));

  Region pts = Region::point_set(2, {v2(0, 0), v2(1, 2), v2(3, 3)});
  Region filtered = intersect(pts, a);
  CHECK(filtered.points() == std::vector<Vec>{v2(0, 0), v2(1, 2)});

  Region orth = Region::orthant(2);
  CHECK(intersect(pts, orth).points().size() == 3);
  Region neg = Region::point_set(2, {v2(-1, 0), v2(1, 1)});
  CHECK(intersect(neg, orth).points() == std::vector<Vec>{v2(1, 1)});
}

TEST_CASE("integer point enumeration") {
  Region tri = Region::polygonal({unit_triangle()});
  CHECK(integer_points(tri) == std::vector<Vec>{v2(0, 0), v2(0, 1), v2(1, 0)});
  Region b = Region::polygonal({box(0, 2, 0, 2)});
  CHECK(integer_points(b).size() == 9);
  CHECK_THROWS_AS(integer_points(Region::orthant(2)), InputError);
}

TEST_CASE("reducibility") {
  CHECK(is_reducible(Region::point_set(2, {v2(0, 0), v2(1, 0), v2(0, 1), v2(1, 1)})));
  CHECK_FALSE(is_reducible(Region::point_set(2, {v2(0, 0), v2(1, 1)})));
  // Segment x=0, y<=2 is downward closed.
  Region seg = Region::polygonal({*ConvexPolygon::from_halfspaces(
      {{Rat(1), Rat(0), Rat(0)}, {Rat(-1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(2)},
       {Rat(0), Rat(-1), Rat(0)}})});
  CHECK(is_reducible(seg));
  // Shifted box misses the origin.
  CHECK_FALSE(is_reducible(Region::polygonal({box(1, 2, 1, 2)})));
}

TEST_CASE("membership is compatible with the sum") {
  Region a = Region::polygonal({unit_triangle()});
  Region b = Region::polygonal({box(0, 1, 0, 1)});
  Region sum = minkowski_sum(a, b);
  Vec x = Vec{Rat(1, 2), Rat(1, 4)}, y = Vec{Rat(1), Rat(1, 3)};
  REQUIRE(a.contains(x));
  REQUIRE(b.contains(y));
  CHECK(sum.contains(x + y));
  // Point-set witness extraction: every sum member decomposes.
  Region pa = Region::point_set(2, {v2(0, 0), v2(1, 2)});
  Region pb = Region::point_set(2, {v2(2, 0), v2(0, 1)});
  Region pab = minkowski_sum(pa, pb);
  for (const auto& s : pab.points()) {
    bool witnessed = false;
    for (const auto& p : pa.points())
      for (const auto& q : pb.points()) witnessed = witnessed || (p + q) == s;
    CHECK(witnessed);
  }
}

TEST_CASE("algebraic laws") {
  Region a = Region::point_set(2, {v2(0, 0), v2(1, 0), v2(2, 2)});
  Region b = Region::point_set(2, {v2(0, 0), v2(0, 1)});
  Region c = Region::point_set(2, {v2(1, 0), v2(0, 1)});
  CHECK(region_equal(minkowski_sum(a, b), minkowski_sum(b, a)));
  CHECK(region_equal(minkowski_sum(minkowski_sum(a, b), c), minkowski_sum(a, minkowski_sum(b, c))));
  CHECK(region_equal(negate(minkowski_sum(a, b)), minkowski_sum(negate(a), negate(b))));
  CHECK(region_equal(negate(intersect(a, b)), intersect(negate(a), negate(b))));

  // A + (B n C) is a strict subset of (A+B) n (A+C) in general.
  Region lhs = minkowski_sum(a, intersect(b, c));
  Region rhs = intersect(minkowski_sum(a, b), minkowski_sum(a, c));
  for (const auto& p : lhs.points()) CHECK(rhs.contains(p));
  CHECK_FALSE(region_equal(lhs, rhs));

  // Superset relation for integer points of sums.
  Region s = minkowski_sum(Region::polygonal({unit_triangle()}),
                           Region::polygonal({box(0, 1, 0, 1)}));
  auto sum_pts = integer_points(s);
  for (const auto& p : integer_points(Region::polygonal({unit_triangle()})))
    for (const auto& q : integer_points(Region::polygonal({box(0, 1, 0, 1)})))
      CHECK(std::binary_search(sum_pts.begin(), sum_pts.end(), p + q));
}

TEST_CASE("union canonicalization merges convex covers") {
  // Two halves of a box reassemble.
  Region r = Region::polygonal({box(0, 1, 0, 2), box(1, 2, 0, 2)});
  REQUIRE(r.pieces().size() == 1);
  CHECK(r.pieces()[0].vertices() == box(0, 2, 0, 2).vertices());

  // An L-shape stays two pieces regardless of the split, and the two
  // decompositions compare equal.
  Region l1 = Region::polygonal({box(0, 2, 0, 1), box(0, 1, 0, 2)});
  Region l2 = Region::polygonal({box(0, 2, 0, 1), box(0, 1, 1, 2)});
  CHECK(l1.pieces().size() == 2);
  CHECK(region_equal(l1, l2));
  CHECK_FALSE(region_equal(l1, Region::polygonal({box(0, 2, 0, 2)})));
}

TEST_CASE("discretize") {
  Region tri = Region::polygonal({unit_triangle()});
  Region d = discretize(tri);
  CHECK(d.is_point_set());
  CHECK(d.points().size() == 3);
}
