#pragma once

#include <string>
#include <vector>

#include "mcmf/polygon.hpp"
#include "mcmf/rational.hpp"

namespace mcmf {

// A capacity: the set of commodity vectors an arc admits simultaneously.
// Finite point sets work in any dimension; polygonal unions are planar only.
// The orthant variant exists for the return arc e (and its negation).
class Region {
 public:
  enum class Kind { kPointSet, kPolygonal, kOrthant };

  static Region point_set(std::size_t k, std::vector<Vec> pts);
  static Region polygonal(std::vector<ConvexPolygon> pieces);  // k = 2
  static Region orthant(std::size_t k, int sign = 1);
  static Region zero(std::size_t k, Kind kind = Kind::kPointSet);

  Kind kind() const { return kind_; }
  std::size_t dim() const { return k_; }
  bool is_point_set() const { return kind_ == Kind::kPointSet; }
  bool is_polygonal() const { return kind_ == Kind::kPolygonal; }
  bool is_orthant() const { return kind_ == Kind::kOrthant; }
  int orthant_sign() const { return sign_; }
  bool empty() const;

  const std::vector<Vec>& points() const { return points_; }
  const std::vector<ConvexPolygon>& pieces() const { return pieces_; }

  bool contains(const Vec& x) const;
  std::string str() const;

  bool operator==(const Region& o) const;

 private:
  Kind kind_ = Kind::kPointSet;
  std::size_t k_ = 0;
  int sign_ = 1;                        // orthant only
  std::vector<Vec> points_;             // sorted, unique
  std::vector<ConvexPolygon> pieces_;   // canonical union
};

Region negate(const Region& r);
Region translate(const Region& r, const Vec& t);
Region minkowski_sum(const Region& a, const Region& b);
Region intersect(const Region& a, const Region& b);
std::vector<Vec> integer_points(const Region& r);
bool is_reducible(const Region& r);
bool region_equal(const Region& a, const Region& b);

// Replaces the region by its integer points (PointSet result).
Region discretize(const Region& r);

}  // namespace mcmf
