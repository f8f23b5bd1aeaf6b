#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcmf/rational.hpp"

namespace mcmf {

struct Pt2 {
  Rat x, y;
  bool operator==(const Pt2& o) const { return x == o.x && y == o.y; }
  bool operator<(const Pt2& o) const { return x < o.x || (x == o.x && y < o.y); }
  Pt2 operator+(const Pt2& o) const { return {x + o.x, y + o.y}; }
  Pt2 operator-(const Pt2& o) const { return {x - o.x, y - o.y}; }
  Pt2 operator-() const { return {-x, -y}; }
};

inline Rat cross(const Pt2& a, const Pt2& b) { return a.x * b.y - a.y * b.x; }

// ax*x + ay*y <= b
struct Halfspace {
  Rat ax, ay, b;
};

// Closed bounded convex set in the plane, possibly degenerate (a segment or a
// single point). Canonical form: CCW vertex list starting at the
// lexicographically (x, then y) smallest vertex, no collinear interior
// vertices.
class ConvexPolygon {
 public:
  // Empty optional means the constraint system is infeasible. Throws
  // InputError when the system is feasible but unbounded.
  static std::optional<ConvexPolygon> from_halfspaces(const std::vector<Halfspace>& hs);
  static ConvexPolygon from_points(std::vector<Pt2> pts);  // convex hull

  const std::vector<Pt2>& vertices() const { return verts_; }
  std::vector<Halfspace> halfspaces() const;

  bool contains(const Pt2& p) const;
  bool subset_of(const ConvexPolygon& o) const;
  ConvexPolygon translate(const Pt2& t) const;
  ConvexPolygon negate() const;
  ConvexPolygon minkowski(const ConvexPolygon& o) const;  // edge-merge
  std::optional<ConvexPolygon> intersect(const ConvexPolygon& o) const;

  bool operator==(const ConvexPolygon& o) const { return verts_ == o.verts_; }
  bool operator<(const ConvexPolygon& o) const;  // deterministic ordering

  std::string str() const;

 private:
  std::vector<Pt2> verts_;
};

// Exact test whether the convex polygon `target` is contained in the union of
// `pieces`. Decides emptiness of target minus the union by branching over one
// strictly violated halfspace per piece.
bool covered_by_union(const ConvexPolygon& target, std::span<const ConvexPolygon> pieces);

// Merges pieces into a canonical union: drops contained pieces, merges pairs
// whose union is convex, and collapses the whole union to its hull when the
// hull is exactly covered. Result sorted.
std::vector<ConvexPolygon> canonicalize_union(std::vector<ConvexPolygon> pieces);

}  // namespace mcmf
