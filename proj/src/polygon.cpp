#include "mcmf/polygon.hpp"

#include <algorithm>
#include <cassert>

#include "mcmf/simplex.hpp"

namespace mcmf {
namespace {

std::vector<Pt2> convex_hull(std::vector<Pt2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Pt2> hull;
  // Lower then upper chain; strict turns only, so collinear points drop out.
  auto build = [&](auto begin, auto end) {
    std::size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2 &&
             cross(hull.back() - hull[hull.size() - 2], *it - hull[hull.size() - 2]) <= 0)
        hull.pop_back();
      hull.push_back(*it);
    }
  };
  build(pts.begin(), pts.end());
  hull.pop_back();
  build(pts.rbegin(), pts.rend());
  hull.pop_back();
  if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
  return hull;  // CCW, starts at lexicographic minimum
}

// All-collinear inputs leave convex_hull with the two chain endpoints; make
// sure a segment is stored as its two extreme points in lexicographic order.
std::vector<Pt2> canonical_vertices(std::vector<Pt2> pts) {
  auto hull = convex_hull(std::move(pts));
  if (hull.size() == 2 && hull[1] < hull[0]) std::swap(hull[0], hull[1]);
  return hull;
}

Matrix halfspace_matrix(const std::vector<Halfspace>& hs) {
  Matrix a;
  a.reserve(hs.size());
  for (const auto& h : hs) a.push_back({h.ax, h.ay});
  return a;
}

std::vector<Rat> halfspace_rhs(const std::vector<Halfspace>& hs) {
  std::vector<Rat> b;
  b.reserve(hs.size());
  for (const auto& h : hs) b.push_back(h.b);
  return b;
}

// Edge vectors of the CCW boundary walk. A segment contributes both
// directions, a point none.
std::vector<Pt2> boundary_edges(const std::vector<Pt2>& v) {
  std::vector<Pt2> edges;
  if (v.size() == 2) {
    edges.push_back(v[1] - v[0]);
    edges.push_back(v[0] - v[1]);
  } else if (v.size() >= 3) {
    for (std::size_t i = 0; i < v.size(); ++i)
      edges.push_back(v[(i + 1) % v.size()] - v[i]);
  }
  return edges;
}

// CCW angular order starting just above the straight-down direction; matches
// the edge order of a CCW walk that begins at the lexicographic minimum.
bool angle_less(const Pt2& u, const Pt2& v) {
  auto phase = [](const Pt2& w) { return (w.x > 0 || (w.x == 0 && w.y > 0)) ? 0 : 1; };
  int pu = phase(u), pv = phase(v);
  if (pu != pv) return pu < pv;
  return cross(u, v) > 0;
}

}  // namespace

std::optional<ConvexPolygon> ConvexPolygon::from_halfspaces(const std::vector<Halfspace>& hs) {
  Matrix a = halfspace_matrix(hs);
  std::vector<Rat> b = halfspace_rhs(hs);
  if (!feasible_point(a, b)) return std::nullopt;
  for (const auto& dir : {std::vector<Rat>{1, 0}, {Rat(-1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(-1)}}) {
    if (maximize_free(a, b, dir).status == LpStatus::kUnbounded)
      throw InputError("unbounded polygon");
  }
  // Vertices are feasible intersections of constraint boundary pairs.
  std::vector<Pt2> cand;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      Rat det = hs[i].ax * hs[j].ay - hs[i].ay * hs[j].ax;
      if (det == 0) continue;
      Pt2 p{(hs[i].b * hs[j].ay - hs[i].ay * hs[j].b) / det,
            (hs[i].ax * hs[j].b - hs[i].b * hs[j].ax) / det};
      bool ok = true;
      for (const auto& h : hs)
        if (h.ax * p.x + h.ay * p.y > h.b) {
          ok = false;
          break;
        }
      if (ok) cand.push_back(p);
    }
  }
  assert(!cand.empty());  // feasible + bounded implies a vertex exists
  ConvexPolygon poly;
  poly.verts_ = canonical_vertices(std::move(cand));
  return poly;
}

ConvexPolygon ConvexPolygon::from_points(std::vector<Pt2> pts) {
  assert(!pts.empty());
  ConvexPolygon poly;
  poly.verts_ = canonical_vertices(std::move(pts));
  return poly;
}

std::vector<Halfspace> ConvexPolygon::halfspaces() const {
  std::vector<Halfspace> hs;
  if (verts_.size() == 1) {
    const Pt2& p = verts_[0];
    hs.push_back({Rat(1), Rat(0), p.x});
    hs.push_back({Rat(-1), Rat(0), -p.x});
    hs.push_back({Rat(0), Rat(1), p.y});
    hs.push_back({Rat(0), Rat(-1), -p.y});
  } else if (verts_.size() == 2) {
    Pt2 d = verts_[1] - verts_[0];
    // Both sides of the carrier line, then the two end caps.
    Rat nx = d.y, ny = -d.x;
    Rat nb = nx * verts_[0].x + ny * verts_[0].y;
    hs.push_back({nx, ny, nb});
    hs.push_back({-nx, -ny, -nb});
    hs.push_back({-d.x, -d.y, -(d.x * verts_[0].x + d.y * verts_[0].y)});
    hs.push_back({d.x, d.y, d.x * verts_[1].x + d.y * verts_[1].y});
  } else {
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      const Pt2& p = verts_[i];
      const Pt2& q = verts_[(i + 1) % verts_.size()];
      Pt2 d = q - p;
      Rat nx = d.y, ny = -d.x;  // outward normal of a CCW edge
      hs.push_back({nx, ny, nx * p.x + ny * p.y});
    }
  }
  return hs;
}

bool ConvexPolygon::contains(const Pt2& p) const {
  for (const auto& h : halfspaces())
    if (h.ax * p.x + h.ay * p.y > h.b) return false;
  return true;
}

bool ConvexPolygon::subset_of(const ConvexPolygon& o) const {
  for (const auto& v : verts_)
    if (!o.contains(v)) return false;
  return true;
}

ConvexPolygon ConvexPolygon::translate(const Pt2& t) const {
  ConvexPolygon poly;
  poly.verts_ = verts_;
  for (auto& v : poly.verts_) v = v + t;
  return poly;
}

ConvexPolygon ConvexPolygon::negate() const {
  std::vector<Pt2> pts;
  pts.reserve(verts_.size());
  for (const auto& v : verts_) pts.push_back(-v);
  return from_points(std::move(pts));
}

ConvexPolygon ConvexPolygon::minkowski(const ConvexPolygon& o) const {
  std::vector<Pt2> ea = boundary_edges(verts_);
  std::vector<Pt2> eb = boundary_edges(o.verts_);
  std::vector<Pt2> merged;
  merged.reserve(ea.size() + eb.size());
  std::merge(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(merged), angle_less);
  std::vector<Pt2> pts;
  Pt2 cur = verts_[0] + o.verts_[0];  // lexmin of the sum
  pts.push_back(cur);
  for (const auto& e : merged) {
    cur = cur + e;
    pts.push_back(cur);
  }
  return from_points(std::move(pts));
}

std::optional<ConvexPolygon> ConvexPolygon::intersect(const ConvexPolygon& o) const {
  std::vector<Halfspace> hs = halfspaces();
  for (auto& h : o.halfspaces()) hs.push_back(h);
  return from_halfspaces(hs);
}

bool ConvexPolygon::operator<(const ConvexPolygon& o) const {
  return std::lexicographical_compare(verts_.begin(), verts_.end(), o.verts_.begin(),
                                      o.verts_.end(),
                                      [](const Pt2& a, const Pt2& b) { return a < b; });
}

std::string ConvexPolygon::str() const {
  std::string s;
  for (const auto& v : verts_) {
    if (!s.empty()) s += " ";
    s += "(" + rat_str(v.x) + "," + rat_str(v.y) + ")";
  }
  return s;
}

bool covered_by_union(const ConvexPolygon& target, std::span<const ConvexPolygon> pieces) {
  // Keep only pieces that meet the target; the rest cannot cover anything.
  std::vector<std::vector<Halfspace>> relevant;
  for (const auto& p : pieces) {
    if (target.intersect(p)) relevant.push_back(p.halfspaces());
  }
  Matrix ac = halfspace_matrix(target.halfspaces());
  std::vector<Rat> bc = halfspace_rhs(target.halfspaces());

  // A point of target escapes the union iff for every piece some halfspace is
  // strictly violated. DFS over the choice of violated halfspace per piece.
  Matrix as;
  std::vector<Rat> bs;
  auto dfs = [&](auto&& self, std::size_t idx) -> bool {  // true = escape exists
    if (!strict_feasible(ac, bc, as, bs)) return false;
    if (idx == relevant.size()) return true;
    for (const auto& h : relevant[idx]) {
      // violate h: ax*x + ay*y > b  <=>  -ax*x - ay*y < -b
      as.push_back({-h.ax, -h.ay});
      bs.push_back(-h.b);
      bool escaped = self(self, idx + 1);
      as.pop_back();
      bs.pop_back();
      if (escaped) return true;
    }
    return false;
  };
  return !dfs(dfs, 0);
}

std::vector<ConvexPolygon> canonicalize_union(std::vector<ConvexPolygon> pieces) {
  std::sort(pieces.begin(), pieces.end());
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());

  // Absorb contained pieces and merge pairs with a convex union until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pieces.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < pieces.size() && !changed; ++j) {
        if (pieces[i].subset_of(pieces[j])) {
          pieces.erase(pieces.begin() + i);
          changed = true;
          break;
        }
        if (pieces[j].subset_of(pieces[i])) {
          pieces.erase(pieces.begin() + j);
          changed = true;
          break;
        }
        std::vector<Pt2> all = pieces[i].vertices();
        for (const auto& v : pieces[j].vertices()) all.push_back(v);
        ConvexPolygon hull = ConvexPolygon::from_points(std::move(all));
        std::vector<ConvexPolygon> pair = {pieces[i], pieces[j]};
        if (covered_by_union(hull, pair)) {
          pieces.erase(pieces.begin() + j);
          pieces[i] = hull;
          changed = true;
        }
      }
    }
  }

  if (pieces.size() > 1) {
    std::vector<Pt2> all;
    for (const auto& p : pieces)
      for (const auto& v : p.vertices()) all.push_back(v);
    ConvexPolygon hull = ConvexPolygon::from_points(std::move(all));
    if (covered_by_union(hull, pieces)) pieces = {hull};
  }

  std::sort(pieces.begin(), pieces.end());
  return pieces;
}

}  // namespace mcmf
