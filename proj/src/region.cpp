#include "mcmf/region.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mcmf {
namespace {

Pt2 to_pt2(const Vec& v) {
  if (v.dim() != 2) throw InputError("polygonal regions are two-dimensional");
  return {v[0], v[1]};
}

void check_dim(const Region& r, const Vec& x) {
  if (r.dim() != x.dim()) throw InputError("dimension mismatch");
}

void check_dims(const Region& a, const Region& b) {
  if (a.dim() != b.dim()) throw InputError("dimension mismatch");
}

}  // namespace

Region Region::point_set(std::size_t k, std::vector<Vec> pts) {
  for (const auto& p : pts)
    if (p.dim() != k) throw InputError("point dimension mismatch");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Region r;
  r.kind_ = Kind::kPointSet;
  r.k_ = k;
  r.points_ = std::move(pts);
  return r;
}

Region Region::polygonal(std::vector<ConvexPolygon> pieces) {
  Region r;
  r.kind_ = Kind::kPolygonal;
  r.k_ = 2;
  r.pieces_ = canonicalize_union(std::move(pieces));
  return r;
}

Region Region::orthant(std::size_t k, int sign) {
  Region r;
  r.kind_ = Kind::kOrthant;
  r.k_ = k;
  r.sign_ = sign >= 0 ? 1 : -1;
  return r;
}

Region Region::zero(std::size_t k, Kind kind) {
  if (kind == Kind::kPolygonal)
    return polygonal({ConvexPolygon::from_points({Pt2{Rat(0), Rat(0)}})});
  return point_set(k, {Vec(k)});
}

bool Region::empty() const {
  switch (kind_) {
    case Kind::kPointSet:
      return points_.empty();
    case Kind::kPolygonal:
      return pieces_.empty();
    case Kind::kOrthant:
      return false;
  }
  return true;
}

bool Region::contains(const Vec& x) const {
  check_dim(*this, x);
  switch (kind_) {
    case Kind::kPointSet:
      return std::binary_search(points_.begin(), points_.end(), x);
    case Kind::kPolygonal: {
      Pt2 p = to_pt2(x);
      for (const auto& piece : pieces_)
        if (piece.contains(p)) return true;
      return false;
    }
    case Kind::kOrthant:
      for (const auto& v : x.e)
        if (sign_ > 0 ? v < 0 : v > 0) return false;
      return true;
  }
  return false;
}

std::string Region::str() const {
  switch (kind_) {
    case Kind::kPointSet: {
      std::string s = "{";
      for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i) s += " ";
        s += vec_str(points_[i]);
      }
      return s + "}";
    }
    case Kind::kPolygonal: {
      std::string s;
      for (const auto& p : pieces_) {
        if (!s.empty()) s += " | ";
        s += "[" + p.str() + "]";
      }
      return s.empty() ? "[]" : s;
    }
    case Kind::kOrthant:
      return sign_ > 0 ? "orthant+" : "orthant-";
  }
  return "";
}

bool Region::operator==(const Region& o) const { return region_equal(*this, o); }

Region negate(const Region& r) {
  switch (r.kind()) {
    case Region::Kind::kPointSet: {
      std::vector<Vec> pts;
      pts.reserve(r.points().size());
      for (const auto& p : r.points()) pts.push_back(-p);
      return Region::point_set(r.dim(), std::move(pts));
    }
    case Region::Kind::kPolygonal: {
      std::vector<ConvexPolygon> pieces;
      pieces.reserve(r.pieces().size());
      for (const auto& p : r.pieces()) pieces.push_back(p.negate());
      return Region::polygonal(std::move(pieces));
    }
    case Region::Kind::kOrthant:
      return Region::orthant(r.dim(), -r.orthant_sign());
  }
  return r;
}

Region translate(const Region& r, const Vec& t) {
  check_dim(r, t);
  switch (r.kind()) {
    case Region::Kind::kPointSet: {
      std::vector<Vec> pts;
      pts.reserve(r.points().size());
      for (const auto& p : r.points()) pts.push_back(p + t);
      return Region::point_set(r.dim(), std::move(pts));
    }
    case Region::Kind::kPolygonal: {
      std::vector<ConvexPolygon> pieces;
      pieces.reserve(r.pieces().size());
      for (const auto& p : r.pieces()) pieces.push_back(p.translate(to_pt2(t)));
      return Region::polygonal(std::move(pieces));
    }
    case Region::Kind::kOrthant:
      throw InputError("cannot translate an orthant region");
  }
  return r;
}

Region minkowski_sum(const Region& a, const Region& b) {
  check_dims(a, b);
  if (a.is_orthant() || b.is_orthant())
    throw InputError("minkowski sum of an orthant region");
  if (a.kind() != b.kind()) throw InputError("minkowski sum of mixed region variants");
  if (a.is_point_set()) {
    std::vector<Vec> pts;
    pts.reserve(a.points().size() * b.points().size());
    for (const auto& p : a.points())
      for (const auto& q : b.points()) pts.push_back(p + q);
    return Region::point_set(a.dim(), std::move(pts));
  }
  std::vector<ConvexPolygon> pieces;
  for (const auto& p : a.pieces())
    for (const auto& q : b.pieces()) pieces.push_back(p.minkowski(q));
  return Region::polygonal(std::move(pieces));
}

Region intersect(const Region& a, const Region& b) {
  check_dims(a, b);
  // Orthant against anything: filter or clip.
  if (a.is_orthant() && b.is_orthant()) {
    if (a.orthant_sign() == b.orthant_sign()) return a;
    return Region::point_set(a.dim(), {Vec(a.dim())});
  }
  if (a.is_orthant() || b.is_orthant()) {
    const Region& orth = a.is_orthant() ? a : b;
    const Region& other = a.is_orthant() ? b : a;
    if (other.is_point_set()) {
      std::vector<Vec> pts;
      for (const auto& p : other.points())
        if (orth.contains(p)) pts.push_back(p);
      return Region::point_set(other.dim(), std::move(pts));
    }
    Rat s(orth.orthant_sign());
    std::vector<ConvexPolygon> pieces;
    for (const auto& piece : other.pieces()) {
      auto hs = piece.halfspaces();
      hs.push_back({-s, Rat(0), Rat(0)});
      hs.push_back({Rat(0), -s, Rat(0)});
      if (auto clipped = ConvexPolygon::from_halfspaces(hs)) pieces.push_back(*clipped);
    }
    return Region::polygonal(std::move(pieces));
  }
  if (a.is_point_set() && b.is_point_set()) {
    std::vector<Vec> pts;
    std::set_intersection(a.points().begin(), a.points().end(), b.points().begin(),
                          b.points().end(), std::back_inserter(pts));
    return Region::point_set(a.dim(), std::move(pts));
  }
  if (a.is_point_set() != b.is_point_set()) {
    const Region& ps = a.is_point_set() ? a : b;
    const Region& poly = a.is_point_set() ? b : a;
    std::vector<Vec> pts;
    for (const auto& p : ps.points())
      if (poly.contains(p)) pts.push_back(p);
    return Region::point_set(ps.dim(), std::move(pts));
  }
  std::vector<ConvexPolygon> pieces;
  for (const auto& p : a.pieces())
    for (const auto& q : b.pieces())
      if (auto piece = p.intersect(q)) pieces.push_back(*piece);
  return Region::polygonal(std::move(pieces));
}

std::vector<Vec> integer_points(const Region& r) {
  if (r.is_orthant()) throw InputError("unbounded region");
  std::vector<Vec> out;
  if (r.is_point_set()) {
    for (const auto& p : r.points())
      if (p.integral()) out.push_back(p);
    return out;
  }
  if (r.pieces().empty()) return out;
  Rat xmin, xmax, ymin, ymax;
  bool first = true;
  for (const auto& piece : r.pieces()) {
    for (const auto& v : piece.vertices()) {
      if (first || v.x < xmin) xmin = v.x;
      if (first || v.x > xmax) xmax = v.x;
      if (first || v.y < ymin) ymin = v.y;
      if (first || v.y > ymax) ymax = v.y;
      first = false;
    }
  }
  for (BigInt x = ceil_rat(xmin); x <= floor_rat(xmax); ++x) {
    for (BigInt y = ceil_rat(ymin); y <= floor_rat(ymax); ++y) {
      Vec v{Rat(x), Rat(y)};
      if (r.contains(v)) out.push_back(v);
    }
  }
  return out;
}

bool is_reducible(const Region& r) {
  if (r.is_orthant()) return true;  // nonneg orthant is downward closed; x<=0 trivially so
  // Certification runs on the integer sublattice: for each nonnegative member
  // (or integer member of a polygonal region), every dominated nonnegative
  // integer vector must also belong.
  std::vector<Vec> members;
  if (r.is_point_set()) {
    members = r.points();
  } else {
    members = integer_points(r);
  }
  for (const auto& p : members) {
    if (!p.nonnegative()) continue;
    std::vector<BigInt> hi;
    for (const auto& c : p.e) hi.push_back(floor_rat(c));
    std::vector<BigInt> q(p.dim(), BigInt(0));
    for (;;) {
      Vec v(p.dim());
      for (std::size_t i = 0; i < p.dim(); ++i) v[i] = Rat(q[i]);
      if (!r.contains(v)) return false;
      std::size_t i = 0;
      while (i < q.size()) {
        if (q[i] < hi[i]) {
          ++q[i];
          break;
        }
        q[i] = 0;
        ++i;
      }
      if (i == q.size()) break;
    }
  }
  return true;
}

bool region_equal(const Region& a, const Region& b) {
  if (a.kind() != b.kind() || a.dim() != b.dim()) return false;
  switch (a.kind()) {
    case Region::Kind::kPointSet:
      return a.points() == b.points();
    case Region::Kind::kOrthant:
      return a.orthant_sign() == b.orthant_sign();
    case Region::Kind::kPolygonal:
      break;
  }
  if (a.pieces() == b.pieces()) return true;
  // Canonical decompositions can differ for genuinely non-convex unions;
  // fall back to exact mutual coverage.
  for (const auto& p : a.pieces())
    if (!covered_by_union(p, b.pieces())) return false;
  for (const auto& p : b.pieces())
    if (!covered_by_union(p, a.pieces())) return false;
  return true;
}

Region discretize(const Region& r) {
  return Region::point_set(r.dim(), integer_points(r));
}

}  // namespace mcmf
