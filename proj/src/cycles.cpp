#include "mcmf/cycles.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "mcmf/gluing.hpp"
#include "mcmf/simplex.hpp"

namespace mcmf {
namespace {

struct TreeView {
  std::vector<int> parent;             // node index, -1 at root
  std::vector<std::size_t> parent_arc; // arc connecting node to parent
  std::vector<int> depth;
};

// Undirected adjacency over base arcs, neighbors in arc-id order.
std::vector<std::vector<std::size_t>> adjacency(const EnhancedNetwork& net) {
  std::vector<std::size_t> arc_order(net.base_arc_count());
  for (std::size_t a = 0; a < arc_order.size(); ++a) arc_order[a] = a;
  std::sort(arc_order.begin(), arc_order.end(),
            [&](std::size_t a, std::size_t b) { return net.arc(a).id < net.arc(b).id; });
  std::vector<std::vector<std::size_t>> adj(net.node_count());
  for (std::size_t a : arc_order) {
    adj[net.arc(a).tail].push_back(a);
    adj[net.arc(a).head].push_back(a);
  }
  return adj;
}

TreeView tree_from_arcs(const EnhancedNetwork& net, const std::vector<std::size_t>& tree_arcs,
                        bool require_spanning) {
  std::vector<std::vector<std::size_t>> adj(net.node_count());
  for (std::size_t a : tree_arcs) {
    adj[net.arc(a).tail].push_back(a);
    adj[net.arc(a).head].push_back(a);
  }
  TreeView t;
  t.parent.assign(net.node_count(), -2);  // -2 unvisited
  t.parent_arc.assign(net.node_count(), 0);
  t.depth.assign(net.node_count(), 0);
  std::deque<int> queue{net.source()};
  t.parent[net.source()] = -1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (std::size_t a : adj[v]) {
      int w = net.arc(a).tail == v ? net.arc(a).head : net.arc(a).tail;
      if (t.parent[w] != -2) continue;
      t.parent[w] = v;
      t.parent_arc[w] = a;
      t.depth[w] = t.depth[v] + 1;
      queue.push_back(w);
    }
  }
  if (require_spanning)
    for (std::size_t v = 0; v < net.node_count(); ++v)
      if (t.parent[v] == -2) throw InputError("underlying graph is disconnected");
  return t;
}

// Signed tree path from -> to, as traversed.
std::vector<SignedArc> tree_path(const EnhancedNetwork& net, const TreeView& t, int from,
                                 int to) {
  std::vector<SignedArc> up_from, up_to;
  int a = from, b = to;
  while (a != b) {
    if (t.depth[a] >= t.depth[b]) {
      std::size_t arc = t.parent_arc[a];
      up_from.push_back({arc, net.arc(arc).tail == a ? 1 : -1});
      a = t.parent[a];
    } else {
      std::size_t arc = t.parent_arc[b];
      up_to.push_back({arc, net.arc(arc).tail == b ? -1 : 1});
      b = t.parent[b];
    }
  }
  std::reverse(up_to.begin(), up_to.end());
  up_from.insert(up_from.end(), up_to.begin(), up_to.end());
  return up_from;
}

CycleSystem system_from_tree(const EnhancedNetwork& net, std::vector<std::size_t> tree_arcs) {
  TreeView t = tree_from_arcs(net, tree_arcs, true);
  CycleSystem sys;
  std::sort(tree_arcs.begin(), tree_arcs.end());
  sys.tree = tree_arcs;

  std::vector<std::size_t> chords;
  for (std::size_t a = 0; a < net.base_arc_count(); ++a)
    if (!std::binary_search(tree_arcs.begin(), tree_arcs.end(), a)) chords.push_back(a);
  std::sort(chords.begin(), chords.end(),
            [&](std::size_t a, std::size_t b) { return net.arc(a).id < net.arc(b).id; });

  for (std::size_t chord : chords) {
    Cycle c;
    c.chord = chord;
    c.members.push_back({chord, 1});
    for (auto& s : tree_path(net, t, net.arc(chord).head, net.arc(chord).tail))
      c.members.push_back(s);
    sys.basis.push_back(std::move(c));
  }
  sys.return_cycle.chord = net.return_arc();
  sys.return_cycle.members = {{net.return_arc(), 1}};
  for (auto& s : tree_path(net, t, net.source(), net.sink()))
    sys.return_cycle.members.push_back(s);
  return sys;
}

}  // namespace

int CycleSystem::sign(std::size_t arc, std::size_t cycle) const {
  for (const auto& m : basis[cycle].members)
    if (m.arc == arc) return m.sign;
  return 0;
}

CycleSystem cycle_basis(const EnhancedNetwork& net) {
  std::vector<std::vector<std::size_t>> adj = adjacency(net);
  TreeView probe;
  probe.parent.assign(net.node_count(), -2);
  std::vector<std::size_t> tree_arcs;
  std::deque<int> queue{net.source()};
  probe.parent[net.source()] = -1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (std::size_t a : adj[v]) {
      int w = net.arc(a).tail == v ? net.arc(a).head : net.arc(a).tail;
      if (probe.parent[w] != -2) continue;
      probe.parent[w] = v;
      tree_arcs.push_back(a);
      queue.push_back(w);
    }
  }
  for (std::size_t v = 0; v < net.node_count(); ++v)
    if (probe.parent[v] == -2) throw InputError("underlying graph is disconnected");
  return system_from_tree(net, std::move(tree_arcs));
}

CycleSystem cycle_basis(const EnhancedNetwork& net, const std::vector<std::string>& tree_ids) {
  if (tree_ids.size() + 1 != net.node_count())
    throw InputError("a spanning tree needs exactly n-1 arcs");
  std::vector<std::size_t> tree_arcs;
  std::set<std::size_t> seen;
  for (const auto& id : tree_ids) {
    auto idx = net.arc_index(id);
    if (!idx || *idx == net.return_arc()) throw InputError("unknown tree arc '" + id + "'");
    if (!seen.insert(*idx).second) throw InputError("duplicate tree arc '" + id + "'");
    tree_arcs.push_back(*idx);
  }
  return system_from_tree(net, std::move(tree_arcs));  // connectivity checked inside
}

ArcAssignment build_pseudoflow(const EnhancedNetwork& net, const Vec& f) {
  if (f.dim() != net.commodity_count()) throw InputError("flow value dimension mismatch");
  std::vector<std::vector<std::size_t>> adj = adjacency(net);
  TreeView t;
  t.parent.assign(net.node_count(), -2);
  t.parent_arc.assign(net.node_count(), 0);
  t.depth.assign(net.node_count(), 0);
  std::deque<int> queue{net.source()};
  t.parent[net.source()] = -1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (std::size_t a : adj[v]) {
      int w = net.arc(a).tail == v ? net.arc(a).head : net.arc(a).tail;
      if (t.parent[w] != -2) continue;
      t.parent[w] = v;
      t.parent_arc[w] = a;
      t.depth[w] = t.depth[v] + 1;
      queue.push_back(w);
    }
  }
  if (t.parent[net.sink()] == -2) throw InputError("no s-t path");

  ArcAssignment out;
  for (const auto& a : net.arcs()) out[a.id] = Vec(net.commodity_count());
  for (const auto& s : tree_path(net, t, net.source(), net.sink()))
    out[net.arc(s.arc).id] = s.sign > 0 ? f : -f;
  out[kReturnArcId] = f;
  return out;
}

CycleConstraintSet cycle_constraints(const EnhancedNetwork& net, const CycleSystem& sys,
                                     const ArcAssignment& pseudoflow) {
  CycleConstraintSet set;
  for (std::size_t a = 0; a < net.base_arc_count(); ++a) {
    CycleConstraint cc;
    cc.arc = a;
    cc.coeffs.resize(sys.basis.size());
    for (std::size_t i = 0; i < sys.basis.size(); ++i) cc.coeffs[i] = sys.sign(a, i);
    cc.shifted = translate(net.arc(a).capacity, -pseudoflow.at(net.arc(a).id));
    set.per_arc.push_back(std::move(cc));
  }

  std::map<std::vector<int>, ConstraintGroup> groups;
  for (const auto& cc : set.per_arc) {
    std::vector<int> dir = cc.coeffs;
    int orient = 1;
    for (int c : cc.coeffs) {
      if (c == 0) continue;
      orient = c > 0 ? 1 : -1;
      break;
    }
    if (orient < 0)
      for (auto& c : dir) c = -c;
    Region contribution = orient > 0 ? cc.shifted : negate(cc.shifted);
    auto it = groups.find(dir);
    if (it == groups.end()) {
      ConstraintGroup g;
      g.coeffs = dir;
      g.arcs = {{cc.arc, orient}};
      g.region = contribution;
      groups.emplace(std::move(dir), std::move(g));
    } else {
      it->second.arcs.emplace_back(cc.arc, orient);
      it->second.region = intersect(it->second.region, contribution);
    }
  }
  for (auto& kv : groups) set.groups.push_back(std::move(kv.second));
  return set;
}

namespace {

struct LpRows {
  Matrix a;
  std::vector<Rat> b;
};

// Halfspace constraints of one convex piece expressed over the flattened
// cycle coefficients x[(i,d)] via y_a = sum_i coeffs[i] * x_i.
void append_piece_rows(LpRows& rows, const std::vector<int>& coeffs, std::size_t nvars,
                       const ConvexPolygon& piece) {
  for (const auto& h : piece.halfspaces()) {
    std::vector<Rat> row(nvars);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      row[2 * i] += h.ax * coeffs[i];
      row[2 * i + 1] += h.ay * coeffs[i];
    }
    rows.a.push_back(std::move(row));
    rows.b.push_back(h.b);
  }
}

std::vector<ConvexPolygon> shifted_pieces(const Region& shifted) {
  if (shifted.is_polygonal()) return shifted.pieces();
  std::vector<ConvexPolygon> pieces;
  for (const auto& p : shifted.points())
    pieces.push_back(ConvexPolygon::from_points({Pt2{p[0], p[1]}}));
  return pieces;
}

DecideResult decide_point_sets(const EnhancedNetwork& net, const Vec& f,
                               const DecideOptions& opts) {
  BigInt product = 1;
  for (std::size_t a = 0; a < net.base_arc_count(); ++a)
    product *= BigInt(std::max<std::size_t>(net.arc(a).capacity.points().size(), 1));
  if (product > opts.budget) throw BudgetError("decide budget exceeded");
  LocalFlowFamily fam = feasible_flows(net);
  DecideResult res;
  for (const auto& flow : fam.flows) {
    if (flow.value == f) {
      res.feasible = true;
      res.witness = flow.to_arc_assignment(net);
      break;
    }
  }
  return res;
}

}  // namespace

DecideResult decide(const EnhancedNetwork& net, const Vec& f, const DecideOptions& opts) {
  if (f.dim() != net.commodity_count()) throw InputError("flow value dimension mismatch");
  DecideResult res;
  if (!f.nonnegative()) return res;  // e's capacity rules the value out

  if (net.all_point_sets()) return decide_point_sets(net, f, opts);
  if (net.commodity_count() != 2)
    throw InputError("polygonal decide supports two commodities");
  for (std::size_t a = 0; a < net.base_arc_count(); ++a)
    if (net.arc(a).capacity.is_orthant()) throw InputError("unbounded capacity");

  CycleSystem sys = opts.tree ? cycle_basis(net, *opts.tree) : cycle_basis(net);
  ArcAssignment pseudo = build_pseudoflow(net, f);
  CycleConstraintSet constraints = cycle_constraints(net, sys, pseudo);
  std::size_t nvars = 2 * sys.basis.size();

  LpRows base;
  std::vector<const CycleConstraint*> branching;
  for (const auto& cc : constraints.per_arc) {
    std::vector<ConvexPolygon> pieces = shifted_pieces(cc.shifted);
    bool zero_row = std::all_of(cc.coeffs.begin(), cc.coeffs.end(),
                                [](int c) { return c == 0; });
    if (zero_row) {
      // No variable reaches this arc; the pseudoflow value must already fit.
      Pt2 origin{Rat(0), Rat(0)};
      bool ok = false;
      for (const auto& p : pieces) ok = ok || p.contains(origin);
      if (!ok) return res;
      continue;
    }
    if (pieces.empty()) return res;
    if (pieces.size() == 1) {
      append_piece_rows(base, cc.coeffs, nvars, pieces[0]);
    } else {
      branching.push_back(&cc);
    }
  }

  BigInt budget = opts.budget;
  std::vector<Rat> solution;
  auto dfs = [&](auto&& self, std::size_t idx, LpRows& rows) -> bool {
    if (budget <= 0) throw BudgetError("decide branch budget exceeded");
    budget -= 1;
    res.branches += 1;
    auto point = feasible_point(rows.a, rows.b);
    if (!point) return false;
    if (idx == branching.size()) {
      solution = std::move(*point);
      solution.resize(nvars);
      return true;
    }
    const CycleConstraint& cc = *branching[idx];
    for (const auto& piece : shifted_pieces(cc.shifted)) {
      std::size_t mark_a = rows.a.size();
      append_piece_rows(rows, cc.coeffs, nvars, piece);
      bool found = self(self, idx + 1, rows);
      rows.a.resize(mark_a);
      rows.b.resize(mark_a);
      if (found) return true;
    }
    return false;
  };

  if (!dfs(dfs, 0, base)) return res;

  res.feasible = true;
  res.witness = pseudo;
  for (std::size_t a = 0; a < net.base_arc_count(); ++a) {
    Vec v = res.witness.at(net.arc(a).id);
    for (std::size_t i = 0; i < sys.basis.size(); ++i) {
      int s = sys.sign(a, i);
      if (s == 0) continue;
      Vec xi{solution[2 * i], solution[2 * i + 1]};
      v = s > 0 ? v + xi : v - xi;
    }
    res.witness[net.arc(a).id] = v;
  }
  return res;
}

}  // namespace mcmf
