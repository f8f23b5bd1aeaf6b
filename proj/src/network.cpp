#include "mcmf/network.hpp"

#include <algorithm>
#include <set>

namespace mcmf {

Arc reverse_arc(const Arc& a) {
  Arc r = a;
  std::swap(r.tail, r.head);
  r.capacity = negate(a.capacity);
  return r;
}

EnhancedNetwork EnhancedNetwork::build(std::size_t k, const std::vector<std::string>& nodes,
                                       const std::vector<ArcDesc>& arcs,
                                       const std::string& source, const std::string& sink) {
  if (k == 0) throw InputError("commodity count must be at least 1");
  EnhancedNetwork net;
  net.k_ = k;
  for (const auto& id : nodes) {
    if (!net.node_index_.emplace(id, static_cast<int>(net.node_ids_.size())).second)
      throw InputError("duplicate node id '" + id + "'");
    net.node_ids_.push_back(id);
  }
  auto lookup = [&](const std::string& id, const std::string& what) {
    auto it = net.node_index_.find(id);
    if (it == net.node_index_.end())
      throw InputError("unknown " + what + " node '" + id + "'");
    return it->second;
  };
  net.source_ = lookup(source, "source");
  net.sink_ = lookup(sink, "sink");
  if (net.source_ == net.sink_) throw InputError("source and sink must differ");

  std::set<std::string> ids;
  for (const auto& d : arcs) {
    if (d.id == kReturnArcId) throw InputError("arc id 'e' is reserved for the return arc");
    if (!ids.insert(d.id).second) throw InputError("duplicate arc id '" + d.id + "'");
    Arc a;
    a.id = d.id;
    a.tail = lookup(d.tail, "arc tail");
    a.head = lookup(d.head, "arc head");
    if (a.tail == a.head) throw InputError("self-loop on arc '" + d.id + "'");
    if (!d.capacity.is_orthant() && d.capacity.dim() != k)
      throw InputError("capacity dimension mismatch on arc '" + d.id + "'");
    a.capacity = d.capacity;
    net.arcs_.push_back(std::move(a));
  }
  Arc e;
  e.id = kReturnArcId;
  e.tail = net.sink_;
  e.head = net.source_;
  e.capacity = Region::orthant(k);
  e.is_return = true;
  net.arcs_.push_back(std::move(e));
  return net;
}

int EnhancedNetwork::node_index(const std::string& id) const {
  auto it = node_index_.find(id);
  if (it == node_index_.end()) throw InputError("unknown node '" + id + "'");
  return it->second;
}

std::optional<std::size_t> EnhancedNetwork::arc_index(const std::string& id) const {
  for (std::size_t i = 0; i < arcs_.size(); ++i)
    if (arcs_[i].id == id) return i;
  return std::nullopt;
}

bool EnhancedNetwork::all_point_sets() const {
  for (std::size_t i = 0; i < base_arc_count(); ++i)
    if (!arcs_[i].capacity.is_point_set()) return false;
  return true;
}

bool EnhancedNetwork::any_polygonal() const {
  for (std::size_t i = 0; i < base_arc_count(); ++i)
    if (arcs_[i].capacity.is_polygonal()) return true;
  return false;
}

Vec node_imbalance(const EnhancedNetwork& net, const ArcAssignment& f, int node) {
  Vec sum(net.commodity_count());
  for (const auto& a : net.arcs()) {
    if (a.tail != node && a.head != node) continue;
    const Vec& v = f.at(a.id);
    if (a.tail == node) sum = sum + v;
    if (a.head == node) sum = sum - v;
  }
  return sum;
}

FlowVerdict check_flow(const EnhancedNetwork& net, const ArcAssignment& f) {
  for (const auto& a : net.arcs()) {
    auto it = f.find(a.id);
    if (it == f.end()) throw InputError("assignment missing arc '" + a.id + "'");
    if (it->second.dim() != net.commodity_count())
      throw InputError("assignment dimension mismatch on arc '" + a.id + "'");
  }
  if (f.size() != net.arcs().size()) throw InputError("assignment names an unknown arc");

  bool conserved = true;
  for (std::size_t v = 0; v < net.node_count() && conserved; ++v)
    conserved = node_imbalance(net, f, static_cast<int>(v)).is_zero();
  if (!conserved) return FlowVerdict::kInvalid;

  for (const auto& a : net.arcs())
    if (!a.capacity.contains(f.at(a.id))) return FlowVerdict::kPseudoflowOnly;
  return FlowVerdict::kValidFlow;
}

Vec flow_value(const EnhancedNetwork& net, const ArcAssignment& f) {
  (void)net;
  return f.at(kReturnArcId);
}

namespace {

Region box_region(const Rat& xlo, const Rat& xhi, const Rat& ylo, const Rat& yhi) {
  return Region::polygonal({*ConvexPolygon::from_halfspaces({{Rat(1), Rat(0), xhi},
                                                             {Rat(-1), Rat(0), -xlo},
                                                             {Rat(0), Rat(1), yhi},
                                                             {Rat(0), Rat(-1), -ylo}})});
}

std::string fresh_id(std::set<std::string>& used, std::string base) {
  while (used.count(base)) base += "_";
  used.insert(base);
  return base;
}

}  // namespace

EnhancedNetwork embed_requirements(std::size_t k, const std::vector<std::string>& nodes,
                                   const std::vector<ArcDesc>& arcs,
                                   const std::pair<std::string, std::string>& sources,
                                   const std::pair<std::string, std::string>& sinks,
                                   const Vec& requirements, const Rat& box_bound) {
  if (k != 2) throw InputError("requirement embedding is defined for 2 commodities");
  if (requirements.dim() != k) throw InputError("requirement dimension mismatch");
  std::set<std::string> node_set(nodes.begin(), nodes.end());
  for (const std::string& id : {sources.first, sources.second, sinks.first, sinks.second})
    if (!node_set.count(id)) throw InputError("unknown node '" + id + "'");
  for (const auto& r : requirements.e)
    if (r < 0 || r > box_bound) throw InputError("requirements must lie in [0, B]");

  std::vector<std::string> all_nodes = nodes;
  std::string s = fresh_id(node_set, "s");
  std::string sp = fresh_id(node_set, "s'");
  std::string t = fresh_id(node_set, "t");
  all_nodes.push_back(s);
  all_nodes.push_back(sp);
  all_nodes.push_back(t);

  std::set<std::string> arc_ids;
  for (const auto& d : arcs) arc_ids.insert(d.id);
  std::vector<ArcDesc> all_arcs = arcs;
  Rat b = box_bound;
  all_arcs.push_back({fresh_id(arc_ids, "r0"), s, sp,
                      box_region(requirements[0], b, requirements[1], b)});
  all_arcs.push_back({fresh_id(arc_ids, "r1"), sp, sources.first, box_region(0, b, 0, b)});
  all_arcs.push_back({fresh_id(arc_ids, "r2"), sp, sources.second, box_region(0, b, 0, b)});
  all_arcs.push_back({fresh_id(arc_ids, "r3"), sinks.first, t, box_region(0, b, 0, b)});
  all_arcs.push_back({fresh_id(arc_ids, "r4"), sinks.second, t, box_region(0, b, 0, b)});
  return EnhancedNetwork::build(k, all_nodes, all_arcs, s, t);
}

}  // namespace mcmf
