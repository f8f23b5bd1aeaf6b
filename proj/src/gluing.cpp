#include "mcmf/gluing.hpp"

#include <algorithm>
#include <set>

namespace mcmf {
namespace {

bool flow_less(const LocalFlow& a, const LocalFlow& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.assignment < b.assignment;
}

std::vector<std::size_t> cut_arcs(const Cut& c, std::size_t e_index) {
  std::vector<std::size_t> arcs = c.forward;
  arcs.insert(arcs.end(), c.backward.begin(), c.backward.end());
  arcs.push_back(e_index);
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

}  // namespace

ArcAssignment LocalFlow::to_arc_assignment(const EnhancedNetwork& net) const {
  ArcAssignment out;
  for (const auto& [arc, v] : assignment) out[net.arc(arc).id] = v;
  return out;
}

std::vector<Vec> LocalFlowFamily::values() const {
  std::vector<Vec> vals;
  for (const auto& f : flows) vals.push_back(f.value);
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

std::map<Vec, std::vector<std::size_t>> LocalFlowFamily::by_value() const {
  std::map<Vec, std::vector<std::size_t>> m;
  for (std::size_t i = 0; i < flows.size(); ++i) m[flows[i].value].push_back(i);
  return m;
}

LocalFlowFamily local_flows_of_cut(const EnhancedNetwork& net, const Cut& c,
                                   std::size_t cut_index) {
  std::vector<std::size_t> arcs = c.forward;
  arcs.insert(arcs.end(), c.backward.begin(), c.backward.end());
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t a : arcs)
    if (!net.arc(a).capacity.is_point_set())
      throw InputError("arc '" + net.arc(a).id + "' has a non-enumerable capacity");

  std::set<std::size_t> backward(c.backward.begin(), c.backward.end());
  LocalFlowFamily fam;
  fam.cuts = {cut_index};
  for (std::size_t a : arcs)
    if (net.arc(a).capacity.points().empty()) return fam;

  std::vector<std::size_t> choice(arcs.size(), 0);
  for (;;) {
    LocalFlow f;
    f.cuts = {cut_index};
    Vec value(net.commodity_count());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      const Vec& v = net.arc(arcs[i]).capacity.points()[choice[i]];
      f.assignment[arcs[i]] = v;
      value = backward.count(arcs[i]) ? value - v : value + v;
    }
    f.value = value;
    f.assignment[net.return_arc()] = value;
    fam.flows.push_back(std::move(f));

    std::size_t i = 0;
    while (i < arcs.size()) {
      if (++choice[i] < net.arc(arcs[i]).capacity.points().size()) break;
      choice[i] = 0;
      ++i;
    }
    if (i == arcs.size()) break;
  }
  std::sort(fam.flows.begin(), fam.flows.end(), flow_less);
  return fam;
}

bool compatible(const LocalFlow& a, const LocalFlow& b) {
  auto ia = a.assignment.begin(), ib = b.assignment.begin();
  while (ia != a.assignment.end() && ib != b.assignment.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      if (ia->second != ib->second) return false;
      ++ia;
      ++ib;
    }
  }
  return true;
}

LocalFlow glue(const std::vector<LocalFlow>& flows) {
  if (flows.empty()) throw InputError("nothing to glue");
  LocalFlow g = flows.front();
  for (std::size_t i = 1; i < flows.size(); ++i) {
    for (const auto& [arc, v] : flows[i].assignment) {
      auto [it, inserted] = g.assignment.emplace(arc, v);
      if (!inserted && it->second != v) throw InputError("incompatible local flows");
    }
    g.cuts.insert(g.cuts.end(), flows[i].cuts.begin(), flows[i].cuts.end());
  }
  std::sort(g.cuts.begin(), g.cuts.end());
  g.cuts.erase(std::unique(g.cuts.begin(), g.cuts.end()), g.cuts.end());
  return g;
}

LocalFlow restrict_to_arcs(const LocalFlow& f, const std::vector<std::size_t>& cuts,
                           const std::vector<std::size_t>& arcs) {
  LocalFlow r;
  r.cuts = cuts;
  r.value = f.value;
  for (std::size_t a : arcs) r.assignment[a] = f.assignment.at(a);
  return r;
}

LocalFlowFamily mutual_capacity(const EnhancedNetwork& net, const std::vector<Cut>& cuts,
                                bool canonical_order) {
  if (cuts.empty()) throw InputError("mutual capacity needs at least one cut");
  std::vector<std::size_t> order;
  if (canonical_order) {
    order = canonical_cut_order(cuts);
  } else {
    order.resize(cuts.size());
    for (std::size_t i = 0; i < cuts.size(); ++i) order[i] = i;
  }
  std::size_t e = net.return_arc();

  LocalFlowFamily acc = local_flows_of_cut(net, cuts[order[0]], order[0]);
  GluingCounters counters;
  BigInt semantic_partials = acc.flows.size();
  std::set<std::size_t> seen_arcs(cut_arcs(cuts[order[0]], e).begin(),
                                  cut_arcs(cuts[order[0]], e).end());

  for (std::size_t step = 1; step < order.size(); ++step) {
    const Cut& cut = cuts[order[step]];
    LocalFlowFamily next = local_flows_of_cut(net, cut, order[step]);
    std::vector<std::size_t> new_arcs = cut_arcs(cut, e);
    std::vector<std::size_t> shared;
    for (std::size_t a : new_arcs)
      if (seen_arcs.count(a)) shared.push_back(a);

    counters.semantic += semantic_partials * BigInt(next.flows.size()) * BigInt(shared.size());

    // Hash-join on the shared-arc projection.
    std::map<std::vector<Vec>, std::vector<std::size_t>> buckets;
    for (std::size_t j = 0; j < next.flows.size(); ++j) {
      std::vector<Vec> key;
      key.reserve(shared.size());
      for (std::size_t a : shared) key.push_back(next.flows[j].assignment.at(a));
      buckets[std::move(key)].push_back(j);
    }
    counters.actual +=
        (BigInt(acc.flows.size()) + BigInt(next.flows.size())) * BigInt(shared.size());

    std::vector<LocalFlow> glued;
    BigInt next_partials = 0;
    for (const auto& p : acc.flows) {
      std::vector<Vec> key;
      key.reserve(shared.size());
      for (std::size_t a : shared) key.push_back(p.assignment.at(a));
      auto it = buckets.find(key);
      std::size_t matches = it == buckets.end() ? 0 : it->second.size();
      next_partials += matches > 0 ? BigInt(matches) : BigInt(1);
      if (it == buckets.end()) continue;
      for (std::size_t j : it->second) glued.push_back(glue({p, next.flows[j]}));
    }
    semantic_partials = next_partials;
    for (std::size_t a : new_arcs) seen_arcs.insert(a);
    acc.flows = std::move(glued);
    acc.cuts.push_back(order[step]);
  }

  // e's capacity admits only nonnegative values.
  std::vector<LocalFlow> kept;
  for (auto& f : acc.flows)
    if (f.value.nonnegative()) kept.push_back(std::move(f));
  acc.flows = std::move(kept);
  std::sort(acc.flows.begin(), acc.flows.end(), flow_less);
  std::sort(acc.cuts.begin(), acc.cuts.end());
  acc.counters = counters;
  return acc;
}

LocalFlowFamily feasible_flows(const EnhancedNetwork& net) {
  return mutual_capacity(net, enumerate_cuts(net));
}

LocalFlowFamily brute_force(const EnhancedNetwork& net, const BigInt& budget,
                            BruteCounters* counters) {
  std::size_t m = net.base_arc_count();
  BigInt product = 1;
  for (std::size_t a = 0; a < m; ++a) {
    if (!net.arc(a).capacity.is_point_set())
      throw InputError("arc '" + net.arc(a).id + "' has a non-enumerable capacity");
    if (net.arc(a).capacity.points().empty()) product = 0;
    product *= BigInt(net.arc(a).capacity.points().size());
  }
  if (product > budget) throw BudgetError("brute force budget exceeded");

  BruteCounters local;
  LocalFlowFamily fam;
  std::vector<Cut> cuts = enumerate_cuts(net);
  fam.cuts.resize(cuts.size());
  for (std::size_t i = 0; i < cuts.size(); ++i) fam.cuts[i] = i;

  if (product == 0) {
    if (counters) *counters = local;
    return fam;
  }
  std::vector<std::size_t> choice(m, 0);
  std::size_t k = net.commodity_count();
  for (;;) {
    local.coordinates += 1;
    local.operations += BigInt(net.node_count());

    Vec e_value(k);
    std::vector<Vec> vals(m);
    for (std::size_t a = 0; a < m; ++a) {
      vals[a] = net.arc(a).capacity.points()[choice[a]];
      if (net.arc(a).tail == net.source()) e_value = e_value + vals[a];
      if (net.arc(a).head == net.source()) e_value = e_value - vals[a];
    }
    bool ok = e_value.nonnegative();
    for (std::size_t v = 0; v < net.node_count() && ok; ++v) {
      int node = static_cast<int>(v);
      if (node == net.source()) continue;  // holds by choice of e_value
      Vec sum(k);
      for (std::size_t a = 0; a < m; ++a) {
        if (net.arc(a).tail == node) sum = sum + vals[a];
        if (net.arc(a).head == node) sum = sum - vals[a];
      }
      if (node == net.sink()) sum = sum + e_value;
      ok = sum.is_zero();
    }
    if (ok) {
      LocalFlow f;
      f.cuts = fam.cuts;
      for (std::size_t a = 0; a < m; ++a) f.assignment[a] = vals[a];
      f.assignment[net.return_arc()] = e_value;
      f.value = e_value;
      fam.flows.push_back(std::move(f));
    }

    std::size_t i = 0;
    while (i < m) {
      if (++choice[i] < net.arc(i).capacity.points().size()) break;
      choice[i] = 0;
      ++i;
    }
    if (i == m) break;
  }
  std::sort(fam.flows.begin(), fam.flows.end(), flow_less);
  if (counters) *counters = local;
  return fam;
}

}  // namespace mcmf
