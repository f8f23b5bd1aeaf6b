#include "mcmf/cuts.hpp"

#include <algorithm>
#include <numeric>

namespace mcmf {

std::size_t Cut::s_side_size() const {
  return static_cast<std::size_t>(std::count(in_s.begin(), in_s.end(), 1));
}

std::vector<Cut> enumerate_cuts(const EnhancedNetwork& net) {
  std::vector<int> nonterminals;
  for (std::size_t v = 0; v < net.node_count(); ++v)
    if (static_cast<int>(v) != net.source() && static_cast<int>(v) != net.sink())
      nonterminals.push_back(static_cast<int>(v));
  std::sort(nonterminals.begin(), nonterminals.end(),
            [&](int a, int b) { return net.node_id(a) < net.node_id(b); });
  if (nonterminals.size() > 20) throw InputError("too many nodes for cut enumeration");

  std::vector<Cut> cuts;
  std::uint64_t total = std::uint64_t(1) << nonterminals.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Cut c;
    c.mask = mask;
    c.in_s.assign(net.node_count(), 0);
    c.in_s[net.source()] = 1;
    for (std::size_t i = 0; i < nonterminals.size(); ++i)
      if (mask >> i & 1) c.in_s[nonterminals[i]] = 1;
    for (std::size_t a = 0; a < net.base_arc_count(); ++a) {
      const Arc& arc = net.arc(a);
      if (c.in_s[arc.tail] && !c.in_s[arc.head]) c.forward.push_back(a);
      if (!c.in_s[arc.tail] && c.in_s[arc.head]) c.backward.push_back(a);
    }
    cuts.push_back(std::move(c));
  }
  return cuts;
}

std::vector<std::size_t> canonical_cut_order(const std::vector<Cut>& cuts) {
  std::vector<std::size_t> order(cuts.size());
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    std::size_t sa = cuts[a].s_side_size(), sb = cuts[b].s_side_size();
    if (sa != sb) return sa < sb;
    return cuts[a].mask < cuts[b].mask;
  });
  return order;
}

namespace {

Region::Kind dominant_kind(const EnhancedNetwork& net) {
  return net.any_polygonal() ? Region::Kind::kPolygonal : Region::Kind::kPointSet;
}

// Minkowski sum of the oriented capacities of a set of arcs; {0} for the
// empty set (in the network's dominant variant so sums stay well-typed).
Region arc_set_value(const EnhancedNetwork& net, const std::vector<std::size_t>& forward,
                     const std::vector<std::size_t>& backward) {
  Region acc = Region::zero(net.commodity_count(), dominant_kind(net));
  for (std::size_t a : forward) acc = minkowski_sum(acc, net.arc(a).capacity);
  for (std::size_t a : backward) acc = minkowski_sum(acc, negate(net.arc(a).capacity));
  return acc;
}

}  // namespace

Region cut_capacity(const EnhancedNetwork& net, const Cut& c) {
  return arc_set_value(net, c.forward, c.backward);
}

Region total_capacity(const EnhancedNetwork& net) {
  std::vector<Cut> cuts = enumerate_cuts(net);
  Region acc = cut_capacity(net, cuts.front());
  for (std::size_t i = 1; i < cuts.size(); ++i)
    acc = intersect(acc, cut_capacity(net, cuts[i]));
  return acc;
}

Region pairwise_capacity(const EnhancedNetwork& net, const Cut& c1, const Cut& c2) {
  // Shared means same arc in the same orientation; an arc forward in one cut
  // and backward in the other counts as unique to each.
  auto split = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                  std::vector<std::size_t>& shared, std::vector<std::size_t>& only_a,
                  std::vector<std::size_t>& only_b) {
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(only_a));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(only_b));
  };
  std::vector<std::size_t> shared_f, u1_f, u2_f, shared_b, u1_b, u2_b;
  split(c1.forward, c2.forward, shared_f, u1_f, u2_f);
  split(c1.backward, c2.backward, shared_b, u1_b, u2_b);

  Region unique1 = arc_set_value(net, u1_f, u1_b);
  Region unique2 = arc_set_value(net, u2_f, u2_b);
  Region common = intersect(unique1, unique2);
  if (shared_f.empty() && shared_b.empty()) return common;
  return minkowski_sum(arc_set_value(net, shared_f, shared_b), common);
}

Region pairwise_bound(const EnhancedNetwork& net) {
  std::vector<Cut> cuts = enumerate_cuts(net);
  Region acc = cut_capacity(net, cuts.front());  // the (0,0) pair
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    for (std::size_t j = i; j < cuts.size(); ++j) {
      if (i == 0 && j == 0) continue;
      Region up = (i == j) ? cut_capacity(net, cuts[i])
                           : pairwise_capacity(net, cuts[i], cuts[j]);
      acc = intersect(acc, up);
    }
  }
  return acc;
}

Region disjoint_capacity(const EnhancedNetwork& net) {
  std::size_t m = net.base_arc_count();
  std::vector<std::vector<std::size_t>> out_arcs(net.node_count());
  std::vector<int> out_deg(net.node_count(), 0), in_deg(net.node_count(), 0);
  for (std::size_t a = 0; a < m; ++a) {
    out_arcs[net.arc(a).tail].push_back(a);
    ++out_deg[net.arc(a).tail];
    ++in_deg[net.arc(a).head];
  }
  if (in_deg[net.source()] != 0 || out_deg[net.sink()] != 0)
    throw InputError("network is not fully disjoint");
  for (std::size_t v = 0; v < net.node_count(); ++v) {
    if (static_cast<int>(v) == net.source() || static_cast<int>(v) == net.sink()) continue;
    if (in_deg[v] == 0 && out_deg[v] == 0) continue;  // isolated, carries nothing
    if (in_deg[v] != 1 || out_deg[v] != 1)
      throw InputError("network is not fully disjoint");
  }

  std::vector<char> used(m, 0);
  Region acc = Region::zero(net.commodity_count(),
                            net.any_polygonal() ? Region::Kind::kPolygonal
                                                : Region::Kind::kPointSet);
  for (std::size_t start : out_arcs[net.source()]) {
    Region path_cap = net.arc(start).capacity;
    used[start] = 1;
    int at = net.arc(start).head;
    while (at != net.sink()) {
      std::size_t a = out_arcs[at].front();
      if (used[a]) throw InputError("network is not fully disjoint");
      used[a] = 1;
      path_cap = intersect(path_cap, net.arc(a).capacity);
      at = net.arc(a).head;
    }
    acc = minkowski_sum(acc, path_cap);
  }
  if (std::count(used.begin(), used.end(), 1) != static_cast<long>(m))
    throw InputError("network is not fully disjoint");
  return acc;
}

}  // namespace mcmf
