#pragma once

#include <map>
#include <vector>

#include "mcmf/cuts.hpp"
#include "mcmf/network.hpp"

namespace mcmf {

// Capacity-respecting assignment over the arcs of a cut set, tagged with the
// common net value across every cut (the value on e). Values are stored in
// the arcs' original orientation.
struct LocalFlow {
  std::vector<std::size_t> cuts;   // sorted indices into the governing cut list
  std::map<std::size_t, Vec> assignment;  // arc index -> value; includes e
  Vec value;

  ArcAssignment to_arc_assignment(const EnhancedNetwork& net) const;
};

struct GluingCounters {
  // Idealized pairwise comparison count: each fold step contributes
  // (semantic partial count) x (new family size) x (shared arcs incl. e),
  // where partials that fail to extend stay counted at weight one.
  BigInt semantic = 0;
  // Work the hash-join actually performs (build + probe key operations).
  BigInt actual = 0;
};

struct LocalFlowFamily {
  std::vector<std::size_t> cuts;
  std::vector<LocalFlow> flows;  // sorted by (value, assignment)
  GluingCounters counters;

  std::vector<Vec> values() const;                       // sorted, unique
  std::map<Vec, std::vector<std::size_t>> by_value() const;  // level sets
};

// Enriched Minkowski sum of one cut: the full product of per-arc capacity
// points, each tagged with its net value. Requires point-set capacities.
LocalFlowFamily local_flows_of_cut(const EnhancedNetwork& net, const Cut& c,
                                   std::size_t cut_index);

// Agreement on every shared arc, e included (hence equal values).
bool compatible(const LocalFlow& a, const LocalFlow& b);

// The unique local flow over the union of cut sets and arc sets; restricting
// it to any contributor returns that contributor.
LocalFlow glue(const std::vector<LocalFlow>& flows);

LocalFlow restrict_to_arcs(const LocalFlow& f, const std::vector<std::size_t>& cuts,
                           const std::vector<std::size_t>& arcs);

// Left fold of gluings over the cuts, canonically ordered by default
// (ascending |s side|, ties by counter index). Final family keeps only
// values admitted by e's nonnegative-orthant capacity. The family is
// order-independent; the comparison counters are not.
LocalFlowFamily mutual_capacity(const EnhancedNetwork& net, const std::vector<Cut>& cuts,
                                bool canonical_order = true);

// Theorem realization: mutual capacity over all cuts = the feasible flows.
LocalFlowFamily feasible_flows(const EnhancedNetwork& net);

struct BruteCounters {
  BigInt coordinates = 0;  // full assignments examined
  BigInt operations = 0;   // coordinates x node conservation checks
};

// Exhaustive product of per-arc capacity points filtered by conservation
// (and e's capacity); the independent oracle for the gluing engine.
LocalFlowFamily brute_force(const EnhancedNetwork& net, const BigInt& budget,
                            BruteCounters* counters = nullptr);

}  // namespace mcmf
