#pragma once

#include <optional>
#include <vector>

#include "mcmf/network.hpp"

namespace mcmf {

struct SignedArc {
  std::size_t arc;
  int sign;  // +1 along the arc's orientation, -1 against
};

// A fundamental cycle: its non-tree chord followed by the tree path from the
// chord's head back to its tail.
struct Cycle {
  std::size_t chord;
  std::vector<SignedArc> members;
};

// Spanning tree of the base graph plus its fundamental cycles. The basis
// holds the base-graph cycles (the search space of `decide`, which must not
// change the value on e); the cycle through e completes the enhanced
// network's cycle space and is kept separately.
struct CycleSystem {
  std::vector<std::size_t> tree;  // base arc indices, n-1 of them
  std::vector<Cycle> basis;       // chords ascending by arc id
  Cycle return_cycle;             // chord = e

  int sign(std::size_t arc, std::size_t cycle) const;
};

// Deterministic default: breadth-first tree from s, neighbors in arc-id
// order. An explicit tree (arc ids) may be supplied instead.
CycleSystem cycle_basis(const EnhancedNetwork& net);
CycleSystem cycle_basis(const EnhancedNetwork& net, const std::vector<std::string>& tree_ids);

// Pseudoflow with value f: f pushed along the breadth-first tree path from s
// to t (orientation-signed) and along e; zero elsewhere.
ArcAssignment build_pseudoflow(const EnhancedNetwork& net, const Vec& f);

// One membership constraint per base arc: the signed sum of cycle
// coefficients must lie in the arc's capacity shifted by the pseudoflow.
struct CycleConstraint {
  std::size_t arc;
  std::vector<int> coeffs;  // one per basis cycle
  Region shifted;           // C_a - F'(a)
};

// Arcs whose coefficient rows agree up to a global sign, aggregated into one
// membership constraint on the common signed combination.
struct ConstraintGroup {
  std::vector<int> coeffs;                         // first nonzero positive (or all zero)
  std::vector<std::pair<std::size_t, int>> arcs;   // (arc, orientation of its row)
  Region region;                                   // intersection of sign-corrected shifts
};

struct CycleConstraintSet {
  std::vector<CycleConstraint> per_arc;  // by arc index
  std::vector<ConstraintGroup> groups;   // sorted by coefficient vector
};

CycleConstraintSet cycle_constraints(const EnhancedNetwork& net, const CycleSystem& sys,
                                     const ArcAssignment& pseudoflow);

struct DecideOptions {
  BigInt budget = 100000;  // branch nodes (polygonal) / assignment product (point sets)
  std::optional<std::vector<std::string>> tree;
};

struct DecideResult {
  bool feasible = false;
  ArcAssignment witness;  // full flow when feasible
  BigInt branches = 0;
};

// Is there a flow with value f? Polygonal capacities run exact rational
// linear feasibility over the cycle space, branching over union pieces;
// point-set capacities delegate to the gluing engine.
DecideResult decide(const EnhancedNetwork& net, const Vec& f, const DecideOptions& opts = {});

}  // namespace mcmf
