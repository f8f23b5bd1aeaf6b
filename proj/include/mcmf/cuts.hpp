#pragma once

#include <cstdint>
#include <vector>

#include "mcmf/network.hpp"

namespace mcmf {

// An s-t node bipartition. Forward arcs keep their orientation, backward arcs
// are accounted in opposite orientation (negated capacity). The return arc e
// is a backward arc of every cut and is excluded from value computations.
struct Cut {
  std::uint64_t mask = 0;        // bit i <=> i-th non-terminal (sorted by id) on the s side
  std::vector<char> in_s;        // by node index
  std::vector<std::size_t> forward;   // base arc indices, ascending
  std::vector<std::size_t> backward;  // base arc indices, ascending (e implicit)

  std::size_t s_side_size() const;
};

// All 2^(n-2) bipartitions, ordered by the binary counter over non-terminal
// nodes sorted by id.
std::vector<Cut> enumerate_cuts(const EnhancedNetwork& net);

// Canonical fold order: ascending |s side|, ties by counter index.
std::vector<std::size_t> canonical_cut_order(const std::vector<Cut>& cuts);

Region cut_capacity(const EnhancedNetwork& net, const Cut& c);
Region total_capacity(const EnhancedNetwork& net);
Region pairwise_capacity(const EnhancedNetwork& net, const Cut& c1, const Cut& c2);
Region pairwise_bound(const EnhancedNetwork& net);

// Closed form for fully disjoint networks: per-path capacity intersections,
// Minkowski-summed across paths. Throws InputError when the network is not a
// union of internally node-disjoint s-t paths.
Region disjoint_capacity(const EnhancedNetwork& net);

}  // namespace mcmf
