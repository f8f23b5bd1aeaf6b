#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcmf/rational.hpp"
#include "mcmf/region.hpp"

namespace mcmf {

struct ArcDesc {
  std::string id, tail, head;
  Region capacity;
};

struct Arc {
  std::string id;
  int tail = -1, head = -1;  // node indices
  Region capacity;
  bool is_return = false;
};

// Swaps orientation and negates the capacity; an involution.
Arc reverse_arc(const Arc& a);

// A k-commodity network together with the return arc e from sink to source,
// stored as the last arc. e is excluded from every value-function computation.
class EnhancedNetwork {
 public:
  static EnhancedNetwork build(std::size_t k, const std::vector<std::string>& nodes,
                               const std::vector<ArcDesc>& arcs, const std::string& source,
                               const std::string& sink);

  std::size_t commodity_count() const { return k_; }
  std::size_t node_count() const { return node_ids_.size(); }
  std::size_t base_arc_count() const { return arcs_.size() - 1; }
  std::size_t return_arc() const { return arcs_.size() - 1; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(std::size_t i) const { return arcs_[i]; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::string& node_id(std::size_t i) const { return node_ids_[i]; }
  const std::vector<std::string>& node_ids() const { return node_ids_; }
  int node_index(const std::string& id) const;
  std::optional<std::size_t> arc_index(const std::string& id) const;

  bool all_point_sets() const;  // over base arcs
  bool any_polygonal() const;

 private:
  std::size_t k_ = 0;
  std::vector<std::string> node_ids_;
  std::map<std::string, int> node_index_;
  std::vector<Arc> arcs_;  // base arcs in input order, then e
  int source_ = -1, sink_ = -1;
};

// Arc id -> commodity vector; the shared carrier for flows, pseudoflows and
// witnesses. The return arc uses its reserved id "e".
using ArcAssignment = std::map<std::string, Vec>;

enum class FlowVerdict { kValidFlow, kPseudoflowOnly, kInvalid };

// Verdict over a full assignment (every arc including e must be present).
FlowVerdict check_flow(const EnhancedNetwork& net, const ArcAssignment& f);

// Net imbalance at a node under the assignment: out minus in, e included.
Vec node_imbalance(const EnhancedNetwork& net, const ArcAssignment& f, int node);

Vec flow_value(const EnhancedNetwork& net, const ArcAssignment& f);

// NP-hardness embedding of a directed 2-commodity integer-flow instance:
// adds nodes s, s', t with (s,s') constrained below by the requirements and
// the four attachment arcs bounded by [0,B]^2 boxes.
EnhancedNetwork embed_requirements(std::size_t k, const std::vector<std::string>& nodes,
                                   const std::vector<ArcDesc>& arcs,
                                   const std::pair<std::string, std::string>& sources,
                                   const std::pair<std::string, std::string>& sinks,
                                   const Vec& requirements, const Rat& box_bound);

inline const char* kReturnArcId = "e";

}  // namespace mcmf
