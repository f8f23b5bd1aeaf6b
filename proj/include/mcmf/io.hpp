#pragma once

#include <string>
#include <vector>

#include "mcmf/gluing.hpp"
#include "mcmf/network.hpp"

namespace mcmf {

// On-disk network description. Parsing and serialization round-trip exactly:
// serialize(parse(serialize(parse(text)))) == serialize(parse(text)).
struct NetworkDocument {
  std::string version = "1";
  std::size_t k = 0;
  std::vector<std::string> nodes;
  struct ArcEntry {
    std::string id, tail, head;
    Region capacity;
  };
  std::vector<ArcEntry> arcs;
  std::string source, sink;
  bool reducible_declared = false;
};

NetworkDocument parse_network_document(const std::string& text);
EnhancedNetwork to_network(const NetworkDocument& doc);
EnhancedNetwork parse_network(const std::string& text);
std::string serialize(const NetworkDocument& doc);

// Result emission. Regions print canonical vertex lists (polygonal) or the
// sorted point list.
std::string region_csv(const Region& r);
std::string region_json(const Region& r);

std::string values_csv(const LocalFlowFamily& fam, std::size_t k);
std::string family_json(const EnhancedNetwork& net, const LocalFlowFamily& fam,
                        bool realizations);

std::string assignment_json(const ArcAssignment& f);

struct SvgLayer {
  Region region;
  std::string fill;   // css color
  std::string label;
};

// Fixed-viewBox figure with an integer grid; layers drawn back to front.
std::string render_svg(const std::vector<SvgLayer>& layers);

}  // namespace mcmf
