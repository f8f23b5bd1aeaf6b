#include <doctest.h>

#include <array>
#include <fstream>
#include <functional>
#include <sstream>
#include <tuple>

#include "mcmf/cuts.hpp"
#include "mcmf/io.hpp"
#include "mcmf/network.hpp"

using namespace mcmf;

namespace {

Vec v2(long long x, long long y) { return Vec{Rat(x), Rat(y)}; }

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(MCMF_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Region pts(std::initializer_list<Vec> list) { return Region::point_set(2, list); }

}  // namespace

TEST_CASE("building the enhanced network") {
  EnhancedNetwork net = parse_network(fixture("example1.json"));
  CHECK(net.node_count() == 3);
  CHECK(net.base_arc_count() == 3);
  CHECK(net.arcs().size() == 4);  // + e
  const Arc& e = net.arc(net.return_arc());
  CHECK(e.id == "e");
  CHECK(e.is_return);
  CHECK(e.tail == net.sink());
  CHECK(e.head == net.source());
  CHECK(e.capacity.is_orthant());

  CHECK_THROWS_AS(EnhancedNetwork::build(2, {"s"}, {}, "s", "s"), InputError);
  CHECK_THROWS_AS(EnhancedNetwork::build(
                      2, {"s", "t"}, {{"a", "s", "x", pts({v2(0, 0)})}}, "s", "t"),
                  InputError);
  CHECK_THROWS_AS(EnhancedNetwork::build(0, {"s", "t"}, {}, "s", "t"), InputError);
  CHECK_THROWS_AS(EnhancedNetwork::build(2, {"s", "t"},
                                         {{"a", "s", "t", pts({v2(0, 0)})},
                                          {"a", "s", "t", pts({v2(0, 0)})}},
                                         "s", "t"),
                  InputError);
  // Parallel arcs with distinct ids are fine.
  EnhancedNetwork par = EnhancedNetwork::build(2, {"s", "t"},
                                               {{"a", "s", "t", pts({v2(0, 0)})},
                                                {"b", "s", "t", pts({v2(1, 0)})}},
                                               "s", "t");
  CHECK(par.base_arc_count() == 2);
}

TEST_CASE("reverse_arc negates the capacity") {
  Arc a;
  a.id = "a";
  a.tail = 0;
  a.head = 1;
  a.capacity = pts({v2(2, -3)});
  Arc r = reverse_arc(a);
  CHECK(r.tail == 1);
  CHECK(r.head == 0);
  CHECK(r.capacity.contains(v2(-2, 3)));
  Arc rr = reverse_arc(r);
  CHECK(rr.tail == a.tail);
  CHECK(region_equal(rr.capacity, a.capacity));
  Arc z;
  z.tail = 0;
  z.head = 1;
  z.capacity = pts({v2(0, 0)});
  CHECK(region_equal(reverse_arc(z).capacity, z.capacity));
}

TEST_CASE("check_flow on the worked example") {
  EnhancedNetwork net = parse_network(fixture("example1.json"));
  ArcAssignment f = {{"a1", v2(1, 1)}, {"a2", v2(1, 1)}, {"a3", v2(1, 0)}, {"e", v2(2, 1)}};
  CHECK(check_flow(net, f) == FlowVerdict::kValidFlow);
  CHECK(flow_value(net, f) == v2(2, 1));

  // Violate conservation at v2.
  ArcAssignment bad = f;
  bad["a2"] = v2(1, 2);
  CHECK(check_flow(net, bad) == FlowVerdict::kInvalid);

  // Conserved but outside capacity: a pseudoflow only.
  ArcAssignment pseudo = {{"a1", v2(5, 5)}, {"a2", v2(5, 5)}, {"a3", v2(0, 0)},
                          {"e", v2(5, 5)}};
  CHECK(check_flow(net, pseudo) == FlowVerdict::kPseudoflowOnly);

  ArcAssignment missing = {{"a1", v2(1, 1)}, {"a2", v2(1, 1)}, {"a3", v2(1, 0)}};
  CHECK_THROWS_AS(check_flow(net, missing), InputError);
}

TEST_CASE("zero flow is valid when capacities contain zero") {
  EnhancedNetwork net = EnhancedNetwork::build(
      2, {"s", "t"}, {{"a", "s", "t", pts({v2(0, 0), v2(1, 0)})}}, "s", "t");
  ArcAssignment zero = {{"a", v2(0, 0)}, {"e", v2(0, 0)}};
  CHECK(check_flow(net, zero) == FlowVerdict::kValidFlow);
}

TEST_CASE("flow value equals net flow across every cut") {
  EnhancedNetwork net = parse_network(fixture("example1.json"));
  ArcAssignment f = {{"a1", v2(1, 1)}, {"a2", v2(1, 1)}, {"a3", v2(1, 0)}, {"e", v2(2, 1)}};
  REQUIRE(check_flow(net, f) == FlowVerdict::kValidFlow);

  // Direct summation oracle over the cut {s} | rest, and every other cut.
  for (const Cut& c : enumerate_cuts(net)) {
    Vec net_flow(net.commodity_count());
    for (std::size_t a : c.forward) net_flow = net_flow + f.at(net.arc(a).id);
    for (std::size_t a : c.backward) net_flow = net_flow - f.at(net.arc(a).id);
    CHECK(net_flow == flow_value(net, f));
  }
}

TEST_CASE("flow validity is preserved under arc reversal") {
  // Reversing an arc and negating its value describes the same flow.
  EnhancedNetwork net = parse_network(fixture("example1.json"));
  ArcAssignment f = {{"a1", v2(1, 1)}, {"a2", v2(1, 1)}, {"a3", v2(1, 0)}, {"e", v2(2, 1)}};
  NetworkDocument doc = parse_network_document(fixture("example1.json"));
  for (auto& arc : doc.arcs) {
    if (arc.id != "a3") continue;
    std::swap(arc.tail, arc.head);
    arc.capacity = negate(arc.capacity);
  }
  EnhancedNetwork reversed = to_network(doc);
  ArcAssignment g = f;
  g["a3"] = -f.at("a3");
  CHECK(check_flow(reversed, g) == FlowVerdict::kValidFlow);
  CHECK(flow_value(reversed, g) == flow_value(net, f));
}

namespace {

// Directed 2-commodity integer-flow oracle: exhaustive search over integer
// arc flows up to `cap` per arc (capacity bounds the commodity sum), with
// per-commodity conservation except at that commodity's own terminals.
bool d2cif_yes(const std::vector<std::string>& nodes,
               const std::vector<std::tuple<std::string, std::string, long long>>& arcs,
               const std::pair<std::string, std::string>& sources,
               const std::pair<std::string, std::string>& sinks, long long r1, long long r2) {
  std::size_t m = arcs.size();
  std::vector<std::array<long long, 2>> flow(m, {0, 0});
  auto feasible = [&]() {
    for (std::size_t a = 0; a < m; ++a)
      if (flow[a][0] + flow[a][1] > std::get<2>(arcs[a])) return false;
    for (int commodity = 0; commodity < 2; ++commodity) {
      const std::string& src = commodity == 0 ? sources.first : sources.second;
      const std::string& dst = commodity == 0 ? sinks.first : sinks.second;
      long long need = commodity == 0 ? r1 : r2;
      for (const auto& node : nodes) {
        long long out = 0;
        for (std::size_t a = 0; a < m; ++a) {
          if (std::get<0>(arcs[a]) == node) out += flow[a][commodity];
          if (std::get<1>(arcs[a]) == node) out -= flow[a][commodity];
        }
        long long want = node == src ? need : (node == dst ? -need : 0);
        if (src == dst && node == src) want = 0;
        if (out != want) return false;
      }
    }
    return true;
  };
  // Odometer over all integer assignments bounded by each arc's capacity.
  std::function<bool(std::size_t)> rec = [&](std::size_t a) -> bool {
    if (a == m) return feasible();
    long long cap = std::get<2>(arcs[a]);
    for (long long x = 0; x <= cap; ++x)
      for (long long y = 0; x + y <= cap; ++y) {
        flow[a] = {x, y};
        if (rec(a + 1)) return true;
      }
    flow[a] = {0, 0};
    return false;
  };
  return rec(0);
}

Region sum_cap(long long c) {
  return Region::polygonal({*ConvexPolygon::from_halfspaces(
      {{Rat(-1), Rat(0), Rat(0)}, {Rat(0), Rat(-1), Rat(0)}, {Rat(1), Rat(1), Rat(c)}})});
}

// Exhaustive integer search over the embedded instance: depth-first over the
// integer points of each capacity, pruning as soon as every arc at a node is
// fixed and conservation fails there.
bool embedded_feasible(const EnhancedNetwork& net) {
  std::size_t m = net.base_arc_count();
  std::vector<std::vector<Vec>> candidates(m);
  for (std::size_t a = 0; a < m; ++a) candidates[a] = integer_points(net.arc(a).capacity);

  std::vector<std::vector<int>> completed_at(m);  // nodes finished after arc a
  for (std::size_t v = 0; v < net.node_count(); ++v) {
    if (static_cast<int>(v) == net.source() || static_cast<int>(v) == net.sink()) continue;
    std::size_t last = 0;
    bool touched = false;
    for (std::size_t a = 0; a < m; ++a)
      if (net.arc(a).tail == static_cast<int>(v) || net.arc(a).head == static_cast<int>(v)) {
        last = a;
        touched = true;
      }
    if (touched) completed_at[last].push_back(static_cast<int>(v));
  }

  std::vector<Vec> chosen(m, Vec(2));
  std::function<bool(std::size_t)> rec = [&](std::size_t a) -> bool {
    if (a == m) {
      Vec e_value(2), t_balance(2);
      for (std::size_t i = 0; i < m; ++i) {
        if (net.arc(i).tail == net.source()) e_value = e_value + chosen[i];
        if (net.arc(i).head == net.source()) e_value = e_value - chosen[i];
        if (net.arc(i).tail == net.sink()) t_balance = t_balance + chosen[i];
        if (net.arc(i).head == net.sink()) t_balance = t_balance - chosen[i];
      }
      return e_value.nonnegative() && (t_balance + e_value).is_zero();
    }
    for (const auto& value : candidates[a]) {
      chosen[a] = value;
      bool ok = true;
      for (int node : completed_at[a]) {
        Vec sum(2);
        for (std::size_t i = 0; i <= a; ++i) {
          if (net.arc(i).tail == node) sum = sum + chosen[i];
          if (net.arc(i).head == node) sum = sum - chosen[i];
        }
        if (!sum.is_zero()) ok = false;
      }
      if (ok && rec(a + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("requirement embedding mirrors the integer-flow decision") {
  // One shared source/sink pair, a single arc of capacity 2 (commodity sum).
  std::vector<std::string> nodes = {"u", "w"};
  std::vector<ArcDesc> arcs = {{"uw", "u", "w", sum_cap(2)}};

  EnhancedNetwork yes = embed_requirements(2, nodes, arcs, {"u", "u"}, {"w", "w"},
                                           v2(1, 1), Rat(3));
  CHECK(embedded_feasible(yes));
  CHECK(d2cif_yes(nodes, {{"u", "w", 2}}, {"u", "u"}, {"w", "w"}, 1, 1));

  EnhancedNetwork no = embed_requirements(2, nodes, arcs, {"u", "u"}, {"w", "w"},
                                          v2(2, 1), Rat(3));
  CHECK_FALSE(embedded_feasible(no));
  CHECK_FALSE(d2cif_yes(nodes, {{"u", "w", 2}}, {"u", "u"}, {"w", "w"}, 2, 1));

  // Zero requirements are always satisfiable.
  EnhancedNetwork zero = embed_requirements(2, nodes, arcs, {"u", "u"}, {"w", "w"},
                                            v2(0, 0), Rat(2));
  CHECK(embedded_feasible(zero));

  CHECK_THROWS_AS(embed_requirements(2, nodes, arcs, {"u", "nope"}, {"w", "w"}, v2(1, 1),
                                     Rat(3)),
                  InputError);
}

TEST_CASE("embedding feasibility matches exhaustive search on a two-path instance") {
  // u -> a -> w and u -> b -> w with tight capacities.
  std::vector<std::string> nodes = {"u", "a", "b", "w"};
  std::vector<ArcDesc> arcs = {{"ua", "u", "a", sum_cap(1)},
                               {"aw", "a", "w", sum_cap(1)},
                               {"ub", "u", "b", sum_cap(1)},
                               {"bw", "b", "w", sum_cap(1)}};
  std::vector<std::tuple<std::string, std::string, long long>> oracle_arcs = {
      {"u", "a", 1}, {"a", "w", 1}, {"u", "b", 1}, {"b", "w", 1}};
  for (long long r1 = 0; r1 <= 2; ++r1) {
    for (long long r2 = 0; r2 + r1 <= 3; ++r2) {
      EnhancedNetwork emb = embed_requirements(2, nodes, arcs, {"u", "u"}, {"w", "w"},
                                               v2(r1, r2), Rat(3));
      CHECK(embedded_feasible(emb) ==
            d2cif_yes(nodes, oracle_arcs, {"u", "u"}, {"w", "w"}, r1, r2));
    }
  }
}
