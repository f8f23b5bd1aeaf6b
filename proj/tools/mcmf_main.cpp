#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcmf/bench.hpp"
#include "mcmf/cuts.hpp"
#include "mcmf/cycles.hpp"
#include "mcmf/gluing.hpp"
#include "mcmf/io.hpp"
#include "mcmf/ratio.hpp"

namespace {

using namespace mcmf;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // decide said infeasible
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

void emit_error(const std::string& kind, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = {{"kind", kind}, {"message", message}};
  std::cerr << j.dump() << std::endl;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + out_path + "'");
  out << content;
}

EnhancedNetwork load(const std::string& path, bool discretize_caps) {
  NetworkDocument doc = parse_network_document(read_file(path));
  if (discretize_caps) {
    bool any = false;
    for (auto& arc : doc.arcs) {
      if (!arc.capacity.is_point_set()) {
        arc.capacity = discretize(arc.capacity);
        any = true;
      }
    }
    if (any)
      std::cerr << "note: capacities discretized to their integer points; results describe"
                   " the integer-flow region\n";
  }
  return to_network(doc);
}

std::string render_region(const Region& r, const std::string& format,
                          const std::string& label) {
  if (format == "csv") return region_csv(r);
  if (format == "json") return region_json(r);
  if (format == "svg") return render_svg({{r, "#2266cc", label}});
  throw InputError("unknown format '" + format + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feasible flow regions for k-commodity networks with region capacities"};
  app.require_subcommand(1);

  std::string net_path, out_path, format = "csv", value_text, ratio_text, tree_text;
  std::string upper_text, eps_text = "1/8", which = "total,pairwise,feasible", cuts_pair;
  bool discretize_caps = false, realizations = false, integer_mode = false;
  bool declare_reducible = false, chain = false, include_times = false;
  long long budget = 100000;
  std::string u_list = "0,1,2,4,8";

  auto add_net = [&](CLI::App* cmd) {
    cmd->add_option("network", net_path, "network JSON file")->required();
  };
  auto add_common = [&](CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    if (with_format) cmd->add_option("--format", format, "csv|json|svg");
  };

  auto* validate_cmd = app.add_subcommand("validate", "parse and check a network file");
  add_net(validate_cmd);

  auto* cuts_cmd = app.add_subcommand("cuts", "enumerate all s-t cuts");
  add_net(cuts_cmd);
  add_common(cuts_cmd);

  auto* total_cmd = app.add_subcommand("total-capacity", "intersection of all cut capacities");
  add_net(total_cmd);
  add_common(total_cmd);

  auto* pair_cmd = app.add_subcommand("pairwise-capacity",
                                      "intersection of pairwise cut capacities");
  add_net(pair_cmd);
  add_common(pair_cmd);
  pair_cmd->add_option("--cuts", cuts_pair, "i,j: only the pairwise capacity of cuts i and j");

  auto* mutual_cmd = app.add_subcommand("mutual-capacity",
                                        "feasible flow values via cut-wise gluing");
  add_net(mutual_cmd);
  add_common(mutual_cmd);
  mutual_cmd->add_flag("--discretize", discretize_caps,
                       "replace capacities by their integer points");
  mutual_cmd->add_flag("--realizations", realizations, "include full assignments per value");

  auto* brute_cmd = app.add_subcommand("brute-force", "exhaustive oracle for cross-checking");
  add_net(brute_cmd);
  add_common(brute_cmd);
  brute_cmd->add_flag("--discretize", discretize_caps,
                      "replace capacities by their integer points");
  brute_cmd->add_option("--budget", budget, "maximum assignments to enumerate");

  auto* disjoint_cmd = app.add_subcommand("disjoint-capacity",
                                          "closed form for fully disjoint networks");
  add_net(disjoint_cmd);
  add_common(disjoint_cmd);

  auto* decide_cmd = app.add_subcommand("decide", "is a flow value realizable?");
  add_net(decide_cmd);
  add_common(decide_cmd, false);
  decide_cmd->add_option("--value", value_text, "flow value, e.g. \"2,1\" or \"1/2,3/4\"")
      ->required();
  decide_cmd->add_option("--budget", budget, "branch budget");
  decide_cmd->add_option("--tree", tree_text, "comma-separated spanning tree arc ids");

  auto* basis_cmd = app.add_subcommand("cycle-basis", "spanning tree and fundamental cycles");
  add_net(basis_cmd);
  add_common(basis_cmd);
  basis_cmd->add_option("--tree", tree_text, "comma-separated spanning tree arc ids");

  auto* ratio_cmd = app.add_subcommand("ratio-max",
                                       "maximum multiple of a commodity ratio (binary search)");
  add_net(ratio_cmd);
  add_common(ratio_cmd, false);
  ratio_cmd->add_option("--ratio", ratio_text, "desired ratio, e.g. \"2/1,1/1\"")->required();
  ratio_cmd->add_option("--upper", upper_text, "overestimate B+ of the multiple")->required();
  ratio_cmd->add_option("--eps", eps_text, "approximation error, rational");
  ratio_cmd->add_flag("--integer", integer_mode, "integer ratio mode");
  ratio_cmd->add_flag("--declare-reducible", declare_reducible,
                      "trust that capacities are reducible when checks cannot certify");
  ratio_cmd->add_option("--budget", budget, "decide budget per probe");

  auto* bench_cmd = app.add_subcommand("bench", "operation-count comparison harness");
  bench_cmd->add_flag("--chain", chain, "three-arc chain family");
  bench_cmd->add_option("--U", u_list, "comma-separated U values");
  bench_cmd->add_flag("--times", include_times, "include wall times (non-deterministic)");
  add_common(bench_cmd);

  auto* plot_cmd = app.add_subcommand("plot", "SVG figure of network regions");
  add_net(plot_cmd);
  plot_cmd->add_option("--out", out_path, "output SVG path");
  plot_cmd->add_option("--which", which, "comma list of total,pairwise,feasible");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(validate_cmd)) {
      EnhancedNetwork net = load(net_path, false);
      std::cout << "ok: " << net.node_count() << " nodes, " << net.base_arc_count()
                << " arcs + e, k=" << net.commodity_count() << "\n";
      return kExitOk;
    }

    if (app.got_subcommand(cuts_cmd)) {
      EnhancedNetwork net = load(net_path, false);
      std::vector<Cut> cuts = enumerate_cuts(net);
      std::ostringstream out;
      auto join = [&](const std::vector<std::size_t>& arcs, bool with_e) {
        std::string s;
        for (std::size_t a : arcs) {
          if (!s.empty()) s += ";";
          s += net.arc(a).id;
        }
        if (with_e) s += s.empty() ? "e" : ";e";
        return s;
      };
      if (format == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < cuts.size(); ++i) {
          nlohmann::ordered_json c;
          c["index"] = i;
          c["s_side"] = nlohmann::ordered_json::array();
          for (std::size_t v = 0; v < net.node_count(); ++v)
            if (cuts[i].in_s[v]) c["s_side"].push_back(net.node_id(v));
          c["forward"] = nlohmann::ordered_json::array();
          for (std::size_t a : cuts[i].forward) c["forward"].push_back(net.arc(a).id);
          c["backward"] = nlohmann::ordered_json::array();
          for (std::size_t a : cuts[i].backward) c["backward"].push_back(net.arc(a).id);
          c["backward"].push_back("e");
          j.push_back(std::move(c));
        }
        write_output(out_path, j.dump(2) + "\n");
      } else {
        out << "index,s_side,forward,backward\n";
        for (std::size_t i = 0; i < cuts.size(); ++i) {
          std::string sside;
          for (std::size_t v = 0; v < net.node_count(); ++v)
            if (cuts[i].in_s[v]) {
              if (!sside.empty()) sside += ";";
              sside += net.node_id(v);
            }
          out << i << "," << sside << "," << join(cuts[i].forward, false) << ","
              << join(cuts[i].backward, true) << "\n";
        }
        write_output(out_path, out.str());
      }
      return kExitOk;
    }

    if (app.got_subcommand(total_cmd)) {
      EnhancedNetwork net = load(net_path, false);
      write_output(out_path, render_region(total_capacity(net), format, "total capacity"));
      return kExitOk;
    }

    if (app.got_subcommand(pair_cmd)) {
      EnhancedNetwork net = load(net_path, false);
      Region r = Region::point_set(net.commodity_count(), {});
      if (cuts_pair.empty()) {
        r = pairwise_bound(net);
      } else {
        auto comma = cuts_pair.find(',');
        if (comma == std::string::npos) throw InputError("--cuts expects i,j");
        std::size_t i = std::stoul(cuts_pair.substr(0, comma));
        std::size_t j = std::stoul(cuts_pair.substr(comma + 1));
        std::vector<Cut> cuts = enumerate_cuts(net);
        if (i >= cuts.size() || j >= cuts.size()) throw InputError("cut index out of range");
        r = pairwise_capacity(net, cuts[i], cuts[j]);
      }
      write_output(out_path, render_region(r, format, "pairwise capacity"));
      return kExitOk;
    }

    if (app.got_subcommand(mutual_cmd) || app.got_subcommand(brute_cmd)) {
      EnhancedNetwork net = load(net_path, discretize_caps);
      if (!net.all_point_sets())
        throw InputError("capacities must be point sets; pass --discretize for polygons");
      LocalFlowFamily fam;
      BruteCounters brute_counters;
      bool brute = app.got_subcommand(brute_cmd);
      if (brute) {
        fam = brute_force(net, BigInt(budget), &brute_counters);
      } else {
        fam = feasible_flows(net);
      }
      if (format == "json") {
        std::string body = family_json(net, fam, realizations);
        if (brute) {
          auto j = nlohmann::ordered_json::parse(body);
          j["counters"] = {{"coordinates", brute_counters.coordinates.str()},
                           {"operations", brute_counters.operations.str()}};
          body = j.dump(2) + "\n";
        }
        write_output(out_path, body);
      } else {
        std::ostringstream out;
        if (brute) {
          out << (net.commodity_count() == 2 ? "x,y,realizations\n" : "value...,realizations\n");
          for (const auto& [value, idx] : fam.by_value()) {
            for (const auto& c : value.e) out << rat_str(c) << ",";
            out << idx.size() << "\n";
          }
          out << "# coordinates," << brute_counters.coordinates.str() << "\n";
          out << "# operations," << brute_counters.operations.str() << "\n";
          write_output(out_path, out.str());
        } else {
          write_output(out_path, values_csv(fam, net.commodity_count()));
        }
      }
      return kExitOk;
    }

    if (app.got_subcommand(disjoint_cmd)) {
      EnhancedNetwork net = load(net_path, false);
      write_output(out_path, render_region(disjoint_capacity(net), format, "disjoint capacity"));
      return kExitOk;
    }

    if (app.got_subcommand(decide_cmd)) {
      EnhancedNetwork net = load(net_path, false);
      DecideOptions opts;
      opts.budget = BigInt(budget);
      if (!tree_text.empty()) {
        std::vector<std::string> ids;
        std::stringstream ss(tree_text);
        std::string id;
        while (std::getline(ss, id, ',')) ids.push_back(id);
        opts.tree = ids;
      }
      DecideResult res = decide(net, parse_vec(value_text), opts);
      if (!res.feasible) {
        std::cout << "infeasible\n";
        return kExitNegative;
      }
      std::cout << "feasible\n";
      write_output(out_path, assignment_json(res.witness));
      return kExitOk;
    }

    if (app.got_subcommand(basis_cmd)) {
      EnhancedNetwork net = load(net_path, false);
      CycleSystem sys;
      if (!tree_text.empty()) {
        std::vector<std::string> ids;
        std::stringstream ss(tree_text);
        std::string id;
        while (std::getline(ss, id, ',')) ids.push_back(id);
        sys = cycle_basis(net, ids);
      } else {
        sys = cycle_basis(net);
      }
      std::ostringstream out;
      out << "tree";
      for (std::size_t a : sys.tree) out << "," << net.arc(a).id;
      out << "\narc";
      for (const auto& c : sys.basis) out << ",cycle[" << net.arc(c.chord).id << "]";
      out << ",cycle[e]\n";
      for (std::size_t a = 0; a < net.base_arc_count(); ++a) {
        out << net.arc(a).id;
        for (std::size_t i = 0; i < sys.basis.size(); ++i) out << "," << sys.sign(a, i);
        int esign = 0;
        for (const auto& sa : sys.return_cycle.members)
          if (sa.arc == a) esign = sa.sign;
        out << "," << esign << "\n";
      }
      write_output(out_path, out.str());
      return kExitOk;
    }

    if (app.got_subcommand(ratio_cmd)) {
      EnhancedNetwork net = load(net_path, false);
      NetworkDocument doc = parse_network_document(read_file(net_path));
      RatioProblem prob;
      prob.net = &net;
      prob.ratio = parse_vec(ratio_text);
      prob.upper = parse_rat(upper_text);
      prob.epsilon = parse_rat(eps_text);
      prob.integer_mode = integer_mode;
      prob.reducible_declared = declare_reducible || doc.reducible_declared;
      prob.decide_budget = BigInt(budget);
      RatioResult res = integer_mode ? int_ratio_max(prob) : ratio_max(prob);
      if (integer_mode) {
        std::cout << "P*=" << res.integer_best.str() << "\n";
      } else {
        std::cout << "B-=" << rat_str(res.lower) << "\n";
      }
      std::cout << "iterations=" << res.iterations << "\n";
      if (res.upper_adjusted)
        std::cout << "note=initial upper bound was feasible; doubled to "
                  << rat_str(res.upper_used) << "\n";
      if (res.reducibility_assumed) std::cout << "note=reducibility assumed\n";
      if (!out_path.empty()) write_output(out_path, assignment_json(res.witness));
      return kExitOk;
    }

    if (app.got_subcommand(bench_cmd)) {
      if (!chain) throw InputError("bench needs --chain");
      std::vector<long long> us;
      std::stringstream ss(u_list);
      std::string tok;
      while (std::getline(ss, tok, ',')) us.push_back(std::stoll(tok));
      BenchReport report = bench_sweep(us);
      write_output(out_path,
                   format == "json" ? bench_json(report, include_times)
                                    : bench_csv(report, include_times));
      return kExitOk;
    }

    if (app.got_subcommand(plot_cmd)) {
      EnhancedNetwork net = load(net_path, false);
      std::vector<SvgLayer> layers;
      std::stringstream ss(which);
      std::string layer;
      std::vector<std::string> order;
      while (std::getline(ss, layer, ',')) order.push_back(layer);
      for (const auto& name : order) {
        if (name == "total") {
          layers.push_back({total_capacity(net), "#44aa44", "total capacity"});
        } else if (name == "pairwise") {
          layers.push_back({pairwise_bound(net), "#cc3333", "pairwise bound"});
        } else if (name == "feasible") {
          EnhancedNetwork disc = load(net_path, true);
          LocalFlowFamily fam = feasible_flows(disc);
          layers.push_back({Region::point_set(net.commodity_count(), fam.values()), "#2244cc",
                            "feasible values (integer)"});
        } else {
          throw InputError("unknown plot layer '" + name + "'");
        }
      }
      write_output(out_path, render_svg(layers));
      return kExitOk;
    }

    emit_error("input", "no subcommand");
    return kExitInput;
  } catch (const BudgetError& e) {
    emit_error("budget", e.what());
    return kExitBudget;
  } catch (const InputError& e) {
    emit_error("input", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    emit_error("internal", e.what());
    return kExitInput;
  }
}
