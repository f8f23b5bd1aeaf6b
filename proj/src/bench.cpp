#include "mcmf/bench.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace mcmf {
namespace {

Region grid_points(long long xmax, long long ymax, bool triangle) {
  std::vector<Vec> pts;
  for (long long x = 0; x <= xmax; ++x)
    for (long long y = 0; y <= ymax; ++y) {
      if (triangle && x + y > 2) continue;
      pts.push_back(Vec{Rat(x), Rat(y)});
    }
  return Region::point_set(2, std::move(pts));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

EnhancedNetwork chain_network(long long u) {
  if (u < 0) throw InputError("U must be nonnegative");
  std::vector<ArcDesc> arcs = {
      {"a1", "s", "v1", grid_points(2, 2, true)},
      {"a2", "v1", "v2", grid_points(u, 3, false)},
      {"a3", "v2", "t", grid_points(3, u, false)},
  };
  return EnhancedNetwork::build(2, {"s", "v1", "v2", "t"}, arcs, "s", "t");
}

std::vector<Cut> chain_cuts(const EnhancedNetwork& net) {
  std::vector<Cut> all = enumerate_cuts(net);
  std::vector<Cut> picked;
  for (std::uint64_t mask : {0ULL, 1ULL, 3ULL})
    for (const auto& c : all)
      if (c.mask == mask) picked.push_back(c);
  return picked;
}

BenchRow bench_chain(long long u) {
  BenchRow row;
  row.u = u;
  EnhancedNetwork net = chain_network(u);
  std::vector<Cut> cuts = chain_cuts(net);

  auto t0 = std::chrono::steady_clock::now();
  LocalFlowFamily glued = mutual_capacity(net, cuts);
  row.glue_seconds = seconds_since(t0);
  row.glue_semantic = glued.counters.semantic;
  row.glue_actual = glued.counters.actual;

  BruteCounters brute_counters;
  t0 = std::chrono::steady_clock::now();
  brute_force(net, BigInt(1) << 40, &brute_counters);
  row.brute_seconds = seconds_since(t0);
  row.brute_coordinates = brute_counters.coordinates;
  row.brute_operations = brute_counters.operations;
  return row;
}

BenchReport bench_sweep(const std::vector<long long>& us) {
  BenchReport report;
  for (long long u : us) report.rows.push_back(bench_chain(u));

  // Growth exponents: least squares of ln(count) against ln(U+1), the
  // per-arc capacity cardinality scale.
  std::size_t n = 0;
  double sx = 0, sy1 = 0, sy2 = 0, sxx = 0, sxy1 = 0, sxy2 = 0;
  for (const auto& row : report.rows) {
    double x = std::log(static_cast<double>(row.u) + 1.0);
    double y1 = std::log(row.glue_semantic.convert_to<double>());
    double y2 = std::log(row.brute_operations.convert_to<double>());
    sx += x;
    sy1 += y1;
    sy2 += y2;
    sxx += x * x;
    sxy1 += x * y1;
    sxy2 += x * y2;
    ++n;
  }
  double det = n * sxx - sx * sx;
  if (n >= 2 && det != 0) {
    report.fitted = true;
    report.glue_exponent = (n * sxy1 - sx * sy1) / det;
    report.brute_exponent = (n * sxy2 - sx * sy2) / det;
  }
  return report;
}

std::string bench_csv(const BenchReport& report, bool include_times) {
  std::ostringstream out;
  out << "U,glue_semantic,glue_actual,brute_coordinates,brute_operations,speedup";
  if (include_times) out << ",glue_seconds,brute_seconds";
  out << "\n";
  for (const auto& row : report.rows) {
    Rat speedup = Rat(row.brute_operations, row.glue_semantic);
    out << row.u << "," << row.glue_semantic.str() << "," << row.glue_actual.str() << ","
        << row.brute_coordinates.str() << "," << row.brute_operations.str() << ","
        << rat_str(speedup);
    if (include_times) {
      out << "," << row.glue_seconds << "," << row.brute_seconds;
    }
    out << "\n";
  }
  if (report.fitted) {
    out << "# fitted_exponent_vs_U_plus_1,glue," << report.glue_exponent << "\n";
    out << "# fitted_exponent_vs_U_plus_1,brute," << report.brute_exponent << "\n";
  }
  out << "# counter_note,semantic counts idealized pairwise comparisons (stalled partials"
         " weigh one); brute operations = assignments x node checks\n";
  return out.str();
}

std::string bench_json(const BenchReport& report, bool include_times) {
  nlohmann::ordered_json j;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r;
    r["U"] = row.u;
    r["glue_semantic"] = row.glue_semantic.str();
    r["glue_actual"] = row.glue_actual.str();
    r["brute_coordinates"] = row.brute_coordinates.str();
    r["brute_operations"] = row.brute_operations.str();
    r["speedup"] = rat_str(Rat(row.brute_operations, row.glue_semantic));
    if (include_times) {
      r["glue_seconds"] = row.glue_seconds;
      r["brute_seconds"] = row.brute_seconds;
    }
    j["rows"].push_back(std::move(r));
  }
  if (report.fitted) {
    j["fitted_exponent_vs_U_plus_1"] = {{"glue", report.glue_exponent},
                                        {"brute", report.brute_exponent}};
  }
  return j.dump(2) + "\n";
}

}  // namespace mcmf
