#pragma once

#include <string>
#include <vector>

#include "mcmf/gluing.hpp"

namespace mcmf {

// Three-arc chain with integer-point capacities scaling in U:
//   (s,v1): x,y >= 0, x+y <= 2        (6 points)
//   (v1,v2): x in [0,U], y in [0,3]   (4(U+1) points)
//   (v2,t):  x in [0,3], y in [0,U]   (4(U+1) points)
EnhancedNetwork chain_network(long long u);

// The three consecutive single-arc cuts, in order.
std::vector<Cut> chain_cuts(const EnhancedNetwork& net);

struct BenchRow {
  long long u = 0;
  BigInt glue_semantic, glue_actual;
  BigInt brute_coordinates, brute_operations;
  double glue_seconds = 0, brute_seconds = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  bool fitted = false;
  double glue_exponent = 0, brute_exponent = 0;  // ln(count) vs ln(U+1) slope
};

BenchRow bench_chain(long long u);
BenchReport bench_sweep(const std::vector<long long>& us);

std::string bench_csv(const BenchReport& report, bool include_times);
std::string bench_json(const BenchReport& report, bool include_times);

}  // namespace mcmf
