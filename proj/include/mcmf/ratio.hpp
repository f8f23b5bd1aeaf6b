#pragma once

#include "mcmf/cycles.hpp"
#include "mcmf/network.hpp"

namespace mcmf {

// Binary search for the maximum (integer) multiple of a commodity ratio that
// fits through a network with compact reducible capacities.
struct RatioProblem {
  const EnhancedNetwork* net = nullptr;
  Vec ratio;                        // desired ratio, nonzero, nonnegative
  Rat upper;                        // B+, an overestimate of the multiple
  Rat epsilon;                      // > 0; integer mode also requires < 1/2
  bool integer_mode = false;
  bool reducible_declared = false;  // trust the input when checks cannot certify
  BigInt decide_budget = 100000;
};

struct RatioResult {
  Rat lower;                 // B-: feasible, within epsilon of the maximum
  BigInt integer_best = 0;   // P* in integer mode
  ArcAssignment witness;
  int iterations = 0;        // while-loop executions
  Rat upper_used;            // B+ after validation (doubled if needed)
  bool upper_adjusted = false;
  bool reducibility_assumed = false;  // grid-certified or declared only
};

RatioResult ratio_max(const RatioProblem& prob);
RatioResult int_ratio_max(const RatioProblem& prob);

// Iterations the halving loop performs: smallest s with B+ / 2^s <= eps.
int expected_iterations(const Rat& upper, const Rat& eps);

}  // namespace mcmf
