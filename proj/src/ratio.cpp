#include "mcmf/ratio.hpp"

namespace mcmf {
namespace {

void validate(const RatioProblem& prob, RatioResult& res) {
  const EnhancedNetwork& net = *prob.net;
  if (prob.ratio.dim() != net.commodity_count()) throw InputError("ratio dimension mismatch");
  if (prob.ratio.is_zero() || !prob.ratio.nonnegative())
    throw InputError("ratio must be nonzero and nonnegative");
  if (prob.epsilon <= 0) throw InputError("epsilon must be positive");
  if (prob.integer_mode && prob.epsilon >= Rat(1, 2))
    throw InputError("integer mode needs epsilon below 1/2");
  if (prob.upper <= 0) throw InputError("upper bound must be positive");

  for (std::size_t a = 0; a < net.base_arc_count(); ++a) {
    const Region& cap = net.arc(a).capacity;
    if (cap.is_orthant()) throw InputError("capacities must be compact");
    bool ok = is_reducible(cap);
    if (!ok && !prob.reducible_declared)
      throw InputError("arc '" + net.arc(a).id + "' has a non-reducible capacity");
    if (!ok || cap.is_polygonal()) res.reducibility_assumed = true;
    // Point-set checks are exact on the integer sublattice; polygonal checks
    // certify only the grid, so the guarantee stays conditional.
  }
}

DecideResult probe(const RatioProblem& prob, const Rat& multiple) {
  DecideOptions opts;
  opts.budget = prob.decide_budget;
  return decide(*prob.net, prob.ratio * multiple, opts);
}

RatioResult run_search(const RatioProblem& prob) {
  RatioResult res;
  validate(prob, res);

  // The upper bound must be infeasible for the loop invariant to hold;
  // compact capacities guarantee doubling terminates.
  Rat upper = prob.upper;
  DecideResult at_upper = probe(prob, upper);
  while (at_upper.feasible) {
    res.upper_adjusted = true;
    res.lower = upper;
    res.witness = at_upper.witness;
    upper *= 2;
    if (upper > prob.upper * 4096)
      throw InputError("upper bound kept verifying feasible; capacities may be unbounded");
    at_upper = probe(prob, upper);
  }
  res.upper_used = upper;

  Rat lower = res.lower;  // 0 unless doubling already found a feasible multiple
  Rat diff = upper - lower;
  while (diff > prob.epsilon) {
    Rat mid = (upper + lower) / 2;
    DecideResult r = probe(prob, mid);
    if (r.feasible) {
      lower = mid;
      res.witness = r.witness;
    } else {
      upper = mid;
    }
    diff = upper - lower;
    res.iterations += 1;
  }
  res.lower = lower;
  if (res.witness.empty()) {
    // Never probed feasible: the zero flow realizes B- = 0 on reducible
    // capacities; materialize it through the oracle.
    DecideResult z = probe(prob, Rat(0));
    if (z.feasible) res.witness = z.witness;
  }
  return res;
}

}  // namespace

int expected_iterations(const Rat& upper, const Rat& eps) {
  int s = 0;
  Rat d = upper;
  while (d > eps) {
    d /= 2;
    ++s;
  }
  return s;
}

RatioResult ratio_max(const RatioProblem& prob) {
  if (prob.integer_mode) throw InputError("use int_ratio_max for integer mode");
  return run_search(prob);
}

RatioResult int_ratio_max(const RatioProblem& prob) {
  RatioProblem p = prob;
  p.integer_mode = true;
  RatioResult res = run_search(p);

  // EndTest: probe the ceiling; settle on ceil or floor of B-.
  Rat up = Rat(ceil_rat(res.lower));
  DecideResult r = probe(p, up);
  if (r.feasible) {
    res.integer_best = ceil_rat(res.lower);
    res.witness = r.witness;
    res.lower = up;
  } else {
    res.integer_best = floor_rat(res.lower);
    res.lower = Rat(res.integer_best);
    DecideResult w = probe(p, res.lower);
    if (w.feasible) res.witness = w.witness;
  }
  return res;
}

}  // namespace mcmf
