#pragma once

#include <optional>
#include <vector>

#include "mcmf/rational.hpp"

namespace mcmf {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rat objective;
  std::vector<Rat> x;
};

using Matrix = std::vector<std::vector<Rat>>;

// max c.x  subject to  A x <= b, x >= 0. Exact two-phase simplex, Bland's rule.
LpResult solve_lp(const Matrix& a, const std::vector<Rat>& b, const std::vector<Rat>& c);

// max c.x subject to A x <= b with x free (no sign restriction).
LpResult maximize_free(const Matrix& a, const std::vector<Rat>& b, const std::vector<Rat>& c);

// A point satisfying A x <= b with x free, if one exists.
std::optional<std::vector<Rat>> feasible_point(const Matrix& a, const std::vector<Rat>& b);

// Whether the mixed system  Ac x <= bc  and  As x < bs  admits a solution (x free).
bool strict_feasible(const Matrix& ac, const std::vector<Rat>& bc, const Matrix& as,
                     const std::vector<Rat>& bs);

}  // namespace mcmf
