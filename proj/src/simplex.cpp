#include "mcmf/simplex.hpp"

#include <cassert>
#include <cstddef>

namespace mcmf {
namespace {

// Dense tableau. Column layout: [0, n) structurals, [n, n+m) slacks,
// [n+m, n+m+r) artificials. Rows keep rhs >= 0 throughout.
struct Tableau {
  std::size_t n = 0;       // structural variables
  std::size_t m = 0;       // rows
  std::size_t cols = 0;    // total columns
  std::size_t art0 = 0;    // first artificial column
  Matrix rows;             // m x cols
  std::vector<Rat> rhs;    // m
  std::vector<std::size_t> basis;  // basic variable per row

  void pivot(std::size_t pr, std::size_t pc) {
    Rat piv = rows[pr][pc];
    for (auto& v : rows[pr]) v /= piv;
    rhs[pr] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == pr || rows[i][pc] == 0) continue;
      Rat f = rows[i][pc];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[pr][j];
      rhs[i] -= f * rhs[pr];
    }
    basis[pr] = pc;
  }

  // Minimizes cost.x with Bland's rule; cost indexed over all columns.
  // Returns false when unbounded below.
  bool minimize(const std::vector<Rat>& cost, std::size_t col_limit) {
    for (;;) {
      // Reduced costs from scratch: r_j = c_j - sum_i c_{B(i)} rows[i][j].
      std::size_t enter = cols;
      for (std::size_t j = 0; j < col_limit; ++j) {
        bool basic = false;
        for (std::size_t i = 0; i < m && !basic; ++i) basic = (basis[i] == j);
        if (basic) continue;
        Rat red = cost[j];
        for (std::size_t i = 0; i < m; ++i) {
          if (cost[basis[i]] != 0 && rows[i][j] != 0) red -= cost[basis[i]] * rows[i][j];
        }
        if (red < 0) {
          enter = j;
          break;  // Bland: first improving column
        }
      }
      if (enter == cols) return true;
      std::size_t leave = m;
      Rat best;
      for (std::size_t i = 0; i < m; ++i) {
        if (rows[i][enter] <= 0) continue;
        Rat ratio = rhs[i] / rows[i][enter];
        if (leave == m || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  std::vector<Rat> structural_solution() const {
    std::vector<Rat> x(n);
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) x[basis[i]] = rhs[i];
    return x;
  }
};

}  // namespace

LpResult solve_lp(const Matrix& a, const std::vector<Rat>& b, const std::vector<Rat>& c) {
  std::size_t m = a.size(), n = c.size();
  Tableau t;
  t.n = n;
  t.m = m;

  // Count artificials: one per negative-rhs row.
  std::size_t r = 0;
  for (const auto& bi : b)
    if (bi < 0) ++r;
  t.art0 = n + m;
  t.cols = n + m + r;
  t.rows.assign(m, std::vector<Rat>(t.cols));
  t.rhs = b;
  t.basis.assign(m, 0);

  std::size_t art = t.art0;
  for (std::size_t i = 0; i < m; ++i) {
    assert(a[i].size() == n);
    bool flip = (b[i] < 0);
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? -a[i][j] : a[i][j];
    t.rows[i][n + i] = flip ? Rat(-1) : Rat(1);
    if (flip) {
      t.rhs[i] = -t.rhs[i];
      t.rows[i][art] = 1;
      t.basis[i] = art++;
    } else {
      t.basis[i] = n + i;
    }
  }

  if (r > 0) {
    std::vector<Rat> phase1(t.cols);
    for (std::size_t j = t.art0; j < t.cols; ++j) phase1[j] = 1;
    bool ok = t.minimize(phase1, t.cols);
    assert(ok);  // phase 1 is bounded below by 0
    (void)ok;
    Rat infeas = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (t.basis[i] >= t.art0) infeas += t.rhs[i];
    if (infeas != 0) return {LpStatus::kInfeasible, Rat(), {}};
    // Drive remaining artificials out of the basis; rows that cannot pivot
    // are redundant and harmless since their artificial stays fixed at 0
    // and artificial columns are excluded from phase 2.
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis[i] < t.art0) continue;
      for (std::size_t j = 0; j < t.art0; ++j) {
        if (t.rows[i][j] != 0) {
          t.pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<Rat> phase2(t.cols);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = -c[j];  // minimize -c.x
  if (!t.minimize(phase2, t.art0)) return {LpStatus::kUnbounded, Rat(), {}};

  LpResult res;
  res.status = LpStatus::kOptimal;
  res.x = t.structural_solution();
  res.objective = 0;
  for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
  return res;
}

LpResult maximize_free(const Matrix& a, const std::vector<Rat>& b, const std::vector<Rat>& c) {
  // Split x = u - w with u, w >= 0.
  std::size_t m = a.size(), n = c.size();
  Matrix a2(m, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a2[i][j] = a[i][j];
      a2[i][n + j] = -a[i][j];
    }
  std::vector<Rat> c2(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    c2[j] = c[j];
    c2[n + j] = -c[j];
  }
  LpResult inner = solve_lp(a2, b, c2);
  if (inner.status != LpStatus::kOptimal) return {inner.status, Rat(), {}};
  LpResult res;
  res.status = LpStatus::kOptimal;
  res.objective = inner.objective;
  res.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) res.x[j] = inner.x[j] - inner.x[n + j];
  return res;
}

std::optional<std::vector<Rat>> feasible_point(const Matrix& a, const std::vector<Rat>& b) {
  std::size_t n = a.empty() ? 0 : a[0].size();
  LpResult res = maximize_free(a, b, std::vector<Rat>(n));
  if (res.status != LpStatus::kOptimal) return std::nullopt;
  return res.x;
}

bool strict_feasible(const Matrix& ac, const std::vector<Rat>& bc, const Matrix& as,
                     const std::vector<Rat>& bs) {
  // max d  s.t.  Ac x <= bc,  As x + d <= bs,  d <= 1.  Strictly feasible
  // iff the optimum is positive (finitely many constraints admit a common
  // positive slack whenever each can be made strict).
  std::size_t n = 0;
  if (!ac.empty()) n = ac[0].size();
  if (!as.empty()) n = as[0].size();
  Matrix a;
  std::vector<Rat> b;
  for (std::size_t i = 0; i < ac.size(); ++i) {
    auto row = ac[i];
    row.push_back(0);
    a.push_back(std::move(row));
    b.push_back(bc[i]);
  }
  for (std::size_t i = 0; i < as.size(); ++i) {
    auto row = as[i];
    row.push_back(1);
    a.push_back(std::move(row));
    b.push_back(bs[i]);
  }
  std::vector<Rat> cap(n + 1);
  cap[n] = 1;
  a.push_back(cap);
  b.push_back(Rat(1));
  std::vector<Rat> obj(n + 1);
  obj[n] = 1;
  LpResult res = maximize_free(a, b, obj);
  return res.status == LpStatus::kOptimal && res.objective > 0;
}

}  // namespace mcmf
