#include "linprog.hpp"

#include <algorithm>

#include "errors.hpp"

namespace cohera {

namespace {

// Dense tableau in the standard equality form A x = b, x >= 0, b >= 0,
// kept reduced so that the basis columns form an identity.
struct Tableau {
  int n_struct = 0;  // structural variables (prefix of the column range)
  int n_cols = 0;
  std::vector<Vec> rows;
  Vec b;
  std::vector<int> basis;  // one variable index per row

  Vec rc;       // reduced costs of the current objective
  Rational z;   // current objective value

  void pivot(int r, int j) {
    const Rational piv = rows[r][j];
    for (auto& x : rows[r]) x /= piv;
    b[r] /= piv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][j] == 0) continue;
      const Rational f = rows[i][j];
      for (int k = 0; k < n_cols; ++k) rows[i][k] -= f * rows[r][k];
      b[i] -= f * b[r];
    }
    if (rc[j] != 0) {
      const Rational f = rc[j];
      for (int k = 0; k < n_cols; ++k) rc[k] -= f * rows[r][k];
      z += f * b[r];
    }
    basis[r] = j;
  }

  // Installs `cost` (padded to n_cols) as the objective to maximize and
  // reduces it against the current basis.
  void set_objective(const Vec& cost) {
    rc.assign(n_cols, Rational(0));
    std::copy(cost.begin(), cost.end(), rc.begin());
    z = 0;
    for (size_t r = 0; r < rows.size(); ++r) {
      const Rational f = rc[basis[r]];
      if (f == 0) continue;
      for (int k = 0; k < n_cols; ++k) rc[k] -= f * rows[r][k];
      z += f * b[r];
    }
  }

  // Bland's rule; columns >= col_limit are never entered.
  // Returns kFeasible at optimum, kUnbounded with the entering column in
  // *ray_col when no ratio bounds the step.
  LpResult::Status maximize(int col_limit, int* ray_col) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < col_limit; ++j) {
        if (rc[j] > 0) { enter = j; break; }
      }
      if (enter < 0) return LpResult::Status::kFeasible;
      int leave = -1;
      Rational best;
      for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        if (rows[r][enter] <= 0) continue;
        Rational ratio = b[r] / rows[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) {
        if (ray_col) *ray_col = enter;
        return LpResult::Status::kUnbounded;
      }
      pivot(leave, enter);
    }
  }

  Vec structural_point() const {
    Vec x(n_struct, Rational(0));
    for (size_t r = 0; r < rows.size(); ++r)
      if (basis[r] < n_struct) x[basis[r]] = b[r];
    return x;
  }

  Vec structural_ray(int enter) const {
    Vec d(n_struct, Rational(0));
    if (enter < n_struct) d[enter] = 1;
    for (size_t r = 0; r < rows.size(); ++r)
      if (basis[r] < n_struct) d[basis[r]] = -rows[r][enter];
    return d;
  }
};

}  // namespace

LpResult lp_solve(int num_vars, const std::vector<LinCon>& cons,
                  const Vec* maximize) {
  if (num_vars < 0) fail(Errc::kDimensionMismatch, "lp: negative dimension");
  for (const auto& c : cons)
    if (static_cast<int>(c.a.size()) != num_vars)
      fail(Errc::kDimensionMismatch, "lp: constraint width mismatch");
  if (maximize && static_cast<int>(maximize->size()) != num_vars)
    fail(Errc::kDimensionMismatch, "lp: objective width mismatch");

  const int m = static_cast<int>(cons.size());
  int n_slack = 0;
  for (const auto& c : cons)
    if (c.rel != Rel::kEq) ++n_slack;

  Tableau t;
  t.n_struct = num_vars;
  const int slack0 = num_vars;
  const int art0 = num_vars + n_slack;

  // Assemble rows with slacks; flip signs to make every rhs non-negative.
  std::vector<int> art_rows;
  {
    int next_slack = slack0;
    t.n_cols = art0;  // artificials appended below as needed
    for (int i = 0; i < m; ++i) {
      Vec row(art0, Rational(0));
      std::copy(cons[i].a.begin(), cons[i].a.end(), row.begin());
      Rational rhs = cons[i].b;
      int slack = -1;
      if (cons[i].rel != Rel::kEq) {
        slack = next_slack++;
        row[slack] = cons[i].rel == Rel::kLe ? 1 : -1;
      }
      if (rhs < 0) {
        for (auto& x : row) x = -x;
        rhs = -rhs;
      }
      t.rows.push_back(std::move(row));
      t.b.push_back(rhs);
      if (slack >= 0 && t.rows.back()[slack] > 0) {
        t.basis.push_back(slack);
      } else {
        t.basis.push_back(-1);  // needs an artificial
        art_rows.push_back(i);
      }
    }
    // Append one artificial column per uncovered row.
    const int n_art = static_cast<int>(art_rows.size());
    t.n_cols = art0 + n_art;
    for (auto& row : t.rows) row.resize(t.n_cols, Rational(0));
    for (int k = 0; k < n_art; ++k) {
      t.rows[art_rows[k]][art0 + k] = 1;
      t.basis[art_rows[k]] = art0 + k;
    }
  }

  LpResult res;

  if (!art_rows.empty()) {
    Vec phase1(t.n_cols, Rational(0));
    for (int j = art0; j < t.n_cols; ++j) phase1[j] = -1;
    t.set_objective(phase1);
    t.maximize(t.n_cols, nullptr);  // bounded: objective <= 0
    if (t.z != 0) {
      res.status = LpResult::Status::kInfeasible;
      return res;
    }
    // Pivot leftover zero-level artificials out; rows that cannot release
    // one are dependent and get dropped.
    for (int r = static_cast<int>(t.rows.size()) - 1; r >= 0; --r) {
      if (t.basis[r] < art0) continue;
      int j = 0;
      while (j < art0 && t.rows[r][j] == 0) ++j;
      if (j < art0) {
        t.pivot(r, j);
      } else {
        t.rows.erase(t.rows.begin() + r);
        t.b.erase(t.b.begin() + r);
        t.basis.erase(t.basis.begin() + r);
      }
    }
  }

  if (!maximize) {
    res.status = LpResult::Status::kFeasible;
    res.point = t.structural_point();
    res.value = 0;
    return res;
  }

  t.set_objective(*maximize);
  int ray_col = -1;
  const auto status = t.maximize(art0, &ray_col);
  if (status == LpResult::Status::kUnbounded) {
    res.status = status;
    res.point = t.structural_point();
    res.ray = t.structural_ray(ray_col);
    return res;
  }
  res.status = LpResult::Status::kFeasible;
  res.point = t.structural_point();
  res.value = t.z;
  return res;
}

bool lp_satisfies(int num_vars, const std::vector<LinCon>& cons, const Vec& x) {
  if (static_cast<int>(x.size()) != num_vars) return false;
  for (const auto& v : x)
    if (v < 0) return false;
  for (const auto& c : cons) {
    const Rational lhs = vec_dot(c.a, x);
    if (c.rel == Rel::kEq && lhs != c.b) return false;
    if (c.rel == Rel::kLe && lhs > c.b) return false;
    if (c.rel == Rel::kGe && lhs < c.b) return false;
  }
  return true;
}

}  // namespace cohera
