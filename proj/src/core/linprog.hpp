#pragma once

#include <vector>

#include "rational.hpp"

namespace cohera {

// Exact rational linear programming over variables x >= 0.
//
// Two-phase primal simplex on a dense tableau, pivoting with Bland's rule so
// termination is unconditional. Everything is mpq arithmetic: verdicts are
// decisions, not approximations, and witnesses re-substitute exactly.

enum class Rel { kEq, kLe, kGe };

struct LinCon {
  Vec a;       // coefficient per variable
  Rel rel;
  Rational b;
};

struct LpResult {
  enum class Status { kInfeasible, kFeasible, kUnbounded };
  Status status = Status::kInfeasible;
  Vec point;       // feasible point; a maximizer when an objective was given
  Vec ray;         // kUnbounded: recession direction with objective growth > 0
  Rational value;  // objective at point (0 when no objective was given)
};

// Maximizes `maximize` (or just finds a point when null) over
// { x >= 0 : cons }. Throws DimensionMismatch on ragged input.
LpResult lp_solve(int num_vars, const std::vector<LinCon>& cons,
                  const Vec* maximize);

inline LpResult lp_feasible(int num_vars, const std::vector<LinCon>& cons) {
  return lp_solve(num_vars, cons, nullptr);
}

// Exact re-check that x >= 0 and x satisfies every constraint.
bool lp_satisfies(int num_vars, const std::vector<LinCon>& cons, const Vec& x);

}  // namespace cohera
