#pragma once

#include <vector>

#include "linprog.hpp"
#include "rational.hpp"

namespace cohera {

// Finitely generated closed convex cones in Q^dim, represented by raw
// coordinate vectors. Strictness (open cones, posi's lambda > 0) is not this
// layer's business: callers encode it on top of closed-cone answers.
//
// Canonical form for every returned generator/normal list: each vector scaled
// to coprime integer entries (positive scaling only), list sorted
// lexicographically, duplicates removed. The conversion is an incremental
// double description on the pointed quotient (lineality split off first),
// inserting constraints in lexicographic order and testing ray adjacency by
// rank, so outputs are deterministic.

// Generators of the cone {x : <row, x> >= 0 for every row}.
std::vector<Vec> dual_rays(std::vector<Vec> rows, int dim);

// H-representation of the closed cone spanned by gens (normals h: <h,x> >= 0).
std::vector<Vec> v_to_h(const std::vector<Vec>& gens, int dim);

// Generators of the closed cone cut out by halfspace normals.
std::vector<Vec> h_to_v(const std::vector<Vec>& halfspaces, int dim);

struct ConeMembership {
  bool member = false;
  Vec coeffs;  // one non-negative coefficient per generator when member
};

// Is f in the closed conic hull of gens? f = 0 is rejected (ZeroQueriedHere):
// the zero gamble's status is a posi question, not a closed-cone one.
ConeMembership cone_member(const std::vector<Vec>& gens, const Vec& f);

// True iff 0 is a *convex* combination of gens (sum of weights = 1), i.e. the
// positive hull of gens contains 0.
bool zero_in_posi(const std::vector<Vec>& gens, Vec* coeffs_out = nullptr);

// Generators of cone(gens) ∩ {x : <e, x> = 0 for each equation e}.
std::vector<Vec> cone_intersect_subspace(const std::vector<Vec>& gens,
                                         const std::vector<Vec>& equations,
                                         int dim);

// --- exact linear algebra helpers (shared with tests) ---

// Reduced row echelon form in place; returns pivot column per rank row.
// Rows below the rank come out zero.
std::vector<int> rref_inplace(std::vector<Vec>& rows, int dim);
int rank_of(std::vector<Vec> rows, int dim);
// Canonical nullspace basis (one vector per free column of the RREF).
std::vector<Vec> nullspace_basis(std::vector<Vec> rows, int dim);

}  // namespace cohera
