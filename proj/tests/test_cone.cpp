#include <doctest.h>

#include <algorithm>

#include "core/cone.hpp"
#include "core/sampling.hpp"

using namespace cohera;

namespace {

Vec v2(int a, int b) { return {Rational(a), Rational(b)}; }
Vec v3(int a, int b, int c) { return {Rational(a), Rational(b), Rational(c)}; }

bool contains_direction(const std::vector<Vec>& rays, Vec v) {
  vec_canonicalize(v);
  return std::any_of(rays.begin(), rays.end(), [&](Vec r) {
    vec_canonicalize(r);
    return r == v;
  });
}

bool all_normals_accept(const std::vector<Vec>& normals, const Vec& v) {
  return std::all_of(normals.begin(), normals.end(),
                     [&](const Vec& n) { return vec_dot(n, v) >= 0; });
}

}  // namespace

TEST_CASE("cone membership with explicit generators") {
  CHECK(cone_member({v3(1, -1, 0)}, v3(2, -2, 0)).member);
  CHECK_FALSE(cone_member({v3(1, -1, 0)}, v3(1, 1, 0)).member);
  CHECK_FALSE(cone_member({}, v3(0, 1, 0)).member);
  CHECK_FALSE(cone_member({}, v3(1, -1, 0)).member);
}

TEST_CASE("zero lies in posi exactly when the generators admit a nontrivial "
          "non-negative dependency") {
  CHECK(zero_in_posi({v3(1, -1, 0), v3(-1, 1, 0)}));
  CHECK_FALSE(zero_in_posi({v3(1, -1, 0)}));
  CHECK(zero_in_posi({v3(1, -1, 0), v3(-2, 2, 0)}));
  Vec coeffs;
  REQUIRE(zero_in_posi({v3(1, -1, 0), v3(-2, 2, 0)}, &coeffs));
  // Witness re-check: coefficients non-negative, not all zero, sum to zero.
  REQUIRE(coeffs.size() == 2);
  CHECK(coeffs[0] >= 0);
  CHECK(coeffs[1] >= 0);
  CHECK_FALSE(vec_is_zero(coeffs));
  CHECK(vec_add(vec_scale(coeffs[0], v3(1, -1, 0)),
                vec_scale(coeffs[1], v3(-2, 2, 0))) == v3(0, 0, 0));
}

TEST_CASE("generator-to-halfspace conversion: first quadrant") {
  const auto normals = v_to_h({v2(1, 0), v2(0, 1)}, 2);
  CHECK(all_normals_accept(normals, v2(1, 0)));
  CHECK(all_normals_accept(normals, v2(0, 1)));
  CHECK(all_normals_accept(normals, v2(3, 5)));
  CHECK_FALSE(all_normals_accept(normals, v2(-1, 0)));
  CHECK_FALSE(all_normals_accept(normals, v2(1, -1)));
}

TEST_CASE("generator-to-halfspace conversion: a single ray is a line cut "
          "down to a halfline") {
  const auto normals = v_to_h({v2(1, 1)}, 2);
  CHECK(all_normals_accept(normals, v2(1, 1)));
  CHECK(all_normals_accept(normals, v2(2, 2)));
  CHECK_FALSE(all_normals_accept(normals, v2(-1, -1)));
  CHECK_FALSE(all_normals_accept(normals, v2(1, 0)));
  CHECK_FALSE(all_normals_accept(normals, v2(0, 1)));
  CHECK_FALSE(all_normals_accept(normals, v2(1, 2)));
}

TEST_CASE("generator-to-halfspace conversion: empty generator list describes "
          "the origin alone") {
  const auto normals = v_to_h({}, 2);
  CHECK(all_normals_accept(normals, v2(0, 0)));
  const Vec probes[] = {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1), v2(1, 1),
                        v2(-1, -1), v2(1, -1)};
  for (const Vec& p : probes) CHECK_FALSE(all_normals_accept(normals, p));
  // And converting back yields no nonzero ray.
  CHECK(h_to_v(normals, 2).empty());
}

TEST_CASE("halfspace-to-generator conversion") {
  const auto quadrant = h_to_v({v2(1, 0), v2(0, 1)}, 2);
  CHECK(contains_direction(quadrant, v2(1, 0)));
  CHECK(contains_direction(quadrant, v2(0, 1)));
  CHECK(quadrant.size() == 2);

  const auto diagonal = h_to_v({v2(1, -1), v2(-1, 1)}, 2);
  CHECK(contains_direction(diagonal, v2(1, 1)));
  CHECK(contains_direction(diagonal, v2(-1, -1)));

  const auto everything = h_to_v({}, 2);
  for (const Vec& d : {v2(1, 0), v2(-1, 0), v2(0, 1), v2(0, -1)})
    CHECK(cone_member(everything, d).member);
}

TEST_CASE("round trip preserves the cone as a set") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 2 + static_cast<int>(rng.below(2));
    std::vector<Vec> gens;
    const int k = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < k; ++i) gens.push_back(rng.nonzero_coords(dim));
    const auto back = h_to_v(v_to_h(gens, dim), dim);
    for (const auto& g : gens) CHECK(cone_member(back, g).member);
    for (const auto& r : back) {
      if (vec_is_zero(r)) continue;
      CHECK(cone_member(gens, r).member);
    }
  }
}

TEST_CASE("intersecting a cone with a measurability subspace") {
  // {(1,0),(0,1)} cut by x = y leaves the diagonal ray.
  const auto diag =
      cone_intersect_subspace({v2(1, 0), v2(0, 1)}, {v2(1, -1)}, 2);
  REQUIRE_FALSE(diag.empty());
  CHECK(contains_direction(diag, v2(1, 1)));
  for (const auto& g : diag) CHECK(vec_dot(v2(1, -1), g) == 0);

  // The audited 3d example: constraints f(a) = f(b).
  const std::vector<Vec> gens = {v3(1, 1, -1), v3(0, 0, 1), v3(1, 0, 0),
                                 v3(0, 1, 0)};
  const auto cut = cone_intersect_subspace(gens, {v3(1, -1, 0)}, 3);
  CHECK(cone_member(cut, v3(1, 1, -1)).member);
  CHECK(cone_member(cut, v3(1, 1, 0)).member);
  // Audit: every reported generator is measurable and in the original cone.
  for (const auto& g : cut) {
    CHECK(vec_dot(v3(1, -1, 0), g) == 0);
    CHECK(cone_member(gens, g).member);
  }
  // Nothing outside the plane, nothing outside the cone.
  CHECK_FALSE(cone_member(cut, v3(1, 0, 0)).member);
  CHECK_FALSE(cone_member(cut, v3(-1, -1, 0)).member);

  // A ray that misses the diagonal leaves only the origin.
  CHECK(cone_intersect_subspace({v2(1, -1)}, {v2(1, -1)}, 2).empty());
}

TEST_CASE("row reduction, rank, and nullspace") {
  std::vector<Vec> rows = {v3(1, 2, 3), v3(2, 4, 6), v3(0, 1, 1)};
  CHECK(rank_of(rows, 3) == 2);
  const auto ns = nullspace_basis(rows, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : rows) CHECK(vec_dot(row, ns[0]) == 0);
  CHECK(rank_of({}, 3) == 0);
  CHECK(nullspace_basis({}, 2).size() == 2);
}
