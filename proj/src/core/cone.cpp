#include "cone.hpp"

#include <algorithm>

#include "errors.hpp"

namespace cohera {

namespace {

void require_widths(const std::vector<Vec>& vs, int dim, const char* where) {
  for (const auto& v : vs)
    if (static_cast<int>(v.size()) != dim)
      fail(Errc::kSpaceMismatch, std::string(where) + ": vector width mismatch");
}

// Canonicalize + lex-sort + dedupe, dropping zero vectors.
std::vector<Vec> canonical_list(std::vector<Vec> vs) {
  std::vector<Vec> out;
  for (auto& v : vs) {
    if (vec_is_zero(v)) continue;
    vec_canonicalize(v);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), vec_lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Multiplies the k x dim matrix Q by x: rows of Q against x.
Vec apply_rows(const std::vector<Vec>& q, const Vec& x) {
  Vec out(q.size());
  for (size_t i = 0; i < q.size(); ++i) out[i] = vec_dot(q[i], x);
  return out;
}

// x = Q^T y for the k x dim matrix Q.
Vec lift_through(const std::vector<Vec>& q, const Vec& y, int dim) {
  Vec out(dim, Rational(0));
  for (size_t i = 0; i < q.size(); ++i)
    for (int j = 0; j < dim; ++j) out[j] += y[i] * q[i][j];
  return out;
}

std::vector<Vec> invert_square(std::vector<Vec> m) {
  const int k = static_cast<int>(m.size());
  std::vector<Vec> inv(k, Vec(k, Rational(0)));
  for (int i = 0; i < k; ++i) inv[i][i] = 1;
  for (int col = 0; col < k; ++col) {
    int piv = col;
    while (piv < k && m[piv][col] == 0) ++piv;
    if (piv == k) fail(Errc::kDimensionMismatch, "invert: singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Rational d = m[col][col];
    for (int j = 0; j < k; ++j) { m[col][j] /= d; inv[col][j] /= d; }
    for (int i = 0; i < k; ++i) {
      if (i == col || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (int j = 0; j < k; ++j) {
        m[i][j] -= f * m[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

struct DDRay {
  Vec y;                       // coordinates in the pointed quotient
  std::vector<Rational> dots;  // <a'_i, y> for every constraint row
};

}  // namespace

std::vector<int> rref_inplace(std::vector<Vec>& rows, int dim) {
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < dim && r < static_cast<int>(rows.size()); ++col) {
    int sel = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    const Rational d = rows[r][col];
    for (int j = 0; j < dim; ++j) rows[r][j] /= d;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (int j = 0; j < dim; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);  // keep only the rank rows; the rest are zero
  return pivots;
}

int rank_of(std::vector<Vec> rows, int dim) {
  return static_cast<int>(rref_inplace(rows, dim).size());
}

std::vector<Vec> nullspace_basis(std::vector<Vec> rows, int dim) {
  const std::vector<int> pivots = rref_inplace(rows, dim);
  std::vector<bool> is_pivot(dim, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    Vec v(dim, Rational(0));
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> dual_rays(std::vector<Vec> rows, int dim) {
  require_widths(rows, dim, "dual_rays");
  rows = canonical_list(std::move(rows));
  const int m = static_cast<int>(rows.size());

  // Lineality space: vectors orthogonal to every constraint row.
  std::vector<Vec> lin = nullspace_basis(rows, dim);
  std::vector<Vec> result;
  for (const auto& l : lin) {
    result.push_back(l);
    result.push_back(vec_neg(l));
  }

  // Pointed part lives in the row space; parametrize it by the RREF basis Q,
  // where the quotient constraints a'_i = Q a_i have full column rank k.
  std::vector<Vec> q = rows;
  rref_inplace(q, dim);
  const int k = static_cast<int>(q.size());
  if (k == 0) return canonical_list(std::move(result));

  std::vector<Vec> a(m);
  for (int i = 0; i < m; ++i) a[i] = apply_rows(q, rows[i]);

  // Initial simplicial cone from the lexicographically first k independent
  // constraints; its extreme rays are the columns of the inverse basis.
  std::vector<int> init;
  {
    std::vector<Vec> echelon;
    for (int i = 0; i < m && static_cast<int>(init.size()) < k; ++i) {
      std::vector<Vec> trial = echelon;
      trial.push_back(a[i]);
      if (rank_of(trial, k) > static_cast<int>(echelon.size())) {
        echelon = std::move(trial);
        rref_inplace(echelon, k);
        init.push_back(i);
      }
    }
  }
  std::vector<Vec> binv;
  {
    std::vector<Vec> b(k);
    for (int j = 0; j < k; ++j) b[j] = a[init[j]];
    binv = invert_square(std::move(b));
  }

  std::vector<DDRay> rays;
  for (int j = 0; j < k; ++j) {
    DDRay r;
    r.y.resize(k);
    for (int i = 0; i < k; ++i) r.y[i] = binv[i][j];
    vec_canonicalize(r.y);
    r.dots.resize(m);
    for (int i = 0; i < m; ++i) r.dots[i] = vec_dot(a[i], r.y);
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(m, false);
  for (int i : init) processed[i] = true;

  // Rays r, r' of the pointed cone are adjacent iff the constraints active at
  // both have rank k - 2 (their minimal common face is two-dimensional).
  auto adjacent = [&](const DDRay& p, const DDRay& n) {
    std::vector<Vec> common;
    for (int i = 0; i < m; ++i)
      if (processed[i] && p.dots[i] == 0 && n.dots[i] == 0)
        common.push_back(a[i]);
    if (static_cast<int>(common.size()) < k - 2) return false;
    return rank_of(std::move(common), k) == k - 2;
  };

  for (int cur = 0; cur < m; ++cur) {
    if (processed[cur]) continue;
    std::vector<DDRay> pos, neg, zero;
    for (auto& r : rays) {
      const Rational& s = r.dots[cur];
      if (s > 0) pos.push_back(std::move(r));
      else if (s < 0) neg.push_back(std::move(r));
      else zero.push_back(std::move(r));
    }
    std::vector<DDRay> fresh;
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        if (k > 2 && !adjacent(p, n)) continue;
        DDRay w;
        w.y.resize(k);
        for (int i = 0; i < k; ++i)
          w.y[i] = p.dots[cur] * n.y[i] - n.dots[cur] * p.y[i];
        vec_canonicalize(w.y);
        w.dots.resize(m);
        for (int i = 0; i < m; ++i) w.dots[i] = vec_dot(a[i], w.y);
        fresh.push_back(std::move(w));
      }
    }
    rays.clear();
    for (auto& r : pos) rays.push_back(std::move(r));
    for (auto& r : zero) rays.push_back(std::move(r));
    for (auto& r : fresh) rays.push_back(std::move(r));
    processed[cur] = true;
  }

  for (const auto& r : rays) result.push_back(lift_through(q, r.y, dim));
  return canonical_list(std::move(result));
}

std::vector<Vec> v_to_h(const std::vector<Vec>& gens, int dim) {
  require_widths(gens, dim, "v_to_h");
  return dual_rays(gens, dim);
}

std::vector<Vec> h_to_v(const std::vector<Vec>& halfspaces, int dim) {
  require_widths(halfspaces, dim, "h_to_v");
  return dual_rays(halfspaces, dim);
}

ConeMembership cone_member(const std::vector<Vec>& gens, const Vec& f) {
  const int dim = static_cast<int>(f.size());
  require_widths(gens, dim, "cone_member");
  if (vec_is_zero(f))
    fail(Errc::kZeroQueriedHere, "cone_member: query zero_in_posi for 0");
  const int n = static_cast<int>(gens.size());
  std::vector<LinCon> cons;
  for (int w = 0; w < dim; ++w) {
    LinCon c;
    c.a.resize(n);
    for (int j = 0; j < n; ++j) c.a[j] = gens[j][w];
    c.rel = Rel::kEq;
    c.b = f[w];
    cons.push_back(std::move(c));
  }
  const LpResult lp = lp_feasible(n, cons);
  ConeMembership out;
  out.member = lp.status == LpResult::Status::kFeasible;
  if (out.member) out.coeffs = lp.point;
  return out;
}

bool zero_in_posi(const std::vector<Vec>& gens, Vec* coeffs_out) {
  if (gens.empty()) return false;
  const int dim = static_cast<int>(gens[0].size());
  require_widths(gens, dim, "zero_in_posi");
  const int n = static_cast<int>(gens.size());
  std::vector<LinCon> cons;
  for (int w = 0; w < dim; ++w) {
    LinCon c;
    c.a.resize(n);
    for (int j = 0; j < n; ++j) c.a[j] = gens[j][w];
    c.rel = Rel::kEq;
    c.b = 0;
    cons.push_back(std::move(c));
  }
  LinCon convex;
  convex.a.assign(n, Rational(1));
  convex.rel = Rel::kEq;
  convex.b = 1;
  cons.push_back(std::move(convex));
  const LpResult lp = lp_feasible(n, cons);
  if (lp.status != LpResult::Status::kFeasible) return false;
  if (coeffs_out) *coeffs_out = lp.point;
  return true;
}

std::vector<Vec> cone_intersect_subspace(const std::vector<Vec>& gens,
                                         const std::vector<Vec>& equations,
                                         int dim) {
  require_widths(gens, dim, "cone_intersect_subspace");
  require_widths(equations, dim, "cone_intersect_subspace");
  std::vector<Vec> halves = v_to_h(gens, dim);
  for (const auto& e : equations) {
    halves.push_back(e);
    halves.push_back(vec_neg(e));
  }
  return h_to_v(halves, dim);
}

}  // namespace cohera
