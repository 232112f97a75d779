#include "algebra.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

#include "cone.hpp"
#include "errors.hpp"
#include "linprog.hpp"

namespace cohera {

const SetRep* AlgebraModel::find_set(const std::string& name) const {
  for (const auto& [n, d] : sets)
    if (n == name) return &d;
  return nullptr;
}

const std::vector<int>* AlgebraModel::find_event(const std::string& name) const {
  for (const auto& [n, e] : events)
    if (n == name) return &e;
  return nullptr;
}

SetRep combine(const SetRep& d1, const SetRep& d2) {
  require_same_space(d1.space(), d2.space(), "combine");
  using K = SetRep::Kind;
  if (d1.is_top() || d2.is_top()) return SetRep::top(d1.space());
  if (d1.kind() == K::kUnit) return d2;
  if (d2.kind() == K::kUnit) return d1;

  // A maximal atom absorbs anything it contains and blows up to Top
  // otherwise: adding a gamble g outside a maximal M puts -g and g in the
  // union, so the closure of the union holds 0.
  if (d1.kind() == K::kLexAtom || d2.kind() == K::kLexAtom) {
    const SetRep& m = d1.kind() == K::kLexAtom ? d1 : d2;
    const SetRep& o = d1.kind() == K::kLexAtom ? d2 : d1;
    return leq(o, m) ? m : SetRep::top(d1.space());
  }

  if (d1.kind() == K::kAssertions && d2.kind() == K::kAssertions) {
    std::vector<Vec> gens = d1.generators();
    const auto& more = d2.generators();
    gens.insert(gens.end(), more.begin(), more.end());
    return SetRep::closure(d1.space(), std::move(gens));
  }
  if (d1.kind() == K::kEventSet && d2.kind() == K::kEventSet)
    return SetRep::event_set(d1.space(),
                             event_intersect(d1.event(), d2.event()));

  // Mixed pairs resolve when one side already contains the other (then the
  // closure of the union is the bigger side).
  auto contains = [](const SetRep& big, const SetRep& small) -> std::optional<bool> {
    try {
      return leq(small, big);
    } catch (const Error& e) {
      if (e.code() == Errc::kUnsupported) return std::nullopt;
      throw;
    }
  };
  if (auto in1 = contains(d1, d2); in1 && *in1) return d1;
  if (auto in2 = contains(d2, d1); in2 && *in2) return d2;
  fail(Errc::kUnsupported,
       "combine: no closed form for " + d1.describe() + " with " + d2.describe());
}

SetRep extract(const SetRep& d, const Partition& x) {
  require_same_space(d.space(), x.space(), "extract");
  using K = SetRep::Kind;
  switch (d.kind()) {
    case K::kTop:
      // The measurable part of L still holds 0, so its closure is L again.
      return d;
    case K::kUnit:
      // Measurable non-negative gambles close back to all of L+.
      return d;
    case K::kAssertions: {
      std::vector<Vec> gens = d.generators();
      auto inds = singleton_indicators(d.space()->size());
      gens.insert(gens.end(), inds.begin(), inds.end());
      auto meas = cone_intersect_subspace(gens, measurability_equations(x),
                                          d.space()->size());
      return SetRep::closure(d.space(), std::move(meas));
    }
    case K::kEventSet:
      return SetRep::event_set(d.space(), event_saturate(d.event(), x));
    case K::kLexAtom:
      return SetRep::extract_of_atom(d, x);
    case K::kSymbolicExtract:
      // Extraction already happened at d's question; any finer question
      // leaves it unchanged (the question is a support), the bottom one
      // erases everything but L+.
      if (partition_leq(d.question(), x)) return d;
      if (x.is_bottom()) return SetRep::unit(d.space());
      fail(Errc::kUnsupported,
           "extract: atom extraction at an incomparable question");
  }
  fail(Errc::kUnsupported, "extract: unhandled representation");
}

bool extract_member_oracle(const SpacePtr& space, const std::vector<Vec>& K,
                           const Partition& x, const Vec& f) {
  const int n = space->size();
  require_same_space(space, x.space(), "extract_member_oracle");
  if (static_cast<int>(f.size()) != n)
    fail(Errc::kDimensionMismatch, "extract_member_oracle: gamble width");
  if (vec_is_zero(f))
    fail(Errc::kZeroGambleQuery, "membership of the zero gamble is the coherence question");
  if (is_nonneg_nonzero(f)) return true;

  std::vector<Vec> gens = K;
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != n)
      fail(Errc::kDimensionMismatch, "extract_member_oracle: generator width");
  auto inds = singleton_indicators(n);
  gens.insert(gens.end(), inds.begin(), inds.end());
  const int m = static_cast<int>(gens.size());

  // One feasibility program: f = g + h with g a measurable cone element and
  // h >= 0, i.e. exists lambda >= 0 with sum lambda_j g_j measurable and
  // <= f pointwise. f has a negative coordinate here, so any solution's g is
  // nonzero automatically.
  std::vector<LinCon> cons;
  for (const Vec& e : measurability_equations(x)) {
    LinCon c;
    c.rel = Rel::kEq;
    c.b = 0;
    c.a.assign(m, Rational(0));
    for (int j = 0; j < m; ++j) c.a[j] = vec_dot(e, gens[j]);
    cons.push_back(std::move(c));
  }
  for (int w = 0; w < n; ++w) {
    LinCon c;
    c.rel = Rel::kLe;
    c.b = f[w];
    c.a.assign(m, Rational(0));
    for (int j = 0; j < m; ++j) c.a[j] = gens[j][w];
    cons.push_back(std::move(c));
  }
  return lp_feasible(m, cons).status == LpResult::Status::kFeasible;
}

std::optional<int> find_support(const SetRep& d, const QuestionLattice& lattice) {
  if (lattice.size() > 0)
    require_same_space(d.space(), lattice.space(), "find_support");
  for (int id : lattice.canonical_order()) {
    try {
      SetRep e = extract(d, lattice.at(id));
      if (set_equal(e, d)) return id;
    } catch (const Error& e) {
      if (e.code() != Errc::kUnsupported) throw;
    }
  }
  return std::nullopt;
}

namespace {

// Decision wrappers: nullopt marks "outside the closed-form fragment".
std::optional<SetRep> try_combine(const SetRep& a, const SetRep& b) {
  try {
    return combine(a, b);
  } catch (const Error& e) {
    if (e.code() == Errc::kUnsupported) return std::nullopt;
    throw;
  }
}

std::optional<bool> try_equal(const SetRep& a, const SetRep& b) {
  if (a.same_rep(b)) return true;
  try {
    return set_equal(a, b);
  } catch (const Error& e) {
    if (e.code() == Errc::kUnsupported) return std::nullopt;
    throw;
  }
}

std::optional<bool> try_leq(const SetRep& a, const SetRep& b) {
  try {
    return leq(a, b);
  } catch (const Error& e) {
    if (e.code() == Errc::kUnsupported) return std::nullopt;
    throw;
  }
}

}  // namespace

Report axiom_suite(const AlgebraModel& model, int n_samples, std::uint64_t seed) {
  Report r;
  r.suite = "axioms";
  const SpacePtr& space = model.space;
  const QuestionLattice& lat = model.lattice;
  const int Q = lat.size();

  std::vector<std::pair<std::string, SetRep>> pool(model.sets.begin(),
                                                   model.sets.end());
  SetRep unit = SetRep::unit(space);
  SetRep top = SetRep::top(space);
  auto pooled = [&pool](const SetRep& d) {
    for (const auto& [n, p] : pool)
      if (p.same_rep(d)) return true;
    return false;
  };
  if (!pooled(unit)) pool.emplace_back("(vacuous)", unit);
  if (!pooled(top)) pool.emplace_back("(contradiction)", top);
  const int P = static_cast<int>(pool.size());

  std::map<std::pair<std::string, std::string>, std::optional<SetRep>> comb_memo;
  auto comb = [&](const SetRep& a, const SetRep& b) -> const std::optional<SetRep>& {
    auto key = std::make_pair(a.describe(), b.describe());
    auto it = comb_memo.find(key);
    if (it == comb_memo.end())
      it = comb_memo.emplace(key, try_combine(a, b)).first;
    return it->second;
  };
  std::map<std::pair<std::string, int>, std::optional<SetRep>> ex_memo;
  auto ex = [&](const SetRep& d, int qid) -> const std::optional<SetRep>& {
    auto key = std::make_pair(d.describe(), qid);
    auto it = ex_memo.find(key);
    if (it == ex_memo.end()) {
      std::optional<SetRep> out;
      try {
        out = extract(d, lat.at(qid));
      } catch (const Error& e) {
        if (e.code() != Errc::kUnsupported) throw;
      }
      it = ex_memo.emplace(key, std::move(out)).first;
    }
    return it->second;
  };

  // --- (1) commutative idempotent semigroup with null and unit ---
  for (int i = 0; i < P; ++i) {
    const auto& [ni, di] = pool[i];
    const auto& ct = comb(di, top);
    r.check("combination-null-element", ni, ct && ct->is_top());
    const auto& cu = comb(di, unit);
    if (!cu) {
      r.skip("combination-unsupported");
    } else {
      auto h = try_equal(*cu, di);
      if (!h) r.skip("equality-undecidable");
      else r.check("combination-unit-element", ni, *h, *h ? "" : cu->describe());
    }
    const auto& cii = comb(di, di);
    if (!cii) {
      r.skip("combination-unsupported");
    } else {
      auto h = try_equal(*cii, di);
      if (!h) r.skip("equality-undecidable");
      else r.check("combination-idempotent", ni, *h, *h ? "" : (*cii).describe());
    }
  }
  for (int i = 0; i < P; ++i) {
    for (int j = i + 1; j < P; ++j) {
      const auto& cij = comb(pool[i].second, pool[j].second);
      const auto& cji = comb(pool[j].second, pool[i].second);
      if (!cij || !cji) {
        r.skip("combination-unsupported");
        continue;
      }
      auto h = try_equal(*cij, *cji);
      std::string in = pool[i].first + "," + pool[j].first;
      if (!h) r.skip("equality-undecidable");
      else r.check("combination-commutative", in, *h,
                   *h ? "" : cij->describe() + " vs " + cji->describe());
    }
  }
  for (int i = 0; i < P; ++i) {
    for (int j = 0; j < P; ++j) {
      for (int k = 0; k < P; ++k) {
        const auto& cij = comb(pool[i].second, pool[j].second);
        const auto& cjk = comb(pool[j].second, pool[k].second);
        if (!cij || !cjk) {
          r.skip("combination-unsupported");
          continue;
        }
        const auto& lhs = comb(*cij, pool[k].second);
        const auto& rhs = comb(pool[i].second, *cjk);
        if (!lhs || !rhs) {
          r.skip("combination-unsupported");
          continue;
        }
        auto h = try_equal(*lhs, *rhs);
        std::string in =
            pool[i].first + "," + pool[j].first + "," + pool[k].first;
        if (!h) r.skip("equality-undecidable");
        else r.check("combination-associative", in, *h,
                     *h ? "" : lhs->describe() + " vs " + rhs->describe());
      }
    }
  }

  // --- (2) the question structure itself ---
  r.check("question-lattice-tables", "", lat.tables_consistent());
  {
    std::vector<Partition> qparts;
    qparts.reserve(Q);
    for (int q = 0; q < Q; ++q) qparts.push_back(lat.at(q));
    separoid_law_sweep(qparts, r);
  }

  // --- (3a) extraction preserves the vacuous set ---
  for (int q = 0; q < Q; ++q) {
    const auto& e = ex(unit, q);
    std::optional<bool> h;
    if (e) h = try_equal(*e, unit);
    if (!h) r.skip("extraction-unsupported");
    else r.check("extraction-preserves-vacuous", lat.name(q), *h,
                 *h ? "" : e->describe());
  }

  // --- (3b) extracting then combining changes nothing ---
  // --- order facts: extraction only loses information ---
  for (int i = 0; i < P; ++i) {
    const auto& [ni, di] = pool[i];
    for (int q = 0; q < Q; ++q) {
      const auto& e = ex(di, q);
      if (!e) {
        r.skip("extraction-unsupported");
        r.skip("extraction-unsupported");
        continue;
      }
      const auto& c = comb(*e, di);
      if (!c) {
        r.skip("combination-unsupported");
      } else {
        auto h = try_equal(*c, di);
        if (!h) r.skip("equality-undecidable");
        else r.check("extraction-absorbed-by-combination", ni + " @ " + lat.name(q),
                     *h, *h ? "" : c->describe());
      }
      auto below = try_leq(*e, di);
      if (!below) r.skip("order-undecidable");
      else r.check("extraction-reduces-information", ni + " @ " + lat.name(q),
                   *below, *below ? "" : e->describe());
    }
  }

  // --- (3c) extraction exchanges with combination at its own question ---
  for (int i = 0; i < P; ++i) {
    for (int j = 0; j < P; ++j) {
      for (int q = 0; q < Q; ++q) {
        const auto& e1 = ex(pool[i].second, q);
        const auto& e2 = ex(pool[j].second, q);
        if (!e1 || !e2) {
          r.skip("extraction-unsupported");
          continue;
        }
        const auto& c = comb(*e1, pool[j].second);
        if (!c) {
          r.skip("combination-unsupported");
          continue;
        }
        const auto& lhs = ex(*c, q);
        const auto& rhs = comb(*e1, *e2);
        if (!lhs || !rhs) {
          r.skip(lhs ? "combination-unsupported" : "extraction-unsupported");
          continue;
        }
        auto h = try_equal(*lhs, *rhs);
        std::string in =
            pool[i].first + "," + pool[j].first + " @ " + lat.name(q);
        if (!h) r.skip("equality-undecidable");
        else r.check("extraction-combination-exchange", in, *h,
                     *h ? "" : lhs->describe() + " vs " + rhs->describe());
      }
    }
  }

  // --- monotonicity of extraction in the information order ---
  for (int i = 0; i < P; ++i) {
    for (int j = 0; j < P; ++j) {
      if (i == j) continue;
      auto below = try_leq(pool[i].second, pool[j].second);
      if (!below) {
        r.skip("order-undecidable");
        continue;
      }
      if (!*below) continue;  // the law is conditional
      for (int q = 0; q < Q; ++q) {
        const auto& ei = ex(pool[i].second, q);
        const auto& ej = ex(pool[j].second, q);
        if (!ei || !ej) {
          r.skip("extraction-unsupported");
          continue;
        }
        auto h = try_leq(*ei, *ej);
        std::string in =
            pool[i].first + " <= " + pool[j].first + " @ " + lat.name(q);
        if (!h) r.skip("order-undecidable");
        else r.check("extraction-monotone", in, *h,
                     *h ? "" : ei->describe() + " vs " + ej->describe());
      }
    }
  }

  // Support table: supp[i][q] = extraction at q reproduces pool[i].
  std::vector<std::vector<std::optional<bool>>> supp(
      P, std::vector<std::optional<bool>>(Q));
  for (int i = 0; i < P; ++i) {
    for (int q = 0; q < Q; ++q) {
      const auto& e = ex(pool[i].second, q);
      if (e) supp[i][q] = try_equal(*e, pool[i].second);
    }
  }

  // --- (4) transport across a conditionally independent join ---
  {
    std::map<std::tuple<int, int, int>, bool> ci_memo;
    auto ci = [&](int a, int b, int z) {
      auto key = std::make_tuple(a, b, z);
      auto it = ci_memo.find(key);
      if (it == ci_memo.end())
        it = ci_memo
                 .emplace(key, partitions_cond_independent(
                                   {lat.at(a), lat.at(b)}, lat.at(z)))
                 .first;
      return it->second;
    };
    std::map<std::tuple<int, int, int>, std::optional<bool>> concl_memo;
    for (int x = 0; x < Q; ++x) {
      for (int y = 0; y < Q; ++y) {
        for (int z = 0; z < Q; ++z) {
          int xz = lat.join(x, z);
          int yz = lat.join(y, z);
          if (!ci(xz, yz, z)) {
            r.skip("transport-precondition-unmet");
            continue;
          }
          for (int i = 0; i < P; ++i) {
            if (!supp[i][x]) {
              r.skip("extraction-unsupported");
              continue;
            }
            if (!*supp[i][x]) {
              r.skip("transport-needs-support");
              continue;
            }
            auto key = std::make_tuple(i, z, yz);
            auto it = concl_memo.find(key);
            if (it == concl_memo.end()) {
              std::optional<bool> verdict;
              const auto& lhs = ex(pool[i].second, yz);
              const auto& mid = ex(pool[i].second, z);
              if (lhs && mid) {
                const auto& rhs = ex(*mid, yz);
                if (rhs) verdict = try_equal(*lhs, *rhs);
              }
              it = concl_memo.emplace(key, verdict).first;
            }
            std::string in = pool[i].first + " x=" + lat.name(x) +
                             " y=" + lat.name(y) + " z=" + lat.name(z);
            if (!it->second) r.skip("equality-undecidable");
            else r.check("extraction-transport-across-independence", in,
                         *it->second);
          }
        }
      }
    }
  }

  // --- (5) support existence and upward closure ---
  for (int i = 0; i < P; ++i) {
    auto s = find_support(pool[i].second, lat);
    r.check("support-exists", pool[i].first, s.has_value(),
            s ? "" : "no question reproduces the set under extraction");
    if (!s) continue;
    for (int y = 0; y < Q; ++y) {
      if (!lat.leq(*s, y)) continue;
      if (!supp[i][y]) r.skip("equality-undecidable");
      else r.check("support-upward-closed",
                   pool[i].first + ": " + lat.name(*s) + " <= " + lat.name(y),
                   *supp[i][y]);
    }
  }

  // --- sampled containment: both parts sit inside their combination ---
  if (P > 0 && n_samples > 0) {
    Rng rng(seed);
    for (int t = 0; t < n_samples; ++t) {
      int i = rng.below(P);
      int j = rng.below(P);
      const auto& c = comb(pool[i].second, pool[j].second);
      Vec f = sample_member(pool[i].second, rng);
      if (!c) {
        r.skip("combination-unsupported");
        continue;
      }
      bool in = set_member(*c, f);
      r.check("combination-dominates-parts",
              pool[i].first + "," + pool[j].first, in, in ? "" : vec_str(f));
    }
  }

  r.note("exchange and transport laws run on the exactly representable fragment; "
         "pairs without a closed form are counted as skips");
  r.finalize();
  return r;
}

}  // namespace cohera
