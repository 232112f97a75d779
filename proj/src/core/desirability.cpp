#include "desirability.hpp"

#include <algorithm>

#include "cone.hpp"
#include "errors.hpp"
#include "linprog.hpp"

namespace cohera {

namespace {

bool perm_first_nonzero_positive(const Vec& f, const std::vector<int>& perm) {
  for (int w : perm) {
    if (f[w] != 0) return f[w] > 0;
  }
  return false;  // the zero gamble is never desirable
}

bool sorted_subset(const std::vector<int>& inner, const std::vector<int>& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace

std::vector<Vec> singleton_indicators(int dim) {
  std::vector<Vec> out;
  for (int w = 0; w < dim; ++w) {
    Vec v(dim, Rational(0));
    v[w] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<int>> induced_block_order(const std::vector<int>& perm,
                                                  const Partition& x) {
  std::vector<int> pos(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = static_cast<int>(i);
  std::vector<std::pair<int, std::vector<int>>> keyed;
  for (const auto& block : x.blocks()) {
    int key = pos[block[0]];
    for (int w : block) key = std::min(key, pos[w]);
    keyed.emplace_back(key, block);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<int>> order;
  for (auto& [k, b] : keyed) order.push_back(std::move(b));
  return order;
}

bool lex_positive_in_block_order(const Vec& f,
                                 const std::vector<std::vector<int>>& order) {
  for (const auto& block : order) {
    const Rational& v = f[block[0]];
    if (v != 0) return v > 0;
  }
  return false;
}

// --- SetRep construction ---

SetRep SetRep::top(SpacePtr space) {
  if (!space) fail(Errc::kNullArgument, "SetRep without a space");
  return SetRep(Kind::kTop, std::move(space));
}

SetRep SetRep::unit(SpacePtr space) {
  if (!space) fail(Errc::kNullArgument, "SetRep without a space");
  return SetRep(Kind::kUnit, std::move(space));
}

SetRep SetRep::closure(SpacePtr space, std::vector<Vec> generators) {
  if (!space) fail(Errc::kNullArgument, "SetRep without a space");
  std::vector<Vec> gens;
  for (auto& g : generators) {
    if (static_cast<int>(g.size()) != space->size())
      fail(Errc::kSpaceMismatch, "closure: generator width mismatch");
    if (!vec_is_zero(g)) gens.push_back(std::move(g));
  }
  if (!is_coherent_extension(space, gens)) return top(std::move(space));
  bool adds_nothing = true;
  for (const auto& g : gens)
    if (!is_nonneg_nonzero(g)) { adds_nothing = false; break; }
  if (adds_nothing) return unit(std::move(space));
  SetRep d(Kind::kAssertions, std::move(space));
  d.gens_ = std::move(gens);
  return d;
}

SetRep SetRep::event_set(SpacePtr space, std::vector<int> worlds) {
  if (!space) fail(Errc::kNullArgument, "SetRep without a space");
  std::vector<int> s = normalize_event(space, std::move(worlds));
  if (s.empty()) return top(std::move(space));
  if (static_cast<int>(s.size()) == space->size()) return unit(std::move(space));
  SetRep d(Kind::kEventSet, std::move(space));
  d.event_ = std::move(s);
  return d;
}

SetRep SetRep::lex_atom(SpacePtr space, std::vector<int> perm) {
  if (!space) fail(Errc::kNullArgument, "SetRep without a space");
  const int n = space->size();
  std::vector<bool> seen(n, false);
  if (static_cast<int>(perm.size()) != n)
    fail(Errc::kValidationError, "lex atom: order must list every world once");
  for (int w : perm) {
    if (w < 0 || w >= n || seen[w])
      fail(Errc::kValidationError, "lex atom: order is not a permutation");
    seen[w] = true;
  }
  SetRep d(Kind::kLexAtom, std::move(space));
  d.perm_ = std::move(perm);
  return d;
}

SetRep SetRep::extract_of_atom(const SetRep& atom, const Partition& x) {
  if (atom.kind() != Kind::kLexAtom)
    fail(Errc::kUnsupported, "extract_of_atom: expects a lex atom");
  require_same_space(atom.space(), x.space(), "extract_of_atom");
  if (x.is_top()) return atom;          // extraction at top is the identity
  if (x.is_bottom()) return unit(atom.space());  // only L+ is measurable-positive
  SetRep d(Kind::kSymbolicExtract, atom.space());
  d.perm_ = atom.perm();
  d.question_ = x;
  d.block_order_ = induced_block_order(d.perm_, x);
  return d;
}

const std::vector<Vec>& SetRep::generators() const {
  if (kind_ != Kind::kAssertions)
    fail(Errc::kUnsupported, "generators(): not an assertion set");
  return gens_;
}

const std::vector<int>& SetRep::event() const {
  if (kind_ != Kind::kEventSet)
    fail(Errc::kUnsupported, "event(): not an event set");
  return event_;
}

const std::vector<int>& SetRep::perm() const {
  if (kind_ != Kind::kLexAtom && kind_ != Kind::kSymbolicExtract)
    fail(Errc::kUnsupported, "perm(): no atom order here");
  return perm_;
}

const Partition& SetRep::question() const {
  if (kind_ != Kind::kSymbolicExtract || !question_)
    fail(Errc::kUnsupported, "question(): not a symbolic extract");
  return *question_;
}

const std::vector<std::vector<int>>& SetRep::block_order() const {
  if (kind_ != Kind::kSymbolicExtract)
    fail(Errc::kUnsupported, "block_order(): not a symbolic extract");
  return block_order_;
}

bool SetRep::same_rep(const SetRep& o) const {
  if (kind_ != o.kind_ || !same_space(space_, o.space_)) return false;
  switch (kind_) {
    case Kind::kTop:
    case Kind::kUnit:
      return true;
    case Kind::kAssertions:
      return gens_ == o.gens_;
    case Kind::kEventSet:
      return event_ == o.event_;
    case Kind::kLexAtom:
      return perm_ == o.perm_;
    case Kind::kSymbolicExtract:
      return perm_ == o.perm_ &&
             question_->block_of_vector() == o.question_->block_of_vector();
  }
  return false;
}

std::string SetRep::describe() const {
  switch (kind_) {
    case Kind::kTop: return "top";
    case Kind::kUnit: return "unit";
    case Kind::kAssertions: {
      std::string out = "assertions[";
      for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ";";
        out += vec_str(gens_[i]);
      }
      return out + "]";
    }
    case Kind::kEventSet:
      return "event" + event_str(space_, event_);
    case Kind::kLexAtom: {
      std::string out = "atom(";
      for (size_t i = 0; i < perm_.size(); ++i) {
        if (i) out += ",";
        out += space_->world(perm_[i]);
      }
      return out + ")";
    }
    case Kind::kSymbolicExtract: {
      std::string out = "extract(atom(";
      for (size_t i = 0; i < perm_.size(); ++i) {
        if (i) out += ",";
        out += space_->world(perm_[i]);
      }
      return out + ")|" + question_->structure_str() + ")";
    }
  }
  return "?";
}

// --- membership ---

bool natural_extension_member(const SpacePtr& space, const std::vector<Vec>& K,
                              const Vec& f) {
  if (static_cast<int>(f.size()) != space->size())
    fail(Errc::kSpaceMismatch, "natural_extension_member: width mismatch");
  if (vec_is_zero(f))
    fail(Errc::kZeroGambleQuery,
         "membership of 0 is the coherence question; query is_coherent_extension");
  std::vector<Vec> gens = K;
  for (auto& ind : singleton_indicators(space->size()))
    gens.push_back(std::move(ind));
  return cone_member(gens, f).member;
}

bool is_coherent_extension(const SpacePtr& space, const std::vector<Vec>& K) {
  // 0 in posi(K union L+) iff some convex combination of K is <= 0 pointwise:
  // the L+ summand only ever raises coordinates, so it is absorbed into slack.
  const int nk = static_cast<int>(K.size());
  if (nk == 0) return true;
  std::vector<LinCon> cons;
  for (int w = 0; w < space->size(); ++w) {
    LinCon c;
    c.a.resize(nk);
    for (int j = 0; j < nk; ++j) {
      if (static_cast<int>(K[j].size()) != space->size())
        fail(Errc::kSpaceMismatch, "is_coherent_extension: width mismatch");
      c.a[j] = K[j][w];
    }
    c.rel = Rel::kLe;
    c.b = 0;
    cons.push_back(std::move(c));
  }
  LinCon convex;
  convex.a.assign(nk, Rational(1));
  convex.rel = Rel::kEq;
  convex.b = 1;
  cons.push_back(std::move(convex));
  return lp_feasible(nk, cons).status == LpResult::Status::kInfeasible;
}

bool set_member(const SetRep& D, const Vec& f) {
  if (static_cast<int>(f.size()) != D.space()->size())
    fail(Errc::kSpaceMismatch, "set_member: width mismatch");
  switch (D.kind()) {
    case SetRep::Kind::kTop:
      return true;  // L contains every gamble, including 0
    case SetRep::Kind::kUnit:
      return is_nonneg_nonzero(f);
    case SetRep::Kind::kAssertions:
      if (vec_is_zero(f)) return false;  // coherent sets avoid status quo
      return natural_extension_member(D.space(), D.generators(), f);
    case SetRep::Kind::kEventSet: {
      if (is_nonneg_nonzero(f)) return true;
      Rational m = f[D.event()[0]];
      for (int w : D.event())
        if (f[w] < m) m = f[w];
      return m > 0;
    }
    case SetRep::Kind::kLexAtom:
      return perm_first_nonzero_positive(f, D.perm());
    case SetRep::Kind::kSymbolicExtract: {
      if (is_nonneg_nonzero(f)) return true;
      const Vec bm = blockwise_min_vec(f, D.question());
      return lex_positive_in_block_order(bm, D.block_order());
    }
  }
  return false;
}

bool set_member(const SetRep& D, const Gamble& f) {
  require_same_space(D.space(), f.space(), "set_member");
  return set_member(D, f.values());
}

// --- information order ---

namespace {

// D_S subset of C(K)? The family {1_S - d 1_{S^c} : d > 0} together with L+
// posi-generates D_S, and membership is monotone decreasing in d, so the
// inclusion holds iff "maximize d subject to 1_S - d 1_{S^c} in cone(K, L+)"
// is unbounded.
bool event_leq_assertions(const SpacePtr& space, const std::vector<int>& s,
                          const std::vector<Vec>& K) {
  const int n = space->size();
  std::vector<Vec> gens = K;
  for (auto& ind : singleton_indicators(n)) gens.push_back(std::move(ind));
  const int ng = static_cast<int>(gens.size());
  const std::vector<int> comp = event_complement(space, s);
  // variables: lambda over gens, then delta
  std::vector<LinCon> cons;
  for (int w = 0; w < n; ++w) {
    LinCon c;
    c.a.resize(ng + 1);
    for (int j = 0; j < ng; ++j) c.a[j] = gens[j][w];
    const bool in_comp = std::binary_search(comp.begin(), comp.end(), w);
    c.a[ng] = in_comp ? 1 : 0;  // move delta*1_{S^c} to the left side
    c.rel = Rel::kEq;
    c.b = std::binary_search(s.begin(), s.end(), w) ? 1 : 0;
    cons.push_back(std::move(c));
  }
  Vec objective(ng + 1, Rational(0));
  objective[ng] = 1;
  return lp_solve(ng + 1, cons, &objective).status ==
         LpResult::Status::kUnbounded;
}

}  // namespace

bool leq(const SetRep& D1, const SetRep& D2) {
  require_same_space(D1.space(), D2.space(), "leq");
  using K = SetRep::Kind;
  if (D2.kind() == K::kTop) return true;
  switch (D1.kind()) {
    case K::kTop:
      return false;  // L fits only inside L, and D2 is not Top here

    case K::kUnit:
      return true;  // every coherent set contains L+

    case K::kAssertions: {
      // C(K) subset of D iff every generator is a member (D is coherent).
      for (const auto& g : D1.generators())
        if (!set_member(D2, g)) return false;
      return true;
    }

    case K::kEventSet:
      switch (D2.kind()) {
        case K::kUnit:
          return false;  // S is proper, so D_S contains gambles negative off S
        case K::kAssertions:
          return event_leq_assertions(D1.space(), D1.event(), D2.generators());
        case K::kEventSet:
          // D_S subset of D_T iff T subset of S.
          return sorted_subset(D2.event(), D1.event());
        case K::kLexAtom:
          // D_S subset of M_pi iff pi's favourite world lies in S.
          return std::binary_search(D1.event().begin(), D1.event().end(),
                                    D2.perm()[0]);
        case K::kSymbolicExtract: {
          // Membership of 1_S - d 1_{S^c} in the extract has a d-independent
          // sign pattern, so the whole generating family is decided at d = 1.
          Vec g(D1.space()->size(), Rational(-1));
          for (int w : D1.event()) g[w] = 1;
          return set_member(D2, g);
        }
        default:
          break;
      }
      break;

    case K::kLexAtom:
      switch (D2.kind()) {
        case K::kUnit:
          return D1.space()->size() == 1;  // then M = L+
        case K::kLexAtom:
          return D1.perm() == D2.perm();
        case K::kEventSet:
          // A maximal set fits in a coherent one only by equality; D_S is
          // maximal exactly in the two-world singleton case.
          return D1.space()->size() == 2 &&
                 D2.event() == std::vector<int>{D1.perm()[0]};
        case K::kAssertions:
          // A finitely generated closure is topologically closed up to {0},
          // while a lex atom never is (on these spaces): never a superset.
          return false;
        case K::kSymbolicExtract:
          // Extraction at a non-top question is never maximal, so it cannot
          // contain (= equal) an atom. Top questions collapse at construction.
          return false;
        default:
          break;
      }
      break;

    case K::kSymbolicExtract:
      switch (D2.kind()) {
        case K::kUnit:
          return false;  // two or more blocks survive normalization
        case K::kLexAtom:
          // C(M' cap L_x) subset of M iff both orders agree blockwise.
          return induced_block_order(D2.perm(), D1.question()) ==
                 D1.block_order();
        case K::kEventSet:
          // Exactly the two-block case with S inside the leading block: the
          // L+ escape covers gambles vanishing on the first block.
          return D1.block_order().size() == 2 &&
                 sorted_subset(D2.event(), D1.block_order()[0]);
        case K::kSymbolicExtract:
          if (D1.question() == D2.question())
            return D1.block_order() == D2.block_order();
          fail(Errc::kUnsupported,
               "leq: extracts at different questions are not comparable here");
        case K::kAssertions:
          fail(Errc::kUnsupported,
               "leq: extract vs assertions has no exact decision procedure here");
        default:
          break;
      }
      break;
  }
  fail(Errc::kUnsupported, "leq: pair outside the decidable table");
}

bool set_equal(const SetRep& D1, const SetRep& D2) {
  // Either direction may be undecidable while the other already refutes.
  std::optional<bool> fwd, bwd;
  try {
    fwd = leq(D1, D2);
  } catch (const Error& e) {
    if (e.code() != Errc::kUnsupported) throw;
  }
  if (fwd && !*fwd) return false;
  try {
    bwd = leq(D2, D1);
  } catch (const Error& e) {
    if (e.code() != Errc::kUnsupported) throw;
  }
  if (bwd && !*bwd) return false;
  if (fwd && bwd) return true;
  fail(Errc::kUnsupported, "set_equal: order undecidable for this pair");
}

// --- sampling and audits ---

Vec sample_member(const SetRep& D, Rng& rng) {
  const int n = D.space()->size();
  switch (D.kind()) {
    case SetRep::Kind::kTop:
      return rng.nonzero_coords(n);
    case SetRep::Kind::kUnit:
      return rng.nonneg_nonzero_coords(n);
    case SetRep::Kind::kAssertions: {
      // Positive combinations of generators and indicators are members by
      // construction (coherence rules out a vanishing positive combination
      // unless all coefficients are zero).
      const auto& gens = D.generators();
      for (;;) {
        Vec f(n, Rational(0));
        bool any = false;
        for (const auto& g : gens) {
          const int c = static_cast<int>(rng.below(4));
          if (c == 0) continue;
          any = true;
          for (int w = 0; w < n; ++w) f[w] += c * g[w];
        }
        for (int w = 0; w < n; ++w) {
          const int c = static_cast<int>(rng.below(3));
          if (c > 0) { f[w] += c; any = true; }
        }
        if (any && !vec_is_zero(f)) return f;
      }
    }
    case SetRep::Kind::kEventSet: {
      if (rng.coin()) return rng.nonneg_nonzero_coords(n);
      Vec f = rng.coords(n);
      Rational m = f[D.event()[0]];
      for (int w : D.event())
        if (f[w] < m) m = f[w];
      if (m <= 0) {
        const Rational lift = Rational(1) - m;
        for (int w : D.event()) f[w] += lift;
      }
      return f;
    }
    case SetRep::Kind::kLexAtom: {
      Vec f = rng.nonzero_coords(n);
      if (!perm_first_nonzero_positive(f, D.perm())) {
        for (auto& x : f) x = -x;
      }
      return f;
    }
    case SetRep::Kind::kSymbolicExtract: {
      if (rng.below(4) == 0) return rng.nonneg_nonzero_coords(n);
      // A measurable lex-positive gamble, optionally plus an L+ bump.
      const Partition& x = D.question();
      Vec f(n, Rational(0));
      for (;;) {
        bool all_zero = true;
        for (const auto& block : x.blocks()) {
          const Rational v = rng.coord();
          if (v != 0) all_zero = false;
          for (int w : block) f[w] = v;
        }
        if (!all_zero) break;
      }
      if (!lex_positive_in_block_order(f, D.block_order()))
        for (auto& v : f) v = -v;
      if (rng.coin()) {
        for (int w = 0; w < n; ++w) f[w] += rng.below(3);
      }
      return f;
    }
  }
  return rng.nonzero_coords(n);
}

Report check_coherence_axioms_pred(
    const SpacePtr& space, const std::string& label,
    const std::function<bool(const Vec&)>& member,
    const std::function<Vec(Rng&)>& sample, int n_samples, std::uint64_t seed) {
  Report r;
  r.suite = "coherence-axioms(" + label + ")";
  Rng rng(seed);
  const int n = space->size();

  // D2 first: the status quo must not be desirable.
  r.check("D2-avoiding-status-quo", label, !member(Vec(n, Rational(0))),
          "0 reported as a member");

  for (int i = 0; i < n_samples; ++i) {
    const Vec l = rng.nonneg_nonzero_coords(n);
    r.check("D1-accepting-partial-gains", label + " f=" + vec_str(l), member(l),
            "L+ gamble rejected");
  }
  for (int i = 0; i < n_samples; ++i) {
    const Vec f = sample(rng);
    r.check("sampler-yields-members", label + " f=" + vec_str(f), member(f),
            "sampled member rejected");
  }
  for (int i = 0; i < n_samples; ++i) {
    const Vec f = sample(rng);
    const Vec g = sample(rng);
    r.check("D3-additivity",
            label + " f=" + vec_str(f) + " g=" + vec_str(g),
            member(vec_add(f, g)), "sum of members rejected");
  }
  for (int i = 0; i < n_samples; ++i) {
    const Vec f = sample(rng);
    const Rational lam = rng.positive_scale();
    r.check("D4-positive-scaling",
            label + " f=" + vec_str(f) + " lambda=" + rat_str(lam),
            member(vec_scale(lam, f)), "positive scaling rejected");
  }
  r.finalize();
  return r;
}

Report check_coherence_axioms(const SetRep& D, int n_samples,
                              std::uint64_t seed) {
  if (D.is_top())
    fail(Errc::kTopNotCoherent, "coherence axioms are void on the full set");
  return check_coherence_axioms_pred(
      D.space(), D.describe(), [&](const Vec& f) { return set_member(D, f); },
      [&](Rng& rng) { return sample_member(D, rng); }, n_samples, seed);
}

Report check_maximality_sampled(const SetRep& D, int n, std::uint64_t seed) {
  Report r;
  r.suite = "maximality(" + D.describe() + ")";
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const Vec f = rng.nonzero_coords(D.space()->size());
    const bool holds = set_member(D, f) || set_member(D, vec_neg(f));
    r.check("maximality-f-or-minus-f", "f=" + vec_str(f), holds,
            "neither f nor -f is a member");
  }
  r.finalize();
  return r;
}

Rational lower_prevision(const std::vector<int>& S, const Gamble& f) {
  if (S.empty()) fail(Errc::kEmptyEvent, "lower_prevision: empty event");
  return gamble_min_on(f, S);
}

Report is_strictly_desirable_event_set(const SpacePtr& space,
                                       const std::vector<int>& S,
                                       int n_samples, std::uint64_t seed) {
  if (S.empty()) fail(Errc::kEmptyEvent, "strict desirability: empty event");
  Report r;
  r.suite = "strict-desirability(event" + event_str(space, S) + ")";
  const SetRep D = SetRep::event_set(space, S);
  Rng rng(seed);
  for (int i = 0; i < n_samples; ++i) {
    const Vec f = sample_member(D, rng);
    if (is_nonneg_nonzero(f)) {
      r.skip("member-in-L+");
      continue;
    }
    // Member outside L+, so inf over S is positive; delta = half of it.
    Rational inf = f[S[0]];
    for (int w : S)
      if (f[w] < inf) inf = f[w];
    const Rational delta = inf / 2;
    Vec shifted = f;
    for (auto& v : shifted) v -= delta;
    const bool holds = delta > 0 && set_member(D, shifted);
    r.check("strictly-desirable-witness",
            "f=" + vec_str(f) + " delta=" + rat_str(delta), holds,
            "f - delta left the set");
  }
  r.finalize();
  return r;
}

Report coherence_suite(int space_size, int n_samples, std::uint64_t seed) {
  if (space_size < 1)
    fail(Errc::kValidationError, "coherence_suite: size must be at least 1");
  if (space_size > 6)
    fail(Errc::kLimitExceeded, "coherence_suite: sizes above 6 are not sampled here");
  Report r;
  r.suite = "coherence";
  const int n = space_size;
  auto space = synthetic_space(n);

  std::vector<std::pair<std::string, SetRep>> pool;
  pool.emplace_back("vacuous", SetRep::unit(space));
  std::vector<std::vector<int>> events = {{0}};
  if (n >= 3) events.push_back({0, 2});
  for (const auto& S : events)
    pool.emplace_back("event" + event_str(space, S), SetRep::event_set(space, S));
  if (n >= 2) {
    Vec g(n, Rational(0));
    g[0] = 1;
    g[1] = -1;
    pool.emplace_back("closure-updown", SetRep::closure(space, {g}));
    Vec h(n, Rational(1));
    h[n - 1] = -1;
    Vec h2(n, Rational(0));
    h2[1] = 2;
    h2[0] = -1;
    pool.emplace_back("closure-two-gen", SetRep::closure(space, {h, h2}));
  }
  std::vector<int> fwd(n), rev(n);
  for (int i = 0; i < n; ++i) {
    fwd[i] = i;
    rev[i] = n - 1 - i;
  }
  pool.emplace_back("atom-forward", SetRep::lex_atom(space, fwd));
  if (n >= 2) pool.emplace_back("atom-reverse", SetRep::lex_atom(space, rev));

  std::uint64_t salt = 0;
  for (const auto& [name, d] : pool) {
    ++salt;
    if (d.is_top()) {
      // Normalization may collapse an incoherent pool entry; the axioms are
      // about coherent sets only.
      r.skip("pool-entry-collapsed-to-top");
      continue;
    }
    Report part = check_coherence_axioms(d, n_samples, seed + salt);
    r.absorb(part);
  }
  for (const auto& S : events) {
    ++salt;
    r.absorb(is_strictly_desirable_event_set(space, S, n_samples, seed + salt));
  }
  r.absorb(check_maximality_sampled(SetRep::lex_atom(space, fwd), n_samples,
                                    seed + (++salt)));
  if (n >= 2)
    r.absorb(check_maximality_sampled(SetRep::lex_atom(space, rev), n_samples,
                                      seed + (++salt)));
  r.note("pool of " + std::to_string(pool.size()) + " sets on a " +
         std::to_string(n) + "-world space");
  r.finalize();
  return r;
}

}  // namespace cohera
