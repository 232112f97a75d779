#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "partition.hpp"
#include "report.hpp"
#include "sampling.hpp"
#include "space.hpp"

namespace cohera {

// A coherent set of gambles (or the degenerate full set), held in one of a
// few exactly-decidable representations:
//
//   Top                 the whole gamble space L (the contradictory element)
//   Unit                L+, the non-negative non-vanishing gambles
//   Assertions(K)       the closure C(K): positive hull of K and L+, minus 0
//   EventSet(S)         D_S = { f : min of f over S > 0 } union L+
//   LexAtom(pi)         M_pi = { f != 0 : first nonzero coordinate in pi-order
//                       is positive } — a maximal coherent set
//   SymbolicExtract     the extraction of a LexAtom to a question, held
//                       lazily as (pi, x) with the induced block order
//
// Representations are normalized at construction so that the invariant
// "every SetRep is Top or coherent" holds: incoherent assertion lists become
// Top, assertion lists inside L+ become Unit, EventSet({}) becomes Top,
// EventSet(Omega) becomes Unit, extracts at the top question collapse to the
// LexAtom and extracts at the bottom to Unit. Kinds are representations, not
// canonical forms — semantic equality is set_equal.
class SetRep {
 public:
  enum class Kind {
    kTop,
    kUnit,
    kAssertions,
    kEventSet,
    kLexAtom,
    kSymbolicExtract,
  };

  static SetRep top(SpacePtr space);
  static SetRep unit(SpacePtr space);
  // The closure operator C: drops zero gambles, collapses to Top when the
  // extension is incoherent, to Unit when the generators add nothing to L+.
  static SetRep closure(SpacePtr space, std::vector<Vec> generators);
  // D_S with the empty/full normalizations.
  static SetRep event_set(SpacePtr space, std::vector<int> worlds);
  // perm must be a permutation of 0..n-1 (worlds in preference order).
  static SetRep lex_atom(SpacePtr space, std::vector<int> perm);
  // Extraction of a LexAtom to question x (normalizing, see above).
  static SetRep extract_of_atom(const SetRep& atom, const Partition& x);

  Kind kind() const { return kind_; }
  const SpacePtr& space() const { return space_; }
  bool is_top() const { return kind_ == Kind::kTop; }

  const std::vector<Vec>& generators() const;            // kAssertions
  const std::vector<int>& event() const;                 // kEventSet
  const std::vector<int>& perm() const;                  // kLexAtom/kSymbolicExtract
  const Partition& question() const;                     // kSymbolicExtract
  const std::vector<std::vector<int>>& block_order() const;  // kSymbolicExtract

  // Structural (representation-level) equality; cheap, used for memo keys.
  bool same_rep(const SetRep& o) const;
  std::string describe() const;  // compact human/form key, deterministic

 private:
  SetRep(Kind k, SpacePtr s) : kind_(k), space_(std::move(s)) {}
  Kind kind_;
  SpacePtr space_;
  std::vector<Vec> gens_;
  std::vector<int> event_;
  std::vector<int> perm_;
  std::optional<Partition> question_;
  std::vector<std::vector<int>> block_order_;
};

// The block order a permutation induces on a partition: blocks sorted by the
// earliest pi-position of their members. Shared by LexAtom extraction and the
// atom equivalence machinery.
std::vector<std::vector<int>> induced_block_order(const std::vector<int>& perm,
                                                  const Partition& x);

// Is a measurable-by-construction vector lex-positive in the given block
// order (first block with a nonzero value carries a positive one)?
bool lex_positive_in_block_order(const Vec& f,
                                 const std::vector<std::vector<int>>& order);

// --- membership and order ---

// f in E(K) = posi(K union L+)? Exact LP. f = 0 is refused: membership of 0
// is the coherence question, not a membership query.
bool natural_extension_member(const SpacePtr& space, const std::vector<Vec>& K,
                              const Vec& f);

// Coherence of the natural extension: no lambda >= 0 over K, not all zero,
// with sum(lambda g) <= 0 pointwise (the L+ part absorbs into the slack).
bool is_coherent_extension(const SpacePtr& space, const std::vector<Vec>& K);

bool set_member(const SetRep& D, const Vec& f);
bool set_member(const SetRep& D, const Gamble& f);

// Information order: subset. Exact on the closed-form table; throws
// Unsupported for pairs outside it.
bool leq(const SetRep& D1, const SetRep& D2);
bool set_equal(const SetRep& D1, const SetRep& D2);

// --- sampled audits ---

// Draws a member of D (constructive injection mixed with rejection); for Top
// any non-zero gamble qualifies.
Vec sample_member(const SetRep& D, Rng& rng);

// D1-D4 on a membership predicate; `sample` must yield members under the
// predicate (injectable so tests can corrupt the predicate deliberately).
Report check_coherence_axioms_pred(
    const SpacePtr& space, const std::string& label,
    const std::function<bool(const Vec&)>& member,
    const std::function<Vec(Rng&)>& sample, int n_samples, std::uint64_t seed);

Report check_coherence_axioms(const SetRep& D, int n_samples,
                              std::uint64_t seed);

// f in D or -f in D for sampled nonzero f.
Report check_maximality_sampled(const SetRep& D, int n, std::uint64_t seed);

// inf of f over S (exact); S must be non-empty.
Rational lower_prevision(const std::vector<int>& S, const Gamble& f);

// For sampled members f of D_S outside L+, exhibits delta = inf_S(f)/2 > 0
// with f - delta still a member.
Report is_strictly_desirable_event_set(const SpacePtr& space,
                                       const std::vector<int>& S, int n_samples,
                                       std::uint64_t seed);

std::vector<Vec> singleton_indicators(int dim);

// Sampled coherence audit over a deterministic pool on an n-world space:
// axioms for closures, event sets and lex atoms; strict desirability of the
// event sets; exact two-sidedness (maximality) of the atoms. n <= 6.
Report coherence_suite(int space_size, int n_samples, std::uint64_t seed);

}  // namespace cohera
