#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "desirability.hpp"
#include "lattice.hpp"
#include "report.hpp"

namespace cohera {

// A named universe: one possibility space, a join-closed question lattice,
// and a pool of named information pieces (plus optional named events).
struct AlgebraModel {
  SpacePtr space;
  QuestionLattice lattice;
  std::vector<std::pair<std::string, SetRep>> sets;
  std::vector<std::pair<std::string, std::vector<int>>> events;

  const SetRep* find_set(const std::string& name) const;
  const std::vector<int>* find_event(const std::string& name) const;
};

// Combination: the closure of the union. Exact on the closed-form table
// (same-kind pairs, neutral elements, anything against a maximal atom,
// and containment-resolvable mixed pairs); throws Unsupported otherwise.
SetRep combine(const SetRep& d1, const SetRep& d2);

// Extraction to question x: closure of the x-measurable members. Exact for
// Top/Unit/Assertions/EventSet/LexAtom; for SymbolicExtract only at
// comparable questions (same, finer, bottom, top). Throws Unsupported beyond.
SetRep extract(const SetRep& d, const Partition& x);

// Independent membership route for extractions of assertion closures: one
// feasibility program over the generators and measurability constraints,
// bypassing the cone-projection pipeline. Used to cross-check extract().
bool extract_member_oracle(const SpacePtr& space, const std::vector<Vec>& K,
                           const Partition& x, const Vec& f);

// Least question in the lattice (canonical order) whose extraction leaves d
// unchanged; nullopt when none is (decidably) a support.
std::optional<int> find_support(const SetRep& d, const QuestionLattice& lattice);

// The five structural law families (semigroup, question quasi-separoid,
// extraction/neutrality, transport across independent joins, support
// existence) checked over a model's pool; undecidable combinations are
// recorded as skips, never as passes.
Report axiom_suite(const AlgebraModel& model, int n_samples, std::uint64_t seed);

}  // namespace cohera
