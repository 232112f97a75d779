#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "desirability.hpp"
#include "lattice.hpp"
#include "report.hpp"

namespace cohera {

// --- the event-side set algebra ---

// D_S as a SetRep (Top for empty S, Unit for the full space).
SetRep lift_event(const SpacePtr& space, const std::vector<int>& S);

// First question (canonical order) that saturates S to itself, if any.
std::optional<int> in_PQ(const std::vector<int>& S, const QuestionLattice& lattice);

// The constructive splitting behind "combining event information is event
// intersection": for overlapping S,T and a member f of D_{S∩T} it returns
// f = f1 + f2 with f1 in D_S and f2 in D_T (delta fixed to 1, with a plain
// halving fallback when f touches the L+ boundary); for disjoint non-empty
// S,T it returns a pair summing to zero, one in each set: the incoherence
// witness.
struct EventSplit {
  bool incoherent = false;
  Vec f1, f2;
};
EventSplit combine_events_witness(const SpacePtr& space, const std::vector<int>& S,
                                  const std::vector<int>& T, const Vec& f);

// --- the atom family ---

// All |Omega|! lexicographic maximal sets, one per permutation of the worlds;
// perms listed in lexicographic order. |Omega| <= 8.
struct LexAtomFamily {
  SpacePtr space;
  std::vector<std::vector<int>> perms;

  int size() const { return static_cast<int>(perms.size()); }
  SetRep atom(int i) const { return SetRep::lex_atom(space, perms[i]); }
};
LexAtomFamily enum_lex_atoms(const SpacePtr& space);

// Two atoms answer question x alike iff they induce the same block order.
bool atom_equiv(const LexAtomFamily& fam, int i, int j, const Partition& x);

// Partition of the family's atoms into answer-classes for x. Blocks are
// sorted by least atom index; each block lists atom indices ascending.
std::vector<std::vector<int>> atom_partition_blocks(const Partition& x,
                                                    const LexAtomFamily& fam);

// Union of the answer-classes meeting A (indices into the family).
std::vector<int> atom_saturate(const std::vector<int>& A, const Partition& x,
                               const LexAtomFamily& fam);

// The family atoms containing D (all of D's content fits in the atom).
// D must be Top, Unit, Assertions or EventSet.
std::vector<int> at_of(const SetRep& D, const LexAtomFamily& fam);

// --- suites ---

// The six saturation identities, exhaustively over all S,T and partitions of
// an n-world space. n <= 5.
Report saturation_lemma_suite(int space_size);

// Saturation transports across conditionally independent joins:
// sigma_{y|z-join}(sigma_x(S)) = sigma_{y|z-join}(sigma_z(sigma_x(S))) for
// triples satisfying the independence precondition; others are skipped. n <= 4.
Report set_algebra_extraction_suite(int space_size);

// The event embedding S -> D_S: preserves combination (with the constructive
// split re-checked), bounds, extraction (with an independent blockwise-min
// membership route), and is injective. n <= 4.
Report event_hom_suite(int space_size);

// Atom partitions preserve the question order and refine across joins
// (asserted); join reversal and conditional-independence preservation are
// measured but not asserted. n <= 4.
Report atom_separoid_suite(int space_size);

// The atom-side set algebra on a deterministic pool of n_sets sets:
// At(D1 * D2) = At(D1) cap At(D2), bounds, and saturation-vs-extraction
// inclusion (reverse inclusion measured only). n <= 4.
Report atom_set_algebra_suite(int space_size, int n_sets);

}  // namespace cohera
