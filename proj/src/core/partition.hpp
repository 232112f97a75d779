#pragma once

#include <string>
#include <vector>

#include "report.hpp"
#include "space.hpp"

namespace cohera {

// A partition of the possibility space: the possible answers to a question.
// Canonical form: block ids are assigned by first occurrence in world order,
// so block 0 always contains world 0 and ids increase with each new least
// member. Two partitions are equal iff their block_of vectors are equal.
class Partition {
 public:
  // Renumbers arbitrary labels into canonical block ids.
  static Partition from_block_of(SpacePtr space, const std::vector<int>& raw);
  // Blocks as world-index sets; must cover the space disjointly.
  static Partition from_blocks(SpacePtr space,
                               const std::vector<std::vector<int>>& blocks);
  static Partition bottom(SpacePtr space);  // one block, the whole space
  static Partition top(SpacePtr space);     // singleton blocks

  const SpacePtr& space() const { return space_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  int block_of(int world) const { return block_of_[world]; }
  const std::vector<int>& block_of_vector() const { return block_of_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  bool operator==(const Partition& o) const;
  bool operator!=(const Partition& o) const { return !(*this == o); }
  bool is_bottom() const { return num_blocks() == 1; }
  bool is_top() const { return num_blocks() == static_cast<int>(block_of_.size()); }

  // "a,b|c" — blocks in canonical order, members in world order.
  std::string structure_str() const;

 private:
  Partition(SpacePtr space, std::vector<int> block_of,
            std::vector<std::vector<int>> blocks);
  SpacePtr space_;
  std::vector<int> block_of_;
  std::vector<std::vector<int>> blocks_;
};

// Partial order: x <= y iff y refines x (every block of y sits inside a block
// of x). Bottom is the one-block partition, top the singleton partition.
bool partition_leq(const Partition& x, const Partition& y);

// Least upper bound: blocks are the non-empty pairwise block intersections.
Partition partition_join(const Partition& x, const Partition& y);

// Every tuple of blocks (one per partition) intersects. n >= 2.
bool partitions_independent(const std::vector<Partition>& ps);

// For each block B of `given`: whenever every B_i meets B, the joint
// intersection of the B_i also meets B. n >= 1.
bool partitions_cond_independent(const std::vector<Partition>& ps,
                                 const Partition& given);

// Linear forms whose joint kernel is the subspace of x-measurable gambles:
// f(w) - f(w') = 0 for consecutive members of each block.
std::vector<Vec> measurability_equations(const Partition& x);
bool is_measurable(const Gamble& f, const Partition& x);
bool is_measurable_vec(const Vec& f, const Partition& x);

// The pointwise-largest x-measurable gamble below f: each block is collapsed
// to its minimum.
Gamble blockwise_min(const Gamble& f, const Partition& x);
Vec blockwise_min_vec(const Vec& f, const Partition& x);

// Saturation: the union of every block of x that meets S — the smallest
// x-measurable event containing S. S is given and returned as a sorted set of
// world indices.
std::vector<int> event_saturate(const std::vector<int>& S, const Partition& x);

// All partitions of an n-world space in canonical (restricted-growth) order.
std::vector<Partition> all_partitions(const SpacePtr& space);

// Runs the conditional-independence structure laws over every pair/triple
// (and coarsening quadruple) drawn from `family`:
//   ci-given-self                  x cond-indep of y given y
//   ci-symmetry                    x ci y | z implies y ci x | z
//   ci-coarsening                  x ci y | z and w <= y implies x ci w | z
//   ci-join-with-condition         x ci y | z implies x ci (y join z) | z
//   ci-shift-by-condition          x ci y | z iff (x join z) ci (y join z) | z
// Checks are appended to r.
void separoid_law_sweep(const std::vector<Partition>& family, Report& r);

// The sweep above over ALL partitions of a fresh n-world space. n <= 5.
Report quasi_separoid_suite(int space_size);

// n-world space with synthetic single-letter names a, b, c, ... used by the
// exhaustive suites.
SpacePtr synthetic_space(int n);

}  // namespace cohera
