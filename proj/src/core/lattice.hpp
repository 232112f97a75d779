#pragma once

#include <string>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace cohera {

// A finite, join-closed family of named questions (partitions). User-supplied
// families are closed under pairwise join at construction; synthesized
// questions get recorded so loaders can report them.
class QuestionLattice {
 public:
  struct Entry {
    std::string name;
    Partition partition;
    bool added_by_closure = false;
  };

  static QuestionLattice close(
      SpacePtr space, std::vector<std::pair<std::string, Partition>> named);

  const SpacePtr& space() const { return space_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const Entry& entry(int id) const { return entries_[id]; }
  const Partition& at(int id) const { return entries_[id].partition; }
  const std::string& name(int id) const { return entries_[id].name; }

  // -1 when the name is unknown.
  int find(const std::string& name) const;
  // First entry with this exact block structure, -1 when absent.
  int find_partition(const Partition& p) const;

  bool leq(int a, int b) const { return leq_[a][b]; }
  int join(int a, int b) const { return join_[a][b]; }

  bool has_top() const;
  std::vector<std::string> closure_additions() const;

  // Ids sorted by (block count, block structure, name): a linear extension of
  // the question order, used wherever "first/least" must be deterministic.
  const std::vector<int>& canonical_order() const { return order_; }

  // Recomputes both tables from scratch and compares. Used by tests and the
  // axiom suite's lattice section.
  bool tables_consistent() const;

 private:
  QuestionLattice() = default;
  SpacePtr space_;
  std::vector<Entry> entries_;
  std::vector<std::vector<bool>> leq_;
  std::vector<std::vector<int>> join_;
  std::vector<int> order_;
};

}  // namespace cohera
