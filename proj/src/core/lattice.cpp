#include "lattice.hpp"

#include <algorithm>

#include "errors.hpp"

namespace cohera {

QuestionLattice QuestionLattice::close(
    SpacePtr space, std::vector<std::pair<std::string, Partition>> named) {
  QuestionLattice lat;
  lat.space_ = space;
  for (auto& [name, part] : named) {
    if (name.empty()) fail(Errc::kValidationError, "question name is empty");
    if (!same_space(part.space(), space))
      fail(Errc::kSpaceMismatch, "question '" + name + "' lives on a different space");
    for (const auto& e : lat.entries_)
      if (e.name == name)
        fail(Errc::kValidationError, "duplicate question name '" + name + "'");
    lat.entries_.push_back({name, std::move(part), false});
  }

  // Join-closure: keep adding pairwise joins until nothing new appears.
  for (size_t i = 0; i < lat.entries_.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      Partition jp = partition_join(lat.entries_[i].partition, lat.entries_[j].partition);
      if (lat.find_partition(jp) >= 0) continue;
      std::string jname =
          "join(" + lat.entries_[j].name + "," + lat.entries_[i].name + ")";
      while (lat.find(jname) >= 0) jname += "'";
      lat.entries_.push_back({jname, std::move(jp), true});
    }
  }

  int n = lat.size();
  lat.leq_.assign(n, std::vector<bool>(n, false));
  lat.join_.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      lat.leq_[a][b] = partition_leq(lat.at(a), lat.at(b));
      Partition jp = partition_join(lat.at(a), lat.at(b));
      lat.join_[a][b] = lat.find_partition(jp);
    }
  }

  lat.order_.resize(n);
  for (int i = 0; i < n; ++i) lat.order_[i] = i;
  std::sort(lat.order_.begin(), lat.order_.end(), [&lat](int a, int b) {
    const Partition& pa = lat.at(a);
    const Partition& pb = lat.at(b);
    if (pa.num_blocks() != pb.num_blocks()) return pa.num_blocks() < pb.num_blocks();
    if (pa.block_of_vector() != pb.block_of_vector())
      return pa.block_of_vector() < pb.block_of_vector();
    return lat.name(a) < lat.name(b);
  });
  return lat;
}

int QuestionLattice::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (entries_[i].name == name) return i;
  return -1;
}

int QuestionLattice::find_partition(const Partition& p) const {
  for (int i = 0; i < size(); ++i)
    if (entries_[i].partition == p) return i;
  return -1;
}

bool QuestionLattice::has_top() const {
  for (const auto& e : entries_)
    if (e.partition.is_top()) return true;
  return false;
}

std::vector<std::string> QuestionLattice::closure_additions() const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (e.added_by_closure) out.push_back(e.name);
  return out;
}

bool QuestionLattice::tables_consistent() const {
  int n = size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (leq_[a][b] != partition_leq(at(a), at(b))) return false;
      int j = join_[a][b];
      if (j < 0 || !(at(j) == partition_join(at(a), at(b)))) return false;
      // Least upper bound: any common upper bound sits above the join.
      for (int c = 0; c < n; ++c)
        if (leq_[a][c] && leq_[b][c] && !leq_[j][c]) return false;
    }
  }
  return true;
}

}  // namespace cohera
