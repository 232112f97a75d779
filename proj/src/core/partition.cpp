#include "partition.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace cohera {

Partition::Partition(SpacePtr space, std::vector<int> block_of,
                     std::vector<std::vector<int>> blocks)
    : space_(std::move(space)),
      block_of_(std::move(block_of)),
      blocks_(std::move(blocks)) {}

Partition Partition::from_block_of(SpacePtr space, const std::vector<int>& raw) {
  if (!space) fail(Errc::kNullArgument, "partition without a space");
  const int n = space->size();
  if (static_cast<int>(raw.size()) != n)
    fail(Errc::kDimensionMismatch, "partition: block_of has wrong length");
  std::vector<int> canon(n, -1);
  std::map<int, int> renumber;
  std::vector<std::vector<int>> blocks;
  for (int w = 0; w < n; ++w) {
    auto [it, fresh] = renumber.emplace(raw[w], static_cast<int>(blocks.size()));
    if (fresh) blocks.emplace_back();
    canon[w] = it->second;
    blocks[it->second].push_back(w);
  }
  return Partition(std::move(space), std::move(canon), std::move(blocks));
}

Partition Partition::from_blocks(SpacePtr space,
                                 const std::vector<std::vector<int>>& blocks) {
  if (!space) fail(Errc::kNullArgument, "partition without a space");
  const int n = space->size();
  std::vector<int> raw(n, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) fail(Errc::kValidationError, "partition: empty block");
    for (int w : blocks[b]) {
      if (w < 0 || w >= n)
        fail(Errc::kDimensionMismatch, "partition: world index out of range");
      if (raw[w] != -1)
        fail(Errc::kValidationError, "partition: blocks overlap");
      raw[w] = static_cast<int>(b);
    }
  }
  for (int w = 0; w < n; ++w)
    if (raw[w] == -1)
      fail(Errc::kValidationError, "partition: blocks do not cover the space");
  return from_block_of(std::move(space), raw);
}

Partition Partition::bottom(SpacePtr space) {
  if (!space) fail(Errc::kNullArgument, "partition without a space");
  return from_block_of(std::move(space), std::vector<int>(space->size(), 0));
}

Partition Partition::top(SpacePtr space) {
  if (!space) fail(Errc::kNullArgument, "partition without a space");
  std::vector<int> raw(space->size());
  for (size_t w = 0; w < raw.size(); ++w) raw[w] = static_cast<int>(w);
  return from_block_of(std::move(space), raw);
}

bool Partition::operator==(const Partition& o) const {
  return same_space(space_, o.space_) && block_of_ == o.block_of_;
}

std::string Partition::structure_str() const {
  std::string out;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += "|";
    for (size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out += ",";
      out += space_->world(blocks_[b][i]);
    }
  }
  return out;
}

bool partition_leq(const Partition& x, const Partition& y) {
  require_same_space(x.space(), y.space(), "partition_leq");
  // Every y-block inside one x-block <=> x's labeling is constant on y-blocks.
  for (const auto& block : y.blocks()) {
    const int home = x.block_of(block[0]);
    for (int w : block)
      if (x.block_of(w) != home) return false;
  }
  return true;
}

Partition partition_join(const Partition& x, const Partition& y) {
  require_same_space(x.space(), y.space(), "partition_join");
  const int n = x.space()->size();
  std::map<std::pair<int, int>, int> label;
  std::vector<int> raw(n);
  for (int w = 0; w < n; ++w) {
    auto key = std::make_pair(x.block_of(w), y.block_of(w));
    auto [it, fresh] = label.emplace(key, static_cast<int>(label.size()));
    raw[w] = it->second;
  }
  return Partition::from_block_of(x.space(), raw);
}

bool partitions_independent(const std::vector<Partition>& ps) {
  if (ps.size() < 2) fail(Errc::kTooFewPartitions, "independent: need n >= 2");
  for (size_t i = 1; i < ps.size(); ++i)
    require_same_space(ps[0].space(), ps[i].space(), "independent");
  // Every tuple of blocks must meet: recurse over choices, demanding a
  // non-empty running intersection at every depth.
  struct Rec {
    const std::vector<Partition>& ps;
    bool all(size_t i, const std::vector<int>& acc) {
      if (acc.empty()) return false;
      if (i == ps.size()) return true;
      for (const auto& block : ps[i].blocks())
        if (!all(i + 1, event_intersect(acc, block))) return false;
      return true;
    }
  } rec{ps};
  std::vector<int> everything;
  for (int w = 0; w < ps[0].space()->size(); ++w) everything.push_back(w);
  return rec.all(0, everything);
}

bool partitions_cond_independent(const std::vector<Partition>& ps,
                                 const Partition& given) {
  if (ps.empty()) fail(Errc::kTooFewPartitions, "cond_independent: need n >= 1");
  for (const auto& p : ps)
    require_same_space(p.space(), given.space(), "cond_independent");
  // For each block B of `given`: tuples whose members all meet B must have a
  // joint intersection meeting B.
  struct Rec {
    const std::vector<Partition>& ps;
    const std::vector<int>& b;
    bool all(size_t i, const std::vector<int>& acc) {
      if (i == ps.size()) return !acc.empty();
      for (const auto& block : ps[i].blocks()) {
        if (event_intersect(block, b).empty()) continue;  // tuple not required
        if (!all(i + 1, event_intersect(acc, block))) return false;
      }
      return true;
    }
  };
  for (const auto& b : given.blocks()) {
    Rec rec{ps, b};
    if (!rec.all(0, b)) return false;
  }
  return true;
}

std::vector<Vec> measurability_equations(const Partition& x) {
  const int n = x.space()->size();
  std::vector<Vec> eqs;
  for (const auto& block : x.blocks()) {
    for (size_t i = 0; i + 1 < block.size(); ++i) {
      Vec e(n, Rational(0));
      e[block[i]] = 1;
      e[block[i + 1]] = -1;
      eqs.push_back(std::move(e));
    }
  }
  return eqs;
}

bool is_measurable_vec(const Vec& f, const Partition& x) {
  if (static_cast<int>(f.size()) != x.space()->size())
    fail(Errc::kSpaceMismatch, "is_measurable: width mismatch");
  for (const auto& block : x.blocks())
    for (size_t i = 1; i < block.size(); ++i)
      if (f[block[i]] != f[block[0]]) return false;
  return true;
}

bool is_measurable(const Gamble& f, const Partition& x) {
  require_same_space(f.space(), x.space(), "is_measurable");
  return is_measurable_vec(f.values(), x);
}

Vec blockwise_min_vec(const Vec& f, const Partition& x) {
  if (static_cast<int>(f.size()) != x.space()->size())
    fail(Errc::kSpaceMismatch, "blockwise_min: width mismatch");
  Vec out(f.size());
  for (const auto& block : x.blocks()) {
    Rational m = f[block[0]];
    for (int w : block)
      if (f[w] < m) m = f[w];
    for (int w : block) out[w] = m;
  }
  return out;
}

Gamble blockwise_min(const Gamble& f, const Partition& x) {
  require_same_space(f.space(), x.space(), "blockwise_min");
  return Gamble(f.space(), blockwise_min_vec(f.values(), x));
}

std::vector<int> event_saturate(const std::vector<int>& S, const Partition& x) {
  std::vector<bool> hit(x.num_blocks(), false);
  for (int w : S) {
    if (w < 0 || w >= x.space()->size())
      fail(Errc::kValidationError, "event_saturate: world index out of range");
    hit[x.block_of(w)] = true;
  }
  std::vector<int> out;
  for (int w = 0; w < x.space()->size(); ++w)
    if (hit[x.block_of(w)]) out.push_back(w);
  return out;
}

std::vector<Partition> all_partitions(const SpacePtr& space) {
  const int n = space->size();
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<Partition> out;
  std::vector<int> a(n, 0);
  for (;;) {
    out.push_back(Partition::from_block_of(space, a));
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, a[j]);
      if (a[i] <= cap) break;
    }
    if (i == 0) return out;
    ++a[i];
    for (int j = i + 1; j < n; ++j) a[j] = 0;
  }
}

SpacePtr synthetic_space(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    if (n <= 26)
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      names.push_back("w" + std::to_string(i));
  }
  return PossibilitySpace::make(names);
}

void separoid_law_sweep(const std::vector<Partition>& family, Report& r) {
  const int n = static_cast<int>(family.size());
  if (n == 0) return;

  // Index lookup for join results (family is assumed join-closed when it is
  // all partitions; otherwise joins outside the family skip the laws that
  // need them).
  auto find_idx = [&](const Partition& p) -> int {
    for (int i = 0; i < n; ++i)
      if (family[i] == p) return i;
    return -1;
  };
  std::vector<std::vector<int>> join_idx(n, std::vector<int>(n, -1));
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      join_idx[a][b] = find_idx(partition_join(family[a], family[b]));
      below[a][b] = partition_leq(family[a], family[b]);
    }
  // ci[a][b][c] = family[a] ci family[b] given family[c].
  std::vector<std::vector<std::vector<bool>>> ci(
      n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        ci[a][b][c] =
            partitions_cond_independent({family[a], family[b]}, family[c]);

  auto name3 = [&](int x, int y, int z) {
    return "x=" + family[x].structure_str() + " y=" + family[y].structure_str() +
           " z=" + family[z].structure_str();
  };

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      r.check("ci-given-self",
              "x=" + family[x].structure_str() + " y=" + family[y].structure_str(),
              ci[x][y][y]);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        r.check("ci-symmetry", name3(x, y, z), !ci[x][y][z] || ci[y][x][z]);

        int yz = join_idx[y][z];
        if (yz < 0) {
          r.skip("join-outside-family");
        } else {
          r.check("ci-join-with-condition", name3(x, y, z),
                  !ci[x][y][z] || ci[x][yz][z]);
        }

        int xz = join_idx[x][z];
        if (xz < 0 || yz < 0) {
          r.skip("join-outside-family");
        } else {
          r.check("ci-shift-by-condition", name3(x, y, z),
                  ci[x][y][z] == ci[xz][yz][z]);
        }

        for (int w = 0; w < n; ++w)
          r.check("ci-coarsening",
                  name3(x, y, z) + " w=" + family[w].structure_str(),
                  !(ci[x][y][z] && below[w][y]) || ci[x][w][z]);
      }
}

Report quasi_separoid_suite(int space_size) {
  if (space_size < 1)
    fail(Errc::kValidationError, "quasi_separoid_suite: size must be at least 1");
  if (space_size > 5)
    fail(Errc::kLimitExceeded, "quasi_separoid_suite: sizes above 5 are not enumerable here");
  Report r;
  r.suite = "separoid";
  auto space = synthetic_space(space_size);
  auto ps = all_partitions(space);
  long long np = static_cast<long long>(ps.size());
  r.note("space size " + std::to_string(space_size) + ": " + std::to_string(np) +
         " partitions, " + std::to_string(np * np * np) + " triples");
  separoid_law_sweep(ps, r);
  r.finalize();
  return r;
}

}  // namespace cohera
