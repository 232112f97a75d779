#include <doctest.h>

#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/lattice.hpp"
#include "core/partition.hpp"

using namespace cohera;

namespace {
QuestionLattice two_chains() {
  SpacePtr s = PossibilitySpace::make({"a", "b", "c"});
  return QuestionLattice::close(
      s, {{"x", Partition::from_block_of(s, {0, 0, 1})},
          {"y", Partition::from_block_of(s, {0, 1, 1})}});
}
}  // namespace

TEST_CASE("closing a family synthesizes the missing joins") {
  const QuestionLattice lat = two_chains();
  CHECK(lat.size() == 3);
  const auto added = lat.closure_additions();
  REQUIRE(added.size() == 1);
  CHECK(added[0] == "join(x,y)");
  const int j = lat.find(added[0]);
  REQUIRE(j >= 0);
  CHECK(lat.at(j) == Partition::top(lat.space()));
  CHECK(lat.entry(j).added_by_closure);
  CHECK_FALSE(lat.entry(lat.find("x")).added_by_closure);
}

TEST_CASE("lookups by name and by structure") {
  const QuestionLattice lat = two_chains();
  const int x = lat.find("x");
  REQUIRE(x >= 0);
  CHECK(lat.name(x) == "x");
  CHECK(lat.find("nope") == -1);
  CHECK(lat.find_partition(Partition::from_block_of(lat.space(), {0, 0, 1})) ==
        x);
  CHECK(lat.find_partition(Partition::bottom(lat.space())) == -1);
}

TEST_CASE("order and join tables agree with the partition primitives") {
  const QuestionLattice lat = two_chains();
  const int x = lat.find("x");
  const int y = lat.find("y");
  const int top = lat.find("join(x,y)");
  CHECK(lat.leq(x, x));
  CHECK_FALSE(lat.leq(x, y));
  CHECK(lat.leq(x, top));
  CHECK(lat.leq(y, top));
  CHECK(lat.join(x, y) == top);
  CHECK(lat.join(x, x) == x);
  CHECK(lat.join(x, top) == top);
  CHECK(lat.tables_consistent());
  CHECK(lat.has_top());
}

TEST_CASE("a lattice need not reach the finest question") {
  SpacePtr s = PossibilitySpace::make({"a", "b", "c"});
  const QuestionLattice lat = QuestionLattice::close(
      s, {{"x", Partition::from_block_of(s, {0, 0, 1})}});
  CHECK(lat.size() == 1);
  CHECK_FALSE(lat.has_top());
  CHECK(lat.closure_additions().empty());
  CHECK(lat.tables_consistent());
}

TEST_CASE("canonical order is a linear extension of the question order") {
  const QuestionLattice lat = two_chains();
  const auto& order = lat.canonical_order();
  REQUIRE(static_cast<int>(order.size()) == lat.size());
  std::vector<int> pos(lat.size());
  for (int i = 0; i < lat.size(); ++i) pos[order[i]] = i;
  for (int a = 0; a < lat.size(); ++a)
    for (int b = 0; b < lat.size(); ++b)
      if (lat.leq(a, b) && a != b) CHECK(pos[a] < pos[b]);
}

TEST_CASE("duplicate question names are rejected") {
  SpacePtr s = PossibilitySpace::make({"a", "b"});
  try {
    QuestionLattice::close(s, {{"x", Partition::bottom(s)},
                               {"x", Partition::top(s)}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kValidationError);
    CHECK(std::string(e.what()).find("duplicate question name 'x'") !=
          std::string::npos);
  }
}

TEST_CASE("joins that collide with existing structures are not re-added") {
  SpacePtr s = PossibilitySpace::make({"a", "b", "c"});
  const QuestionLattice lat = QuestionLattice::close(
      s, {{"x", Partition::from_block_of(s, {0, 0, 1})},
          {"y", Partition::from_block_of(s, {0, 1, 1})},
          {"t", Partition::top(s)}});
  CHECK(lat.size() == 3);
  CHECK(lat.closure_additions().empty());
  CHECK(lat.join(lat.find("x"), lat.find("y")) == lat.find("t"));
}
