#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace cohera {

// A finite possibility space: an ordered list of distinct world names.
// The declared order is the canonical coordinate order for every gamble,
// partition block listing, and report in the project.
class PossibilitySpace {
 public:
  static std::shared_ptr<const PossibilitySpace> make(
      std::vector<std::string> worlds);

  int size() const { return static_cast<int>(worlds_.size()); }
  const std::string& world(int i) const { return worlds_[i]; }
  const std::vector<std::string>& worlds() const { return worlds_; }
  std::optional<int> index_of(const std::string& name) const;

 private:
  explicit PossibilitySpace(std::vector<std::string> worlds);
  std::vector<std::string> worlds_;
  std::map<std::string, int> index_;
};

using SpacePtr = std::shared_ptr<const PossibilitySpace>;

// Two spaces are interchangeable iff they list the same worlds in the same
// order. Identity of the shared_ptr is only a fast path.
bool same_space(const SpacePtr& a, const SpacePtr& b);
void require_same_space(const SpacePtr& a, const SpacePtr& b,
                        const char* where);

// A gamble: one rational payoff per world, in world order.
class Gamble {
 public:
  Gamble(SpacePtr space, Vec values);
  static Gamble zero(const SpacePtr& space);
  // Indicator of a set of world indices: 1 on the set, 0 elsewhere.
  static Gamble indicator(const SpacePtr& space, const std::vector<int>& worlds);

  const SpacePtr& space() const { return space_; }
  const Vec& values() const { return values_; }
  const Rational& operator[](int i) const { return values_[i]; }
  int dim() const { return static_cast<int>(values_.size()); }

  bool operator==(const Gamble& o) const;

 private:
  SpacePtr space_;
  Vec values_;
};

Gamble gamble_add(const Gamble& f, const Gamble& g);
Gamble gamble_scale(const Rational& c, const Gamble& f);
Gamble gamble_neg(const Gamble& f);

// f >= 0 everywhere and f != 0: the membership test for the cone of
// non-negative non-vanishing gambles that seeds every closure.
bool is_nonneg_nonzero(const Gamble& f);
bool is_nonneg_nonzero(const Vec& v);

Rational gamble_min(const Gamble& f);  // pointwise minimum over all worlds
// Minimum of f over the given world indices; the index list must be nonempty.
Rational gamble_min_on(const Gamble& f, const std::vector<int>& worlds);

// An event is kept as a sorted, duplicate-free list of world indices.
std::vector<int> normalize_event(const SpacePtr& space, std::vector<int> worlds);
std::vector<int> event_complement(const SpacePtr& space,
                                  const std::vector<int>& event);
std::vector<int> event_intersect(const std::vector<int>& a,
                                 const std::vector<int>& b);
std::vector<int> event_union(const std::vector<int>& a,
                             const std::vector<int>& b);
std::string event_str(const SpacePtr& space, const std::vector<int>& event);

}  // namespace cohera
