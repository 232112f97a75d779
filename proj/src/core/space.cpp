#include "space.hpp"

#include <algorithm>

#include "errors.hpp"

namespace cohera {

PossibilitySpace::PossibilitySpace(std::vector<std::string> worlds)
    : worlds_(std::move(worlds)) {
  for (int i = 0; i < static_cast<int>(worlds_.size()); ++i)
    index_.emplace(worlds_[i], i);
}

std::shared_ptr<const PossibilitySpace> PossibilitySpace::make(
    std::vector<std::string> worlds) {
  if (worlds.empty()) fail(Errc::kEmptySpace, "a possibility space needs at least one world");
  std::map<std::string, int> seen;
  for (const auto& w : worlds) {
    if (w.empty()) fail(Errc::kParseError, "empty world name");
    if (!seen.emplace(w, 0).second)
      fail(Errc::kDuplicateWorld, "duplicate world name '" + w + "'");
  }
  return std::shared_ptr<const PossibilitySpace>(
      new PossibilitySpace(std::move(worlds)));
}

std::optional<int> PossibilitySpace::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return a->worlds() == b->worlds();
}

void require_same_space(const SpacePtr& a, const SpacePtr& b,
                        const char* where) {
  if (!same_space(a, b))
    fail(Errc::kSpaceMismatch, std::string(where) + ": spaces differ");
}

Gamble::Gamble(SpacePtr space, Vec values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_) fail(Errc::kNullArgument, "gamble without a space");
  if (static_cast<int>(values_.size()) != space_->size())
    fail(Errc::kDimensionMismatch, "gamble has wrong number of payoffs");
}

Gamble Gamble::zero(const SpacePtr& space) {
  return Gamble(space, Vec(space->size(), Rational(0)));
}

Gamble Gamble::indicator(const SpacePtr& space, const std::vector<int>& worlds) {
  Vec v(space->size(), Rational(0));
  for (int w : worlds) {
    if (w < 0 || w >= space->size())
      fail(Errc::kDimensionMismatch, "indicator: world index out of range");
    v[w] = 1;
  }
  return Gamble(space, std::move(v));
}

bool Gamble::operator==(const Gamble& o) const {
  return same_space(space_, o.space_) && values_ == o.values_;
}

Gamble gamble_add(const Gamble& f, const Gamble& g) {
  require_same_space(f.space(), g.space(), "gamble_add");
  return Gamble(f.space(), vec_add(f.values(), g.values()));
}

Gamble gamble_scale(const Rational& c, const Gamble& f) {
  return Gamble(f.space(), vec_scale(c, f.values()));
}

Gamble gamble_neg(const Gamble& f) { return gamble_scale(Rational(-1), f); }

bool is_nonneg_nonzero(const Vec& v) {
  bool positive_somewhere = false;
  for (const auto& x : v) {
    if (x < 0) return false;
    if (x > 0) positive_somewhere = true;
  }
  return positive_somewhere;
}

bool is_nonneg_nonzero(const Gamble& f) { return is_nonneg_nonzero(f.values()); }

Rational gamble_min(const Gamble& f) {
  Rational m = f[0];
  for (int i = 1; i < f.dim(); ++i)
    if (f[i] < m) m = f[i];
  return m;
}

Rational gamble_min_on(const Gamble& f, const std::vector<int>& worlds) {
  if (worlds.empty()) fail(Errc::kEmptyEvent, "minimum over an empty event");
  Rational m = f[worlds[0]];
  for (size_t i = 1; i < worlds.size(); ++i)
    if (f[worlds[i]] < m) m = f[worlds[i]];
  return m;
}

std::vector<int> normalize_event(const SpacePtr& space, std::vector<int> worlds) {
  std::sort(worlds.begin(), worlds.end());
  worlds.erase(std::unique(worlds.begin(), worlds.end()), worlds.end());
  for (int w : worlds)
    if (w < 0 || w >= space->size())
      fail(Errc::kDimensionMismatch, "event: world index out of range");
  return worlds;
}

std::vector<int> event_complement(const SpacePtr& space,
                                  const std::vector<int>& event) {
  std::vector<int> out;
  size_t k = 0;
  for (int w = 0; w < space->size(); ++w) {
    if (k < event.size() && event[k] == w) {
      ++k;
    } else {
      out.push_back(w);
    }
  }
  return out;
}

std::vector<int> event_intersect(const std::vector<int>& a,
                                 const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> event_union(const std::vector<int>& a,
                             const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::string event_str(const SpacePtr& space, const std::vector<int>& event) {
  std::string out = "{";
  for (size_t i = 0; i < event.size(); ++i) {
    if (i) out += ",";
    out += space->world(event[i]);
  }
  return out + "}";
}

}  // namespace cohera
