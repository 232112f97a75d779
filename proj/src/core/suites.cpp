#include "suites.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "atoms.hpp"
#include "errors.hpp"
#include "model_io.hpp"
#include "sampling.hpp"

namespace cohera {

namespace {

// splitmix64-style mixer: derives independent sub-seeds from (seed, salt)
// without correlating nearby salts.
std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

constexpr int kModelsPerSize = 3;

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "axioms",        "separoid",      "saturation",
      "set-extraction", "event-hom",    "atom-separoid",
      "atom-set-algebra", "coherence",
  };
  return names;
}

AlgebraModel random_model(int space_size, std::uint64_t seed) {
  if (space_size < 1)
    fail(Errc::kValidationError, "random model needs at least one world");
  if (space_size > 5)
    fail(Errc::kLimitExceeded,
         "random models enumerate the full partition lattice and support at "
         "most 5 worlds");
  Rng rng(seed);
  SpacePtr space = synthetic_space(space_size);
  const int n = space_size;

  std::vector<std::pair<std::string, Partition>> named;
  auto parts = all_partitions(space);
  for (std::size_t i = 0; i < parts.size(); ++i)
    named.emplace_back("q" + std::to_string(i), parts[i]);

  AlgebraModel model{space, QuestionLattice::close(space, std::move(named)), {}, {}};

  const int n_sets = 4 + static_cast<int>(rng.below(3));
  for (int i = 0; i < n_sets; ++i) {
    const int roll = static_cast<int>(rng.below(10));
    SetRep d = SetRep::unit(space);
    if (roll == 0) {
      d = SetRep::unit(space);
    } else if (roll == 1) {
      d = SetRep::top(space);
    } else if (roll <= 5) {
      std::vector<int> worlds;
      for (int w = 0; w < n; ++w)
        if (rng.coin()) worlds.push_back(w);
      if (worlds.empty()) worlds.push_back(static_cast<int>(rng.below(n)));
      d = SetRep::event_set(space, std::move(worlds));
    } else {
      const int k = 1 + static_cast<int>(rng.below(6));
      std::vector<Vec> gens;
      for (int j = 0; j < k; ++j) gens.push_back(rng.nonzero_coords(n));
      d = SetRep::closure(space, std::move(gens));
    }
    model.sets.emplace_back("S" + std::to_string(i), std::move(d));
  }
  return model;
}

RunReport run_verify(const VerifyOptions& opt) {
  if (opt.size_limit < 1)
    fail(Errc::kValidationError, "size limit must be at least 1");
  if (opt.n_samples < 1)
    fail(Errc::kValidationError, "sample count must be at least 1");

  const auto& registry = verify_suite_names();
  std::set<std::string> selected;
  for (const auto& s : opt.suites) {
    if (s == "all") {
      selected.insert(registry.begin(), registry.end());
      continue;
    }
    if (std::find(registry.begin(), registry.end(), s) == registry.end())
      fail(Errc::kValidationError,
           "unknown suite '" + s + "' (valid: all, axioms, separoid, "
           "saturation, set-extraction, event-hom, atom-separoid, "
           "atom-set-algebra, coherence)");
    selected.insert(s);
  }
  if (selected.empty())
    fail(Errc::kValidationError, "no suites selected");

  RunReport rr;
  rr.tool_version = kToolVersion;
  rr.model_digest = opt.model ? model_digest(*opt.model) : "none";

  for (const auto& name : registry) {
    if (!selected.count(name)) continue;
    if (name == "axioms") {
      if (opt.model) {
        Report r = axiom_suite(*opt.model, opt.n_samples, opt.seed);
        r.notes.push_back("model digest " + rr.model_digest);
        rr.suites.push_back(std::move(r));
      } else {
        for (int n = 1; n <= opt.size_limit; ++n) {
          for (int i = 0; i < kModelsPerSize; ++i) {
            const std::uint64_t ms = mix(opt.seed, 0x10000ULL + n * 64 + i);
            AlgebraModel model = random_model(n, ms);
            Report r = axiom_suite(model, opt.n_samples, mix(ms, 1));
            r.notes.push_back("random model digest " + model_digest(model) +
                              ", space size " + std::to_string(n));
            rr.suites.push_back(std::move(r));
          }
        }
      }
    } else if (name == "separoid") {
      for (int n = 1; n <= opt.size_limit; ++n)
        rr.suites.push_back(quasi_separoid_suite(n));
    } else if (name == "saturation") {
      for (int n = 1; n <= opt.size_limit; ++n)
        rr.suites.push_back(saturation_lemma_suite(n));
    } else if (name == "set-extraction") {
      for (int n = 1; n <= opt.size_limit; ++n)
        rr.suites.push_back(set_algebra_extraction_suite(n));
    } else if (name == "event-hom") {
      for (int n = 1; n <= opt.size_limit; ++n)
        rr.suites.push_back(event_hom_suite(n));
    } else if (name == "atom-separoid") {
      for (int n = 1; n <= opt.size_limit; ++n)
        rr.suites.push_back(atom_separoid_suite(n));
    } else if (name == "atom-set-algebra") {
      for (int n = 1; n <= opt.size_limit; ++n)
        rr.suites.push_back(atom_set_algebra_suite(n, 7));
    } else if (name == "coherence") {
      for (int n = 1; n <= opt.size_limit; ++n)
        rr.suites.push_back(coherence_suite(n, opt.n_samples, mix(opt.seed, n)));
    }
  }

  rr.exit_status = 0;
  for (const auto& r : rr.suites)
    if (r.failed > 0) rr.exit_status = 1;
  return rr;
}

}  // namespace cohera
