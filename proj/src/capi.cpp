#include "cohera/cohera.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "core/algebra.hpp"
#include "core/atoms.hpp"
#include "core/errors.hpp"
#include "core/model_io.hpp"
#include "core/suites.hpp"

struct cohera_model {
  cohera::LoadedModel lm;
};

struct cohera_set {
  cohera::SetRep rep;
};

namespace {

thread_local std::string t_last_error;

template <typename F>
cohera_status guarded(F&& fn) {
  try {
    fn();
    return COHERA_OK;
  } catch (const cohera::Error& e) {
    t_last_error = e.what();
    return static_cast<cohera_status>(static_cast<int>(e.code()));
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return COHERA_E_INTERNAL;
  } catch (...) {
    t_last_error = "unknown internal error";
    return COHERA_E_INTERNAL;
  }
}

cohera_status null_arg(const char* what) {
  t_last_error = std::string("null argument: ") + what;
  return COHERA_E_NULL_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

cohera::Vec parse_gamble_csv(const char* csv) {
  return cohera::vec_parse_csv(csv);
}

const cohera::Partition& resolve_question(const cohera_model* m,
                                          const char* name) {
  const int id = m->lm.model.lattice.find(name);
  if (id < 0)
    cohera::fail(cohera::Errc::kUnknownQuestion,
                 std::string("unknown question '") + name + "'");
  return m->lm.model.lattice.at(id);
}

const std::vector<int>& resolve_event(const cohera_model* m, const char* name) {
  const std::vector<int>* ev = m->lm.model.find_event(name);
  if (!ev)
    cohera::fail(cohera::Errc::kUnknownName,
                 std::string("unknown event '") + name + "'");
  return *ev;
}

std::string atom_line(const cohera::SpacePtr& space, const std::vector<int>& perm) {
  std::string line;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (i) line += '>';
    line += space->world(perm[i]);
  }
  return line;
}

}  // namespace

extern "C" {

const char* cohera_version(void) { return cohera::kToolVersion; }

const char* cohera_status_name(cohera_status st) {
  if (st == COHERA_OK) return "Ok";
  if (st == COHERA_E_INTERNAL) return "Internal";
  return cohera::Error::name(static_cast<cohera::Errc>(static_cast<int>(st)));
}

const char* cohera_last_error(void) { return t_last_error.c_str(); }

void cohera_string_free(char* s) { std::free(s); }

cohera_status cohera_model_load(const char* path, cohera_model** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  return guarded([&] {
    auto* m = new cohera_model{cohera::load_model_file(path)};
    *out = m;
  });
}

cohera_status cohera_model_parse(const char* json_text, cohera_model** out) {
  if (!json_text) return null_arg("json_text");
  if (!out) return null_arg("out");
  return guarded([&] {
    auto* m = new cohera_model{cohera::parse_model_json(json_text)};
    *out = m;
  });
}

void cohera_model_free(cohera_model* m) { delete m; }

cohera_status cohera_model_digest(const cohera_model* m, char** out) {
  if (!m) return null_arg("m");
  if (!out) return null_arg("out");
  return guarded([&] { *out = dup_string(m->lm.digest); });
}

cohera_status cohera_model_serialize(const cohera_model* m, char** out) {
  if (!m) return null_arg("m");
  if (!out) return null_arg("out");
  return guarded([&] { *out = dup_string(cohera::serialize_model(m->lm.model)); });
}

cohera_status cohera_model_closure_additions(const cohera_model* m, char** out) {
  if (!m) return null_arg("m");
  if (!out) return null_arg("out");
  return guarded([&] {
    std::string joined;
    for (std::size_t i = 0; i < m->lm.closure_additions.size(); ++i) {
      if (i) joined += '\n';
      joined += m->lm.closure_additions[i];
    }
    *out = dup_string(joined);
  });
}

cohera_status cohera_model_world_count(const cohera_model* m, int* out) {
  if (!m) return null_arg("m");
  if (!out) return null_arg("out");
  *out = m->lm.model.space->size();
  return COHERA_OK;
}

cohera_status cohera_model_set(const cohera_model* m, const char* name,
                               cohera_set** out) {
  if (!m) return null_arg("m");
  if (!name) return null_arg("name");
  if (!out) return null_arg("out");
  return guarded([&] {
    const cohera::SetRep* rep = m->lm.model.find_set(name);
    if (!rep)
      cohera::fail(cohera::Errc::kUnknownName,
                   std::string("unknown set '") + name + "'");
    *out = new cohera_set{*rep};
  });
}

cohera_status cohera_set_from_assertions(const char* const* gamble_csvs,
                                         int count, cohera_set** out) {
  if (!gamble_csvs) return null_arg("gamble_csvs");
  if (!out) return null_arg("out");
  return guarded([&] {
    if (count < 1)
      cohera::fail(cohera::Errc::kValidationError,
                   "at least one assertion is required");
    std::vector<cohera::Vec> gens;
    for (int i = 0; i < count; ++i) {
      if (!gamble_csvs[i])
        cohera::fail(cohera::Errc::kNullArgument, "null assertion string");
      gens.push_back(parse_gamble_csv(gamble_csvs[i]));
      if (gens.back().size() != gens.front().size())
        cohera::fail(cohera::Errc::kDimensionMismatch,
                     "assertions have differing dimensions");
    }
    cohera::SpacePtr space =
        cohera::synthetic_space(static_cast<int>(gens.front().size()));
    *out = new cohera_set{cohera::SetRep::closure(space, std::move(gens))};
  });
}

void cohera_set_free(cohera_set* s) { delete s; }

cohera_status cohera_set_describe(const cohera_set* s, char** out) {
  if (!s) return null_arg("s");
  if (!out) return null_arg("out");
  return guarded([&] { *out = dup_string(s->rep.describe()); });
}

cohera_status cohera_set_is_coherent(const cohera_set* s, int* out) {
  if (!s) return null_arg("s");
  if (!out) return null_arg("out");
  *out = s->rep.is_top() ? 0 : 1;
  return COHERA_OK;
}

cohera_status cohera_set_member(const cohera_set* s, const char* gamble_csv,
                                int* out) {
  if (!s) return null_arg("s");
  if (!gamble_csv) return null_arg("gamble_csv");
  if (!out) return null_arg("out");
  return guarded([&] {
    cohera::Vec f = parse_gamble_csv(gamble_csv);
    if (cohera::vec_is_zero(f))
      cohera::fail(cohera::Errc::kZeroGambleQuery,
                   "the zero gamble is not a valid membership query");
    *out = cohera::set_member(s->rep, f) ? 1 : 0;
  });
}

cohera_status cohera_set_combine(const cohera_set* a, const cohera_set* b,
                                 cohera_set** out) {
  if (!a) return null_arg("a");
  if (!b) return null_arg("b");
  if (!out) return null_arg("out");
  return guarded([&] { *out = new cohera_set{cohera::combine(a->rep, b->rep)}; });
}

cohera_status cohera_set_extract(const cohera_set* s, const cohera_model* m,
                                 const char* question, cohera_set** out) {
  if (!s) return null_arg("s");
  if (!m) return null_arg("m");
  if (!question) return null_arg("question");
  if (!out) return null_arg("out");
  return guarded([&] {
    const cohera::Partition& x = resolve_question(m, question);
    cohera::require_same_space(s->rep.space(), m->lm.model.space,
                               "extract: set and model");
    *out = new cohera_set{cohera::extract(s->rep, x)};
  });
}

cohera_status cohera_set_leq(const cohera_set* a, const cohera_set* b,
                             int* out) {
  if (!a) return null_arg("a");
  if (!b) return null_arg("b");
  if (!out) return null_arg("out");
  return guarded([&] { *out = cohera::leq(a->rep, b->rep) ? 1 : 0; });
}

cohera_status cohera_set_equal(const cohera_set* a, const cohera_set* b,
                               int* out) {
  if (!a) return null_arg("a");
  if (!b) return null_arg("b");
  if (!out) return null_arg("out");
  return guarded([&] { *out = cohera::set_equal(a->rep, b->rep) ? 1 : 0; });
}

cohera_status cohera_set_support(const cohera_set* s, const cohera_model* m,
                                 char** out_name, int* found) {
  if (!s) return null_arg("s");
  if (!m) return null_arg("m");
  if (!out_name) return null_arg("out_name");
  if (!found) return null_arg("found");
  return guarded([&] {
    cohera::require_same_space(s->rep.space(), m->lm.model.space,
                               "support: set and model");
    auto id = cohera::find_support(s->rep, m->lm.model.lattice);
    *found = id ? 1 : 0;
    *out_name = dup_string(id ? m->lm.model.lattice.name(*id) : std::string());
  });
}

cohera_status cohera_saturate(const cohera_model* m, const char* event_name,
                              const char* question, char** out_worlds) {
  if (!m) return null_arg("m");
  if (!event_name) return null_arg("event_name");
  if (!question) return null_arg("question");
  if (!out_worlds) return null_arg("out_worlds");
  return guarded([&] {
    const std::vector<int>& S = resolve_event(m, event_name);
    const cohera::Partition& x = resolve_question(m, question);
    std::vector<int> sat = cohera::event_saturate(S, x);
    std::string joined;
    for (std::size_t i = 0; i < sat.size(); ++i) {
      if (i) joined += ',';
      joined += m->lm.model.space->world(sat[i]);
    }
    *out_worlds = dup_string(joined);
  });
}

cohera_status cohera_independent(const cohera_model* m,
                                 const char* const* questions, int count,
                                 int* out) {
  if (!m) return null_arg("m");
  if (!questions) return null_arg("questions");
  if (!out) return null_arg("out");
  return guarded([&] {
    if (count < 2)
      cohera::fail(cohera::Errc::kValidationError,
                   "independence needs at least two questions");
    std::vector<cohera::Partition> ps;
    for (int i = 0; i < count; ++i) {
      if (!questions[i])
        cohera::fail(cohera::Errc::kNullArgument, "null question name");
      ps.push_back(resolve_question(m, questions[i]));
    }
    *out = cohera::partitions_independent(ps) ? 1 : 0;
  });
}

cohera_status cohera_cond_independent(const cohera_model* m,
                                      const char* const* questions, int count,
                                      const char* given, int* out) {
  if (!m) return null_arg("m");
  if (!questions) return null_arg("questions");
  if (!given) return null_arg("given");
  if (!out) return null_arg("out");
  return guarded([&] {
    if (count < 2)
      cohera::fail(cohera::Errc::kValidationError,
                   "conditional independence needs at least two questions");
    std::vector<cohera::Partition> ps;
    for (int i = 0; i < count; ++i) {
      if (!questions[i])
        cohera::fail(cohera::Errc::kNullArgument, "null question name");
      ps.push_back(resolve_question(m, questions[i]));
    }
    *out = cohera::partitions_cond_independent(ps, resolve_question(m, given))
               ? 1
               : 0;
  });
}

cohera_status cohera_lift(const cohera_model* m, const char* event_name,
                          cohera_set** out) {
  if (!m) return null_arg("m");
  if (!event_name) return null_arg("event_name");
  if (!out) return null_arg("out");
  return guarded([&] {
    const std::vector<int>& S = resolve_event(m, event_name);
    if (S.empty())
      cohera::fail(cohera::Errc::kEmptyEvent,
                   std::string("event '") + event_name +
                       "' is empty; only non-empty events embed");
    *out = new cohera_set{cohera::lift_event(m->lm.model.space, S)};
  });
}

cohera_status cohera_atoms(const cohera_model* m, char** out_listing,
                           long long* out_count) {
  if (!m) return null_arg("m");
  if (!out_listing) return null_arg("out_listing");
  if (!out_count) return null_arg("out_count");
  return guarded([&] {
    cohera::LexAtomFamily fam = cohera::enum_lex_atoms(m->lm.model.space);
    std::string listing;
    for (int i = 0; i < fam.size(); ++i) {
      if (i) listing += '\n';
      listing += atom_line(fam.space, fam.perms[i]);
    }
    *out_count = fam.size();
    *out_listing = dup_string(listing);
  });
}

cohera_status cohera_at_of(const cohera_model* m, const char* set_name,
                           char** out_listing, long long* out_count) {
  if (!m) return null_arg("m");
  if (!set_name) return null_arg("set_name");
  if (!out_listing) return null_arg("out_listing");
  if (!out_count) return null_arg("out_count");
  return guarded([&] {
    const cohera::SetRep* rep = m->lm.model.find_set(set_name);
    if (!rep)
      cohera::fail(cohera::Errc::kUnknownName,
                   std::string("unknown set '") + set_name + "'");
    cohera::LexAtomFamily fam = cohera::enum_lex_atoms(m->lm.model.space);
    std::vector<int> idx = cohera::at_of(*rep, fam);
    std::string listing;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) listing += '\n';
      listing += atom_line(fam.space, fam.perms[idx[i]]);
    }
    *out_count = static_cast<long long>(idx.size());
    *out_listing = dup_string(listing);
  });
}

cohera_status cohera_verify(const cohera_model* m, const char* suites_csv,
                            int size_limit, unsigned long long seed,
                            int n_samples, char** out_report_json,
                            int* out_exit_status) {
  if (!suites_csv) return null_arg("suites_csv");
  if (!out_report_json) return null_arg("out_report_json");
  if (!out_exit_status) return null_arg("out_exit_status");
  return guarded([&] {
    cohera::VerifyOptions opt;
    std::stringstream ss(suites_csv);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) opt.suites.push_back(item);
    opt.size_limit = size_limit;
    opt.seed = static_cast<std::uint64_t>(seed);
    opt.n_samples = n_samples;
    opt.model = m ? &m->lm.model : nullptr;
    cohera::RunReport rr = cohera::run_verify(opt);
    *out_report_json = dup_string(rr.to_json_string());
    *out_exit_status = rr.exit_status;
  });
}

}  // extern "C"
