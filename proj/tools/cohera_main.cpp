// cohera: command-line front end over the public C API.
//
// Exit codes: 0 = true/success, 1 = false/negative (or asserted suite
// failure under `verify`), 2 = usage error (including size limits beyond a
// suite's exact-enumeration cap), 3 = model/library error.

#include <CLI11.hpp>

#include <cohera/cohera.h>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

struct StrDeleter {
  void operator()(char* p) const { cohera_string_free(p); }
};
using CStr = std::unique_ptr<char, StrDeleter>;

struct ModelDeleter {
  void operator()(cohera_model* m) const { cohera_model_free(m); }
};
using ModelPtr = std::unique_ptr<cohera_model, ModelDeleter>;

struct SetDeleter {
  void operator()(cohera_set* s) const { cohera_set_free(s); }
};
using SetPtr = std::unique_ptr<cohera_set, SetDeleter>;

int fail_with(cohera_status st) {
  std::cerr << "error: " << cohera_last_error() << " ["
            << cohera_status_name(st) << "]\n";
  if (st == COHERA_E_LIMIT_EXCEEDED) {
    std::cerr << "hint: the exact-enumeration suites cap the space size "
                 "(atom/event suites at 4, partition suites at 5, coherence "
                 "at 6); lower --size-limit or drop the capped suite.\n";
    return 2;
  }
  return 3;
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

// Loads --model when given; *rc is set to the process exit code on failure.
bool load_model(const std::string& path, ModelPtr& model, int* rc) {
  cohera_model* raw = nullptr;
  const cohera_status st = cohera_model_load(path.c_str(), &raw);
  if (st != COHERA_OK) {
    *rc = fail_with(st);
    return false;
  }
  model.reset(raw);
  return true;
}

// Resolves the queried set either from --set NAME on a model or from ad-hoc
// --assertions gambles; exactly one source must be present.
bool resolve_set(const std::string& model_path, const std::string& set_name,
                 const std::vector<std::string>& assertions, SetPtr& out,
                 int* rc) {
  const bool from_model = !set_name.empty();
  const bool from_assertions = !assertions.empty();
  if (from_model == from_assertions) {
    *rc = usage_error(
        "give either --model with --set NAME, or one or more --assertions");
    return false;
  }
  cohera_set* raw = nullptr;
  if (from_assertions) {
    std::vector<const char*> ptrs;
    for (const auto& a : assertions) ptrs.push_back(a.c_str());
    const cohera_status st = cohera_set_from_assertions(
        ptrs.data(), static_cast<int>(ptrs.size()), &raw);
    if (st != COHERA_OK) {
      *rc = fail_with(st);
      return false;
    }
    out.reset(raw);
    return true;
  }
  if (model_path.empty()) {
    *rc = usage_error("--set NAME needs --model PATH");
    return false;
  }
  ModelPtr model;
  if (!load_model(model_path, model, rc)) return false;
  const cohera_status st = cohera_model_set(model.get(), set_name.c_str(), &raw);
  if (st != COHERA_OK) {
    *rc = fail_with(st);
    return false;
  }
  out.reset(raw);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact information algebra of coherent sets of gambles"};
  app.set_version_flag("--version", cohera_version());
  app.require_subcommand(1);

  std::string model_path, set_name, set_b, question, given, event_name;
  std::string gamble, suites = "all", output;
  std::vector<std::string> assertions, set_names, question_names;
  int size_limit = 3, n_samples = 200;
  unsigned long long seed = 1;

  auto* c_coherent =
      app.add_subcommand("coherent", "Is the set a coherent set of gambles?");
  c_coherent->add_option("--model", model_path, "Model file (JSON)");
  c_coherent->add_option("--set", set_name, "Named set in the model");
  c_coherent->add_option("--assertions", assertions,
                         "Ad-hoc assertion gamble (CSV rationals); repeatable");

  auto* c_member =
      app.add_subcommand("member", "Does the set contain the gamble?");
  c_member->add_option("--model", model_path, "Model file (JSON)");
  c_member->add_option("--set", set_name, "Named set in the model");
  c_member->add_option("--assertions", assertions,
                       "Ad-hoc assertion gamble (CSV rationals); repeatable");
  c_member->add_option("--gamble", gamble, "Query gamble (CSV rationals)")
      ->required();

  auto* c_combine = app.add_subcommand(
      "combine", "Combine two or more named sets (closure of the union)");
  c_combine->add_option("--model", model_path, "Model file (JSON)")->required();
  c_combine
      ->add_option("--set", set_names, "Named set; give at least twice")
      ->required();

  auto* c_extract =
      app.add_subcommand("extract", "Extract a set to a named question");
  c_extract->add_option("--model", model_path, "Model file (JSON)")->required();
  c_extract->add_option("--set", set_name, "Named set in the model")->required();
  c_extract->add_option("--question", question, "Question (partition) name")
      ->required();

  auto* c_support = app.add_subcommand(
      "support", "Least question whose extraction leaves the set unchanged");
  c_support->add_option("--model", model_path, "Model file (JSON)")->required();
  c_support->add_option("--set", set_name, "Named set in the model")->required();

  auto* c_saturate = app.add_subcommand(
      "saturate", "Union of the question blocks meeting a named event");
  c_saturate->add_option("--model", model_path, "Model file (JSON)")->required();
  c_saturate->add_option("--event", event_name, "Named event in the model")
      ->required();
  c_saturate->add_option("--question", question, "Question (partition) name")
      ->required();

  auto* c_indep = app.add_subcommand(
      "independent", "Do the questions' blocks cross-intersect?");
  c_indep->add_option("--model", model_path, "Model file (JSON)")->required();
  c_indep
      ->add_option("--question", question_names,
                   "Question name; give at least twice")
      ->required();

  auto* c_cindep = app.add_subcommand(
      "cond-independent", "Conditional independence given a further question");
  c_cindep->add_option("--model", model_path, "Model file (JSON)")->required();
  c_cindep
      ->add_option("--question", question_names,
                   "Question name; give at least twice")
      ->required();
  c_cindep->add_option("--given", given, "Conditioning question name")
      ->required();

  auto* c_lift = app.add_subcommand(
      "lift", "Embed a named non-empty event as a set of gambles");
  c_lift->add_option("--model", model_path, "Model file (JSON)")->required();
  c_lift->add_option("--event", event_name, "Named event in the model")
      ->required();

  auto* c_atoms = app.add_subcommand(
      "atoms", "List the lexicographic maximal atoms of the model's space");
  c_atoms->add_option("--model", model_path, "Model file (JSON)")->required();

  auto* c_atof = app.add_subcommand(
      "at-of", "List the lexicographic atoms containing a named set");
  c_atof->add_option("--model", model_path, "Model file (JSON)")->required();
  c_atof->add_option("--set", set_name, "Named set in the model")->required();

  auto* c_verify =
      app.add_subcommand("verify", "Run verification suites; write the report");
  c_verify->add_option("--model", model_path,
                       "Model file; the axioms suite then runs on it alone");
  c_verify->add_option("--suites", suites,
                       "Comma list: all, axioms, separoid, saturation, "
                       "set-extraction, event-hom, atom-separoid, "
                       "atom-set-algebra, coherence");
  c_verify->add_option("--size-limit", size_limit,
                       "Largest space size per suite (default 3)");
  c_verify->add_option("--seed", seed, "Sampling seed (default 1)");
  c_verify->add_option("--samples", n_samples,
                       "Samples per sampled law (default 200)");
  c_verify->add_option("--output", output, "Report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int rc = 0;

  if (c_coherent->parsed()) {
    SetPtr s;
    if (!resolve_set(model_path, set_name, assertions, s, &rc)) return rc;
    int coherent = 0;
    const cohera_status st = cohera_set_is_coherent(s.get(), &coherent);
    if (st != COHERA_OK) return fail_with(st);
    std::cout << "coherent: " << (coherent ? "true" : "false") << "\n";
    return coherent ? 0 : 1;
  }

  if (c_member->parsed()) {
    SetPtr s;
    if (!resolve_set(model_path, set_name, assertions, s, &rc)) return rc;
    int member = 0;
    const cohera_status st =
        cohera_set_member(s.get(), gamble.c_str(), &member);
    if (st != COHERA_OK) return fail_with(st);
    std::cout << "member: " << (member ? "true" : "false") << "\n";
    return member ? 0 : 1;
  }

  if (c_combine->parsed()) {
    if (set_names.size() < 2)
      return usage_error("combine needs --set at least twice");
    ModelPtr model;
    if (!load_model(model_path, model, &rc)) return rc;
    cohera_set* acc = nullptr;
    cohera_status st =
        cohera_model_set(model.get(), set_names[0].c_str(), &acc);
    if (st != COHERA_OK) return fail_with(st);
    SetPtr result(acc);
    for (std::size_t i = 1; i < set_names.size(); ++i) {
      cohera_set* next = nullptr;
      st = cohera_model_set(model.get(), set_names[i].c_str(), &next);
      if (st != COHERA_OK) return fail_with(st);
      SetPtr rhs(next);
      cohera_set* combined = nullptr;
      st = cohera_set_combine(result.get(), rhs.get(), &combined);
      if (st != COHERA_OK) return fail_with(st);
      result.reset(combined);
    }
    char* desc = nullptr;
    st = cohera_set_describe(result.get(), &desc);
    if (st != COHERA_OK) return fail_with(st);
    CStr d(desc);
    int coherent = 0;
    cohera_set_is_coherent(result.get(), &coherent);
    std::cout << "result: " << d.get() << "\n"
              << "coherent: " << (coherent ? "true" : "false") << "\n";
    return 0;
  }

  if (c_extract->parsed()) {
    ModelPtr model;
    if (!load_model(model_path, model, &rc)) return rc;
    cohera_set* raw = nullptr;
    cohera_status st = cohera_model_set(model.get(), set_name.c_str(), &raw);
    if (st != COHERA_OK) return fail_with(st);
    SetPtr s(raw);
    cohera_set* ex = nullptr;
    st = cohera_set_extract(s.get(), model.get(), question.c_str(), &ex);
    if (st != COHERA_OK) return fail_with(st);
    SetPtr e(ex);
    char* desc = nullptr;
    st = cohera_set_describe(e.get(), &desc);
    if (st != COHERA_OK) return fail_with(st);
    CStr d(desc);
    std::cout << "result: " << d.get() << "\n";
    return 0;
  }

  if (c_support->parsed()) {
    ModelPtr model;
    if (!load_model(model_path, model, &rc)) return rc;
    cohera_set* raw = nullptr;
    cohera_status st = cohera_model_set(model.get(), set_name.c_str(), &raw);
    if (st != COHERA_OK) return fail_with(st);
    SetPtr s(raw);
    char* name = nullptr;
    int found = 0;
    st = cohera_set_support(s.get(), model.get(), &name, &found);
    if (st != COHERA_OK) return fail_with(st);
    CStr n(name);
    std::cout << "support: " << (found ? n.get() : "none") << "\n";
    return found ? 0 : 1;
  }

  if (c_saturate->parsed()) {
    ModelPtr model;
    if (!load_model(model_path, model, &rc)) return rc;
    char* worlds = nullptr;
    const cohera_status st = cohera_saturate(
        model.get(), event_name.c_str(), question.c_str(), &worlds);
    if (st != COHERA_OK) return fail_with(st);
    CStr w(worlds);
    std::cout << "saturated: "
              << (w.get()[0] ? w.get() : "(empty)") << "\n";
    return 0;
  }

  if (c_indep->parsed()) {
    if (question_names.size() < 2)
      return usage_error("independent needs --question at least twice");
    ModelPtr model;
    if (!load_model(model_path, model, &rc)) return rc;
    std::vector<const char*> qs;
    for (const auto& q : question_names) qs.push_back(q.c_str());
    int indep = 0;
    const cohera_status st = cohera_independent(
        model.get(), qs.data(), static_cast<int>(qs.size()), &indep);
    if (st != COHERA_OK) return fail_with(st);
    std::cout << "independent: " << (indep ? "true" : "false") << "\n";
    return indep ? 0 : 1;
  }

  if (c_cindep->parsed()) {
    if (question_names.size() < 2)
      return usage_error("cond-independent needs --question at least twice");
    ModelPtr model;
    if (!load_model(model_path, model, &rc)) return rc;
    std::vector<const char*> qs;
    for (const auto& q : question_names) qs.push_back(q.c_str());
    int indep = 0;
    const cohera_status st =
        cohera_cond_independent(model.get(), qs.data(),
                                static_cast<int>(qs.size()), given.c_str(),
                                &indep);
    if (st != COHERA_OK) return fail_with(st);
    std::cout << "conditionally-independent: " << (indep ? "true" : "false")
              << "\n";
    return indep ? 0 : 1;
  }

  if (c_lift->parsed()) {
    ModelPtr model;
    if (!load_model(model_path, model, &rc)) return rc;
    cohera_set* raw = nullptr;
    cohera_status st = cohera_lift(model.get(), event_name.c_str(), &raw);
    if (st != COHERA_OK) return fail_with(st);
    SetPtr s(raw);
    char* desc = nullptr;
    st = cohera_set_describe(s.get(), &desc);
    if (st != COHERA_OK) return fail_with(st);
    CStr d(desc);
    std::cout << "result: " << d.get() << "\n";
    return 0;
  }

  if (c_atoms->parsed()) {
    ModelPtr model;
    if (!load_model(model_path, model, &rc)) return rc;
    char* listing = nullptr;
    long long count = 0;
    const cohera_status st = cohera_atoms(model.get(), &listing, &count);
    if (st != COHERA_OK) return fail_with(st);
    CStr l(listing);
    std::cout << "atoms: " << count << "\n";
    if (l.get()[0]) std::cout << l.get() << "\n";
    return 0;
  }

  if (c_atof->parsed()) {
    ModelPtr model;
    if (!load_model(model_path, model, &rc)) return rc;
    char* listing = nullptr;
    long long count = 0;
    const cohera_status st =
        cohera_at_of(model.get(), set_name.c_str(), &listing, &count);
    if (st != COHERA_OK) return fail_with(st);
    CStr l(listing);
    std::cout << "atoms-containing: " << count << "\n";
    if (l.get()[0]) std::cout << l.get() << "\n";
    return 0;
  }

  if (c_verify->parsed()) {
    ModelPtr model;
    if (!model_path.empty() && !load_model(model_path, model, &rc)) return rc;
    char* report = nullptr;
    int exit_status = 0;
    const cohera_status st =
        cohera_verify(model.get(), suites.c_str(), size_limit, seed, n_samples,
                      &report, &exit_status);
    if (st == COHERA_E_VALIDATION) {
      // Bad suite names or non-positive limits are argument mistakes.
      return usage_error(cohera_last_error());
    }
    if (st != COHERA_OK) return fail_with(st);
    CStr r(report);
    if (!output.empty()) {
      std::ofstream out(output, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write report to " << output << "\n";
        return 3;
      }
      out << r.get();
      std::cerr << "verify: report written to " << output
                << ", exit status " << exit_status << "\n";
    } else {
      std::cout << r.get();
    }
    return exit_status;
  }

  return usage_error("no subcommand given");
}
