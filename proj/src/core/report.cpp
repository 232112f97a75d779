#include "report.hpp"

#include <algorithm>

#include <json.hpp>

namespace cohera {

using ordered_json = nlohmann::ordered_json;

void Report::check(const std::string& law, const std::string& inputs,
                   bool holds, const std::string& witness) {
  if (holds) {
    ++passed;
    return;
  }
  ++failed;
  if (static_cast<int>(failures.size()) < kMaxRecordedFailures)
    failures.push_back({law, inputs, witness});
}

void Report::skip(const std::string& reason) {
  ++skipped;
  ++skip_reasons[reason];
}

void Report::note(const std::string& text) { notes.push_back(text); }

Exploratory& Report::exploratory_entry(const std::string& law) {
  for (auto& e : exploratory)
    if (e.law == law) return e;
  exploratory.push_back({law, 0, 0, 0, ""});
  return exploratory.back();
}

void Report::observe(const std::string& law, bool holds,
                     const std::string& witness) {
  Exploratory& e = exploratory_entry(law);
  ++e.cases;
  if (holds) {
    ++e.holds;
  } else {
    ++e.fails;
    if (e.sample_witness.empty()) e.sample_witness = witness;
  }
}

void Report::absorb(const Report& part) {
  passed += part.passed;
  failed += part.failed;
  skipped += part.skipped;
  for (const auto& f : part.failures)
    if (static_cast<int>(failures.size()) < kMaxRecordedFailures)
      failures.push_back(f);
  for (const auto& [reason, count] : part.skip_reasons)
    skip_reasons[reason] += count;
  for (const auto& e : part.exploratory) {
    Exploratory& mine = exploratory_entry(e.law);
    mine.cases += e.cases;
    mine.holds += e.holds;
    mine.fails += e.fails;
    if (mine.sample_witness.empty()) mine.sample_witness = e.sample_witness;
  }
  for (const auto& n : part.notes) notes.push_back(n);
}

void Report::finalize() {
  std::sort(failures.begin(), failures.end(),
            [](const Failure& a, const Failure& b) {
              if (a.law != b.law) return a.law < b.law;
              if (a.inputs != b.inputs) return a.inputs < b.inputs;
              return a.witness < b.witness;
            });
}

namespace {

ordered_json report_json(const Report& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["attempted"] = r.attempted();
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["skipped"] = r.skipped;
  ordered_json fails = ordered_json::array();
  for (const auto& f : r.failures)
    fails.push_back({{"law", f.law}, {"inputs", f.inputs}, {"witness", f.witness}});
  j["failures"] = fails;
  ordered_json skips = ordered_json::object();
  for (const auto& [reason, count] : r.skip_reasons) skips[reason] = count;
  j["skip_reasons"] = skips;
  ordered_json expl = ordered_json::array();
  for (const auto& e : r.exploratory)
    expl.push_back({{"law", e.law},
                    {"cases", e.cases},
                    {"holds", e.holds},
                    {"fails", e.fails},
                    {"sample_witness", e.sample_witness}});
  j["exploratory"] = expl;
  j["notes"] = r.notes;
  return j;
}

}  // namespace

std::string report_to_json_string(const Report& r) {
  return report_json(r).dump(2);
}

std::string RunReport::to_json_string() const {
  ordered_json j;
  j["tool_version"] = tool_version;
  j["model_digest"] = model_digest;
  ordered_json arr = ordered_json::array();
  for (const auto& s : suites) arr.push_back(report_json(s));
  j["suites"] = arr;
  j["exit_status"] = exit_status;
  return j.dump(2);
}

}  // namespace cohera
