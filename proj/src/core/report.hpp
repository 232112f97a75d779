#pragma once

#include <map>
#include <string>
#include <vector>

namespace cohera {

// Outcome of one property/axiom suite. Invariant: attempted() counts every
// check exactly once as passed, failed, or skipped.
struct Failure {
  std::string law;
  std::string inputs;
  std::string witness;
};

// Non-asserted observation: a law measured on the restricted representable
// fragment. Never affects pass/fail status.
struct Exploratory {
  std::string law;
  long long cases = 0;
  long long holds = 0;
  long long fails = 0;
  std::string sample_witness;  // first observed counterexample, if any
};

struct Report {
  std::string suite;
  long long passed = 0;
  long long failed = 0;
  long long skipped = 0;
  std::vector<Failure> failures;
  std::map<std::string, long long> skip_reasons;  // reason -> count
  std::vector<Exploratory> exploratory;
  std::vector<std::string> notes;

  long long attempted() const { return passed + failed + skipped; }
  bool ok() const { return failed == 0; }

  // Records one law instance; keeps at most kMaxRecordedFailures witnesses.
  void check(const std::string& law, const std::string& inputs, bool holds,
             const std::string& witness = "");
  void skip(const std::string& reason);
  void note(const std::string& text);
  Exploratory& exploratory_entry(const std::string& law);
  void observe(const std::string& law, bool holds, const std::string& witness);

  // Folds another report's counters, failures, skip reasons, exploratory
  // tallies and notes into this one (sub-suite aggregation).
  void absorb(const Report& part);

  // Sorts failures canonically (law, inputs) so reports are deterministic
  // regardless of check scheduling.
  void finalize();

  static constexpr int kMaxRecordedFailures = 25;
};

struct RunReport {
  std::string tool_version;
  std::string model_digest;  // "none" when no model participates
  std::vector<Report> suites;
  int exit_status = 0;  // 0 clean, 1 asserted failure somewhere

  // Deterministic pretty JSON (ordered keys, no timestamps).
  std::string to_json_string() const;
};

std::string report_to_json_string(const Report& r);

}  // namespace cohera
