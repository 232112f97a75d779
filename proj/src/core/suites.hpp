#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "report.hpp"

namespace cohera {

inline constexpr const char* kToolVersion = "cohera 0.1.0";

// Registry of verification suites in canonical execution order.
const std::vector<std::string>& verify_suite_names();

struct VerifyOptions {
  std::vector<std::string> suites;  // names from the registry, or "all"
  int size_limit = 3;               // spaces 1..size_limit per suite
  std::uint64_t seed = 1;
  int n_samples = 200;
  const AlgebraModel* model = nullptr;  // when set, "axioms" runs on it alone
};

// Runs the selected suites and assembles the machine-readable run report.
// Size limits beyond a suite's exact-enumeration cap propagate LimitExceeded
// (the caller decides how to surface that); asserted failures set
// exit_status 1 but never throw.
RunReport run_verify(const VerifyOptions& opt);

// Deterministic random model: synthetic space of the given size, the full
// (join-closed) partition lattice, and 4-6 named sets drawn from the four
// file-loadable kinds. Sizes above 5 are refused (full lattice enumeration).
AlgebraModel random_model(int space_size, std::uint64_t seed);

}  // namespace cohera
