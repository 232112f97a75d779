#pragma once

#include <string>
#include <vector>

#include "algebra.hpp"

namespace cohera {

// A parsed-and-validated model file.
struct LoadedModel {
  AlgebraModel model;
  std::vector<std::string> closure_additions;  // questions synthesized by join-closure
  std::string digest;                          // 64-bit FNV-1a of the canonical form, hex
};

// JSON shape:
//   {
//     "omega": ["a","b","c"],
//     "partitions": {"coarse": [0,0,1]},            // block ids in world order
//     "questions": ["coarse"],                       // partition names in the lattice
//     "sets": {"D": {"kind": "assertions", "gambles": ["1,-1,0"]},
//              "E": {"kind": "event", "worlds": ["a","b"]},
//              "V": {"kind": "vacuous"},
//              "T": {"kind": "contradiction"}},
//     "events": {"good": ["a","b"]}
//   }
// Rationals are integer or "p/q" strings. Validation errors carry the path of
// the offending field.
LoadedModel parse_model_json(const std::string& text);
LoadedModel load_model_file(const std::string& path);

// Canonical serialization: every lattice question is emitted (closure
// additions included), so reloading reports zero additions and reproduces the
// digest byte for byte.
std::string serialize_model(const AlgebraModel& model);
std::string model_digest(const AlgebraModel& model);

std::uint64_t fnv1a64(const std::string& bytes);

}  // namespace cohera
