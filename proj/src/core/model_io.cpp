#include "model_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "errors.hpp"

namespace cohera {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& path, const std::string& msg) {
  fail(Errc::kValidationError, path + ": " + msg);
}

const json& field(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string expect_string(const json& v, const std::string& path) {
  if (!v.is_string()) bad(path, "expected a string");
  auto s = v.get<std::string>();
  if (s.empty()) bad(path, "must be non-empty");
  return s;
}

int expect_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) bad(path, "expected an integer");
  return v.get<int>();
}

const json& expect_array(const json& v, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array");
  return v;
}

const json& expect_object(const json& v, const std::string& path) {
  if (!v.is_object()) bad(path, "expected an object");
  return v;
}

// A list of world names -> sorted unique indices; duplicates are rejected.
std::vector<int> parse_worlds(const json& arr, const std::string& path,
                              const SpacePtr& space) {
  expect_array(arr, path);
  std::vector<int> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string item = path + "[" + std::to_string(i) + "]";
    const std::string name = expect_string(arr[i], item);
    auto idx = space->index_of(name);
    if (!idx) bad(item, "unknown world '" + name + "'");
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    bad(path, "duplicate world");
  return out;
}

Vec parse_gamble(const json& v, const std::string& path, int dim) {
  const std::string csv = expect_string(v, path);
  Vec g;
  try {
    g = vec_parse_csv(csv);
  } catch (const Error& e) {
    bad(path, e.what());
  }
  if (static_cast<int>(g.size()) != dim)
    bad(path, "gamble has " + std::to_string(g.size()) + " coordinates, space has " +
                  std::to_string(dim));
  return g;
}

std::vector<int> parse_perm(const json& arr, const std::string& path,
                            const SpacePtr& space) {
  std::vector<int> order = parse_worlds(arr, path, space);
  // parse_worlds sorts; re-walk to keep the declared preference order.
  std::vector<int> perm;
  for (std::size_t i = 0; i < arr.size(); ++i)
    perm.push_back(*space->index_of(arr[i].get<std::string>()));
  if (static_cast<int>(perm.size()) != space->size())
    bad(path, "must list every world exactly once");
  return perm;
}

SetRep parse_set(const json& v, const std::string& path, const SpacePtr& space) {
  expect_object(v, path);
  const std::string kind = expect_string(field(v, path, "kind"), path + ".kind");
  std::set<std::string> allowed;
  SetRep out = SetRep::unit(space);
  if (kind == "vacuous") {
    allowed = {"kind"};
    out = SetRep::unit(space);
  } else if (kind == "contradiction") {
    allowed = {"kind"};
    out = SetRep::top(space);
  } else if (kind == "assertions") {
    allowed = {"kind", "gambles"};
    const json& arr = expect_array(field(v, path, "gambles"), path + ".gambles");
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < arr.size(); ++i)
      gens.push_back(parse_gamble(arr[i], path + ".gambles[" + std::to_string(i) + "]",
                                  space->size()));
    out = SetRep::closure(space, std::move(gens));
  } else if (kind == "event") {
    allowed = {"kind", "worlds"};
    out = SetRep::event_set(space,
                            parse_worlds(field(v, path, "worlds"), path + ".worlds", space));
  } else if (kind == "lex-atom") {
    allowed = {"kind", "order"};
    out = SetRep::lex_atom(space,
                           parse_perm(field(v, path, "order"), path + ".order", space));
  } else if (kind == "extract-of-atom") {
    allowed = {"kind", "order", "question_blocks"};
    SetRep atom = SetRep::lex_atom(
        space, parse_perm(field(v, path, "order"), path + ".order", space));
    const json& qb =
        expect_array(field(v, path, "question_blocks"), path + ".question_blocks");
    if (static_cast<int>(qb.size()) != space->size())
      bad(path + ".question_blocks", "wrong length");
    std::vector<int> raw;
    for (std::size_t i = 0; i < qb.size(); ++i)
      raw.push_back(expect_int(qb[i], path + ".question_blocks[" + std::to_string(i) + "]"));
    out = SetRep::extract_of_atom(atom, Partition::from_block_of(space, raw));
  } else {
    bad(path + ".kind", "unknown kind '" + kind + "'");
  }
  for (auto it = v.begin(); it != v.end(); ++it)
    if (!allowed.count(it.key())) bad(path, "unknown field '" + it.key() + "'");
  return out;
}

std::string set_kind_name(const SetRep& d) {
  switch (d.kind()) {
    case SetRep::Kind::kTop: return "contradiction";
    case SetRep::Kind::kUnit: return "vacuous";
    case SetRep::Kind::kAssertions: return "assertions";
    case SetRep::Kind::kEventSet: return "event";
    case SetRep::Kind::kLexAtom: return "lex-atom";
    case SetRep::Kind::kSymbolicExtract: return "extract-of-atom";
  }
  return "?";
}

}  // namespace

LoadedModel parse_model_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::kParseError, std::string("model JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("model", "top level must be an object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& k = it.key();
    if (k != "omega" && k != "partitions" && k != "questions" && k != "sets" &&
        k != "events")
      bad("model", "unknown field '" + k + "'");
  }

  // --- omega ---
  const json& omega = expect_array(field(doc, "model", "omega"), "omega");
  if (omega.empty()) bad("omega", "must be non-empty");
  std::vector<std::string> worlds;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    const std::string item = "omega[" + std::to_string(i) + "]";
    std::string w = expect_string(omega[i], item);
    if (!seen.insert(w).second) bad(item, "duplicate world '" + w + "'");
    worlds.push_back(std::move(w));
  }
  SpacePtr space = PossibilitySpace::make(std::move(worlds));
  const int n = space->size();

  // --- partitions ---
  std::vector<std::pair<std::string, Partition>> partitions;
  if (doc.contains("partitions")) {
    const json& parts = expect_object(doc["partitions"], "partitions");
    for (auto it = parts.begin(); it != parts.end(); ++it) {
      const std::string path = "partitions." + it.key();
      if (it.key().empty()) bad("partitions", "empty partition name");
      const json& arr = expect_array(it.value(), path);
      if (static_cast<int>(arr.size()) != n)
        bad(path, "block list has " + std::to_string(arr.size()) +
                      " entries, space has " + std::to_string(n));
      std::vector<int> raw;
      for (std::size_t i = 0; i < arr.size(); ++i)
        raw.push_back(expect_int(arr[i], path + "[" + std::to_string(i) + "]"));
      partitions.emplace_back(it.key(), Partition::from_block_of(space, raw));
    }
    std::sort(partitions.begin(), partitions.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  // --- questions: optional explicit listing; must cover the partitions ---
  std::vector<std::pair<std::string, Partition>> named;
  if (doc.contains("questions")) {
    const json& qs = expect_array(doc["questions"], "questions");
    std::set<std::string> listed;
    for (std::size_t i = 0; i < qs.size(); ++i) {
      const std::string item = "questions[" + std::to_string(i) + "]";
      const std::string name = expect_string(qs[i], item);
      if (!listed.insert(name).second) bad(item, "duplicate question '" + name + "'");
      auto it = std::find_if(partitions.begin(), partitions.end(),
                             [&](const auto& p) { return p.first == name; });
      if (it == partitions.end()) bad(item, "unknown partition '" + name + "'");
      named.emplace_back(it->first, it->second);
    }
    for (const auto& [pname, p] : partitions)
      if (!listed.count(pname))
        bad("questions", "partition '" + pname + "' is not listed");
  } else {
    named = partitions;
  }

  LoadedModel out{AlgebraModel{space, QuestionLattice::close(space, std::move(named)),
                               {}, {}},
                  {}, {}};

  // --- sets ---
  if (doc.contains("sets")) {
    const json& sets = expect_object(doc["sets"], "sets");
    for (auto it = sets.begin(); it != sets.end(); ++it) {
      if (it.key().empty()) bad("sets", "empty set name");
      out.model.sets.emplace_back(it.key(),
                                  parse_set(it.value(), "sets." + it.key(), space));
    }
    std::sort(out.model.sets.begin(), out.model.sets.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  // --- events ---
  if (doc.contains("events")) {
    const json& events = expect_object(doc["events"], "events");
    for (auto it = events.begin(); it != events.end(); ++it) {
      if (it.key().empty()) bad("events", "empty event name");
      out.model.events.emplace_back(
          it.key(), parse_worlds(it.value(), "events." + it.key(), space));
    }
    std::sort(out.model.events.begin(), out.model.events.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }

  out.closure_additions = out.model.lattice.closure_additions();
  out.digest = model_digest(out.model);
  return out;
}

LoadedModel load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::kParseError, "cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_json(buf.str());
}

std::string serialize_model(const AlgebraModel& model) {
  ojson out;

  ojson omega = ojson::array();
  for (const auto& w : model.space->worlds()) omega.push_back(w);
  out["omega"] = std::move(omega);

  std::vector<int> ids(static_cast<std::size_t>(model.lattice.size()));
  for (int i = 0; i < model.lattice.size(); ++i) ids[i] = i;
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return model.lattice.name(a) < model.lattice.name(b);
  });

  ojson parts = ojson::object();
  ojson questions = ojson::array();
  for (int id : ids) {
    parts[model.lattice.name(id)] = model.lattice.at(id).block_of_vector();
    questions.push_back(model.lattice.name(id));
  }
  out["partitions"] = std::move(parts);
  out["questions"] = std::move(questions);

  auto sets = model.sets;
  std::sort(sets.begin(), sets.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  ojson jsets = ojson::object();
  for (const auto& [name, d] : sets) {
    ojson e = ojson::object();
    e["kind"] = set_kind_name(d);
    switch (d.kind()) {
      case SetRep::Kind::kTop:
      case SetRep::Kind::kUnit:
        break;
      case SetRep::Kind::kAssertions: {
        ojson gs = ojson::array();
        for (const auto& g : d.generators()) gs.push_back(vec_str(g));
        e["gambles"] = std::move(gs);
        break;
      }
      case SetRep::Kind::kEventSet: {
        ojson ws = ojson::array();
        for (int w : d.event()) ws.push_back(model.space->world(w));
        e["worlds"] = std::move(ws);
        break;
      }
      case SetRep::Kind::kLexAtom: {
        ojson order = ojson::array();
        for (int w : d.perm()) order.push_back(model.space->world(w));
        e["order"] = std::move(order);
        break;
      }
      case SetRep::Kind::kSymbolicExtract: {
        ojson order = ojson::array();
        for (int w : d.perm()) order.push_back(model.space->world(w));
        e["order"] = std::move(order);
        e["question_blocks"] = d.question().block_of_vector();
        break;
      }
    }
    jsets[name] = std::move(e);
  }
  out["sets"] = std::move(jsets);

  auto events = model.events;
  std::sort(events.begin(), events.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  ojson jevents = ojson::object();
  for (const auto& [name, ev] : events) {
    ojson ws = ojson::array();
    for (int w : ev) ws.push_back(model.space->world(w));
    jevents[name] = std::move(ws);
  }
  out["events"] = std::move(jevents);

  return out.dump(2) + "\n";
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string model_digest(const AlgebraModel& model) {
  std::uint64_t h = fnv1a64(serialize_model(model));
  static const char* hexd = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = hexd[h & 0xf];
    h >>= 4;
  }
  return s;
}

}  // namespace cohera
