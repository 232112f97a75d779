// Exercises the shared-library C API through its public header only.
#include <doctest.h>

#include <cohera/cohera.h>

#include <cstring>
#include <string>

namespace {

const char* kModelJson = R"({
  "omega": ["a", "b", "c"],
  "partitions": {"x": [0, 0, 1], "y": [0, 1, 1]},
  "sets": {
    "K": {"kind": "assertions", "gambles": ["1,-1,0"]},
    "E": {"kind": "event", "worlds": ["a"]},
    "T": {"kind": "contradiction"}
  },
  "events": {"front": ["a", "b"]}
})";

struct ModelGuard {
  cohera_model* m = nullptr;
  ~ModelGuard() { cohera_model_free(m); }
};
struct SetGuard {
  cohera_set* s = nullptr;
  ~SetGuard() { cohera_set_free(s); }
};
struct StrGuard {
  char* p = nullptr;
  ~StrGuard() { cohera_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

}  // namespace

TEST_CASE("library plumbing") {
  CHECK(std::string(cohera_version()).find("cohera") == 0);
  CHECK(std::string(cohera_status_name(COHERA_OK)) == "Ok");
  CHECK(std::string(cohera_status_name(COHERA_E_UNSUPPORTED)) == "Unsupported");
  cohera_string_free(nullptr);  // must be a no-op
}

TEST_CASE("model lifecycle, digest and serialization") {
  ModelGuard g;
  REQUIRE(cohera_model_parse(kModelJson, &g.m) == COHERA_OK);

  int worlds = 0;
  CHECK(cohera_model_world_count(g.m, &worlds) == COHERA_OK);
  CHECK(worlds == 3);

  StrGuard digest;
  CHECK(cohera_model_digest(g.m, &digest.p) == COHERA_OK);
  CHECK(digest.str().size() == 16);

  StrGuard canon;
  CHECK(cohera_model_serialize(g.m, &canon.p) == COHERA_OK);
  ModelGuard reloaded;
  REQUIRE(cohera_model_parse(canon.p, &reloaded.m) == COHERA_OK);
  StrGuard digest2;
  CHECK(cohera_model_digest(reloaded.m, &digest2.p) == COHERA_OK);
  CHECK(digest.str() == digest2.str());

  StrGuard added;
  CHECK(cohera_model_closure_additions(g.m, &added.p) == COHERA_OK);
  CHECK(added.str() == "join(x,y)");
  StrGuard added2;
  CHECK(cohera_model_closure_additions(reloaded.m, &added2.p) == COHERA_OK);
  CHECK(added2.str().empty());
}

TEST_CASE("parse failures set a readable thread-local message") {
  cohera_model* m = nullptr;
  CHECK(cohera_model_parse("{\"omega\": []}", &m) == COHERA_E_VALIDATION);
  CHECK(m == nullptr);
  CHECK(std::strlen(cohera_last_error()) > 0);
  CHECK(cohera_model_load("/missing/file.json", &m) == COHERA_E_PARSE);
}

TEST_CASE("named sets: membership, coherence, order") {
  ModelGuard g;
  REQUIRE(cohera_model_parse(kModelJson, &g.m) == COHERA_OK);

  SetGuard k;
  REQUIRE(cohera_model_set(g.m, "K", &k.s) == COHERA_OK);
  int flag = -1;
  CHECK(cohera_set_is_coherent(k.s, &flag) == COHERA_OK);
  CHECK(flag == 1);
  CHECK(cohera_set_member(k.s, "1,-1,0", &flag) == COHERA_OK);
  CHECK(flag == 1);
  CHECK(cohera_set_member(k.s, "-1,1,0", &flag) == COHERA_OK);
  CHECK(flag == 0);
  CHECK(cohera_set_member(k.s, "0,0,0", &flag) == COHERA_E_ZERO_GAMBLE_QUERY);
  CHECK(cohera_set_member(k.s, "1,2", &flag) == COHERA_E_SPACE_MISMATCH);
  CHECK(cohera_set_member(k.s, "1,x,0", &flag) == COHERA_E_PARSE);

  SetGuard t;
  REQUIRE(cohera_model_set(g.m, "T", &t.s) == COHERA_OK);
  CHECK(cohera_set_is_coherent(t.s, &flag) == COHERA_OK);
  CHECK(flag == 0);

  SetGuard e;
  REQUIRE(cohera_model_set(g.m, "E", &e.s) == COHERA_OK);
  CHECK(cohera_set_leq(k.s, e.s, &flag) == COHERA_OK);
  CHECK(flag == 1);  // the assertion is positive on a
  CHECK(cohera_set_equal(k.s, e.s, &flag) == COHERA_OK);
  CHECK(flag == 0);

  cohera_set* missing = nullptr;
  CHECK(cohera_model_set(g.m, "ghost", &missing) == COHERA_E_UNKNOWN_NAME);
  CHECK(missing == nullptr);

  StrGuard desc;
  CHECK(cohera_set_describe(e.s, &desc.p) == COHERA_OK);
  CHECK_FALSE(desc.str().empty());
}

TEST_CASE("ad-hoc assertion sets stand alone") {
  const char* gens[] = {"1,-1", "0,1"};
  SetGuard s;
  REQUIRE(cohera_set_from_assertions(gens, 2, &s.s) == COHERA_OK);
  int flag = -1;
  CHECK(cohera_set_is_coherent(s.s, &flag) == COHERA_OK);
  CHECK(flag == 1);
  CHECK(cohera_set_member(s.s, "1,0", &flag) == COHERA_OK);
  CHECK(flag == 1);  // the sum of the generators

  const char* contradictory[] = {"1,-1", "-1,1"};
  SetGuard c;
  REQUIRE(cohera_set_from_assertions(contradictory, 2, &c.s) == COHERA_OK);
  CHECK(cohera_set_is_coherent(c.s, &flag) == COHERA_OK);
  CHECK(flag == 0);

  const char* ragged[] = {"1,-1", "1,2,3"};
  cohera_set* out = nullptr;
  CHECK(cohera_set_from_assertions(ragged, 2, &out) ==
        COHERA_E_DIMENSION_MISMATCH);
  CHECK(cohera_set_from_assertions(gens, 0, &out) == COHERA_E_VALIDATION);
}

TEST_CASE("combination and extraction through the C surface") {
  ModelGuard g;
  REQUIRE(cohera_model_parse(kModelJson, &g.m) == COHERA_OK);
  SetGuard k, e;
  REQUIRE(cohera_model_set(g.m, "K", &k.s) == COHERA_OK);
  REQUIRE(cohera_model_set(g.m, "E", &e.s) == COHERA_OK);

  SetGuard both;
  REQUIRE(cohera_set_combine(k.s, e.s, &both.s) == COHERA_OK);
  int flag = -1;
  CHECK(cohera_set_equal(both.s, e.s, &flag) == COHERA_OK);
  CHECK(flag == 1);

  SetGuard ex;
  REQUIRE(cohera_set_extract(e.s, g.m, "x", &ex.s) == COHERA_OK);
  CHECK(cohera_set_member(ex.s, "1,1,-1", &flag) == COHERA_OK);
  CHECK(flag == 1);  // saturation widened {a} to {a,b}
  cohera_set* bad = nullptr;
  CHECK(cohera_set_extract(e.s, g.m, "zz", &bad) == COHERA_E_UNKNOWN_QUESTION);

  // Combining sets over different spaces must be refused.
  const char* gens[] = {"1,-1"};
  SetGuard other;
  REQUIRE(cohera_set_from_assertions(gens, 1, &other.s) == COHERA_OK);
  CHECK(cohera_set_combine(k.s, other.s, &bad) == COHERA_E_SPACE_MISMATCH);

  StrGuard support;
  int found = -1;
  CHECK(cohera_set_support(e.s, g.m, &support.p, &found) == COHERA_OK);
  CHECK(found == 1);
  CHECK(support.str() == "y");
}

TEST_CASE("events and question relations") {
  ModelGuard g;
  REQUIRE(cohera_model_parse(kModelJson, &g.m) == COHERA_OK);

  StrGuard sat;
  REQUIRE(cohera_saturate(g.m, "front", "y", &sat.p) == COHERA_OK);
  CHECK(sat.str() == "a,b,c");  // {a,b} meets both blocks of a|bc

  const char* qs[] = {"x", "y"};
  int flag = -1;
  CHECK(cohera_independent(g.m, qs, 2, &flag) == COHERA_OK);
  CHECK(flag == 0);  // block {c} of x misses block {a} of y
  CHECK(cohera_cond_independent(g.m, qs, 2, "x", &flag) == COHERA_OK);
  CHECK(flag == 1);  // conditioning on a participant always holds

  SetGuard lifted;
  REQUIRE(cohera_lift(g.m, "front", &lifted.s) == COHERA_OK);
  CHECK(cohera_set_member(lifted.s, "1,1,-9", &flag) == COHERA_OK);
  CHECK(flag == 1);
  cohera_set* bad = nullptr;
  CHECK(cohera_lift(g.m, "ghost", &bad) == COHERA_E_UNKNOWN_NAME);
}

TEST_CASE("atom listings") {
  ModelGuard g;
  REQUIRE(cohera_model_parse(kModelJson, &g.m) == COHERA_OK);

  StrGuard all;
  long long count = -1;
  REQUIRE(cohera_atoms(g.m, &all.p, &count) == COHERA_OK);
  CHECK(count == 6);
  CHECK(all.str().find("a>b>c") != std::string::npos);
  CHECK(all.str().find("c>b>a") != std::string::npos);

  StrGuard of;
  REQUIRE(cohera_at_of(g.m, "K", &of.p, &count) == COHERA_OK);
  CHECK(count == 3);  // exactly the orders preferring a to b
  CHECK(of.str().find("a>b>c") != std::string::npos);
  CHECK(of.str().find("b>a>c") == std::string::npos);
}

TEST_CASE("verification through the C surface") {
  StrGuard report;
  int exit_status = -1;
  REQUIRE(cohera_verify(nullptr, "separoid,saturation", 2, 7, 10, &report.p,
                        &exit_status) == COHERA_OK);
  CHECK(exit_status == 0);
  CHECK(report.str().find("\"failed\": 0") != std::string::npos);
  CHECK(report.str().find("\"model_digest\": \"none\"") != std::string::npos);

  char* bad = nullptr;
  CHECK(cohera_verify(nullptr, "nope", 2, 7, 10, &bad, &exit_status) ==
        COHERA_E_VALIDATION);
  CHECK(cohera_verify(nullptr, "separoid", 6, 7, 10, &bad, &exit_status) ==
        COHERA_E_LIMIT_EXCEEDED);

  ModelGuard g;
  REQUIRE(cohera_model_parse(kModelJson, &g.m) == COHERA_OK);
  StrGuard modeled;
  REQUIRE(cohera_verify(g.m, "axioms", 3, 7, 10, &modeled.p, &exit_status) ==
          COHERA_OK);
  CHECK(exit_status == 0);
  StrGuard digest;
  CHECK(cohera_model_digest(g.m, &digest.p) == COHERA_OK);
  CHECK(modeled.str().find(digest.str()) != std::string::npos);
}

TEST_CASE("null arguments are rejected uniformly") {
  int flag = 0;
  char* sp = nullptr;
  cohera_model* m = nullptr;
  cohera_set* s = nullptr;
  CHECK(cohera_model_parse(nullptr, &m) == COHERA_E_NULL_ARGUMENT);
  CHECK(cohera_model_parse(kModelJson, nullptr) == COHERA_E_NULL_ARGUMENT);
  CHECK(cohera_model_digest(nullptr, &sp) == COHERA_E_NULL_ARGUMENT);
  CHECK(cohera_set_member(nullptr, "1", &flag) == COHERA_E_NULL_ARGUMENT);
  CHECK(cohera_set_from_assertions(nullptr, 1, &s) == COHERA_E_NULL_ARGUMENT);
  CHECK(cohera_verify(nullptr, nullptr, 1, 1, 1, &sp, &flag) ==
        COHERA_E_NULL_ARGUMENT);
  CHECK(std::strlen(cohera_last_error()) > 0);
}
