/* Plain-C consumer of the shared library: proves the public header compiles
 * as C and the basic call sequence works across the ABI. */
#include <cohera/cohera.h>

#include <stdio.h>
#include <string.h>

static int failures = 0;

static void expect(int cond, const char* what) {
  if (!cond) {
    ++failures;
    fprintf(stderr, "smoke_c: FAILED: %s (last error: %s)\n", what,
            cohera_last_error());
  }
}

int main(void) {
  const char* gens[2];
  cohera_set* s = NULL;
  cohera_set* bad = NULL;
  cohera_model* m = NULL;
  char* text = NULL;
  int flag = -1;

  expect(strncmp(cohera_version(), "cohera", 6) == 0, "version string");

  gens[0] = "2,-1,-1";
  gens[1] = "0,0,1";
  expect(cohera_set_from_assertions(gens, 2, &s) == COHERA_OK,
         "build assertion set");
  expect(cohera_set_is_coherent(s, &flag) == COHERA_OK && flag == 1,
         "assertions are coherent");
  expect(cohera_set_member(s, "2,-1,0", &flag) == COHERA_OK && flag == 1,
         "sum of generators is a member");
  expect(cohera_set_member(s, "-1,0,0", &flag) == COHERA_OK && flag == 0,
         "an all-loss gamble is not a member");
  expect(cohera_set_member(s, "0,0,0", &flag) == COHERA_E_ZERO_GAMBLE_QUERY,
         "zero gamble is refused");
  expect(cohera_set_describe(s, &text) == COHERA_OK && text != NULL,
         "describe");
  cohera_string_free(text);
  text = NULL;

  expect(cohera_model_parse("{\"omega\": [\"a\", \"b\", \"c\"]}", &m) ==
             COHERA_OK,
         "parse minimal model");
  expect(cohera_model_world_count(m, &flag) == COHERA_OK && flag == 3,
         "world count");
  expect(cohera_model_digest(m, &text) == COHERA_OK && strlen(text) == 16,
         "digest");
  cohera_string_free(text);
  text = NULL;

  expect(cohera_model_set(m, "ghost", &bad) == COHERA_E_UNKNOWN_NAME,
         "unknown set name is reported");
  expect(strlen(cohera_last_error()) > 0, "error message populated");

  cohera_set_free(s);
  cohera_set_free(bad);
  cohera_model_free(m);

  if (failures == 0) printf("smoke_c: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
