/* Exercises the shared library through its C header only. */
#define _POSIX_C_SOURCE 200809L
#include "latmark/latmark.h"

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define CHECK(cond)                                               \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static int contains(const char* s, const char* needle) { return s != NULL && strstr(s, needle) != NULL; }

static void test_rows_and_reports(void) {
  const int64_t rows[] = {3, 0, 1, -1, 0, 0, 1, 6, 0, -1, 1, 1, 0, 0, 0, 5, 0, 0, 0, 0};
  latmark_lattice* l = NULL;
  char* json = NULL;

  CHECK(latmark_lattice_from_rows(rows, 4, 5, &l) == LATMARK_OK);
  CHECK(latmark_lattice_dim(l) == 5);
  CHECK(latmark_lattice_rank(l) == 4);

  CHECK(latmark_decompose(l, &json) == LATMARK_OK);
  CHECK(contains(json, "\"kind\":\"decomposition\""));
  CHECK(contains(json, "\"sigma\":[1,2]"));
  CHECK(contains(json, "\"class_cardinality\":5"));
  latmark_string_free(json);

  CHECK(latmark_markov(l, 0, 0, &json) == LATMARK_OK);
  CHECK(contains(json, "\"mu\":4"));
  latmark_string_free(json);

  CHECK(latmark_markov(l, 1, 99, &json) == LATMARK_OK);
  CHECK(contains(json, "\"mu\":4"));
  latmark_string_free(json);

  CHECK(latmark_hilbert(l, &json) == LATMARK_OK);
  CHECK(contains(json, "[[0,5,0,0,0],[1,1,0,0,0],[5,0,0,0,0]]"));
  latmark_string_free(json);

  CHECK(latmark_ci(l, &json) == LATMARK_OK);
  CHECK(contains(json, "\"is_ci\":true"));
  latmark_string_free(json);

  CHECK(latmark_indispensable(l, &json) == LATMARK_OK);
  CHECK(contains(json, "\"binomials\":[]"));
  latmark_string_free(json);

  CHECK(latmark_fiber(l, "0,0,0,1,0", &json) == LATMARK_OK);
  CHECK(contains(json, "\"kind\":\"fiber\""));
  latmark_string_free(json);

  json = NULL;
  CHECK(latmark_fiber(l, "0,0,1", &json) == LATMARK_EINPUT);
  CHECK(json == NULL);
  CHECK(strlen(latmark_last_error()) > 0);

  latmark_lattice_free(l);
}

static void test_verify(void) {
  latmark_lattice* l = NULL;
  char* diag = NULL;
  CHECK(latmark_lattice_from_text("2 2\n1 1\n5 0\n", &l) == LATMARK_OK);

  CHECK(latmark_verify_text(l, "1,1 | 0,0\n5,0 | 0,0\n", LATMARK_VERIFY_MARKOV, &diag) == LATMARK_OK);
  CHECK(contains(diag, "OK"));
  latmark_string_free(diag);

  CHECK(latmark_verify_text(l, "2,2 | 1\n3,3 | 1\n5,0 | 1\n", LATMARK_VERIFY_MARKOV, &diag) == LATMARK_FALSE);
  CHECK(contains(diag, "cardinality exceeds"));
  latmark_string_free(diag);

  CHECK(latmark_verify_text(l, "2,2 | 1\n3,3 | 1\n5,0 | 1\n", LATMARK_VERIFY_GENERATING, NULL) == LATMARK_OK);
  CHECK(latmark_verify_text(l, "1,1 | 1\n5,0 | 1\n", LATMARK_VERIFY_PURE, NULL) == LATMARK_OK);
  CHECK(latmark_verify_text(l, "0,1 | 1,0\n", LATMARK_VERIFY_GENERATING, NULL) == LATMARK_EINPUT);
  CHECK(contains(latmark_last_error(), "not a lattice element"));
  CHECK(latmark_verify_text(l, "garbage", LATMARK_VERIFY_MARKOV, NULL) == LATMARK_EINPUT);
  CHECK(latmark_verify_file(l, "/nonexistent.bin", LATMARK_VERIFY_MARKOV, NULL) == LATMARK_EINPUT);

  latmark_lattice_free(l);
}

static void test_errors(void) {
  latmark_lattice* l = NULL;
  char* json = NULL;
  CHECK(latmark_lattice_from_text("2 2\n1 1\n", &l) == LATMARK_EINPUT);
  CHECK(contains(latmark_last_error(), "rows"));
  CHECK(latmark_lattice_from_file("/nonexistent.lat", &l) == LATMARK_EINPUT);
  CHECK(latmark_lattice_from_text(NULL, &l) == LATMARK_EINPUT);
  CHECK(latmark_decompose(NULL, &json) == LATMARK_EINPUT);

  /* A fiber larger than the cap is a resource error. */
  CHECK(latmark_lattice_from_text("3 2\n1 -1 0\n2 0 -1\n", &l) == LATMARK_OK);
  setenv("LATMARK_MAX_FIBER", "3", 1);
  CHECK(latmark_fiber(l, "0,0,5", &json) == LATMARK_ERESOURCE);
  unsetenv("LATMARK_MAX_FIBER");
  CHECK(latmark_fiber(l, "0,0,5", &json) == LATMARK_OK);
  latmark_string_free(json);
  latmark_lattice_free(l);
  latmark_lattice_free(NULL);
}

int main(void) {
  test_rows_and_reports();
  test_verify();
  test_errors();
  if (failures != 0) {
    fprintf(stderr, "%d check(s) failed\n", failures);
    return 1;
  }
  printf("all C API checks passed\n");
  return 0;
}
