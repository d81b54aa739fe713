/* Exercises the C interface from plain C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "qlat/qlat.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static int streq_free(char* s, const char* want) {
  int same = s && strcmp(s, want) == 0;
  if (!same) fprintf(stderr, "  got '%s', want '%s'\n", s ? s : "(null)", want);
  qlat_string_free(s);
  return same;
}

static qlat_algebra* parse(const qlat_instance* inst, const char* text) {
  qlat_algebra* x = NULL;
  if (qlat_algebra_parse(inst, text, &x) != QLAT_OK) {
    fprintf(stderr, "cannot parse %s: %s\n", text, qlat_last_error());
    exit(1);
  }
  return x;
}

static void test_instances(void) {
  qlat_instance* inst = NULL;
  char* s = NULL;
  EXPECT(qlat_instance_create("{\"kind\":\"free_monoid\",\"rank\":2}", &inst) == QLAT_OK);
  EXPECT(qlat_instance_name(inst, &s) == QLAT_OK);
  EXPECT(streq_free(s, "F2+"));
  EXPECT(qlat_instance_ball(inst, 1, &s) == QLAT_OK);
  EXPECT(streq_free(s, "[\"e\",\"a\",\"b\"]"));
  EXPECT(qlat_join(inst, "a", "ab", &s) == QLAT_OK);
  EXPECT(streq_free(s, "ab"));
  EXPECT(qlat_join(inst, "a", "b", &s) == QLAT_OK);
  EXPECT(streq_free(s, "inf"));
  EXPECT(qlat_join(inst, "a", "c", &s) == QLAT_ERR_PARSE);
  qlat_instance_free(inst);

  EXPECT(qlat_instance_create("{\"kind\":\"braid\"}", &inst) == QLAT_ERR_CONFIG);
  EXPECT(strlen(qlat_last_error()) > 0);
  EXPECT(qlat_instance_create("not json", &inst) == QLAT_ERR_CONFIG);
  EXPECT(qlat_instance_create(NULL, &inst) == QLAT_ERR_INVALID_ARGUMENT);
  EXPECT(strlen(qlat_status_name(QLAT_ERR_PARSE)) > 0);
  EXPECT(strlen(qlat_version()) > 0);
}

static void test_algebra(void) {
  qlat_instance* inst = NULL;
  qlat_instance* other = NULL;
  qlat_algebra *x, *y, *z = NULL, *w = NULL;
  char* s = NULL;
  int eq = 0;
  qlat_instance_create("{\"kind\":\"free_monoid\",\"rank\":2}", &inst);
  qlat_instance_create("{\"kind\":\"free_abelian\",\"rank\":1}", &other);

  x = parse(inst, "V(e,a) + V(e,b)");
  y = parse(inst, "V(a,e) + V(b,e)");
  EXPECT(qlat_algebra_mul(x, y, &z) == QLAT_OK);
  EXPECT(qlat_algebra_to_string(z, &s) == QLAT_OK);
  EXPECT(streq_free(s, "2 V(e,e)"));
  EXPECT(qlat_algebra_star(x, &w) == QLAT_OK);
  EXPECT(qlat_algebra_equal(w, y, &eq) == QLAT_OK && eq == 1);
  qlat_algebra_free(w);
  EXPECT(qlat_algebra_add(x, y, &w) == QLAT_OK);
  EXPECT(qlat_algebra_equal(w, y, &eq) == QLAT_OK && eq == 0);
  qlat_algebra_free(w);
  qlat_algebra_free(z);

  z = parse(inst, "V(ab,b) + 2 V(a,a)");
  EXPECT(qlat_algebra_grade(z, &s) == QLAT_OK);
  EXPECT(s && strstr(s, "\"expectation\"") && strstr(s, "2 V(a,a)"));
  qlat_string_free(s);
  EXPECT(qlat_algebra_dump_matrix(z, 2, &s) == QLAT_OK);
  EXPECT(s && strncmp(s, "basis:", 6) == 0);
  qlat_string_free(s);
  qlat_algebra_free(z);

  z = NULL;
  EXPECT(qlat_algebra_parse(inst, "V(a,b) + 2 V(a,x)", &z) == QLAT_ERR_PARSE);
  EXPECT(z == NULL);
  EXPECT(qlat_last_error_position() == 15);

  w = parse(other, "V(1,0)");
  EXPECT(qlat_algebra_mul(x, w, &z) == QLAT_ERR_INSTANCE_MISMATCH);
  qlat_algebra_free(w);
  qlat_algebra_free(x);
  qlat_algebra_free(y);
  qlat_instance_free(other);
  qlat_instance_free(inst);
}

static void test_run(void) {
  char* report = NULL;
  int failed = -1;
  qlat_instance* inst = NULL;
  char* s = NULL;

  EXPECT(qlat_run("{\"instance\":{\"kind\":\"free_monoid\",\"rank\":2},\"radius\":2,"
                  "\"checks\":[\"fesspe\",\"commutation\"]}",
                  QLAT_FORMAT_TEXT, &report, &failed) == QLAT_OK);
  EXPECT(failed == 0);
  EXPECT(report && strstr(report, "PASS"));
  qlat_string_free(report);

  EXPECT(qlat_run("{\"instance\":{\"kind\":\"divisibility\"},\"fesspe\":\"{2,3,5}\",\"radius\":10,"
                  "\"checks\":[\"fesspe\"]}",
                  QLAT_FORMAT_STRUCTURED, &report, &failed) == QLAT_OK);
  EXPECT(failed == 1);
  EXPECT(report && strstr(report, "\"status\": \"fail\""));
  qlat_string_free(report);

  EXPECT(qlat_run("{\"instance\":{\"kind\":\"divisibility\"},\"radius\":99}", QLAT_FORMAT_TEXT, &report,
                  &failed) == QLAT_ERR_CONFIG);

  qlat_instance_create("{\"kind\":\"free_monoid\",\"rank\":2}", &inst);
  EXPECT(qlat_find_fesspe(inst, 2, 4, &s) == QLAT_OK);
  EXPECT(streq_free(s, "[\"a\",\"b\"]"));
  qlat_instance_free(inst);
  qlat_instance_create("{\"kind\":\"divisibility\"}", &inst);
  EXPECT(qlat_find_fesspe(inst, 1, 6, &s) == QLAT_OK);
  EXPECT(streq_free(s, "null"));
  qlat_instance_free(inst);
}

int main(void) {
  test_instances();
  test_algebra();
  test_run();
  if (failures) {
    fprintf(stderr, "%d C API expectations failed\n", failures);
    return 1;
  }
  printf("C API: all expectations met\n");
  return 0;
}
