#ifndef QLAT_QLAT_H
#define QLAT_QLAT_H

/* C interface to the qlat toolkit.
 *
 * Every function returns a qlat_status. On failure the message is available
 * from qlat_last_error() on the calling thread. Strings handed out through
 * char** parameters are owned by the caller and released with
 * qlat_string_free. Handles are released with their matching *_free. */

#include <stddef.h>

#if defined(QLAT_BUILDING_LIBRARY)
#define QLAT_API __attribute__((visibility("default")))
#else
#define QLAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qlat_status {
  QLAT_OK = 0,
  QLAT_ERR_PARSE = 1,
  QLAT_ERR_CONFIG = 2,
  QLAT_ERR_INSTANCE_MISMATCH = 3,
  QLAT_ERR_UNSUPPORTED = 4,
  QLAT_ERR_INVALID_ARGUMENT = 5,
  QLAT_ERR_INTERNAL = 6
} qlat_status;

typedef enum qlat_format { QLAT_FORMAT_TEXT = 0, QLAT_FORMAT_STRUCTURED = 1 } qlat_format;

typedef struct qlat_instance qlat_instance;
typedef struct qlat_algebra qlat_algebra;

QLAT_API const char* qlat_version(void);
QLAT_API const char* qlat_status_name(qlat_status status);

/* Message of the last failure on this thread, or "" when none. */
QLAT_API const char* qlat_last_error(void);
/* Byte offset of the last parse error on this thread, or (size_t)-1. */
QLAT_API size_t qlat_last_error_position(void);

QLAT_API void qlat_string_free(char* s);

/* config_json: {"kind": ..., "rank"?: n, "denominator_bound"?: n} */
QLAT_API qlat_status qlat_instance_create(const char* config_json, qlat_instance** out);
QLAT_API void qlat_instance_free(qlat_instance* instance);
QLAT_API qlat_status qlat_instance_name(const qlat_instance* instance, char** out);
/* JSON array of the elements of ball(radius), in enumeration order. */
QLAT_API qlat_status qlat_instance_ball(const qlat_instance* instance, int radius, char** out_json);
/* Least common upper bound of two elements, or "inf". */
QLAT_API qlat_status qlat_join(const qlat_instance* instance, const char* p, const char* q, char** out);

QLAT_API qlat_status qlat_algebra_parse(const qlat_instance* instance, const char* text, qlat_algebra** out);
QLAT_API void qlat_algebra_free(qlat_algebra* x);
QLAT_API qlat_status qlat_algebra_add(const qlat_algebra* x, const qlat_algebra* y, qlat_algebra** out);
QLAT_API qlat_status qlat_algebra_mul(const qlat_algebra* x, const qlat_algebra* y, qlat_algebra** out);
QLAT_API qlat_status qlat_algebra_star(const qlat_algebra* x, qlat_algebra** out);
QLAT_API qlat_status qlat_algebra_equal(const qlat_algebra* x, const qlat_algebra* y, int* out);
QLAT_API qlat_status qlat_algebra_to_string(const qlat_algebra* x, char** out);
/* {"components": [{"label": g, "element": x_g}, ...], "expectation": Phi(x)} */
QLAT_API qlat_status qlat_algebra_grade(const qlat_algebra* x, char** out_json);
/* Dense matrix of x compressed to ball(radius), one row per line. */
QLAT_API qlat_status qlat_algebra_dump_matrix(const qlat_algebra* x, int radius, char** out_text);

/* Runs the suite described by a run configuration (see README). *failed is
 * set to 1 when some check failed and 0 otherwise. */
QLAT_API qlat_status qlat_run(const char* config_json, qlat_format format, char** out_report, int* failed);

/* JSON array of the first finite exhaustive set found, or "null". */
QLAT_API qlat_status qlat_find_fesspe(const qlat_instance* instance, int max_size, int radius, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
