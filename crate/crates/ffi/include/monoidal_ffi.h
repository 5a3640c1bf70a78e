#ifndef MONOIDAL_FFI_H
#define MONOIDAL_FFI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MonoidalStatus {
  MonoidalOk = 0,
  /**
   * A required pointer argument was null.
   */
  MonoidalNullArgument = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  MonoidalInvalidUtf8 = 2,
  MonoidalUnknownSuite = 3,
  MonoidalUnknownInstance = 4,
  /**
   * The benchmark configuration failed validation.
   */
  MonoidalInvalidConfig = 5,
} MonoidalStatus;

/**
 * Opaque result handle: owns the report JSON and the overall verdict.
 */
typedef struct MonoidalReport MonoidalReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Run the named law suite against the named instance.
 *
 * On success writes a fresh report handle to `out`; its JSON lists every
 * law with trial counts and up to five counterexamples, and the verdict
 * is true only if no law failed.
 *
 * # Safety
 *
 * `suite` and `instance` must be NUL-terminated strings valid for the
 * duration of the call, and `out` must point to writable memory for one
 * pointer.
 */
enum MonoidalStatus monoidal_check_laws(const char *suite,
                                        const char *instance,
                                        uint64_t seed,
                                        uint32_t size,
                                        uint64_t trials,
                                        struct MonoidalReport **out);

/**
 * List the registered instances for a suite as a JSON array of strings.
 *
 * # Safety
 *
 * `suite` must be a NUL-terminated string and `out` must point to
 * writable memory for one pointer.
 */
enum MonoidalStatus monoidal_instances(const char *suite, struct MonoidalReport **out);

/**
 * Run the benchmark suite and report per-cell counts and timings.
 *
 * `sizes` may be null (with `sizes_len` zero) to use the suite defaults.
 * The verdict is true only if the naive and represented variants agreed
 * on every observation.
 *
 * # Safety
 *
 * `suite` must be a NUL-terminated string, `sizes` must be null or point
 * to `sizes_len` readable elements, and `out` must point to writable
 * memory for one pointer.
 */
enum MonoidalStatus monoidal_run_bench(const char *suite,
                                       const uint64_t *sizes,
                                       uintptr_t sizes_len,
                                       uint32_t repeats,
                                       uint32_t warmup,
                                       uint64_t seed,
                                       struct MonoidalReport **out);

/**
 * Borrow the report's JSON as a NUL-terminated string.
 *
 * The pointer stays valid until `monoidal_report_free` releases the
 * report. Returns null if `report` is null.
 *
 * # Safety
 *
 * `report` must be null or a handle produced by this library that has
 * not been freed.
 */
const char *monoidal_report_json(const struct MonoidalReport *report);

/**
 * Overall verdict: 1 if everything passed, 0 otherwise (or if `report`
 * is null).
 *
 * # Safety
 *
 * `report` must be null or a handle produced by this library that has
 * not been freed.
 */
int32_t monoidal_report_passed(const struct MonoidalReport *report);

/**
 * Release a report handle. Passing null is a no-op.
 *
 * # Safety
 *
 * `report` must be null or a handle produced by this library, and must
 * not be used after this call.
 */
void monoidal_report_free(struct MonoidalReport *report);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* MONOIDAL_FFI_H */
