#ifndef PREFERENCE_SURFACES_H
#define PREFERENCE_SURFACES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Profile domain for [`ps_arrow_check`].
 */
typedef enum PsDomain {
  /**
   * The function's own domain.
   */
  PS_DOMAIN_NATIVE = 0,
  PS_DOMAIN_WEAK = 1,
  PS_DOMAIN_STRICT = 2,
} PsDomain;

/**
 * Output format for [`ps_complex_export`].
 */
typedef enum PsFormat {
  PS_FORMAT_JSON = 0,
  PS_FORMAT_OFF = 1,
  PS_FORMAT_DOT = 2,
} PsFormat;

/**
 * Result of every exported call.
 */
typedef enum PsStatus {
  PS_STATUS_OK = 0,
  PS_STATUS_NULL_POINTER = 1,
  PS_STATUS_INVALID_UTF8 = 2,
  PS_STATUS_INVALID_ARGUMENT = 3,
  /**
   * The library rejected the input; see `ps_last_error`.
   */
  PS_STATUS_DOMAIN_ERROR = 4,
  PS_STATUS_PANIC = 5,
} PsStatus;

/**
 * Opaque delta complex.
 */
typedef struct PsComplex PsComplex;

/**
 * Opaque social welfare function.
 */
typedef struct PsSwf PsSwf;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Free with `ps_string_free`.
 */
char *ps_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void ps_string_free(char *s);

/**
 * Builds one of the four models, e.g. `"contradictory-realised"`.
 *
 * # Safety
 * `kind` must be a NUL-terminated string; `out` must be writable.
 */
enum PsStatus ps_model_build(const char *kind, struct PsComplex **out);

/**
 * Builds a model with the faces of the listed preferences removed.
 * `removals` is comma separated, e.g. `"1<2<3,1<2<3<1"`.
 *
 * # Safety
 * `kind` and `removals` must be NUL-terminated strings; `out` must be writable.
 */
enum PsStatus ps_model_puncture(const char *kind, const char *removals, struct PsComplex **out);

/**
 * Reads a complex from its JSON form.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum PsStatus ps_complex_from_json(const char *json, struct PsComplex **out);

/**
 * # Safety
 * `c` must be null or a handle from this library that has not been freed.
 */
void ps_complex_free(struct PsComplex *c);

/**
 * Vertex, edge and face counts.
 *
 * # Safety
 * `c` must be a live handle; the outputs must be writable.
 */
enum PsStatus ps_complex_counts(const struct PsComplex *c,
                                size_t *vertices,
                                size_t *edges,
                                size_t *faces);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum PsStatus ps_complex_euler_characteristic(const struct PsComplex *c, int64_t *out);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum PsStatus ps_complex_is_orientable(const struct PsComplex *c, bool *out);

/**
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum PsStatus ps_complex_boundary_count(const struct PsComplex *c, size_t *out);

/**
 * Whether the orientation double cover is connected.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum PsStatus ps_complex_double_cover_connected(const struct PsComplex *c, bool *out);

/**
 * Surface name such as `"ProjectivePlane"`. Free with `ps_string_free`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum PsStatus ps_complex_classify(const struct PsComplex *c, char **out);

/**
 * JSON, OFF or DOT text. Free with `ps_string_free`.
 *
 * # Safety
 * `c` must be a live handle; `out` must be writable.
 */
enum PsStatus ps_complex_export(const struct PsComplex *c, enum PsFormat format, char **out);

/**
 * Parses `"pairwise-majority"`, `"dictator:<i>"` or `"table:<path>"` over the
 * first `alternatives` alternatives.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum PsStatus ps_swf_from_spec(const char *spec,
                               size_t alternatives,
                               size_t individuals,
                               struct PsSwf **out);

/**
 * # Safety
 * `s` must be null or a handle from this library that has not been freed.
 */
void ps_swf_free(struct PsSwf *s);

/**
 * Runs the Arrow orientability check on the first three alternatives and
 * returns the verdict as JSON. Free with `ps_string_free`.
 *
 * # Safety
 * `swf` must be a live handle; `out` must be writable.
 */
enum PsStatus ps_arrow_check(const struct PsSwf *swf, enum PsDomain domain_choice, char **out);

/**
 * The four-model table as JSON. Free with `ps_string_free`.
 *
 * # Safety
 * `out` must be writable.
 */
enum PsStatus ps_table1_json(char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PREFERENCE_SURFACES_H */
