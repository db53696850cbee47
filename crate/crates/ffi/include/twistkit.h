#ifndef TWISTKIT_H
#define TWISTKIT_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TkStatus {
  TK_STATUS_OK = 0,
  TK_STATUS_NULL_POINTER = 1,
  TK_STATUS_INVALID_UTF8 = 2,
  // Input was malformed or inconsistent.
  TK_STATUS_VALIDATION = 3,
  // Input was well formed but a mathematical hypothesis failed.
  TK_STATUS_MATH = 4,
  TK_STATUS_PANIC = 5,
} TkStatus;

// A finite Δ-complex.
typedef struct TkComplex TkComplex;

// A local ℤ-coefficient system on a [`TkComplex`].
typedef struct TkSystem TkSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Last error of this thread as a JSON object, or null. Valid until the next
// failing call on the same thread.
const char *tk_last_error(void);

// Releases a string returned by this library.
//
// # Safety
// `s` must come from this library and not have been freed.
void tk_string_free(char *s);

// Loads a complex by corpus name or JSON file path.
//
// # Safety
// `name` must be a nul-terminated string; `out` must be writable.
enum TkStatus tk_complex_load(const char *name, struct TkComplex **out);

// Builds a complex from its JSON description.
//
// # Safety
// `json` must be a nul-terminated string; `out` must be writable.
enum TkStatus tk_complex_from_json(const char *json, struct TkComplex **out);

// # Safety
// `c` must come from this library and not have been freed, or be null.
void tk_complex_free(struct TkComplex *c);

// Dimension of the complex, or -1 for a null handle.
//
// # Safety
// `c` must be a live handle or null.
int64_t tk_complex_dim(const struct TkComplex *c);

// Number of `n`-simplices, 0 beyond the top dimension, or -1 for a null handle.
//
// # Safety
// `c` must be a live handle or null.
int64_t tk_complex_count(const struct TkComplex *c, uintptr_t n);

// All twist classes of the complex under its default polarization, as JSON.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum TkStatus tk_twist_classes(const struct TkComplex *c, char **out);

// A system given as `trivial`, `w1` or a system file path.
//
// # Safety
// `c` must be a live handle, `spec` a nul-terminated string, `out` writable.
enum TkStatus tk_system_new(const struct TkComplex *c, const char *spec, struct TkSystem **out);

// A system from one sign (+1 or -1) per edge.
//
// # Safety
// `c` must be a live handle, `signs` must point to `len` integers, `out` writable.
enum TkStatus tk_system_from_signs(const struct TkComplex *c,
                                   const int32_t *signs,
                                   uintptr_t len,
                                   struct TkSystem **out);

// # Safety
// `s` must come from this library and not have been freed, or be null.
void tk_system_free(struct TkSystem *s);

// Twisted homology (or cohomology when `cohomology` is nonzero) in degree
// `n`, as `{"rank", "torsion", "basis"}`.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum TkStatus tk_homology(const struct TkSystem *s, uintptr_t n, int32_t cohomology, char **out);

// Runs one CLI command given as a JSON array of arguments (without the
// program name). Standard output and standard error of the command are
// returned in `out` and `err`; the return value is the CLI exit code, or -1
// if the arguments could not be read.
//
// # Safety
// `args_json` must be a nul-terminated string; `out` and `err` must be writable.
int32_t tk_cli_run(const char *args_json, char **out, char **err);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TWISTKIT_H */
