#ifndef THETACALC_H
#define THETACALC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum TcStatus {
  TC_STATUS_OK = 0,
  // A required pointer argument was null.
  TC_STATUS_NULL_POINTER = 1,
  // A string argument was not valid UTF-8.
  TC_STATUS_INVALID_UTF8 = 2,
  // Malformed input: bad group, weight, genus, or a value out of range.
  TC_STATUS_INVALID_INPUT = 3,
  // A computed result violated an internal invariant.
  TC_STATUS_INVARIANT = 4,
  // The library panicked; the message holds the panic payload.
  TC_STATUS_PANIC = 5,
} TcStatus;

// A virtual representation of a reductive group. Opaque.
typedef struct TcRep TcRep;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or an empty string.
// The pointer stays valid until the next call into the library on this thread.
const char *tc_last_error_message(void);

// Releases a string returned by the library. Null is ignored.
//
// # Safety
// `s` must come from this library and must not be used afterwards.
void tc_string_free(char *s);

// Dimension of the irreducible representation with highest weight
// `weight` (compact digits, e.g. `"0010"`) of `group` (e.g. `"Sp8xSp10"`).
//
// # Safety
// String arguments must be NUL-terminated; `out` must be writable.
enum TcStatus tc_weyl_dim(const char *group, const char *weight, uint64_t *out);

// Parses a virtual representation such as `"1000+2*0000"`.
//
// # Safety
// String arguments must be NUL-terminated; `out` must be writable.
enum TcStatus tc_rep_parse(const char *group, const char *spec, struct TcRep **out);

// Releases a representation. Null is ignored.
//
// # Safety
// `rep` must come from this library and must not be used afterwards.
void tc_rep_free(struct TcRep *rep);

// Virtual dimension.
//
// # Safety
// `rep` must be a live handle; `out` must be writable.
enum TcStatus tc_rep_dim(const struct TcRep *rep, int64_t *out);

// Tensor product.
//
// # Safety
// `a` and `b` must be live handles; `out` must be writable.
enum TcStatus tc_rep_tensor(const struct TcRep *a, const struct TcRep *b, struct TcRep **out);

// Symmetric square.
//
// # Safety
// `a` must be a live handle; `out` must be writable.
enum TcStatus tc_rep_sym2(const struct TcRep *a, struct TcRep **out);

// Alternating square.
//
// # Safety
// `a` must be a live handle; `out` must be writable.
enum TcStatus tc_rep_alt2(const struct TcRep *a, struct TcRep **out);

// Decomposition as JSON: group, dimension and the list of
// `{weight, mult}` terms. Free the string with [`tc_string_free`].
//
// # Safety
// `rep` must be a live handle; `out` must be writable.
enum TcStatus tc_rep_json(const struct TcRep *rep, char **out);

// Topological Euler characteristic of a theta divisor of a `g`-dimensional
// ppav with `r` ordinary double points.
//
// # Safety
// `out` must be writable.
enum TcStatus tc_theta_chi(uint32_t g, uint64_t r, int64_t *out);

// Canonical JSON of the first product table. Free with [`tc_string_free`].
//
// # Safety
// `out` must be writable.
enum TcStatus tc_table1_json(char **out);

// Canonical JSON of the second product table. Free with [`tc_string_free`].
//
// # Safety
// `out` must be writable.
enum TcStatus tc_table2_json(char **out);

// Canonical JSON of the three nearby-cycle diagrams. Free with [`tc_string_free`].
//
// # Safety
// `out` must be writable.
enum TcStatus tc_diagrams_json(char **out);

// Canonical JSON of the Hodge table. Free with [`tc_string_free`].
//
// # Safety
// `out` must be writable.
enum TcStatus tc_hodge_json(char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* THETACALC_H */
