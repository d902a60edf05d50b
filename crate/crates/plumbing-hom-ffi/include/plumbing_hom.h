#ifndef PLUMBING_HOM_H
#define PLUMBING_HOM_H

/* This file is generated by cbindgen from plumbing-hom-ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
#define PLUMBING_HOM_OK 0

/**
 * Invalid argument: null pointer, bad UTF-8, out-of-range vertex, …
 */
#define PLUMBING_HOM_ERR_INVALID 1

/**
 * Domain error from the library (bad quiver, parse failure, …).
 */
#define PLUMBING_HOM_ERR_DOMAIN 2

/**
 * The requested composition is not composable.
 */
#define PLUMBING_HOM_ERR_NOT_COMPOSABLE 3

/**
 * Internal panic; this is a bug, please report it.
 */
#define PLUMBING_HOM_ERR_INTERNAL 4

/**
 * Opaque handle to a graded endomorphism algebra of a fixed ADE quiver.
 */
typedef struct PlumbingHomAlgebra PlumbingHomAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The last error message raised on this thread, or an empty string.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *plumbing_hom_last_error(void);

/**
 * Build an algebra from a quiver description: either a short name such as
 * `"A5"`, `"D4"`, `"E6"`, or a JSON object
 * `{"series": "A"|"D"|"E", "rank": n, "arrows": [[s,t], ...]}`.
 * Returns null on failure (see [`plumbing_hom_last_error`]).
 */
struct PlumbingHomAlgebra *plumbing_hom_new(const char *spec);

/**
 * Release an algebra handle.  Passing null is a no-op.
 */
void plumbing_hom_free(struct PlumbingHomAlgebra *handle);

/**
 * Release a string returned by this library.  Passing null is a no-op.
 */
void plumbing_hom_string_free(char *s);

/**
 * Number of vertices of the underlying Dynkin quiver.
 */
uint32_t plumbing_hom_rank(const struct PlumbingHomAlgebra *handle);

/**
 * Coxeter number of the underlying diagram.
 */
uint32_t plumbing_hom_coxeter_number(const struct PlumbingHomAlgebra *handle);

/**
 * Shift exponent `N(vertex)`; the v-arrow at `vertex` has degree
 * `−N(vertex)−1`.  Vertices are 1-based.
 */
int32_t plumbing_hom_shift_exponent(const struct PlumbingHomAlgebra *handle,
                                    uint32_t vertex,
                                    uint64_t *out);

/**
 * Graded hom dimension from `from` to `to` in degree `degree`.
 * `side` is 0 for the wrapped algebra, 1 for the quotient (Rabinowitz)
 * algebra.  Vertices are 1-based.
 */
int32_t plumbing_hom_dim(const struct PlumbingHomAlgebra *handle,
                         uint32_t from,
                         uint32_t to,
                         int64_t degree,
                         int32_t side,
                         uint64_t *out);

/**
 * Evaluate a product expression — e.g. `"v_inv(1) * v(1)"` or
 * `"u(2,3) u(3,2)"` — and write its canonical form as a newly allocated
 * string to `*out` (release with [`plumbing_hom_string_free`]).
 */
int32_t plumbing_hom_eval(const struct PlumbingHomAlgebra *handle, const char *expr, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PLUMBING_HOM_H */
