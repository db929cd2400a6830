#ifndef RELCORR_H
#define RELCORR_H

/* Generated by cbindgen from the relcorr-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Outcome of every fallible call.
typedef enum RcStatus {
  // The call succeeded and all out-pointers were written.
  RC_STATUS_OK = 0,
  // A required pointer argument was null.
  RC_STATUS_NULL_POINTER = 1,
  // An argument was rejected; see `rc_last_error`.
  RC_STATUS_INVALID_ARGUMENT = 2,
  // No closed form covers the request; retry with the oracle backend.
  RC_STATUS_CLOSED_FORM_UNAVAILABLE = 3,
  // The computation produced a non-finite value or panicked.
  RC_STATUS_NUMERICAL = 4,
  // An index was outside the bounds of a handle.
  RC_STATUS_OUT_OF_RANGE = 5,
} RcStatus;

// Spin of each particle of the pair.
typedef enum RcSpin {
  RC_SPIN_HALF = 0,
  RC_SPIN_ONE = 1,
} RcSpin;

// Which relativistic spin observable to correlate.
typedef enum RcOperator {
  RC_OPERATOR_NEWTON_WIGNER = 0,
  RC_OPERATOR_CZACHOR = 1,
} RcOperator;

// Evaluation strategy.
typedef enum RcBackend {
  RC_BACKEND_CLOSED_FORM = 0,
  RC_BACKEND_ORACLE = 1,
  // Closed form when one exists, oracle otherwise.
  RC_BACKEND_AUTO = 2,
} RcBackend;

// Momentum family of the pair.
typedef enum RcMomenta {
  // Boosted pair with back-to-back transverse momenta.
  RC_MOMENTA_BOOSTED = 0,
  // Center-of-mass pair moving along a supplied axis.
  RC_MOMENTA_CENTER_OF_MASS = 1,
} RcMomenta;

// Kind of a located extremum.
typedef enum RcExtremumKind {
  RC_EXTREMUM_KIND_MAX = 0,
  RC_EXTREMUM_KIND_MIN = 1,
} RcExtremumKind;

// Opaque list of located extrema.
typedef struct RcExtrema RcExtrema;

// Opaque result of a correlation sweep over x.
typedef struct RcSweep RcSweep;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Version of this library as a static NUL-terminated string.
const char *rc_version(void);

// Message of the most recent error on the calling thread. The pointer
// stays valid until the next failing call on the same thread.
const char *rc_last_error(void);

// Correlation of two spin measurements along `a` and `b`.
//
// For `RC_MOMENTA_CENTER_OF_MASS` the pair axis `n` must point to three
// doubles; it is ignored otherwise and may be null.
//
// # Safety
// `a` and `b` must point to three doubles and `out` to one.
enum RcStatus rc_correlation(enum RcSpin spin,
                             enum RcOperator operator_,
                             enum RcBackend backend,
                             enum RcMomenta momenta,
                             const double *n,
                             double x,
                             double mass,
                             const double *a,
                             const double *b,
                             double *out);

// CHSH combination |C(a,b) - C(a,d) + C(c,b) + C(c,d)| and its
// violation flag (1 when the value exceeds the classical bound 2).
//
// # Safety
// Direction arguments must point to three doubles each; `value` and
// `violated` must point to writable storage.
enum RcStatus rc_chsh(enum RcSpin spin,
                      enum RcOperator operator_,
                      enum RcBackend backend,
                      enum RcMomenta momenta,
                      const double *n,
                      double x,
                      double mass,
                      const double *a,
                      const double *b,
                      const double *c,
                      const double *d,
                      double *value,
                      int32_t *violated);

// Bell-Mermin combination C(a,b) + C(b,c) + C(c,a) for spin-1 pairs and
// its violation flag (1 when the value exceeds the classical bound 1).
//
// # Safety
// Direction arguments must point to three doubles each; `value` and
// `violated` must point to writable storage.
enum RcStatus rc_bell_mermin(enum RcSpin spin,
                             enum RcOperator operator_,
                             enum RcBackend backend,
                             enum RcMomenta momenta,
                             const double *n,
                             double x,
                             double mass,
                             const double *a,
                             const double *b,
                             const double *c,
                             double *value,
                             int32_t *violated);

// Correlation of `a` and `b` on a uniform inclusive x grid. On success
// `*out` owns a handle that must be released with `rc_sweep_free`.
//
// # Safety
// `a` and `b` must point to three doubles and `out` to a writable
// pointer slot.
enum RcStatus rc_sweep_correlation(enum RcSpin spin,
                                   enum RcOperator operator_,
                                   enum RcBackend backend,
                                   enum RcMomenta momenta,
                                   const double *n,
                                   double mass,
                                   const double *a,
                                   const double *b,
                                   double x_min,
                                   double x_max,
                                   size_t steps,
                                   struct RcSweep **out);

// Number of points held by a sweep handle; 0 for null.
//
// # Safety
// `sweep` must be null or a live handle from `rc_sweep_correlation`.
size_t rc_sweep_len(const struct RcSweep *sweep);

// Reads one grid point out of a sweep handle.
//
// # Safety
// `sweep` must be a live handle; `x` and `value` must be writable.
enum RcStatus rc_sweep_point(const struct RcSweep *sweep, size_t index, double *x, double *value);

// Releases a sweep handle. Null is ignored.
//
// # Safety
// `sweep` must be null or a live handle that is not used afterwards.
void rc_sweep_free(struct RcSweep *sweep);

// Locates interior extrema of the correlation of `a` and `b` in x.
// Uses the closed form when one exists and the oracle otherwise. On
// success `*out` owns a handle that must be released with
// `rc_extrema_free`.
//
// # Safety
// `a` and `b` must point to three doubles and `out` to a writable
// pointer slot.
enum RcStatus rc_find_extrema(enum RcSpin spin,
                              enum RcOperator operator_,
                              enum RcMomenta momenta,
                              const double *n,
                              double mass,
                              const double *a,
                              const double *b,
                              double x_min,
                              double x_max,
                              size_t coarse_steps,
                              double x_tol,
                              struct RcExtrema **out);

// Number of extrema held by a handle; 0 for null.
//
// # Safety
// `extrema` must be null or a live handle from `rc_find_extrema`.
size_t rc_extrema_len(const struct RcExtrema *extrema);

// Reads one extremum out of a handle.
//
// # Safety
// `extrema` must be a live handle; the out-pointers must be writable.
enum RcStatus rc_extrema_get(const struct RcExtrema *extrema,
                             size_t index,
                             double *x_star,
                             double *value,
                             enum RcExtremumKind *kind);

// Releases an extrema handle. Null is ignored.
//
// # Safety
// `extrema` must be null or a live handle that is not used afterwards.
void rc_extrema_free(struct RcExtrema *extrema);

// Cross-checks every closed form against the trace evaluation on
// seeded random configurations. Writes the largest discrepancy seen
// and 1 into `passed` when it stays below the 1e-10 gate.
//
// # Safety
// `max_discrepancy` and `passed` must point to writable storage.
enum RcStatus rc_verify_equivalence(size_t samples,
                                    double x_min,
                                    double x_max,
                                    uint64_t seed,
                                    double *max_discrepancy,
                                    int32_t *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RELCORR_H */
