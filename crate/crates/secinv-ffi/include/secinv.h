/* C interface to the secinv secondary-invariant kernel.
 * All functions returning SecinvStatus set a thread-local error message
 * retrievable with secinv_last_error() on failure. */

#ifndef SECINV_H
#define SECINV_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Algorithm selector for `secinv_compute`.
 */
typedef enum SecinvAlgorithm {
  SECINV_ALGORITHM_BASIC = 0,
  SECINV_ALGORITHM_REFINED = 1,
  SECINV_ALGORITHM_NEW = 2,
  SECINV_ALGORITHM_IMPROVED = 3,
} SecinvAlgorithm;

/*
 Status codes returned by every API function.
 */
typedef enum SecinvStatus {
  /*
   Success.
   */
  SECINV_STATUS_OK = 0,
  /*
   A required pointer argument was null, or a handle was invalid.
   */
  SECINV_STATUS_NULL_ARGUMENT = 1,
  /*
   The input text could not be parsed.
   */
  SECINV_STATUS_PARSE_ERROR = 2,
  /*
   The input parsed but failed validation (bad primaries, singular
   matrix, inconsistent dimensions, ...).
   */
  SECINV_STATUS_INVALID_INPUT = 3,
  /*
   A resource cap was hit (group closure cap, degree cap).
   */
  SECINV_STATUS_RESOURCE_LIMIT = 4,
  /*
   An internal invariant was violated (a bug; please report).
   */
  SECINV_STATUS_INTERNAL = 5,
} SecinvStatus;

/*
 A parsed and validated problem: closed group plus primary system.
 */
typedef struct SecinvProblem SecinvProblem;

/*
 A finished secondary-invariant computation.
 */
typedef struct SecinvResult SecinvResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Copy the last error message into `buf` (truncating to `cap` bytes
 including the terminating NUL). Returns the untruncated length.

 # Safety
 `buf` must point to at least `cap` writable bytes, or be null.
 */
uintptr_t secinv_last_error(char *buf, uintptr_t cap);

/*
 Parse a problem file (same format as the CLI), close the group, and
 validate the primaries if any are given.

 # Safety
 `text` must be a NUL-terminated string; `out` must be a valid pointer.
 */
enum SecinvStatus secinv_problem_parse(const char *text, struct SecinvProblem **out);

/*
 Load a built-in example (1-9; 9 has no primaries).

 # Safety
 `out` must be a valid pointer.
 */
enum SecinvStatus secinv_problem_builtin(uintptr_t number, struct SecinvProblem **out);

/*
 Release a problem handle. Null is ignored.

 # Safety
 `p` must be a pointer previously returned by this library, or null.
 */
void secinv_problem_free(struct SecinvProblem *p);

/*
 Order of the closed group.

 # Safety
 `p` and `out` must be valid pointers.
 */
enum SecinvStatus secinv_group_order(const struct SecinvProblem *p, uint64_t *out);

/*
 Expected number of secondary invariants (product of primary degrees
 over the group order). Fails when the problem has no primaries.

 # Safety
 `p` and `out` must be valid pointers.
 */
enum SecinvStatus secinv_expected_total(const struct SecinvProblem *p, uint64_t *out);

/*
 Run the secondary-invariant search. With `irreducible_only_flag`
 non-zero, reducible invariants are kept as normal forms (the
 algorithm argument is ignored and the improved strategy is used).

 # Safety
 `p` and `out` must be valid pointers.
 */
enum SecinvStatus secinv_compute(const struct SecinvProblem *p,
                                 enum SecinvAlgorithm algorithm,
                                 int32_t irreducible_only_flag,
                                 uintptr_t threads,
                                 struct SecinvResult **out);

/*
 Release a result handle. Null is ignored.

 # Safety
 `r` must be a pointer previously returned by this library, or null.
 */
void secinv_result_free(struct SecinvResult *r);

/*
 Total number of secondary invariants found.

 # Safety
 `r` and `out` must be valid pointers.
 */
enum SecinvStatus secinv_result_total(const struct SecinvResult *r, uintptr_t *out);

/*
 Number of irreducible secondary invariants.

 # Safety
 `r` and `out` must be valid pointers.
 */
enum SecinvStatus secinv_result_irreducible_total(const struct SecinvResult *r, uintptr_t *out);

/*
 Largest degree carrying a secondary invariant.

 # Safety
 `r` and `out` must be valid pointers.
 */
enum SecinvStatus secinv_result_max_degree(const struct SecinvResult *r, uint32_t *out);

/*
 Wall-clock duration of the computation in milliseconds.

 # Safety
 `r` and `out` must be valid pointers.
 */
enum SecinvStatus secinv_result_elapsed_ms(const struct SecinvResult *r, uint64_t *out);

/*
 Degree and irreducibility of the invariant with the given label
 (labels run 0..total in degree order).

 # Safety
 All pointer arguments must be valid or null as documented.
 */
enum SecinvStatus secinv_result_invariant_info(const struct SecinvResult *r,
                                               uintptr_t label,
                                               uint32_t *degree_out,
                                               int32_t *irreducible_out);

/*
 Render the invariant with the given label as text. The returned
 string must be released with `secinv_string_free`.

 # Safety
 `r` and `out` must be valid pointers.
 */
enum SecinvStatus secinv_result_invariant_text(const struct SecinvResult *r,
                                               uintptr_t label,
                                               char **out);

/*
 Release a string returned by this library. Null is ignored.

 # Safety
 `s` must be a pointer previously returned by this library, or null.
 */
void secinv_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SECINV_H */
