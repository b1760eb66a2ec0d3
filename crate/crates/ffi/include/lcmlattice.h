#ifndef LCMLATTICE_H
#define LCMLATTICE_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum LcmStatus {
  LCM_STATUS_OK = 0,
  LCM_STATUS_INVALID_ARGUMENT = 1,
  LCM_STATUS_NOT_A_LATTICE = 2,
  LCM_STATUS_PARSE_ERROR = 3,
  LCM_STATUS_RESOURCE_LIMIT = 4,
  LCM_STATUS_IO_ERROR = 5,
  LCM_STATUS_NULL_POINTER = 6,
  LCM_STATUS_INVALID_UTF8 = 7,
  LCM_STATUS_PANIC = 8,
} LcmStatus;

/**
 * Which module [`lcm_ideal_sdepth`] measures.
 */
typedef enum LcmMode {
  LCM_MODE_IDEAL = 0,
  LCM_MODE_QUOTIENT = 1,
} LcmMode;

/**
 * Opaque monomial ideal.
 */
typedef struct LcmIdeal LcmIdeal;

/**
 * Opaque finite lattice.
 */
typedef struct LcmLattice LcmLattice;

typedef struct LcmIdealReport {
  size_t depth;
  size_t sdepth_quotient;
  size_t sdepth_ideal;
  size_t pdim_quotient;
  size_t spdim_quotient;
  size_t pdim_ideal;
  size_t spdim_ideal;
  /**
   * True when `depth S/I = sdepth S/I < sdepth I` holds.
   */
  bool chain_holds;
  /**
   * True when the chain is expected to hold (at most five generators).
   */
  bool asserted;
} LcmIdealReport;

typedef struct LcmInvariants {
  size_t length;
  size_t breadth;
  size_t order_dimension;
} LcmInvariants;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *lcm_last_error_message(void);

/**
 * Parse an ideal such as `"x1*x2, x3^2"`.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LcmStatus lcm_ideal_parse(const char *text, struct LcmIdeal **out);

/**
 * # Safety
 * `ideal` must be NULL or a handle from this library not yet freed.
 */
void lcm_ideal_free(struct LcmIdeal *ideal);

/**
 * # Safety
 * `ideal` must be a live handle.
 */
size_t lcm_ideal_num_vars(const struct LcmIdeal *ideal);

/**
 * # Safety
 * `ideal` must be a live handle.
 */
size_t lcm_ideal_num_generators(const struct LcmIdeal *ideal);

/**
 * Generators as text; release with [`lcm_string_free`].
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum LcmStatus lcm_ideal_to_string(const struct LcmIdeal *ideal, char **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library not yet freed.
 */
void lcm_string_free(char *s);

/**
 * Depth of `S/I`.
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum LcmStatus lcm_ideal_depth(const struct LcmIdeal *ideal, size_t *out);

/**
 * Stanley depth of `I` or `S/I`.
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum LcmStatus lcm_ideal_sdepth(const struct LcmIdeal *ideal, enum LcmMode mode, size_t *out);

/**
 * Depth, Stanley depth and projective dimensions of one ideal.
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum LcmStatus lcm_ideal_verify(const struct LcmIdeal *ideal, struct LcmIdealReport *out);

/**
 * Boolean lattice on `k` atoms.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum LcmStatus lcm_lattice_boolean(size_t k, struct LcmLattice **out);

/**
 * Lcm-lattice of an ideal.
 *
 * # Safety
 * `ideal` must be a live handle and `out` a valid pointer.
 */
enum LcmStatus lcm_lattice_of_ideal(const struct LcmIdeal *ideal, struct LcmLattice **out);

/**
 * Load a lattice file.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LcmStatus lcm_lattice_read_file(const char *path, struct LcmLattice **out);

/**
 * # Safety
 * `lattice` must be NULL or a handle from this library not yet freed.
 */
void lcm_lattice_free(struct LcmLattice *lattice);

/**
 * # Safety
 * `lattice` must be a live handle.
 */
size_t lcm_lattice_size(const struct LcmLattice *lattice);

/**
 * # Safety
 * `lattice` must be a live handle.
 */
size_t lcm_lattice_num_atoms(const struct LcmLattice *lattice);

/**
 * # Safety
 * `lattice` must be a live handle.
 */
bool lcm_lattice_is_atomistic(const struct LcmLattice *lattice);

/**
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum LcmStatus lcm_lattice_isomorphic(const struct LcmLattice *a,
                                      const struct LcmLattice *b,
                                      bool *out);

/**
 * # Safety
 * `lattice` must be a live handle and `out` a valid pointer.
 */
enum LcmStatus lcm_lattice_invariants(const struct LcmLattice *lattice, struct LcmInvariants *out);

/**
 * Projective dimension of `S/I` for any ideal with this lcm-lattice.
 *
 * # Safety
 * `lattice` must be a live handle and `out` a valid pointer.
 */
enum LcmStatus lcm_lattice_pdim(const struct LcmLattice *lattice, size_t *out);

/**
 * Squarefree ideal whose lcm-lattice is `lattice`.
 *
 * # Safety
 * `lattice` must be a live handle and `out` a valid pointer.
 */
enum LcmStatus lcm_lattice_realize(const struct LcmLattice *lattice, struct LcmIdeal **out);

/**
 * Number of isomorphism classes of atomistic lattices on `k` atoms.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum LcmStatus lcm_enumerate_count(size_t k, size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LCMLATTICE_H */
