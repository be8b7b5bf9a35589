#ifndef KNOMIAL_H
#define KNOMIAL_H

/* This file is generated by cbindgen from the knomial-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Family tags for [`kn_dim8_fiducial`].
typedef enum KnDim8Orbit {
  KN_DIM8_ORBIT_SIGN_FAMILY = 0,
  KN_DIM8_ORBIT_QUARTER_TURN_FAMILY = 1,
  KN_DIM8_ORBIT_ANTI_UNITARY_IMAGE = 2,
} KnDim8Orbit;

// Status codes returned by every fallible entry point.
typedef enum KnStatus {
  KN_STATUS_OK = 0,
  KN_STATUS_NULL_ARGUMENT = 1,
  KN_STATUS_INVALID_ARGUMENT = 2,
  KN_STATUS_BUFFER_TOO_SMALL = 3,
  KN_STATUS_NOT_COPRIME = 4,
  KN_STATUS_BETA_NOT_COPRIME = 5,
  KN_STATUS_NOT_ANTISYMPLECTIC = 6,
  KN_STATUS_NOT_NORMALIZED = 7,
  KN_STATUS_NOT_K_NOMIAL = 8,
  KN_STATUS_CAP_EXCEEDED = 9,
  KN_STATUS_NO_CONVERGENCE = 10,
  KN_STATUS_PARSE_ERROR = 11,
} KnStatus;

// Opaque dense complex matrix handle.
typedef struct KnMatrix KnMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Static description of a status code.
const char *kn_status_message(enum KnStatus status);

// Release a matrix handle.
//
// # Safety
// `m` must be null or a pointer previously returned by one of the
// `kn_matrix_*` constructors, not yet freed.
void kn_matrix_free(struct KnMatrix *m);

// The cyclic shift generator in dimension `dim`.
enum KnStatus kn_matrix_x(uint64_t dim, struct KnMatrix **out);

// The clock generator in dimension `dim`.
enum KnStatus kn_matrix_z(uint64_t dim, struct KnMatrix **out);

// Unitary change of basis from the k-nomial to the standard basis.
enum KnStatus kn_matrix_change_of_basis(uint64_t dim, struct KnMatrix **out);

// Displacement operator for the index pair (p1, p2), reduced mod N̄.
enum KnStatus kn_matrix_displacement(uint64_t dim, int64_t p1, int64_t p2, struct KnMatrix **out);

// Symplectic unitary for the matrix [[a, b], [c, d]], which must have
// determinant 1 mod N̄.
enum KnStatus kn_matrix_symplectic_unitary(uint64_t dim,
                                           int64_t a,
                                           int64_t b,
                                           int64_t c,
                                           int64_t d,
                                           struct KnMatrix **out);

// Conjugate a standard-basis matrix into the k-nomial basis (T† M T).
//
// # Safety
// `m` must be a live matrix handle.
enum KnStatus kn_matrix_to_knomial(const struct KnMatrix *m, struct KnMatrix **out);

// Side length of the matrix behind a handle; 0 for null.
//
// # Safety
// `m` must be null or a live matrix handle.
uint64_t kn_matrix_dim(const struct KnMatrix *m);

// Single entry of the matrix.
//
// # Safety
// `m` must be a live matrix handle; `re` and `im` must point to writable
// doubles.
enum KnStatus kn_matrix_entry(const struct KnMatrix *m,
                              uint64_t row,
                              uint64_t col,
                              double *re,
                              double *im);

// Copy the whole matrix into `out` as row-major interleaved (re, im)
// doubles; `len` is the capacity of `out` in doubles and must be at least
// 2·dim².
//
// # Safety
// `m` must be a live matrix handle and `out` must point to at least `len`
// writable doubles.
enum KnStatus kn_matrix_copy_entries(const struct KnMatrix *m, double *out, size_t len);

// SIC defect of a unit vector given as `2·dim` interleaved doubles: the
// worst deviation of the nontrivial squared overlaps from 1/(dim+1),
// together with the index pair attaining it.
//
// # Safety
// `psi` must point to `len` readable doubles; the out-pointers must be
// writable.
enum KnStatus kn_sic_defect(uint64_t dim,
                            const double *psi,
                            size_t len,
                            double *defect,
                            uint64_t *worst_p1,
                            uint64_t *worst_p2);

// One of the bundled exact dimension-8 fiducials, written as 16
// interleaved doubles. For the sign family and its anti-unitary image the
// selector is (s1, s2, s3) with entries ±1 and `r` is ignored; for the
// quarter-turn family `r` in 0..4 applies and the signs are ignored.
//
// # Safety
// `psi_out` must point to at least `psi_len` writable doubles and `defect`
// must be writable.
enum KnStatus kn_dim8_fiducial(enum KnDim8Orbit orbit,
                               int32_t s1,
                               int32_t s2,
                               int32_t s3,
                               uint32_t r,
                               double *psi_out,
                               size_t psi_len,
                               double *defect);

// The bundled dimension-12 coefficients at the chosen real cubic root
// (0..3, ascending), written as 24 interleaved doubles in the adapted
// basis of the bundled generators, together with their defect.
//
// # Safety
// `psi_out` must point to at least `psi_len` writable doubles and `defect`
// must be writable.
enum KnStatus kn_dim12_fiducial(uint32_t root_choice,
                                double *psi_out,
                                size_t psi_len,
                                double *defect);

// Seeded fiducial search; `zauner` restricts to the largest Zauner
// eigenspaces. The best candidate is always written; the status is
// `NoConvergence` when it missed `tol`.
//
// # Safety
// `psi_out` must point to at least `psi_len` writable doubles and `defect`
// must be writable.
enum KnStatus kn_search_fiducial(uint64_t dim,
                                 uint32_t restarts,
                                 uint64_t seed,
                                 bool zauner,
                                 double tol,
                                 double *psi_out,
                                 size_t psi_len,
                                 double *defect);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* KNOMIAL_H */
