/*
 * fockproj — truncated Fock-space constraint projectors and projected
 * coherent-state propagators.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed here; every fallible call returns a fockproj_status, writes
 * its result through out-parameters, and leaves a human-readable message in
 * fockproj_last_error() on failure. Handles are immutable after creation and
 * may be shared across threads; the error message is thread-local.
 */

#ifndef FOCKPROJ_H
#define FOCKPROJ_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  if defined(FOCKPROJ_BUILD)
#    define FOCKPROJ_API __declspec(dllexport)
#  else
#    define FOCKPROJ_API __declspec(dllimport)
#  endif
#else
#  define FOCKPROJ_API __attribute__((visibility("default")))
#endif

typedef enum fockproj_status {
    FOCKPROJ_OK = 0,
    FOCKPROJ_ERR_INVALID_ARGUMENT = 1,
    FOCKPROJ_ERR_DIMENSION_MISMATCH = 2,
    FOCKPROJ_ERR_MODE_OUT_OF_RANGE = 3,
    FOCKPROJ_ERR_DIMENSION_CEILING = 4,
    FOCKPROJ_ERR_NOT_HERMITIAN = 5,
    FOCKPROJ_ERR_GUARD_EXCEEDED = 6,
    FOCKPROJ_ERR_ANNIHILATED_STATE = 7,
    FOCKPROJ_ERR_QUADRATURE = 8,
    FOCKPROJ_ERR_NON_FINITE = 9,
    FOCKPROJ_ERR_IO = 10,
    FOCKPROJ_ERR_NULL_POINTER = 11,
    FOCKPROJ_ERR_INTERNAL = 12
} fockproj_status;

typedef struct fockproj_space fockproj_space;
typedef struct fockproj_operator fockproj_operator;
typedef struct fockproj_projector fockproj_projector;

FOCKPROJ_API const char* fockproj_version(void);
FOCKPROJ_API const char* fockproj_status_string(fockproj_status status);
/* message of the last failure on this thread; empty string if none */
FOCKPROJ_API const char* fockproj_last_error(void);

/* ---- truncated Fock spaces --------------------------------------------- */

FOCKPROJ_API fockproj_status fockproj_space_create_per_mode(const int32_t* n_max,
                                                            int32_t modes,
                                                            fockproj_space** out);
FOCKPROJ_API fockproj_status fockproj_space_create_total_quanta(int32_t modes,
                                                                int32_t total_max,
                                                                fockproj_space** out);
FOCKPROJ_API void fockproj_space_free(fockproj_space* space);
FOCKPROJ_API int64_t fockproj_space_dimension(const fockproj_space* space);
FOCKPROJ_API int32_t fockproj_space_modes(const fockproj_space* space);
/* occ has space_modes() entries */
FOCKPROJ_API fockproj_status fockproj_space_flat_index(const fockproj_space* space,
                                                       const int32_t* occ, int64_t* out_flat);
FOCKPROJ_API fockproj_status fockproj_space_occupations(const fockproj_space* space,
                                                        int64_t flat, int32_t* out_occ);

/* ---- operators ---------------------------------------------------------- */

FOCKPROJ_API fockproj_status fockproj_operator_identity(const fockproj_space* space,
                                                        fockproj_operator** out);
FOCKPROJ_API fockproj_status fockproj_operator_annihilation(const fockproj_space* space,
                                                            int32_t mode,
                                                            fockproj_operator** out);
FOCKPROJ_API fockproj_status fockproj_operator_creation(const fockproj_space* space, int32_t mode,
                                                        fockproj_operator** out);
FOCKPROJ_API fockproj_status fockproj_operator_position(const fockproj_space* space, int32_t mode,
                                                        fockproj_operator** out);
FOCKPROJ_API fockproj_status fockproj_operator_momentum(const fockproj_space* space, int32_t mode,
                                                        fockproj_operator** out);
FOCKPROJ_API fockproj_status fockproj_operator_number(const fockproj_space* space, int32_t mode,
                                                      fockproj_operator** out);
FOCKPROJ_API fockproj_status fockproj_operator_total_number(const fockproj_space* space,
                                                            fockproj_operator** out);
/* i(a_a† a_b − a_b† a_a) */
FOCKPROJ_API fockproj_status fockproj_operator_rotation_generator(const fockproj_space* space,
                                                                  int32_t mode_a, int32_t mode_b,
                                                                  fockproj_operator** out);
FOCKPROJ_API void fockproj_operator_free(fockproj_operator* op);

/* out = a + (scale_re + i scale_im) b */
FOCKPROJ_API fockproj_status fockproj_operator_add_scaled(const fockproj_operator* a,
                                                          const fockproj_operator* b,
                                                          double scale_re, double scale_im,
                                                          fockproj_operator** out);
FOCKPROJ_API fockproj_status fockproj_operator_multiply(const fockproj_operator* a,
                                                        const fockproj_operator* b,
                                                        fockproj_operator** out);
FOCKPROJ_API fockproj_status fockproj_operator_adjoint(const fockproj_operator* a,
                                                       fockproj_operator** out);
FOCKPROJ_API fockproj_status fockproj_operator_commutator(const fockproj_operator* a,
                                                          const fockproj_operator* b,
                                                          fockproj_operator** out);
/* out = exp((t_re + i t_im) a) */
FOCKPROJ_API fockproj_status fockproj_operator_exponential(const fockproj_operator* a,
                                                           double t_re, double t_im,
                                                           fockproj_operator** out);
FOCKPROJ_API fockproj_status fockproj_operator_element(const fockproj_operator* a, int64_t row,
                                                       int64_t col, double* out_re,
                                                       double* out_im);
FOCKPROJ_API fockproj_status fockproj_operator_trace(const fockproj_operator* a, double* out_re,
                                                     double* out_im);
FOCKPROJ_API fockproj_status fockproj_operator_spectral_norm(const fockproj_operator* a,
                                                             double* out);
/* ascending eigenvalues of a hermitian operator; out has dimension entries */
FOCKPROJ_API fockproj_status fockproj_operator_eigenvalues(const fockproj_operator* a,
                                                           double* out);

/* ---- coherent states ----------------------------------------------------- */

/* amplitudes interleaved re,im per basis state (2·dimension doubles);
   weyl != 0 selects the symmetric phase convention */
FOCKPROJ_API fockproj_status fockproj_coherent_amplitudes(const fockproj_space* space,
                                                          const double* p, const double* q,
                                                          int32_t weyl, double* out_amplitudes,
                                                          double* out_norm_deficit);
FOCKPROJ_API fockproj_status fockproj_overlap_closed_form(int32_t modes, const double* p_bra,
                                                          const double* q_bra, int32_t weyl_bra,
                                                          const double* p_ket,
                                                          const double* q_ket, int32_t weyl_ket,
                                                          double* out_re, double* out_im);
FOCKPROJ_API fockproj_status fockproj_upper_symbol(const fockproj_operator* op, const double* p,
                                                   const double* q, int32_t weyl,
                                                   double* out_re, double* out_im);
FOCKPROJ_API fockproj_status fockproj_unity_residual(const fockproj_space* space, double box,
                                                     int32_t points_per_axis, int32_t quanta_cut,
                                                     double* out);
FOCKPROJ_API fockproj_status fockproj_bessel_i0(double z_re, double z_im, double* out_re,
                                                double* out_im);

/* ---- constraint projectors ------------------------------------------------ */

FOCKPROJ_API fockproj_status fockproj_projector_group_average_u1(const fockproj_operator* phi,
                                                                 int32_t average_points,
                                                                 fockproj_projector** out);
FOCKPROJ_API fockproj_status fockproj_projector_spectral(const fockproj_operator* const* phis,
                                                         int32_t count, double zero_tol,
                                                         fockproj_projector** out);
FOCKPROJ_API fockproj_status fockproj_projector_gaussian_pair(const fockproj_space* space,
                                                              int32_t mode,
                                                              int32_t nodes_per_axis,
                                                              double halfwidth,
                                                              fockproj_projector** out);
FOCKPROJ_API void fockproj_projector_free(fockproj_projector* projector);
FOCKPROJ_API fockproj_status fockproj_projector_matrix(const fockproj_projector* projector,
                                                       fockproj_operator** out);
FOCKPROJ_API int32_t fockproj_projector_rank(const fockproj_projector* projector);
FOCKPROJ_API int32_t fockproj_projector_is_valid(const fockproj_projector* projector);
FOCKPROJ_API int32_t fockproj_projector_is_empty_subspace(const fockproj_projector* projector);
FOCKPROJ_API fockproj_status fockproj_projector_residuals(const fockproj_projector* projector,
                                                          double* out_idempotency,
                                                          double* out_hermiticity);

/* ---- projected dynamics --------------------------------------------------- */

FOCKPROJ_API fockproj_status fockproj_evolve_projected_trotter(const fockproj_operator* h,
                                                               const fockproj_projector* e,
                                                               double total_time, int32_t slices,
                                                               fockproj_operator** out);
FOCKPROJ_API fockproj_status fockproj_evolve_projected_exact(const fockproj_operator* h,
                                                             const fockproj_projector* e,
                                                             double total_time,
                                                             fockproj_operator** out);
/* <bra|op|ket> with weyl-convention coherent states */
FOCKPROJ_API fockproj_status fockproj_kernel_value(const fockproj_operator* op,
                                                   const double* p_bra, const double* q_bra,
                                                   const double* p_ket, const double* q_ket,
                                                   double* out_re, double* out_im);

/* ---- check suites ---------------------------------------------------------- */

/* Runs the checks selected by a JSON configuration (see the CLI
   documentation for the schema), returning the JSON report. The report
   string is owned by the caller; free it with fockproj_string_free. */
FOCKPROJ_API fockproj_status fockproj_run_suite(const char* config_json, char** out_report_json,
                                                int32_t* out_all_passed);
FOCKPROJ_API fockproj_status fockproj_report_to_csv(const char* report_json, char** out_csv);
FOCKPROJ_API void fockproj_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* FOCKPROJ_H */
