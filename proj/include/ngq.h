#ifndef NGQ_H
#define NGQ_H

/* C interface to the ngq library: Husimi Q-function models for single- and
 * two-mode oscillator states, Wehrl entropies, and the non-Gaussianity
 * measures built on them.
 *
 * All objects are opaque handles created into an out-parameter and released
 * with the matching *_free call (free accepts NULL). Every fallible call
 * returns an ngq_status; on failure the out-parameters are untouched and
 * ngq_last_error() carries a message for the calling thread.
 */

#include <stdint.h>

#if defined(_WIN32)
#define NGQ_API __declspec(dllexport)
#else
#define NGQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ngq_status {
    NGQ_OK = 0,
    NGQ_ERROR_INVALID_ARGUMENT = 1, /* null handle, size mismatch, bad enum */
    NGQ_ERROR_DOMAIN = 2,           /* parameter outside its admissible range */
    NGQ_ERROR_TRUNCATION = 3,       /* cutoff too small for the request */
    NGQ_ERROR_CONVERGENCE = 4,      /* integration missed its error target */
    NGQ_ERROR_UNSUPPORTED_STATE = 5,/* Gaussian reference not thermal */
    NGQ_ERROR_INTERNAL = 6
} ngq_status;

typedef enum ngq_method {
    NGQ_METHOD_CLOSED_FORM = 0,
    NGQ_METHOD_RADIAL = 1,
    NGQ_METHOD_GRID2D = 2,
    NGQ_METHOD_MC4D = 3
} ngq_method;

/* Truncated single-mode density matrix. */
typedef struct ngq_state ngq_state;
/* Evaluatable Q-function model (1 or 2 modes). */
typedef struct ngq_model ngq_model;

typedef struct ngq_quad {
    int radial_nodes;          /* Gauss-Legendre nodes per radial panel */
    double radial_cut;         /* upper integration radius; 0 = automatic */
    int grid_nodes_per_axis;   /* resolution of the 2D polar rule */
    int64_t mc_samples;        /* Monte Carlo budget for two-mode models */
    uint64_t mc_seed;          /* counter-based stream seed; fixes the run */
    double target_abs_err;     /* requested absolute error */
} ngq_quad;

typedef struct ngq_report {
    double value;
    double raw_value;          /* pre-clamp value where clamping applies */
    double est_error;
    int method;                /* ngq_method */
} ngq_report;

NGQ_API const char* ngq_version(void);
/* Message of the most recent failure on this thread ("" if none). */
NGQ_API const char* ngq_last_error(void);
NGQ_API void ngq_quad_default(ngq_quad* quad);

/* --- states ------------------------------------------------------------ */
/* cutoff <= 0 selects the smallest basis whose analytic tail mass is below
 * 1e-10 (never below 32). */
NGQ_API ngq_status ngq_state_fock(int m, int cutoff, ngq_state** out);
NGQ_API ngq_status ngq_state_thermal(double x, int cutoff, ngq_state** out);
NGQ_API ngq_status ngq_state_pats(int m, double x, int cutoff, ngq_state** out);
NGQ_API ngq_status ngq_state_phase_averaged(double beta_abs, int cutoff, ngq_state** out);
NGQ_API ngq_status ngq_state_coherent(double beta_re, double beta_im, int cutoff, ngq_state** out);
NGQ_API void ngq_state_free(ngq_state* state);

NGQ_API int ngq_state_cutoff(const ngq_state* state);
NGQ_API double ngq_state_tail_mass(const ngq_state* state);
NGQ_API ngq_status ngq_state_element(const ngq_state* state, int row, int col,
                                     double* re, double* im);
NGQ_API ngq_status ngq_state_rotate(const ngq_state* state, double theta, ngq_state** out);
NGQ_API ngq_status ngq_state_von_neumann_entropy(const ngq_state* state, double* out);
/* Tr(rho a^q adag^p); the (p,q) moment of the state's Q function. */
NGQ_API ngq_status ngq_state_anti_normal_moment(const ngq_state* state, int p, int q,
                                                double* re, double* im);
NGQ_API ngq_status ngq_state_hs_inner(const ngq_state* a, const ngq_state* b, double* out);

/* --- Q-function models -------------------------------------------------- */
NGQ_API ngq_status ngq_model_fock(int m, ngq_model** out);
NGQ_API ngq_status ngq_model_pats(int m, double x, ngq_model** out);
NGQ_API ngq_status ngq_model_phase_averaged(double beta_abs, ngq_model** out);
NGQ_API ngq_status ngq_model_thermal(double nbar, ngq_model** out);
NGQ_API ngq_status ngq_model_from_state(const ngq_state* state, ngq_model** out);
NGQ_API void ngq_model_free(ngq_model* model);

NGQ_API int ngq_model_modes(const ngq_model* model);

/* Q'(alpha) = lambda^{2n} Q(lambda alpha), 0 < lambda <= 1. */
NGQ_API ngq_status ngq_model_scale(const ngq_model* model, double lambda, ngq_model** out);
/* xi_re_im holds (Re xi_1, Im xi_1, ...) with one pair per mode. */
NGQ_API ngq_status ngq_model_displace(const ngq_model* model, const double* xi_re_im,
                                      ngq_model** out);
NGQ_API ngq_status ngq_model_rotate(const ngq_model* model, double theta, ngq_model** out);
NGQ_API ngq_status ngq_model_tensor(const ngq_model* a, const ngq_model* b, ngq_model** out);
/* u_re_im: 2x2 unitary, row-major (re, im) pairs, 8 doubles. */
NGQ_API ngq_status ngq_model_beamsplit(const ngq_model* a, const ngq_model* b,
                                       const double* u_re_im, ngq_model** out);
NGQ_API ngq_status ngq_model_beamsplit_5050(const ngq_model* a, const ngq_model* b,
                                            ngq_model** out);

/* alpha_re_im holds one (re, im) pair per mode. */
NGQ_API ngq_status ngq_model_eval(const ngq_model* model, const double* alpha_re_im,
                                  double* out);
/* mean: 2n doubles; cov: 2n x 2n doubles, row-major. */
NGQ_API ngq_status ngq_model_gaussian_fit(const ngq_model* model, double* mean, double* cov);

/* --- entropies and measures --------------------------------------------- */
NGQ_API ngq_status ngq_wehrl(const ngq_model* model, const ngq_quad* quad, ngq_report* out);
/* Closed-form Wehrl entropy of the model's moment-matched Gaussian. */
NGQ_API ngq_status ngq_wehrl_gaussian(const ngq_model* model, ngq_report* out);
NGQ_API ngq_status ngq_wehrl_fock_closed(int m, double* out);
NGQ_API ngq_status ngq_ng_measure(const ngq_model* model, const ngq_quad* quad, ngq_report* out);
NGQ_API ngq_status ngq_ng_fock_closed(int m, double* out);
/* Mean photon number of the thermal Gaussian reference (fails with
 * NGQ_ERROR_UNSUPPORTED_STATE outside the zero-mean phase-symmetric class). */
NGQ_API ngq_status ngq_reference_thermal_nbar(const ngq_state* state, double* out);
NGQ_API ngq_status ngq_delta1(const ngq_state* state, ngq_report* out);
NGQ_API ngq_status ngq_delta2(const ngq_state* state, ngq_report* out);

/* --- cumulants ----------------------------------------------------------- */
NGQ_API ngq_status ngq_s_ordered_moment(const ngq_state* state, int p, int q, double s,
                                        double* re, double* im);
NGQ_API ngq_status ngq_s_invariance(const ngq_state* state, int order_cap,
                                    double* max_higher_order_dev, double* second_order_shift_dev);
NGQ_API ngq_status ngq_cumulant_indicator(const ngq_state* state, int order_cap, double* out);

/* --- special functions --------------------------------------------------- */
NGQ_API double ngq_digamma(double x);
NGQ_API double ngq_log_factorial(int m);
NGQ_API double ngq_bessel_i0_scaled(double x);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NGQ_H */
