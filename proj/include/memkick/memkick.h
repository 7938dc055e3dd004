/* memkick: discrete maps with power-law memory, their special functions,
 * and chaos diagnostics, behind a C89-compatible shared-library API.
 *
 * Conventions: every fallible call returns a memkick_status; on failure
 * memkick_last_error() describes the problem (thread-local). Objects are
 * opaque handles released with their matching _free function. All
 * computations are deterministic for identical inputs.
 */
#ifndef MEMKICK_H
#define MEMKICK_H

#include <stddef.h>

#if defined(_WIN32)
#define MEMKICK_API __declspec(dllexport)
#else
#define MEMKICK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum memkick_status {
    MEMKICK_OK = 0,
    MEMKICK_ERR_INVALID_ARGUMENT = 1, /* parameter violates its constraint */
    MEMKICK_ERR_DOMAIN = 2,           /* pole / outside function domain */
    MEMKICK_ERR_NO_CONVERGENCE = 3,   /* series exceeded its term budget */
    MEMKICK_ERR_OVERFLOW = 4,         /* result not representable */
    MEMKICK_ERR_UNDEFINED = 5         /* quantity undefined at this point */
} memkick_status;

/* Message for the most recent failure on this thread; never NULL. */
MEMKICK_API const char* memkick_last_error(void);
MEMKICK_API const char* memkick_version(void);

/* ---- special functions ---------------------------------------------- */

MEMKICK_API memkick_status memkick_gamma(double x, double* out);

/* Two-parameter Mittag-Leffler E_{alpha,beta}(z) by series summation.
 * Pass tol <= 0 or max_terms <= 0 to use the defaults (1e-14, 2000). */
MEMKICK_API memkick_status memkick_mittag_leffler(double alpha, double beta, double z,
                                                  double tol, int max_terms, double* out);

/* Memory kernel V_alpha(z) = (z+1)^(alpha-1) - z^(alpha-1), z >= 1. */
MEMKICK_API memkick_status memkick_kernel_v(double alpha, long z, double* out);

/* Fills out_values[0..n_max-1] with V_alpha(1..n_max). */
MEMKICK_API memkick_status memkick_kernel_table(double alpha, long n_max, double* out_values);

/* ---- map specifications ---------------------------------------------- */

typedef struct memkick_spec memkick_spec;

MEMKICK_API memkick_status memkick_spec_new_logistic(double lambda, memkick_spec** out);

/* Burst-only growth map with F(Y) = a*Y - b. State dimension is the
 * integer bracket N of alpha (N-1 < alpha <= N). */
MEMKICK_API memkick_status memkick_spec_new_burst(double m, double v, double T, double alpha,
                                                  double a, double b, memkick_spec** out);

typedef enum memkick_gcase {
    MEMKICK_G_CONSTANT = 0, /* G(Y) = P0 */
    MEMKICK_G_POWER = 1     /* G(Y) = rho * Y^j */
} memkick_gcase;

typedef enum memkick_forcing {
    MEMKICK_FORCING_CONSTANT = 0,      /* C(t) = C */
    MEMKICK_FORCING_POWER = 1,         /* C(t) = C * t^beta, beta > -1 */
    MEMKICK_FORCING_MITTAG_LEFFLER = 2 /* C(t) = C t^(beta-1) E_{mu,beta}(gamma t^mu) */
} memkick_forcing;

typedef struct memkick_generalized_params {
    double m, v, T, alpha;
    double p; /* crisis weight q is 1 - p */
    int gcase;
    double P0;       /* MEMKICK_G_CONSTANT */
    double rho, j;   /* MEMKICK_G_POWER */
    double a, b;     /* kick amplitude F(Y) = a*Y - b */
    int forcing;
    double C, beta, mu, gamma;
} memkick_generalized_params;

MEMKICK_API memkick_status memkick_spec_new_generalized(const memkick_generalized_params* params,
                                                        memkick_spec** out);
MEMKICK_API void memkick_spec_free(memkick_spec* spec);

/* State dimension of the spec (components per trajectory step). */
MEMKICK_API memkick_status memkick_spec_dim(const memkick_spec* spec, int* out);

/* R(y) / R^-1(r) for a generalized spec's price shape. */
MEMKICK_API memkick_status memkick_spec_r_transform(const memkick_spec* spec, double y,
                                                    double* out);
MEMKICK_API memkick_status memkick_spec_r_inverse(const memkick_spec* spec, double r,
                                                  double* out);

/* ---- simulation ------------------------------------------------------- */

typedef enum memkick_engine {
    MEMKICK_ENGINE_DIRECT = 0,     /* full Volterra evaluation each step */
    MEMKICK_ENGINE_INCREMENTAL = 1 /* step-difference form with kernel table */
} memkick_engine;

typedef enum memkick_seed_step {
    MEMKICK_SEED_VOLTERRA = 0,   /* first step from the Volterra form (default) */
    MEMKICK_SEED_INCREMENTAL = 1 /* apply the difference form at n = 0 as well */
} memkick_seed_step;

typedef struct memkick_trajectory memkick_trajectory;

MEMKICK_API memkick_status memkick_simulate(const memkick_spec* spec, const double* init,
                                            size_t init_len, long n_steps, int engine,
                                            int seed_step, memkick_trajectory** out);

/* Normalized logistic-with-memory iteration for 0 < alpha <= 1; the raw
 * burst map (m, v, T, alpha, a, b) mapped through its memory
 * normalization, iterated in the normalized variable from z0. */
MEMKICK_API memkick_status memkick_simulate_logistic_memory(double m, double v, double T,
                                                            double alpha, double a, double b,
                                                            double z0, long n_steps,
                                                            memkick_trajectory** out);

/* Exact alpha = 1 kicked-flow integration (generalized specs with
 * constant forcing only); the verification oracle. */
MEMKICK_API memkick_status memkick_kicked_flow_oracle(const memkick_spec* spec,
                                                      const double* init, size_t init_len,
                                                      long n_steps, memkick_trajectory** out);

/* Recorded states, including the initial condition. */
MEMKICK_API size_t memkick_trajectory_size(const memkick_trajectory* t);
MEMKICK_API int memkick_trajectory_dim(const memkick_trajectory* t);
/* Index of the escape step, or -1 when the run stayed in bounds. */
MEMKICK_API long memkick_trajectory_escaped_at(const memkick_trajectory* t);
/* Component s of state n. */
MEMKICK_API memkick_status memkick_trajectory_value(const memkick_trajectory* t, size_t n,
                                                    int s, double* out);
/* Output view of state n: Y itself for burst/logistic maps, the inverse
 * transform of R for generalized maps (NaN where undefined). */
MEMKICK_API memkick_status memkick_trajectory_output(const memkick_trajectory* t, size_t n,
                                                     double* out);
MEMKICK_API void memkick_trajectory_free(memkick_trajectory* t);

/* ---- analytic solution ------------------------------------------------ */

/* Closed-form natural-growth solution
 *   Y(t) = sum_k init_derivs[k] t^k E_{alpha,k+1}(rate t^alpha)
 * with n_derivs equal to the integer bracket of alpha. */
MEMKICK_API memkick_status memkick_natural_growth(double alpha, double rate,
                                                  const double* init_derivs, size_t n_derivs,
                                                  double t, double* out);

/* ---- chaos diagnostics ------------------------------------------------- */

/* Smallest period p <= 64 such that |x[i+p] - x[i]| < tol over the whole
 * window; writes 0 for aperiodic. Needs len >= 128. tol <= 0 selects the
 * default (1e-8 scaled by sample magnitude). */
MEMKICK_API memkick_status memkick_detect_period(const double* samples, size_t len, double tol,
                                                 int* out_period);

/* Two-trajectory separation exponent (Benettin-style renormalization). */
MEMKICK_API memkick_status memkick_divergence_exponent(const memkick_spec* spec,
                                                       const double* init, size_t init_len,
                                                       long n_steps, double delta0,
                                                       long renorm_every, double* out);

typedef struct memkick_bif_data memkick_bif_data;

/* Sweep param_name over [lo, hi] on grid_points values; each point runs
 * n_transient + n_sample steps from init and reports the trailing
 * n_sample output values. Rows are ordered by (param value, sample index)
 * regardless of n_threads (0 = hardware concurrency). */
MEMKICK_API memkick_status memkick_bifurcation_scan(const memkick_spec* spec,
                                                    const char* param_name, double lo, double hi,
                                                    long grid_points, long n_transient,
                                                    long n_sample, const double* init,
                                                    size_t init_len, int n_threads,
                                                    memkick_bif_data** out);
MEMKICK_API size_t memkick_bif_rows(const memkick_bif_data* d);
MEMKICK_API memkick_status memkick_bif_row(const memkick_bif_data* d, size_t i,
                                           double* param_value, long* sample_index,
                                           double* state_value, int* escaped);
MEMKICK_API void memkick_bif_free(memkick_bif_data* d);

/* ---- verification suite ------------------------------------------------ */

typedef struct memkick_verify_report memkick_verify_report;

MEMKICK_API memkick_status memkick_verify_run(memkick_verify_report** out);
MEMKICK_API size_t memkick_verify_rows(const memkick_verify_report* r);
/* name pointer stays valid until the report is freed. */
MEMKICK_API memkick_status memkick_verify_row(const memkick_verify_report* r, size_t i,
                                              const char** name, double* max_error,
                                              double* tolerance, int* passed);
MEMKICK_API int memkick_verify_all_passed(const memkick_verify_report* r);
/* Formatted table, owned by the report. */
MEMKICK_API const char* memkick_verify_format(const memkick_verify_report* r);
MEMKICK_API void memkick_verify_free(memkick_verify_report* r);

#ifdef __cplusplus
}
#endif

#endif /* MEMKICK_H */
