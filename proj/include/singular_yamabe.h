/* Singular Yamabe toolkit - C API.
 *
 * Spectra and indicial roots of warped-product cone spaces, subcritical
 * continuation solves of the radial Yamabe problem, tip-asymptotics fits and
 * quantitative inequality certificates, behind opaque handles and status
 * codes. All functions returning sy_status leave a readable message in
 * sy_last_error() on failure. Handles are freed with the matching *_free.
 */
#ifndef SINGULAR_YAMABE_H
#define SINGULAR_YAMABE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sy_status {
    SY_OK = 0,
    SY_ERR_INVALID_ARGUMENT = 1,
    SY_ERR_PARSE = 2,
    SY_ERR_IO = 3,
    SY_ERR_NUMERIC = 4,
    SY_ERR_UNSUPPORTED = 5
} sy_status;

/* Message describing the most recent failure on this thread. */
const char* sy_last_error(void);

/* ---------------------------------------------------------------- spaces */

typedef struct sy_space sy_space;

sy_status sy_space_load(const char* path, sy_space** out);
sy_status sy_space_parse(const char* json_text, sy_space** out);
void sy_space_free(sy_space* space);

int sy_space_dimension(const sy_space* space);   /* ambient n */
int sy_space_link_dim(const sy_space* space);    /* link f = n-1 */
double sy_space_length(const sy_space* space);   /* radial length L */
double sy_space_tip_slope(const sy_space* space);
double sy_space_link_scal(const sy_space* space);
double sy_space_link_volume(const sy_space* space);
/* 1 when the space has a second tip at x = L (spindle), 0 otherwise. */
int sy_space_has_upper_tip(const sy_space* space);

/* ------------------------------------------------------------- spectra */

typedef struct sy_spectrum sy_spectrum;

/* Spectrum of -Δ + c(m) scal on the link; pass m = 0 for m = n. The table is
 * truncated to at most j_max+1 modes (j_max < 0 keeps everything). */
sy_status sy_family_spectrum(const sy_space* space, int m, int j_max, sy_spectrum** out);
void sy_spectrum_free(sy_spectrum* spec);
int sy_spectrum_size(const sy_spectrum* spec);
sy_status sy_spectrum_entry(const sy_spectrum* spec, int index, double* eigenvalue,
                            long long* multiplicity);
sy_status sy_spectrum_write_csv(const sy_spectrum* spec, const char* path);
sy_status sy_spectrum_read_csv(const char* path, sy_spectrum** out);

typedef struct sy_roots sy_roots;

sy_status sy_conic_roots(const sy_spectrum* family_n, sy_roots** out);
void sy_roots_free(sy_roots* roots);
int sy_roots_size(const sy_roots* roots);
sy_status sy_roots_entry(const sy_roots* roots, int index, double* nu_minus, double* nu_plus);

typedef enum sy_positivity_class {
    SY_POSITIVITY_STRICTLY_ABOVE = 0,
    SY_POSITIVITY_EQUALS_THRESHOLD = 1,
    SY_POSITIVITY_BELOW = 2
} sy_positivity_class;

typedef struct sy_positivity {
    int classification;     /* sy_positivity_class against c(n) f(f-1) */
    double lambda0;
    double threshold;
    double tolerance;
    int strictly_positive;  /* lambda0 > 0 */
} sy_positivity;

sy_status sy_positivity_check(const sy_spectrum* family_n, const sy_space* space,
                              sy_positivity* out);

/* Cone normalization constant delta and predicted tip exponent (delta-1)(n-2)/2. */
sy_status sy_delta_normalization(const sy_space* space, double* delta, double* tip_exponent);

/* --------------------------------------------------------------- solver */

typedef struct sy_solver_config {
    int grid_cells;
    double grading_ratio;
    double tip_refine;
    double residual_tol;
    int max_iterations;
    const double* schedule;  /* NULL for the default continuation schedule */
    int schedule_len;
    int extrapolation_order;
} sy_solver_config;

void sy_solver_config_init(sy_solver_config* config);

typedef struct sy_solution sy_solution;

sy_status sy_solve(const sy_space* space, const sy_solver_config* config, sy_solution** out);
void sy_solution_free(sy_solution* solution);

int sy_solution_stage_count(const sy_solution* solution);
sy_status sy_solution_stage(const sy_solution* solution, int stage, double* p, double* Y,
                            double* residual, double* min_u, double* max_u, int* iterations);
double sy_solution_extrapolated_Y(const sy_solution* solution);
int sy_solution_complete(const sy_solution* solution);
/* Diagnostic for an aborted continuation; empty string when complete. */
const char* sy_solution_failure(const sy_solution* solution);

int sy_solution_grid_size(const sy_solution* solution);
/* Copies the stage profile into caller arrays of length sy_solution_grid_size. */
sy_status sy_solution_profile(const sy_solution* solution, int stage, double* x, double* u);

/* Quotient value of given samples at exponent p on the reconstructed grid;
 * norm_out (optional) receives ||u||_{2p/(p-2)}. */
sy_status sy_quotient(const sy_space* space, const double* x, const double* u, int len, double p,
                      double* value, double* norm_out);

typedef struct sy_ball_estimate {
    double value;
    double radius;
    double p;
    int upper_bound;
} sy_ball_estimate;

sy_status sy_local_yamabe_ball(const sy_space* space, int grid_cells, int tip_upper, double radius,
                               double p, sy_ball_estimate* out);
int sy_hypothesis_gate(double Y_est, double Y_local_est, double margin);

/* ---------------------------------------------------------- asymptotics */

typedef struct sy_fit {
    double gamma_hat;
    double c0_hat;
    double window_lo;
    double window_hi;
    double fit_error;
    int has_secondary;
    double secondary_exponent;
} sy_fit;

/* Window bounds <= 0 select the default window near the tip. */
sy_status sy_fit_exponent(const sy_space* space, const double* x, const double* u, int len,
                          int tip_upper, double window_lo, double window_hi, sy_fit* out);

typedef struct sy_prediction {
    int match;
    double rel_dev;
    double fitted;
    double predicted;
} sy_prediction;

sy_status sy_compare_prediction(const sy_fit* fit, double predicted, double threshold,
                                sy_prediction* out);

/* -------------------------------------------------------- admissibility */

typedef struct sy_stratum {
    int n;
    int f;
    double A0;
    double A1;
} sy_stratum;

typedef struct sy_admissibility {
    int iv_a;
    int iv_b;
    double alpha;
    int iv_c;
} sy_admissibility;

sy_status sy_admissibility_check(const sy_stratum* strata, int count, sy_admissibility* out);
sy_status sy_load_strata(const char* path, sy_stratum* out, int capacity, int* count);
/* Fitted tip strata of a space (coefficients snapped to zero at fit noise). */
sy_status sy_tip_strata(const sy_space* space, sy_stratum* out, int capacity, int* count);

typedef struct sy_positivity_audit {
    double min_u;
    double max_u;
    int positive;
    int lower_bound_asserted;
} sy_positivity_audit;

sy_status sy_positivity_audit_check(const sy_space* space, const double* u, int len,
                                    sy_positivity_audit* out);

/* ---------------------------------------------------------- certificates */

typedef struct sy_sobolev {
    double A;
    double B;
} sy_sobolev;

sy_status sy_sobolev_constants(const sy_space* space, int grid_cells, unsigned long long seed,
                               sy_sobolev* out);

typedef struct sy_moser {
    double q;
    double r;
    double kappa;
    double alpha;
    double C;
    double C1;
    double sup_bound;
    double max_u;
    int validated;
} sy_moser;

/* Certificate for a solved profile (x, u) at exponent p with potential
 * V = c(n) scal - Y u^{4/(p-2)}; q > n/2 is the integrability exponent. */
sy_status sy_moser_certificate(const sy_space* space, const double* x, const double* u, int len,
                               double p, double q, unsigned long long seed, sy_moser* out);
/* Auditable text report of the certificate; returns bytes written (excluding
 * the terminator) or -1 when the buffer is too small. */
int sy_moser_report(const sy_space* space, const double* x, const double* u, int len, double p,
                    double q, unsigned long long seed, char* buffer, size_t capacity);

typedef struct sy_hardy {
    double rayleigh_min;
    double constant;
    double ratio;
    double near_optimizer_best;
    int degenerate;
} sy_hardy;

/* Hardy quotient on the exact cone with link dimension f; the window is
 * [x_min_frac * L, L] with log-spaced cells. */
sy_status sy_hardy_check(int f, int cells, double x_min_frac, unsigned long long seed,
                         sy_hardy* out);

typedef struct sy_morrey {
    double q;
    double alpha;
    double sup_constant;
    int within_hypothesis;
    int finite;
    double small_r_slope;
} sy_morrey;

/* Morrey record of the space's own curvature samples. */
sy_status sy_morrey_scal(const sy_space* space, int grid_cells, double q, double alpha,
                         sy_morrey* out);

#ifdef __cplusplus
}
#endif

#endif /* SINGULAR_YAMABE_H */
