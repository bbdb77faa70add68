/* C interface to the epz library: lattice point counts for positive definite
 * binary quadratic forms, Potter's approximate equation for the Epstein zeta
 * function, and the explicit lower bound for the mean primitive error term.
 *
 * Every call returns an epz_status. On failure, epz_last_error() gives a
 * message for the calling thread until its next failing call. Handles are
 * opaque and immutable once created; they may be shared between threads. */
#ifndef EPZ_EPZ_H
#define EPZ_EPZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EPZ_BUILDING_LIBRARY)
#    define EPZ_API __declspec(dllexport)
#  else
#    define EPZ_API __declspec(dllimport)
#  endif
#else
#  define EPZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the CLI exit codes. */
typedef enum epz_status {
  EPZ_OK = 0,
  EPZ_ERR_INVALID_ARGUMENT = 1,
  EPZ_ERR_PARSE = 2,
  EPZ_ERR_DOMAIN = 3,
  EPZ_ERR_RESOURCE = 4,
  EPZ_ERR_VERIFICATION = 5,
  EPZ_ERR_INTERNAL = 6
} epz_status;

typedef struct epz_form epz_form;
typedef struct epz_value_list epz_value_list;

typedef struct epz_complex {
  double re;
  double im;
} epz_complex;

/* workers: threads for enumeration, 0 = one per core.
 * max_points: enumeration budget, <= 0 selects the default. */
typedef struct epz_options {
  unsigned workers;
  double max_points;
} epz_options;

EPZ_API const char* epz_last_error(void);
EPZ_API const char* epz_version(void);

/* ---- forms ---- */
EPZ_API epz_status epz_form_create(double a, double b, double c, epz_form** out);
/* "a,b,c" with decimal or sqrt(k) tokens */
EPZ_API epz_status epz_form_parse(const char* text, epz_form** out);
EPZ_API void epz_form_destroy(epz_form* form);
EPZ_API epz_status epz_form_coefficients(const epz_form* form, double* a,
                                         double* b, double* c, double* disc);
EPZ_API epz_status epz_form_evaluate(const epz_form* form, int64_t m, int64_t n,
                                     double* out);
EPZ_API epz_status epz_form_kappa(const epz_form* form, double* out);
EPZ_API epz_status epz_form_lambda1(const epz_form* form, double* out);
EPZ_API epz_status epz_form_is_q0(const epz_form* form, int* out);

typedef struct epz_form_constants {
  double kappa;     /* min Q(u,v)/(u^2+v^2) */
  double lambda1;   /* smallest nonzero value on Z^2 */
  double main_all;  /* 2 pi / sqrt(D) */
  double main_prim; /* 12 / (pi sqrt(D)) */
} epz_form_constants;

EPZ_API epz_status epz_form_get_constants(const epz_form* form,
                                          epz_form_constants* out);

/* ---- counting ---- */
typedef struct epz_count_result {
  double x;
  int64_t A;
  int64_t B;
  double P;
  double R;
} epz_count_result;

EPZ_API epz_status epz_enumerate(const epz_form* form, double X,
                                 const epz_options* opts, epz_value_list** out);
EPZ_API void epz_value_list_destroy(epz_value_list* list);
EPZ_API size_t epz_value_list_size(const epz_value_list* list);
EPZ_API epz_status epz_value_list_entry(const epz_value_list* list, size_t i,
                                        double* value, int64_t* total_mult,
                                        int64_t* prim_mult);
EPZ_API epz_status epz_count(const epz_form* form, double x,
                             const epz_options* opts, epz_count_result* out);
EPZ_API epz_status epz_count_primitive_moebius(const epz_form* form, double x,
                                               const epz_options* opts,
                                               int64_t* out);
/* integral of |R(x)| over [1, Y] */
EPZ_API epz_status epz_mean_abs_r(const epz_form* form, double Y,
                                  const epz_options* opts, double* out);
/* Writes the x,A,B,P,R table to counts_path and the Y,M table to mean_path. */
EPZ_API epz_status epz_sweep(const epz_form* form, double y_max, int rows,
                             int log_step, int timestamp,
                             const char* counts_path, const char* mean_path,
                             const epz_options* opts);

/* ---- special functions ---- */
EPZ_API epz_status epz_zeta_real(double s, double* out);
EPZ_API epz_status epz_dirichlet_l(double s, double* out);
EPZ_API epz_status epz_log_gamma(epz_complex z, epz_complex* out);
EPZ_API size_t epz_zeta_zero_count(void);
EPZ_API epz_status epz_zeta_zero(int index, double* gamma, double* beta0);

/* ---- Epstein zeta ---- */
typedef struct epz_potter_evaluation {
  epz_complex s;
  double Z;
  epz_complex F1;
  double F2_bound;
  int certified; /* 1 when Re s = 3/4 */
} epz_potter_evaluation;

EPZ_API epz_status epz_potter_evaluate(const epz_form* form, double Z,
                                       epz_complex s, const epz_options* opts,
                                       epz_potter_evaluation* out);
/* Potter at 1-s carried to s by the functional equation. */
EPZ_API epz_status epz_potter_reflected(const epz_form* form, double Z,
                                        epz_complex s, const epz_options* opts,
                                        epz_potter_evaluation* out);
EPZ_API epz_status epz_zeta_q_series(const epz_form* form, epz_complex s,
                                     double tol, const epz_options* opts,
                                     epz_complex* out);
EPZ_API epz_status epz_functional_equation(const epz_form* form, epz_complex s,
                                           epz_complex zq_at_1_minus_s,
                                           epz_complex* out);

/* ---- explicit lower bound ---- */
typedef struct epz_bound_report {
  double a, b, c, disc;
  int zero_index;
  double gamma;
  double beta0;
  double Z;
  epz_complex z0;
  double gamma_ratio;
  double prefactor;
  double F1_abs;
  double F2_bound;
  double margin;
  double K0_lower;
  int valid;
} epz_bound_report;

typedef struct epz_weight_report {
  double integral_polynomial;
  double integral_lorentz;
  double integral_lorentz_at_0;
  double constant;
} epz_weight_report;

EPZ_API epz_status epz_weight_constant(double rel_tol, epz_weight_report* out);
EPZ_API epz_status epz_k0_lower_bound(const epz_form* form, int zero_index,
                                      double Z, const epz_options* opts,
                                      epz_bound_report* out);
/* Tries zeros 1, 2, ... until the margin is positive. */
EPZ_API epz_status epz_k0_search(const epz_form* form, double Z,
                                 const epz_options* opts,
                                 epz_bound_report* out);

typedef enum epz_report_format {
  EPZ_REPORT_KEY_VALUE = 0,
  EPZ_REPORT_CSV_HEADER = 1,
  EPZ_REPORT_CSV_ROW = 2
} epz_report_format;

/* Copies the formatted report (NUL-terminated) into buf when it fits and
 * stores the full length, excluding the NUL, in *needed. */
EPZ_API epz_status epz_bound_report_format(const epz_bound_report* report,
                                           epz_report_format format, char* buf,
                                           size_t cap, size_t* needed);

EPZ_API epz_status epz_finite_y_check(const epz_form* form, double Y,
                                      double mean_integral, int* holds);

typedef struct epz_reference_check {
  const char* name;     /* valid until the next epz_verify_reference call */
  double computed;
  double expected;
  const char* relation; /* "=", ">=", ">", "<=" */
  double tolerance;
  int pass;
} epz_reference_check;

/* Reruns the worked example for m^2 + sqrt2 mn + sqrt3 n^2 at Z = 1000 with
 * the first zeta zero. Fills up to cap checks, stores the total in *count
 * and sets *all_pass. Returns EPZ_OK even when checks fail. */
EPZ_API epz_status epz_verify_reference(const epz_options* opts,
                                        epz_reference_check* checks, size_t cap,
                                        size_t* count, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* EPZ_EPZ_H */
