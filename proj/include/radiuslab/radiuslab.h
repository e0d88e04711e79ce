#ifndef RADIUSLAB_H
#define RADIUSLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RADIUSLAB_BUILDING)
#    define RL_API __declspec(dllexport)
#  else
#    define RL_API __declspec(dllimport)
#  endif
#else
#  define RL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values mirror radiuslab::ErrorCode. */
typedef enum rl_status {
  RL_OK = 0,
  RL_INVALID_ARGUMENT = 1,
  RL_DIMENSION_MISMATCH,
  RL_NOT_HERMITIAN,
  RL_NOT_PSD,
  RL_NO_CONVERGENCE,
  RL_UNDEFINED_AT_ZERO,
  RL_ZERO_ENTRY,
  RL_NON_POSITIVE_LAMBDA,
  RL_DUPLICATE_LAMBDA,
  RL_DOMAIN_ERROR,
  RL_ALL_ZERO_SPECTRUM,
  RL_MISSING_DERIVATIVE_AT_ZERO,
  RL_PARAMETER_OUT_OF_RANGE,
  RL_PARSE_ERROR,
  RL_IO_ERROR,
  RL_INTERNAL_ERROR = 99
} rl_status;

typedef enum rl_verdict {
  RL_CERTIFIED_SAMPLED = 0,
  RL_REFUTED = 1,
  RL_INCONCLUSIVE = 2
} rl_verdict;

typedef struct rl_matrix rl_matrix;
typedef struct rl_function rl_function;
typedef struct rl_certificate rl_certificate;
typedef struct rl_run_config rl_run_config;
typedef struct rl_suite_result rl_suite_result;
typedef struct rl_counterexample rl_counterexample;

typedef struct rl_radius_result {
  double value;
  double argmax_theta;
  double certified_abs_error; /* omega lies in [value, value + certified_abs_error] */
  size_t evaluations;
} rl_radius_result;

/* Message of the last failed call on this thread; "" when none. */
RL_API const char* rl_last_error(void);
RL_API const char* rl_status_name(rl_status status);

/* Strings returned through char** are owned by the caller. */
RL_API void rl_string_free(char* s);

/* Matrices */
RL_API rl_status rl_matrix_create(size_t rows, size_t cols, rl_matrix** out);
RL_API rl_status rl_matrix_from_json(const char* text, rl_matrix** out);
RL_API rl_status rl_matrix_read_file(const char* path, rl_matrix** out);
RL_API rl_status rl_matrix_to_json(const rl_matrix* m, char** out);
RL_API size_t rl_matrix_rows(const rl_matrix* m);
RL_API size_t rl_matrix_cols(const rl_matrix* m);
RL_API rl_status rl_matrix_set(rl_matrix* m, size_t i, size_t j, double re, double im);
RL_API rl_status rl_matrix_get(const rl_matrix* m, size_t i, size_t j, double* re, double* im);
RL_API void rl_matrix_free(rl_matrix* m);

/* abs_tol <= 0 selects 1e-9 * max(1, ||A||). */
RL_API rl_status rl_numerical_radius(const rl_matrix* a, double abs_tol, rl_radius_result* out);
RL_API rl_status rl_operator_norm(const rl_matrix* a, double* out);

/* Functions, in the spec-string grammar ("power:0.5", "log1p", "tover(power:0.5)", ...) */
RL_API rl_status rl_function_parse(const char* spec, rl_function** out);
RL_API rl_status rl_function_eval(const rl_function* f, double t, double* out);
/* Canonical spec string; valid while f lives. */
RL_API const char* rl_function_name(const rl_function* f);
RL_API void rl_function_free(rl_function* f);

/* Sampled certificates */
RL_API rl_status rl_certify_kwong(const rl_function* f, double a, double b, int trials, int max_n,
                                  uint64_t seed, rl_certificate** out);
RL_API rl_status rl_certify_operator_monotone(const rl_function* g, double a, double b, int trials,
                                              int max_n, uint64_t seed, rl_certificate** out);
RL_API rl_verdict rl_certificate_verdict(const rl_certificate* c);
RL_API double rl_certificate_min_eig(const rl_certificate* c);
/* Number of witness lambdas (0 unless refuted); values stays valid while c lives. */
RL_API size_t rl_certificate_witness(const rl_certificate* c, const double** values);
RL_API rl_status rl_certificate_to_json(const rl_certificate* c, char** out);
RL_API void rl_certificate_free(rl_certificate* c);

/* Suite configuration. Defaults: seed 1, 300 trials, dims 2..6, rel_tol 1e-8,
   omega_tol 1e-9, psd_tol 1e-10, built-in pairs, every inequality. */
RL_API rl_status rl_run_config_create(rl_run_config** out);
RL_API void rl_run_config_set_seed(rl_run_config* c, uint64_t seed);
RL_API void rl_run_config_set_trials(rl_run_config* c, int trials);
RL_API void rl_run_config_set_dims(rl_run_config* c, const size_t* dims, size_t count);
RL_API void rl_run_config_set_tolerances(rl_run_config* c, double rel_tol, double omega_tol,
                                         double psd_tol);
RL_API void rl_run_config_add_pair(rl_run_config* c, const char* pair_spec);
RL_API void rl_run_config_add_inequality(rl_run_config* c, const char* id);
RL_API void rl_run_config_set_t(rl_run_config* c, double t);
RL_API void rl_run_config_set_alpha(rl_run_config* c, double alpha);
RL_API void rl_run_config_set_beta(rl_run_config* c, double beta);
RL_API void rl_run_config_set_r(rl_run_config* c, double r);
RL_API rl_status rl_run_config_validate(const rl_run_config* c);
RL_API void rl_run_config_free(rl_run_config* c);

RL_API rl_status rl_run_suite(const rl_run_config* c, rl_suite_result** out);
RL_API int rl_suite_result_all_pass(const rl_suite_result* r);
RL_API size_t rl_suite_result_report_count(const rl_suite_result* r);
RL_API size_t rl_suite_result_failure_count(const rl_suite_result* r);
/* Operands are embedded for failing reports only, and only when dump_matrices != 0. */
RL_API rl_status rl_suite_result_jsonl(const rl_suite_result* r, int dump_matrices, char** out);
RL_API rl_status rl_suite_result_summary(const rl_suite_result* r, char** out);
RL_API void rl_suite_result_free(rl_suite_result* r);

/* Search for omega(H_alpha(A,B)) > omega(AX+XB). *out is NULL when the budget
   runs out without a witness. max_condition <= 0 selects 1e4. */
RL_API rl_status rl_counterexample_search(const double* alpha_grid, size_t alpha_count, int trials,
                                          const size_t* dims, size_t dims_count, uint64_t seed,
                                          double max_condition, rl_counterexample** out);
RL_API rl_status rl_counterexample_replay(const double* alpha_grid, size_t alpha_count,
                                          const size_t* dims, size_t dims_count, uint64_t seed,
                                          double max_condition, uint64_t trial,
                                          rl_counterexample** out);
RL_API double rl_counterexample_violation(const rl_counterexample* c);
RL_API uint64_t rl_counterexample_trial(const rl_counterexample* c);
RL_API double rl_counterexample_alpha(const rl_counterexample* c);
RL_API rl_status rl_counterexample_to_json(const rl_counterexample* c, char** out);
RL_API void rl_counterexample_free(rl_counterexample* c);

#ifdef __cplusplus
}
#endif

#endif
