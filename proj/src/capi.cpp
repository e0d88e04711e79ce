#include "radiuslab/radiuslab.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "radiuslab/eigen.hpp"
#include "radiuslab/error.hpp"
#include "radiuslab/function.hpp"
#include "radiuslab/kwong.hpp"
#include "radiuslab/matrix_io.hpp"
#include "radiuslab/radius.hpp"
#include "radiuslab/suite.hpp"
#include "radiuslab/verify.hpp"

struct rl_matrix {
  radiuslab::ComplexMatrix m;
};
struct rl_function {
  radiuslab::ScalarFunction f;
};
struct rl_certificate {
  radiuslab::KwongCertificate c;
};
struct rl_run_config {
  radiuslab::RunConfig c;
};
struct rl_suite_result {
  radiuslab::SuiteResult r;
};
struct rl_counterexample {
  radiuslab::CounterexampleRecord r;
};

namespace {

thread_local std::string last_error;

rl_status fail(rl_status s, const char* what) {
  last_error = what;
  return s;
}

// Runs body, mapping exceptions onto status codes.
template <typename F>
rl_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return RL_OK;
  } catch (const radiuslab::Error& e) {
    return fail(static_cast<rl_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RL_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(RL_INTERNAL_ERROR, e.what());
  }
}

rl_status null_arg() { return fail(RL_INVALID_ARGUMENT, "null argument"); }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename T, typename... Args>
void emplace_out(T** out, Args&&... args) {
  *out = new T{std::forward<Args>(args)...};
}

radiuslab::CounterexampleSearch make_search(const double* grid, std::size_t alpha_count, int trials,
                                            const std::size_t* dims, std::size_t dims_count,
                                            std::uint64_t seed, double max_condition) {
  radiuslab::CounterexampleSearch s;
  if (grid) s.alpha_grid.assign(grid, grid + alpha_count);
  if (dims) s.dims.assign(dims, dims + dims_count);
  s.trials = trials;
  s.seed = seed;
  if (max_condition > 0.0) s.max_condition = max_condition;
  return s;
}

}  // namespace

extern "C" {

const char* rl_last_error(void) { return last_error.c_str(); }

const char* rl_status_name(rl_status status) {
  if (status == RL_OK) return "Ok";
  if (status == RL_INTERNAL_ERROR) return "InternalError";
  return radiuslab::error_code_name(static_cast<radiuslab::ErrorCode>(status));
}

void rl_string_free(char* s) { std::free(s); }

rl_status rl_matrix_create(size_t rows, size_t cols, rl_matrix** out) {
  if (!out) return null_arg();
  return guarded([&] { emplace_out(out, radiuslab::ComplexMatrix(rows, cols)); });
}

rl_status rl_matrix_from_json(const char* text, rl_matrix** out) {
  if (!text || !out) return null_arg();
  return guarded([&] { emplace_out(out, radiuslab::matrix_from_json(text)); });
}

rl_status rl_matrix_read_file(const char* path, rl_matrix** out) {
  if (!path || !out) return null_arg();
  return guarded([&] { emplace_out(out, radiuslab::read_matrix_file(path)); });
}

rl_status rl_matrix_to_json(const rl_matrix* m, char** out) {
  if (!m || !out) return null_arg();
  return guarded([&] { *out = dup_string(radiuslab::matrix_to_json(m->m)); });
}

size_t rl_matrix_rows(const rl_matrix* m) { return m ? m->m.rows() : 0; }
size_t rl_matrix_cols(const rl_matrix* m) { return m ? m->m.cols() : 0; }

rl_status rl_matrix_set(rl_matrix* m, size_t i, size_t j, double re, double im) {
  if (!m) return null_arg();
  if (i >= m->m.rows() || j >= m->m.cols()) return fail(RL_INVALID_ARGUMENT, "index out of range");
  m->m(i, j) = {re, im};
  return RL_OK;
}

rl_status rl_matrix_get(const rl_matrix* m, size_t i, size_t j, double* re, double* im) {
  if (!m || !re || !im) return null_arg();
  if (i >= m->m.rows() || j >= m->m.cols()) return fail(RL_INVALID_ARGUMENT, "index out of range");
  *re = m->m(i, j).real();
  *im = m->m(i, j).imag();
  return RL_OK;
}

void rl_matrix_free(rl_matrix* m) { delete m; }

rl_status rl_numerical_radius(const rl_matrix* a, double abs_tol, rl_radius_result* out) {
  if (!a || !out) return null_arg();
  return guarded([&] {
    const auto r = abs_tol > 0.0 ? radiuslab::numerical_radius(a->m, abs_tol)
                                 : radiuslab::numerical_radius(a->m);
    *out = {r.value, r.argmax_theta, r.certified_abs_error, r.evaluations};
  });
}

rl_status rl_operator_norm(const rl_matrix* a, double* out) {
  if (!a || !out) return null_arg();
  return guarded([&] { *out = radiuslab::operator_norm(a->m); });
}

rl_status rl_function_parse(const char* spec, rl_function** out) {
  if (!spec || !out) return null_arg();
  return guarded([&] { emplace_out(out, radiuslab::parse_function(spec)); });
}

rl_status rl_function_eval(const rl_function* f, double t, double* out) {
  if (!f || !out) return null_arg();
  return guarded([&] { *out = f->f.at(t); });
}

const char* rl_function_name(const rl_function* f) { return f ? f->f.name().c_str() : ""; }

void rl_function_free(rl_function* f) { delete f; }

rl_status rl_certify_kwong(const rl_function* f, double a, double b, int trials, int max_n,
                           uint64_t seed, rl_certificate** out) {
  if (!f || !out) return null_arg();
  return guarded([&] { emplace_out(out, radiuslab::certify_kwong(f->f, a, b, trials, max_n, seed)); });
}

rl_status rl_certify_operator_monotone(const rl_function* g, double a, double b, int trials,
                                       int max_n, uint64_t seed, rl_certificate** out) {
  if (!g || !out) return null_arg();
  return guarded([&] {
    emplace_out(out, radiuslab::certify_operator_monotone(g->f, a, b, trials, max_n, seed));
  });
}

rl_verdict rl_certificate_verdict(const rl_certificate* c) {
  if (!c) return RL_INCONCLUSIVE;
  switch (c->c.verdict) {
    case radiuslab::Verdict::CertifiedSampled: return RL_CERTIFIED_SAMPLED;
    case radiuslab::Verdict::Refuted: return RL_REFUTED;
    case radiuslab::Verdict::Inconclusive: break;
  }
  return RL_INCONCLUSIVE;
}

double rl_certificate_min_eig(const rl_certificate* c) { return c ? c->c.min_eig_observed : 0.0; }

size_t rl_certificate_witness(const rl_certificate* c, const double** values) {
  if (!c || !c->c.witness) {
    if (values) *values = nullptr;
    return 0;
  }
  if (values) *values = c->c.witness->data();
  return c->c.witness->size();
}

rl_status rl_certificate_to_json(const rl_certificate* c, char** out) {
  if (!c || !out) return null_arg();
  return guarded([&] { *out = dup_string(c->c.to_json()); });
}

void rl_certificate_free(rl_certificate* c) { delete c; }

rl_status rl_run_config_create(rl_run_config** out) {
  if (!out) return null_arg();
  return guarded([&] { *out = new rl_run_config{}; });
}

void rl_run_config_set_seed(rl_run_config* c, uint64_t seed) {
  if (c) c->c.seed = seed;
}
void rl_run_config_set_trials(rl_run_config* c, int trials) {
  if (c) c->c.trials = trials;
}
void rl_run_config_set_dims(rl_run_config* c, const size_t* dims, size_t count) {
  if (!c) return;
  c->c.dims.assign(dims, dims + (dims ? count : 0));
}
void rl_run_config_set_tolerances(rl_run_config* c, double rel_tol, double omega_tol,
                                  double psd_tol) {
  if (!c) return;
  c->c.rel_tol = rel_tol;
  c->c.omega_tol = omega_tol;
  c->c.psd_tol = psd_tol;
}
void rl_run_config_add_pair(rl_run_config* c, const char* pair_spec) {
  if (c && pair_spec) c->c.pairs.emplace_back(pair_spec);
}
void rl_run_config_add_inequality(rl_run_config* c, const char* id) {
  if (c && id) c->c.inequalities.emplace_back(id);
}
void rl_run_config_set_t(rl_run_config* c, double t) {
  if (c) c->c.t = t;
}
void rl_run_config_set_alpha(rl_run_config* c, double alpha) {
  if (c) c->c.alpha = alpha;
}
void rl_run_config_set_beta(rl_run_config* c, double beta) {
  if (c) c->c.beta = beta;
}
void rl_run_config_set_r(rl_run_config* c, double r) {
  if (c) c->c.r = r;
}

rl_status rl_run_config_validate(const rl_run_config* c) {
  if (!c) return null_arg();
  return guarded([&] { c->c.validate(); });
}

void rl_run_config_free(rl_run_config* c) { delete c; }

rl_status rl_run_suite(const rl_run_config* c, rl_suite_result** out) {
  if (!c || !out) return null_arg();
  return guarded([&] { emplace_out(out, radiuslab::run_suite(c->c)); });
}

int rl_suite_result_all_pass(const rl_suite_result* r) { return r && r->r.all_pass() ? 1 : 0; }

size_t rl_suite_result_report_count(const rl_suite_result* r) { return r ? r->r.reports.size() : 0; }

size_t rl_suite_result_failure_count(const rl_suite_result* r) {
  if (!r) return 0;
  size_t n = 0;
  for (const auto& rep : r->r.reports) n += rep.pass ? 0 : 1;
  return n;
}

rl_status rl_suite_result_jsonl(const rl_suite_result* r, int dump_matrices, char** out) {
  if (!r || !out) return null_arg();
  return guarded([&] { *out = dup_string(r->r.jsonl(dump_matrices != 0)); });
}

rl_status rl_suite_result_summary(const rl_suite_result* r, char** out) {
  if (!r || !out) return null_arg();
  return guarded([&] { *out = dup_string(r->r.summary_table()); });
}

void rl_suite_result_free(rl_suite_result* r) { delete r; }

rl_status rl_counterexample_search(const double* alpha_grid, size_t alpha_count, int trials,
                                   const size_t* dims, size_t dims_count, uint64_t seed,
                                   double max_condition, rl_counterexample** out) {
  if (!out) return null_arg();
  *out = nullptr;
  return guarded([&] {
    const auto s = make_search(alpha_grid, alpha_count, trials, dims, dims_count, seed, max_condition);
    if (auto rec = radiuslab::search_counterexample(s)) emplace_out(out, std::move(*rec));
  });
}

rl_status rl_counterexample_replay(const double* alpha_grid, size_t alpha_count,
                                   const size_t* dims, size_t dims_count, uint64_t seed,
                                   double max_condition, uint64_t trial, rl_counterexample** out) {
  if (!out) return null_arg();
  *out = nullptr;
  return guarded([&] {
    const auto s = make_search(alpha_grid, alpha_count, 0, dims, dims_count, seed, max_condition);
    if (auto rec = radiuslab::replay_counterexample(s, trial)) emplace_out(out, std::move(*rec));
  });
}

double rl_counterexample_violation(const rl_counterexample* c) { return c ? c->r.violation : 0.0; }
uint64_t rl_counterexample_trial(const rl_counterexample* c) { return c ? c->r.trial : 0; }
double rl_counterexample_alpha(const rl_counterexample* c) { return c ? c->r.alpha : 0.0; }

rl_status rl_counterexample_to_json(const rl_counterexample* c, char** out) {
  if (!c || !out) return null_arg();
  return guarded([&] { *out = dup_string(c->r.to_json()); });
}

void rl_counterexample_free(rl_counterexample* c) { delete c; }

}  // extern "C"
