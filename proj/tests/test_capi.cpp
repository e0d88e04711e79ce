#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "radiuslab/radiuslab.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  rl_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("matrix round trip and numerical radius") {
  rl_matrix* m = nullptr;
  REQUIRE(rl_matrix_create(2, 2, &m) == RL_OK);
  CHECK(rl_matrix_rows(m) == 2);
  CHECK(rl_matrix_set(m, 0, 1, 1.0, 0.0) == RL_OK);
  CHECK(rl_matrix_set(m, 2, 0, 1.0, 0.0) == RL_INVALID_ARGUMENT);
  CHECK(std::string(rl_last_error()) == "index out of range");

  rl_radius_result r{};
  REQUIRE(rl_numerical_radius(m, 1e-10, &r) == RL_OK);
  CHECK(std::fabs(r.value - 0.5) <= 1e-10);
  CHECK(r.certified_abs_error <= 1e-10);
  CHECK(std::string(rl_last_error()).empty());

  double norm = 0.0;
  REQUIRE(rl_operator_norm(m, &norm) == RL_OK);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-14));

  char* json = nullptr;
  REQUIRE(rl_matrix_to_json(m, &json) == RL_OK);
  rl_matrix* back = nullptr;
  REQUIRE(rl_matrix_from_json(json, &back) == RL_OK);
  rl_string_free(json);
  double re = 0.0, im = 0.0;
  REQUIRE(rl_matrix_get(back, 0, 1, &re, &im) == RL_OK);
  CHECK(re == 1.0);
  CHECK(im == 0.0);
  rl_matrix_free(back);
  rl_matrix_free(m);
}

TEST_CASE("errors carry a status and a message") {
  rl_matrix* m = nullptr;
  CHECK(rl_matrix_from_json("{\"n\": 2", &m) == RL_PARSE_ERROR);
  CHECK(m == nullptr);
  CHECK(std::strlen(rl_last_error()) > 0);
  CHECK(std::string(rl_status_name(RL_PARSE_ERROR)) == "ParseError");
  CHECK(rl_matrix_read_file("/nonexistent/m.json", &m) == RL_IO_ERROR);
  CHECK(rl_numerical_radius(nullptr, 0.0, nullptr) == RL_INVALID_ARGUMENT);

  REQUIRE(rl_matrix_create(2, 3, &m) == RL_OK);
  rl_radius_result r{};
  CHECK(rl_numerical_radius(m, 0.0, &r) == RL_DIMENSION_MISMATCH);
  rl_matrix_free(m);

  rl_function* f = nullptr;
  CHECK(rl_function_parse("bogus", &f) == RL_PARSE_ERROR);
}

TEST_CASE("functions and certificates") {
  rl_function* f = nullptr;
  REQUIRE(rl_function_parse("log1p", &f) == RL_OK);
  CHECK(std::string(rl_function_name(f)) == "log1p");
  double v = 0.0;
  REQUIRE(rl_function_eval(f, 1.0, &v) == RL_OK);
  CHECK(v == doctest::Approx(std::log(2.0)));

  rl_certificate* c = nullptr;
  REQUIRE(rl_certify_kwong(f, 0.0, 10.0, 200, 8, 1, &c) == RL_OK);
  CHECK(rl_certificate_verdict(c) == RL_CERTIFIED_SAMPLED);
  CHECK(rl_certificate_witness(c, nullptr) == 0);
  CHECK(take([&] {
          char* s = nullptr;
          rl_certificate_to_json(c, &s);
          return s;
        }()).find("certified-sampled") != std::string::npos);
  rl_certificate_free(c);
  rl_function_free(f);

  REQUIRE(rl_function_parse("power:2", &f) == RL_OK);
  REQUIRE(rl_certify_kwong(f, 0.1, 10.0, 200, 8, 1, &c) == RL_OK);
  CHECK(rl_certificate_verdict(c) == RL_REFUTED);
  CHECK(rl_certificate_min_eig(c) < 0.0);
  const double* w = nullptr;
  CHECK(rl_certificate_witness(c, &w) >= 2);
  CHECK(w != nullptr);
  rl_certificate_free(c);

  CHECK(rl_certify_operator_monotone(f, 0.1, 10.0, 50, 4, 1, &c) == RL_OK);
  CHECK(rl_certificate_verdict(c) == RL_REFUTED);
  rl_certificate_free(c);
  rl_function_free(f);
}

TEST_CASE("suite through the C interface") {
  rl_run_config* cfg = nullptr;
  REQUIRE(rl_run_config_create(&cfg) == RL_OK);
  rl_run_config_set_seed(cfg, 7);
  rl_run_config_set_trials(cfg, 3);
  const size_t dims[] = {2, 3};
  rl_run_config_set_dims(cfg, dims, 2);
  rl_run_config_add_inequality(cfg, "hob1");
  rl_run_config_add_pair(cfg, "power:0.5;power:0.5");
  rl_run_config_add_pair(cfg, "log1p;const:1");
  REQUIRE(rl_run_config_validate(cfg) == RL_OK);

  rl_suite_result* res = nullptr;
  REQUIRE(rl_run_suite(cfg, &res) == RL_OK);
  CHECK(rl_suite_result_report_count(res) == 6);
  CHECK(rl_suite_result_failure_count(res) == 0);
  CHECK(rl_suite_result_all_pass(res) == 1);
  char* s = nullptr;
  REQUIRE(rl_suite_result_jsonl(res, 0, &s) == RL_OK);
  const std::string first = take(s);
  REQUIRE(rl_suite_result_summary(res, &s) == RL_OK);
  CHECK(take(s).find("hob1") != std::string::npos);
  rl_suite_result_free(res);

  REQUIRE(rl_run_suite(cfg, &res) == RL_OK);
  REQUIRE(rl_suite_result_jsonl(res, 0, &s) == RL_OK);
  CHECK(take(s) == first);
  rl_suite_result_free(res);

  rl_run_config_set_t(cfg, 3.0);
  rl_run_config_add_inequality(cfg, "hob5");
  CHECK(rl_run_config_validate(cfg) == RL_PARAMETER_OUT_OF_RANGE);
  CHECK(rl_run_suite(cfg, &res) == RL_PARAMETER_OUT_OF_RANGE);
  CHECK(std::string(rl_last_error()) == "t out of range (-2, 2]");
  rl_run_config_free(cfg);
}

TEST_CASE("counterexample search and replay") {
  const double grid[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  const size_t dims[] = {2, 3};
  rl_counterexample* c = nullptr;
  REQUIRE(rl_counterexample_search(grid, 9, 10000, dims, 2, 1, 0.0, &c) == RL_OK);
  REQUIRE(c != nullptr);
  CHECK(rl_counterexample_trial(c) == 35);
  CHECK(rl_counterexample_alpha(c) == 0.1);
  CHECK(rl_counterexample_violation(c) > 1e-6);
  char* s = nullptr;
  REQUIRE(rl_counterexample_to_json(c, &s) == RL_OK);
  CHECK(take(s).find("\"X\"") != std::string::npos);
  rl_counterexample_free(c);

  REQUIRE(rl_counterexample_replay(grid, 9, dims, 2, 1, 0.0, 35, &c) == RL_OK);
  REQUIRE(c != nullptr);
  CHECK(rl_counterexample_violation(c) > 1e-6);
  rl_counterexample_free(c);

  REQUIRE(rl_counterexample_search(grid, 9, 0, dims, 2, 1, 0.0, &c) == RL_OK);
  CHECK(c == nullptr);
  const double bad[] = {1.5};
  CHECK(rl_counterexample_search(bad, 1, 10, dims, 2, 1, 0.0, &c) == RL_PARAMETER_OUT_OF_RANGE);
}
