// Command-line front end; talks to the library only through radiuslab.h.

#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "radiuslab/radiuslab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;
constexpr int kExitNotFound = 3;

struct Freer {
  void operator()(char* s) const { rl_string_free(s); }
};
using OwnedString = std::unique_ptr<char, Freer>;

// Library failure: message to stderr, usage/IO exit code.
int report(rl_status s) {
  std::cerr << "error: " << rl_status_name(s) << ": " << rl_last_error() << "\n";
  return kExitUsage;
}

bool write_text(const std::string& path, const char* text) {
  if (path == "-") {
    std::fputs(text, stdout);
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

// RADIUSLAB_SEED, when set, wins over --seed.
bool apply_seed_env(std::uint64_t& seed) {
  const char* env = std::getenv("RADIUSLAB_SEED");
  if (!env || !*env) return true;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno != 0 || *end != '\0' || env[0] == '-') {
    std::cerr << "error: RADIUSLAB_SEED is not an unsigned integer: '" << env << "'\n";
    return false;
  }
  seed = v;
  return true;
}

struct VerifyArgs {
  std::uint64_t seed = 1;
  int trials = 300;
  std::vector<std::size_t> dims = {2, 3, 4, 5, 6};
  std::vector<std::string> ineq;
  std::vector<std::string> pairs;
  std::optional<double> t, alpha, beta, r;
  double tol = 1e-9;
  std::string out = "radiuslab-report.jsonl";
  bool dump = false;
};

int cmd_verify(VerifyArgs& a) {
  if (!apply_seed_env(a.seed)) return kExitUsage;
  rl_run_config* raw = nullptr;
  if (rl_status s = rl_run_config_create(&raw)) return report(s);
  std::unique_ptr<rl_run_config, decltype(&rl_run_config_free)> cfg(raw, rl_run_config_free);
  rl_run_config_set_seed(cfg.get(), a.seed);
  rl_run_config_set_trials(cfg.get(), a.trials);
  rl_run_config_set_dims(cfg.get(), a.dims.data(), a.dims.size());
  rl_run_config_set_tolerances(cfg.get(), 1e-8, a.tol, 1e-10);
  for (const auto& id : a.ineq) rl_run_config_add_inequality(cfg.get(), id.c_str());
  for (const auto& p : a.pairs) rl_run_config_add_pair(cfg.get(), p.c_str());
  if (a.t) rl_run_config_set_t(cfg.get(), *a.t);
  if (a.alpha) rl_run_config_set_alpha(cfg.get(), *a.alpha);
  if (a.beta) rl_run_config_set_beta(cfg.get(), *a.beta);
  if (a.r) rl_run_config_set_r(cfg.get(), *a.r);
  if (rl_status s = rl_run_config_validate(cfg.get())) return report(s);

  rl_suite_result* res_raw = nullptr;
  if (rl_status s = rl_run_suite(cfg.get(), &res_raw)) return report(s);
  std::unique_ptr<rl_suite_result, decltype(&rl_suite_result_free)> res(res_raw, rl_suite_result_free);

  char* text = nullptr;
  if (rl_status s = rl_suite_result_jsonl(res.get(), a.dump ? 1 : 0, &text)) return report(s);
  OwnedString jsonl(text);
  if (!write_text(a.out, jsonl.get())) return kExitUsage;
  if (rl_status s = rl_suite_result_summary(res.get(), &text)) return report(s);
  OwnedString summary(text);
  // Keep stdout clean for JSONL when it goes there.
  std::FILE* sink = a.out == "-" ? stderr : stdout;
  std::fputs(summary.get(), sink);
  const std::size_t failures = rl_suite_result_failure_count(res.get());
  std::fprintf(sink, "%zu reports, %zu failed\n", rl_suite_result_report_count(res.get()), failures);
  return failures == 0 ? kExitOk : kExitFailed;
}

int cmd_radius(const std::string& file, std::optional<double> tol) {
  rl_matrix* raw = nullptr;
  if (rl_status s = rl_matrix_read_file(file.c_str(), &raw)) return report(s);
  std::unique_ptr<rl_matrix, decltype(&rl_matrix_free)> m(raw, rl_matrix_free);
  rl_radius_result r{};
  if (rl_status s = rl_numerical_radius(m.get(), tol.value_or(0.0), &r)) return report(s);
  std::printf("omega = %.17g\ncertified_abs_error = %.3g\ntheta = %.17g\nevaluations = %zu\n", r.value,
              r.certified_abs_error, r.argmax_theta, r.evaluations);
  return kExitOk;
}

int cmd_kwong(const std::string& spec, const std::vector<double>& interval, int trials,
              std::uint64_t seed, bool monotone) {
  if (!apply_seed_env(seed)) return kExitUsage;
  rl_function* raw = nullptr;
  if (rl_status s = rl_function_parse(spec.c_str(), &raw)) return report(s);
  std::unique_ptr<rl_function, decltype(&rl_function_free)> f(raw, rl_function_free);
  rl_certificate* craw = nullptr;
  const double a = interval.at(0), b = interval.at(1);
  const rl_status s = monotone ? rl_certify_operator_monotone(f.get(), a, b, trials, 8, seed, &craw)
                               : rl_certify_kwong(f.get(), a, b, trials, 8, seed, &craw);
  if (s) return report(s);
  std::unique_ptr<rl_certificate, decltype(&rl_certificate_free)> cert(craw, rl_certificate_free);
  char* text = nullptr;
  if (rl_status js = rl_certificate_to_json(cert.get(), &text)) return report(js);
  OwnedString json(text);
  std::printf("%s\n", json.get());
  switch (rl_certificate_verdict(cert.get())) {
    case RL_CERTIFIED_SAMPLED: return kExitOk;
    case RL_REFUTED: return kExitFailed;
    case RL_INCONCLUSIVE: break;
  }
  return kExitNotFound;
}

int cmd_counterexample(std::uint64_t seed, int trials, const std::vector<std::size_t>& dims,
                       const std::vector<double>& alphas, const std::string& out) {
  if (!apply_seed_env(seed)) return kExitUsage;
  rl_counterexample* raw = nullptr;
  if (rl_status s = rl_counterexample_search(alphas.data(), alphas.size(), trials, dims.data(),
                                             dims.size(), seed, 0.0, &raw))
    return report(s);
  if (!raw) {
    std::printf("no witness in %d trials (seed %llu)\n", trials, static_cast<unsigned long long>(seed));
    return kExitNotFound;
  }
  std::unique_ptr<rl_counterexample, decltype(&rl_counterexample_free)> rec(raw, rl_counterexample_free);
  char* text = nullptr;
  if (rl_status s = rl_counterexample_to_json(rec.get(), &text)) return report(s);
  OwnedString json(text);
  const std::string line = std::string(json.get()) + "\n";
  if (!write_text(out, line.c_str())) return kExitUsage;
  if (out != "-") {
    std::printf("witness at trial %llu: alpha = %g, violation = %.6e (written to %s)\n",
                static_cast<unsigned long long>(rl_counterexample_trial(rec.get())),
                rl_counterexample_alpha(rec.get()), rl_counterexample_violation(rec.get()), out.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical radius inequality checks"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run inequality suites and write JSONL reports");
  verify->add_option("--seed", va.seed, "Base seed");
  verify->add_option("--trials", va.trials, "Instances per suite and pair");
  verify->add_option("--dims", va.dims, "Matrix sizes, comma list")->delimiter(',');
  verify->add_option("--ineq", va.ineq, "Inequality ids, comma list (default: all)")->delimiter(',');
  verify->add_option("--pair", va.pairs, "Function pair \"f;g\" (repeatable)");
  verify->add_option("--t", va.t, "Fix t");
  verify->add_option("--alpha", va.alpha, "Fix alpha for hob2");
  verify->add_option("--beta", va.beta, "Fix beta for main3");
  verify->add_option("--r", va.r, "Fix r for main3");
  verify->add_option("--tol", va.tol, "Relative omega tolerance");
  verify->add_option("--out", va.out, "JSONL output path, '-' for stdout");
  verify->add_flag("--dump-matrices", va.dump, "Embed operands of failing reports");

  std::string matrix_file;
  std::optional<double> radius_tol;
  auto* radius = app.add_subcommand("radius", "Numerical radius of a matrix JSON file");
  radius->add_option("matrix", matrix_file, "Matrix file")->required();
  radius->add_option("--tol", radius_tol, "Absolute tolerance (default 1e-9 max(1, ||A||))");

  std::string spec;
  std::vector<double> interval = {0.0, 10.0};
  int kwong_trials = 200;
  std::uint64_t kwong_seed = 1;
  bool monotone = false;
  auto* kwong = app.add_subcommand("kwong", "Sampled Kwong certificate for a function");
  kwong->add_option("function", spec, "Function spec, e.g. log1p or power:0.5")->required();
  kwong->add_option("--interval", interval, "Interval a,b")->delimiter(',')->expected(2);
  kwong->add_option("--trials", kwong_trials, "Number of sampled tuples");
  kwong->add_option("--seed", kwong_seed, "Seed");
  kwong->add_flag("--monotone", monotone, "Check operator monotonicity instead (Loewner matrices)");

  std::uint64_t cx_seed = 1;
  int cx_trials = 100000;
  std::vector<std::size_t> cx_dims = {2, 3};
  std::vector<double> cx_alphas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::string cx_out = "-";
  auto* cx = app.add_subcommand("counterexample", "Search for a two-matrix Heinz counterexample");
  cx->add_option("--seed", cx_seed, "Seed");
  cx->add_option("--trials", cx_trials, "Search budget");
  cx->add_option("--dims", cx_dims, "Matrix sizes, comma list")->delimiter(',');
  cx->add_option("--alpha", cx_alphas, "Alpha grid, comma list")->delimiter(',');
  cx->add_option("--out", cx_out, "Witness JSON path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*verify) return cmd_verify(va);
  if (*radius) return cmd_radius(matrix_file, radius_tol);
  if (*kwong) return cmd_kwong(spec, interval, kwong_trials, kwong_seed, monotone);
  return cmd_counterexample(cx_seed, cx_trials, cx_dims, cx_alphas, cx_out);
}
