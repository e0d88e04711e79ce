#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radiuslab/verify.hpp"

namespace radiuslab {

struct RunConfig {
  std::uint64_t seed = 1;
  int trials = 300;
  std::vector<std::size_t> dims = {2, 3, 4, 5, 6};
  double rel_tol = 1e-8;
  double omega_tol = 1e-9;
  double psd_tol = 1e-10;
  std::vector<std::string> pairs;         // "f;g" specs; empty means default_pairs()
  std::vector<std::string> inequalities;  // empty means all
  std::optional<double> t;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> r;
  std::string output_path;
  bool dump_matrices = false;

  // Throws InvalidArgument, ParameterOutOfRange or ParseError.
  void validate() const;
};

// In the order suites are run.
const std::vector<std::string>& all_inequality_ids();

// (t^a, t^(1-a)) for a in {0.1, 0.3, 0.5, 0.7, 0.9}, (log(1+t), 1) and
// (sqrt t, t / sqrt t).
const std::vector<std::string>& default_pairs();

struct SuiteSummaryRow {
  std::string inequality_id;
  int instances = 0;
  int failures = 0;
  double min_margin = 0.0;
};

struct SuiteResult {
  std::vector<InequalityReport> reports;
  std::vector<SuiteSummaryRow> summary;
  // Pairs whose f/g failed the sampled Kwong pre-check, by spec string.
  std::vector<std::string> non_kwong_pairs;

  bool all_pass() const;
  // One report per line. Operands are embedded for failing reports only, and
  // only when dump_matrices is set.
  std::string jsonl(bool dump_matrices) const;
  std::string summary_table() const;
};

// Instance i of a suite draws from Rng(seed, "<id>|<pair>", i), so any subset
// of suites or pairs reproduces the same instances.
SuiteResult run_suite(const RunConfig& config);

}  // namespace radiuslab
