#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radiuslab/function.hpp"
#include "radiuslab/matrix.hpp"
#include "radiuslab/random.hpp"

namespace radiuslab {

enum class Verdict { CertifiedSampled, Refuted, Inconclusive };

const char* verdict_name(Verdict v) noexcept;

// Outcome of a sampled PSD test. "certified-sampled" only means no trial
// found a violation; seed and trial count make the run reproducible.
struct KwongCertificate {
  std::string function;
  std::string test;  // "kwong" or "operator_monotone"
  double a = 0.0;
  double b = 0.0;
  int trials = 0;
  int max_n = 0;
  std::uint64_t seed = 0;
  double min_eig_observed = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<std::vector<double>> witness;
  std::optional<int> witness_trial;
  std::string note;

  std::string to_json() const;
};

// Throws NonPositiveLambda or DuplicateLambda (separation below 1e-10 max l).
void validate_lambdas(std::span<const double> lambdas);

// ((f(l_i) + f(l_j)) / (l_i + l_j)); l_i > 0, pairwise distinct.
ComplexMatrix kwong_matrix(const ScalarFunction& f, std::span<const double> lambdas);

// Divided differences (g(l_i) - g(l_j)) / (l_i - l_j), with g'(l_i) on the
// diagonal by central difference of step 1e-6 l_i.
ComplexMatrix loewner_matrix(const ScalarFunction& g, std::span<const double> lambdas);

// 1e-10 * max(1, max diagonal entry)
double sampled_psd_tol(const ComplexMatrix& m);

// sampled_psd_tol plus a first-order bound on how far rounding in g moves the
// eigenvalues of the divided-difference matrix.
double loewner_psd_tol(const ScalarFunction& g, std::span<const double> lambdas,
                       const ComplexMatrix& m);

double min_eigenvalue(const ComplexMatrix& m);

// A tuple of 2..max_n distinct points, log-uniform in (a, b). An open lower
// end at 0 is sampled from b * 1e-4 upwards.
std::vector<double> sample_tuple(double a, double b, int max_n, Rng& rng);

KwongCertificate certify_kwong(const ScalarFunction& f, double a, double b, int trials, int max_n,
                               std::uint64_t seed);

KwongCertificate certify_operator_monotone(const ScalarFunction& g, double a, double b,
                                           int trials, int max_n, std::uint64_t seed);

// x -> sqrt(x) f(sqrt(x)), living on (a^2, b^2).
ScalarFunction audenaert_transform(const ScalarFunction& f);
std::pair<double, double> audenaert_interval(double a, double b);

// Per-tuple agreement between "K_f(l) is PSD" and "the Loewner matrix of
// sqrt(x) f(sqrt(x)) at l_i^2 is PSD".
struct CooccurrenceCounts {
  int both_psd = 0;
  int neither_psd = 0;
  int kwong_only = 0;
  int loewner_only = 0;

  int disagreements() const { return kwong_only + loewner_only; }
};

CooccurrenceCounts audenaert_cooccurrence(const ScalarFunction& f, double a, double b, int trials,
                                          int max_n, std::uint64_t seed);

}  // namespace radiuslab
