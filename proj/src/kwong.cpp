#include "radiuslab/kwong.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "json.hpp"
#include "radiuslab/eigen.hpp"
#include "radiuslab/error.hpp"

namespace radiuslab {

namespace {

double finite_value(const ScalarFunction& f, double t) {
  const double v = f(t);
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::DomainError, f.name() + " is not finite at " + format_number(t));
  }
  return v;
}

template <typename Build, typename Tol>
KwongCertificate certify(const char* test, const ScalarFunction& f, double a, double b, int trials,
                         int max_n, std::uint64_t seed, Build build, Tol tol) {
  if (!(a >= 0.0 && b > a) || !std::isfinite(b)) {
    throw Error(ErrorCode::InvalidArgument, "interval must satisfy 0 <= a < b");
  }
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (max_n < 2) throw Error(ErrorCode::InvalidArgument, "max_n must be >= 2");

  KwongCertificate cert;
  cert.function = f.name();
  cert.test = test;
  cert.a = a;
  cert.b = b;
  cert.trials = trials;
  cert.max_n = max_n;
  cert.seed = seed;
  cert.min_eig_observed = std::numeric_limits<double>::infinity();
  cert.verdict = Verdict::CertifiedSampled;

  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(seed, test, static_cast<std::uint64_t>(trial));
    const std::vector<double> lambdas = sample_tuple(a, b, max_n, rng);
    ComplexMatrix m;
    try {
      m = build(lambdas);
    } catch (const Error& e) {
      cert.verdict = Verdict::Inconclusive;
      cert.note = e.what();
      return cert;
    }
    const double lo = min_eigenvalue(m);
    cert.min_eig_observed = std::min(cert.min_eig_observed, lo);
    if (lo < -tol(lambdas, m)) {
      cert.verdict = Verdict::Refuted;
      cert.witness = lambdas;
      cert.witness_trial = trial;
      return cert;
    }
  }
  return cert;
}

}  // namespace

void validate_lambdas(std::span<const double> lambdas) {
  double top = 0.0;
  for (double l : lambdas) {
    if (!(l > 0.0) || !std::isfinite(l)) {
      throw Error(ErrorCode::NonPositiveLambda, "lambda " + format_number(l) + " is not positive");
    }
    top = std::max(top, l);
  }
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (std::size_t j = i + 1; j < lambdas.size(); ++j)
      if (std::abs(lambdas[i] - lambdas[j]) < 1e-10 * top) {
        throw Error(ErrorCode::DuplicateLambda,
                    "lambdas " + format_number(lambdas[i]) + " and " + format_number(lambdas[j]) +
                        " coincide");
      }
}

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::CertifiedSampled: return "certified-sampled";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string KwongCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["function"] = function;
  j["test"] = test;
  j["interval"] = {a, b};
  j["trials"] = trials;
  j["max_n"] = max_n;
  j["seed"] = seed;
  j["min_eig_observed"] = min_eig_observed;
  j["verdict"] = verdict_name(verdict);
  if (witness) {
    j["witness"] = *witness;
    j["witness_trial"] = *witness_trial;
  } else {
    j["witness"] = nullptr;
  }
  if (!note.empty()) j["note"] = note;
  return j.dump();
}

ComplexMatrix kwong_matrix(const ScalarFunction& f, std::span<const double> lambdas) {
  validate_lambdas(lambdas);
  const std::size_t n = lambdas.size();
  std::vector<double> fv(n);
  for (std::size_t i = 0; i < n; ++i) fv[i] = finite_value(f, lambdas[i]);
  ComplexMatrix k(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i, j) = (fv[i] + fv[j]) / (lambdas[i] + lambdas[j]);
  return k;
}

ComplexMatrix loewner_matrix(const ScalarFunction& g, std::span<const double> lambdas) {
  validate_lambdas(lambdas);
  const std::size_t n = lambdas.size();
  std::vector<double> gv(n);
  for (std::size_t i = 0; i < n; ++i) gv[i] = finite_value(g, lambdas[i]);
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double h = 1e-6 * lambdas[i];
    m(i, i) = (finite_value(g, lambdas[i] + h) - finite_value(g, lambdas[i] - h)) / (2.0 * h);
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m(i, j) = (gv[i] - gv[j]) / (lambdas[i] - lambdas[j]);
  }
  return m;
}

double sampled_psd_tol(const ComplexMatrix& m) {
  double top = 1.0;
  for (std::size_t i = 0; i < m.rows(); ++i) top = std::max(top, m(i, i).real());
  return 1e-10 * top;
}

double loewner_psd_tol(const ScalarFunction& g, std::span<const double> lambdas,
                       const ComplexMatrix& m) {
  // Each g value carries a few ulps of rounding; the divided differences
  // amplify that by 1 / |l_i - l_j| (1 / 2h on the diagonal). Weyl bounds the
  // eigenvalue shift by the Frobenius norm of the entry errors.
  constexpr double ulps = 8.0 * std::numeric_limits<double>::epsilon();
  const std::size_t n = lambdas.size();
  std::vector<double> gv(n);
  for (std::size_t i = 0; i < n; ++i) gv[i] = std::abs(g(lambdas[i]));
  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double e = i == j ? ulps * gv[i] / (1e-6 * lambdas[i])
                              : ulps * (gv[i] + gv[j]) / std::abs(lambdas[i] - lambdas[j]);
      sq += e * e;
    }
  return sampled_psd_tol(m) + std::sqrt(sq);
}

double min_eigenvalue(const ComplexMatrix& m) { return hermitian_eigenvalues(m).front(); }

std::vector<double> sample_tuple(double a, double b, int max_n, Rng& rng) {
  const double lo = a > 0.0 ? a : 1e-4 * b;
  const std::size_t n = 2 + rng.index(static_cast<std::size_t>(max_n - 1));
  return random_spectrum(n, lo, b, rng);
}

KwongCertificate certify_kwong(const ScalarFunction& f, double a, double b, int trials, int max_n,
                               std::uint64_t seed) {
  return certify("kwong", f, a, b, trials, max_n, seed,
                 [&](const std::vector<double>& l) { return kwong_matrix(f, l); },
                 [](const std::vector<double>&, const ComplexMatrix& m) { return sampled_psd_tol(m); });
}

KwongCertificate certify_operator_monotone(const ScalarFunction& g, double a, double b,
                                           int trials, int max_n, std::uint64_t seed) {
  return certify("operator_monotone", g, a, b, trials, max_n, seed,
                 [&](const std::vector<double>& l) { return loewner_matrix(g, l); },
                 [&](const std::vector<double>& l, const ComplexMatrix& m) {
                   return loewner_psd_tol(g, l, m);
                 });
}

ScalarFunction audenaert_transform(const ScalarFunction& f) {
  return functions::sqrt_composite(f);
}

std::pair<double, double> audenaert_interval(double a, double b) { return {a * a, b * b}; }

CooccurrenceCounts audenaert_cooccurrence(const ScalarFunction& f, double a, double b, int trials,
                                          int max_n, std::uint64_t seed) {
  const ScalarFunction g = audenaert_transform(f);
  CooccurrenceCounts counts;
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(seed, "audenaert", static_cast<std::uint64_t>(trial));
    const std::vector<double> lambdas = sample_tuple(a, b, max_n, rng);
    std::vector<double> squares(lambdas.size());
    std::transform(lambdas.begin(), lambdas.end(), squares.begin(), [](double l) { return l * l; });
    const ComplexMatrix k = kwong_matrix(f, lambdas);
    const ComplexMatrix l = loewner_matrix(g, squares);
    const bool kwong_psd = min_eigenvalue(k) >= -sampled_psd_tol(k);
    const bool loewner_psd = min_eigenvalue(l) >= -loewner_psd_tol(g, squares, l);
    if (kwong_psd && loewner_psd) ++counts.both_psd;
    else if (!kwong_psd && !loewner_psd) ++counts.neither_psd;
    else if (kwong_psd) ++counts.kwong_only;
    else ++counts.loewner_only;
  }
  return counts;
}

}  // namespace radiuslab
