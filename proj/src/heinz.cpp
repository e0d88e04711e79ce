#include "radiuslab/heinz.hpp"

#include <algorithm>
#include <cmath>

#include "radiuslab/error.hpp"
#include "radiuslab/radius.hpp"
#include "radiuslab/random.hpp"

namespace radiuslab {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.square() || m.empty()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " must be square and non-empty");
  }
}

void fold_spectrum(const ScalarFunction& f, const ScalarFunction& g, const HermitianEigen& spec,
                   HeinzConstant& out, bool& any) {
  for (double l : spec.eigenvalues) {
    // psd_spectrum already snapped everything below eps_zero to 0.
    if (l == 0.0) {
      out.excluded_zero = true;
      continue;
    }
    const double v = f(l) * g(l) / l;
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::DomainError,
                  "f g / t is not finite at eigenvalue " + format_number(l));
    }
    out.value = any ? std::max(out.value, v) : v;
    any = true;
  }
}

void mark_divergence(const ScalarFunction& f, const ScalarFunction& g, HeinzConstant& out) {
  if (!out.excluded_zero) return;
  const auto f0 = f.value_at_zero();
  const auto g0 = g.value_at_zero();
  out.diverges_at_zero = !f0 || !g0 || *f0 * *g0 > 0.0;
}

double omega_lower(const ComplexMatrix& m) { return numerical_radius(m).value; }

double omega_upper(const ComplexMatrix& m) {
  const RadiusResult r = numerical_radius(m);
  return r.value + r.certified_abs_error;
}

}  // namespace

HeinzContext::HeinzContext(ScalarFunction f, ScalarFunction g, const ComplexMatrix& a,
                           const ComplexMatrix& b, ComplexMatrix x, double psd_tol)
    : f_(std::move(f)), g_(std::move(g)), x_(std::move(x)) {
  require_square(a, "A");
  require_square(b, "B");
  if (x_.rows() != a.rows() || x_.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "X must be dim(A) x dim(B)");
  }
  spec_a_ = psd_spectrum(a, psd_tol);
  spec_b_ = &a == &b ? spec_a_ : psd_spectrum(b, psd_tol);
  fa_ = spectral_function(spec_a_, f_);
  ga_ = spectral_function(spec_a_, g_);
  fb_ = spectral_function(spec_b_, f_);
  gb_ = spectral_function(spec_b_, g_);
}

ComplexMatrix heinz_operator(const HeinzContext& ctx) {
  return ctx.f_a() * ctx.x() * ctx.g_b() + ctx.g_a() * ctx.x() * ctx.f_b();
}

ComplexMatrix heinz_operator(const ScalarFunction& f, const ScalarFunction& g,
                             const ComplexMatrix& a, const ComplexMatrix& b,
                             const ComplexMatrix& x) {
  return heinz_operator(HeinzContext(f, g, a, b, x));
}

ComplexMatrix heinz_operator_same(const ScalarFunction& f, const ScalarFunction& g,
                                  const ComplexMatrix& a, const ComplexMatrix& x) {
  return heinz_operator(HeinzContext(f, g, a, a, x));
}

ComplexMatrix heinz_alpha(double alpha, const ComplexMatrix& a, const ComplexMatrix& b,
                          const ComplexMatrix& x) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "alpha must lie in [0, 1]");
  }
  return heinz_operator(functions::power(alpha), functions::power(1.0 - alpha), a, b, x);
}

double scalar_heinz_mean(double a, double b, double nu) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorCode::DomainError, "Heinz mean needs a, b > 0");
  }
  return (std::pow(a, 1.0 - nu) * std::pow(b, nu) + std::pow(a, nu) * std::pow(b, 1.0 - nu)) / 2.0;
}

HeinzConstant constant_k(const ScalarFunction& f, const ScalarFunction& g,
                         const HermitianEigen& spectrum) {
  HeinzConstant out;
  bool any = false;
  fold_spectrum(f, g, spectrum, out, any);
  if (!any) throw Error(ErrorCode::AllZeroSpectrum, "A has no positive eigenvalue");
  mark_divergence(f, g, out);
  return out;
}

HeinzConstant constant_k(const ScalarFunction& f, const ScalarFunction& g, const ComplexMatrix& a,
                         double psd_tol) {
  return constant_k(f, g, psd_spectrum(a, psd_tol));
}

HeinzConstant constant_k_prime(const ScalarFunction& f, const ScalarFunction& g,
                               const ComplexMatrix& a, const ComplexMatrix& b, double psd_tol) {
  HeinzConstant out;
  bool any = false;
  fold_spectrum(f, g, psd_spectrum(a, psd_tol), out, any);
  fold_spectrum(f, g, psd_spectrum(b, psd_tol), out, any);
  if (!any) throw Error(ErrorCode::AllZeroSpectrum, "A and B have no positive eigenvalue");
  mark_divergence(f, g, out);
  return out;
}

double schur_norm_psd(const ComplexMatrix& a, double psd_tol) {
  require_square(a, "A");
  const PsdCheck check = is_psd(a, psd_tol);
  if (!check.flag) {
    throw Error(ErrorCode::NotPSD, "Schur multiplier norm needs a PSD matrix (min eigenvalue " +
                                       format_number(check.min_eig) + ")");
  }
  double best = a(0, 0).real();
  for (std::size_t i = 1; i < a.rows(); ++i) best = std::max(best, a(i, i).real());
  return best;
}

double schur_norm_search(const ComplexMatrix& a, int budget, std::uint64_t seed) {
  require_square(a, "A");
  if (budget < 1) throw Error(ErrorCode::InvalidArgument, "budget must be >= 1");
  const std::size_t n = a.rows();

  // A o E_ij = a_ij E_ij, so the ratio is exactly |a_ij|.
  double best = 0.0;
  for (const Complex& v : a.data()) best = std::max(best, std::abs(v));

  // A o J = A and omega(J) = n.
  best = std::max(best, omega_lower(a) / static_cast<double>(n));

  for (int draw = 0; draw < budget; ++draw) {
    Rng rng(seed, "schur", static_cast<std::uint64_t>(draw));
    ComplexMatrix x(n);
    if (draw % 2 == 0) {
      std::vector<Complex> u(n), w(n);
      for (auto& c : u) c = rng.complex_normal();
      for (auto& c : w) c = rng.complex_normal();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) = u[i] * std::conj(w[j]);
    } else {
      x = random_matrix(n, 1.0, rng);
    }
    const double den = omega_upper(x);
    if (!(den > 0.0)) continue;
    best = std::max(best, omega_lower(hadamard(a, x)) / den);
  }
  return best;
}

}  // namespace radiuslab
