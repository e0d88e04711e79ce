#pragma once

#include <cstdint>

#include "radiuslab/eigen.hpp"
#include "radiuslab/function.hpp"
#include "radiuslab/matrix.hpp"

namespace radiuslab {

// f, g, PSD A and B, and X, with the clamped spectra of A and B and the four
// spectral functions computed once at construction.
class HeinzContext {
 public:
  HeinzContext(ScalarFunction f, ScalarFunction g, const ComplexMatrix& a, const ComplexMatrix& b,
               ComplexMatrix x, double psd_tol = 1e-10);

  const ScalarFunction& f() const noexcept { return f_; }
  const ScalarFunction& g() const noexcept { return g_; }
  const ComplexMatrix& x() const noexcept { return x_; }
  const HermitianEigen& spectrum_a() const noexcept { return spec_a_; }
  const HermitianEigen& spectrum_b() const noexcept { return spec_b_; }
  const ComplexMatrix& f_a() const noexcept { return fa_; }
  const ComplexMatrix& g_a() const noexcept { return ga_; }
  const ComplexMatrix& f_b() const noexcept { return fb_; }
  const ComplexMatrix& g_b() const noexcept { return gb_; }

 private:
  ScalarFunction f_;
  ScalarFunction g_;
  ComplexMatrix x_;
  HermitianEigen spec_a_;
  HermitianEigen spec_b_;
  ComplexMatrix fa_, ga_, fb_, gb_;
};

// f(A) X g(B) + g(A) X f(B)
ComplexMatrix heinz_operator(const HeinzContext& ctx);
ComplexMatrix heinz_operator(const ScalarFunction& f, const ScalarFunction& g,
                             const ComplexMatrix& a, const ComplexMatrix& b,
                             const ComplexMatrix& x);
ComplexMatrix heinz_operator_same(const ScalarFunction& f, const ScalarFunction& g,
                                  const ComplexMatrix& a, const ComplexMatrix& x);

// A^alpha X B^(1-alpha) + A^(1-alpha) X B^alpha
ComplexMatrix heinz_alpha(double alpha, const ComplexMatrix& a, const ComplexMatrix& b,
                          const ComplexMatrix& x);

// (a^(1-nu) b^nu + a^nu b^(1-nu)) / 2
double scalar_heinz_mean(double a, double b, double nu);

struct HeinzConstant {
  double value = 0.0;
  // Set when A has zero eigenvalues that were left out of the max.
  bool excluded_zero = false;
  // Set when, in addition, f(l) g(l) / l is unbounded as l -> 0+.
  bool diverges_at_zero = false;
};

// max f(l) g(l) / l over the positive eigenvalues of A (those above
// 1e-12 * max(1, max_eig)). Throws AllZeroSpectrum if there are none.
HeinzConstant constant_k(const ScalarFunction& f, const ScalarFunction& g, const ComplexMatrix& a,
                         double psd_tol = 1e-10);
HeinzConstant constant_k(const ScalarFunction& f, const ScalarFunction& g,
                         const HermitianEigen& spectrum);
// Same over the union of the spectra of A and B.
HeinzConstant constant_k_prime(const ScalarFunction& f, const ScalarFunction& g,
                               const ComplexMatrix& a, const ComplexMatrix& b,
                               double psd_tol = 1e-10);

// Norm of X -> A o X induced by omega, for PSD A: the largest diagonal entry.
double schur_norm_psd(const ComplexMatrix& a, double psd_tol = 1e-10);

// Best omega(A o X) / omega(X) over every E_ij, J and then `budget` random
// X, alternating rank-one and full Gaussian draws. Each ratio divides a lower
// bound by an upper bound, so the result never overstates the true norm.
double schur_norm_search(const ComplexMatrix& a, int budget, std::uint64_t seed);

}  // namespace radiuslab
