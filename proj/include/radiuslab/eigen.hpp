#pragma once

#include <vector>

#include "radiuslab/function.hpp"
#include "radiuslab/matrix.hpp"

namespace radiuslab {

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix vectors;            // unitary, column k pairs with eigenvalues[k]

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
  ComplexMatrix reconstruct() const;
};

// Cyclic complex Jacobi. The input is checked against tol and symmetrized
// before iterating. Converges when the off-diagonal Frobenius mass drops to
// 1e-13 of the diagonal mass; throws NoConvergence after 100 sweeps.
HermitianEigen hermitian_eig(const ComplexMatrix& h, double tol = 1e-10);

// Eigenvalues only (ascending), via Householder tridiagonalization and
// implicit QL. Much cheaper than hermitian_eig; assumes h is exactly
// Hermitian (no check, no symmetrization).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

double largest_eigenvalue(const ComplexMatrix& h);

struct PsdCheck {
  bool flag = false;
  double min_eig = 0.0;
  double max_eig = 0.0;
};

// flag = min_eig >= -tol * max(1, max_eig).
PsdCheck is_psd(const ComplexMatrix& a, double tol = 1e-10);

// Largest singular value.
double operator_norm(const ComplexMatrix& a);

// Spectrum of a PSD matrix with near-zero eigenvalues snapped to exactly 0:
// eigenvalues in (-psd_tol * max(1, max_eig), 1e-12 * max(1, max_eig)) become
// 0. Throws NotPSD below that band.
HermitianEigen psd_spectrum(const ComplexMatrix& a, double psd_tol = 1e-10);

// U diag(f(lambda_i)) U* from a clamped spectrum.
ComplexMatrix spectral_function(const HermitianEigen& spectrum, const ScalarFunction& f);

// f(A) for PSD A. Throws UndefinedAtZero when a clamped zero eigenvalue meets
// a function with no declared value at 0.
ComplexMatrix apply_spectral_function(const ComplexMatrix& a, const ScalarFunction& f,
                                      double psd_tol = 1e-10);

}  // namespace radiuslab
