#pragma once

#include <cstddef>
#include <cstdint>

#include "radiuslab/matrix.hpp"

namespace radiuslab {

struct RadiusResult {
  double value = 0.0;
  double argmax_theta = 0.0;         // in [0, 2 pi)
  double certified_abs_error = 0.0;  // omega(A) lies in [value, value + certified_abs_error]
  std::size_t evaluations = 0;       // number of lambda_max evaluations spent
};

// (e^{i theta} A + e^{-i theta} A*) / 2, Hermitian by construction.
ComplexMatrix rotated_hermitian_part(const ComplexMatrix& a, double theta);

// 1e-9 * max(1, ||A||)
double default_radius_tol(const ComplexMatrix& a);

// omega(A) = max over theta of lambda_max(rotated_hermitian_part(A, theta)).
//
// Every evaluated theta gives a supporting line of the numerical range, so the
// running maximum is a lower bound on omega and the largest vertex modulus of
// the polygon cut out by those lines is an upper bound. A 720-point grid is
// refined by golden-section search around the three best grid maxima; then
// polygon edges whose vertex still overshoots the lower bound by more than
// abs_tol are bisected until the gap closes.
RadiusResult numerical_radius(const ComplexMatrix& a, double abs_tol);
RadiusResult numerical_radius(const ComplexMatrix& a);

// Max of |<Ax, x>| over `samples` random unit vectors (complex Gaussian,
// normalized). Always a lower bound on omega(A).
double numerical_radius_bruteforce(const ComplexMatrix& a, std::size_t samples,
                                   std::uint64_t seed);

}  // namespace radiuslab
