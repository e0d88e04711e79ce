#include "radiuslab/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "radiuslab/error.hpp"

namespace radiuslab {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kJacobiTol = 1e-13;

void require_square(const ComplexMatrix& h, const char* op) {
  if (!h.square()) throw Error(ErrorCode::DimensionMismatch, std::string(op) + ": not square");
}

double off_diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

double diagonal_mass(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) s += std::norm(a(i, i));
  return s;
}

// Zeroes a(p, q) with the unitary U = diag(1, e^{-i phi}) R, where
// a(p, q) = |a(p, q)| e^{i phi} and R is the real Jacobi rotation of the
// phase-adjusted 2x2 block. A <- U* A U, V <- V U.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex e = std::conj(phase);  // e^{-i phi}
  const std::size_t n = a.rows();

  // Columns: A U.
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * e * akq;
    a(k, q) = s * akp + c * e * akq;
  }
  // Rows: U* (A U).
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * e * vkq;
    v(k, q) = s * vkp + c * e * vkq;
  }
}

// Implicit QL with Wilkinson-style shifts on a real symmetric tridiagonal
// matrix; d holds the diagonal, e[i] couples i and i + 1 (e[n-1] unused).
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = d.size();
  if (n == 0) return;
  e[n - 1] = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (++iter > 60) throw Error(ErrorCode::NoConvergence, "tridiagonal QL: too many iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          const double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

ComplexMatrix HermitianEigen::reconstruct() const {
  const std::size_t n = eigenvalues.size();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += vectors(i, k) * eigenvalues[k] * std::conj(vectors(j, k));
      out(i, j) = s;
    }
  return out;
}

HermitianEigen hermitian_eig(const ComplexMatrix& h, double tol) {
  require_square(h, "hermitian_eig");
  if (!h.all_finite()) throw Error(ErrorCode::InvalidArgument, "hermitian_eig: non-finite entry");
  if (!is_hermitian(h, tol)) {
    throw Error(ErrorCode::NotHermitian, "hermitian_eig: input is not Hermitian within tolerance");
  }
  const std::size_t n = h.rows();
  ComplexMatrix a = hermitian_part(h);
  ComplexMatrix v = ComplexMatrix::identity(n);

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_mass(a);
    if (off == 0.0 || off <= kJacobiTol * kJacobiTol * diagonal_mass(a)) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        // Entries already below rounding relative to both diagonal entries
        // are dropped outright once the first sweeps have run.
        const double r = std::abs(a(p, q));
        if (sweep > 3 && r < 1e-18 * (std::abs(a(p, p)) + std::abs(a(q, q)))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotate(a, v, p, q);
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence,
                "hermitian_eig: no convergence after " + std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  require_square(h, "hermitian_eigenvalues");
  const std::size_t n = h.rows();
  if (n == 0) return {};
  ComplexMatrix a = h;
  std::vector<double> d(n);
  std::vector<double> e(n, 0.0);
  std::vector<Complex> v(n);
  std::vector<Complex> p(n);

  // Householder reduction of columns 0..n-3 acting on the trailing block.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(a(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) {
      e[k] = 0.0;
      continue;
    }
    const Complex x0 = a(k + 1, k);
    const double ax0 = std::abs(x0);
    const Complex phase = ax0 == 0.0 ? Complex(1.0) : x0 / ax0;
    const Complex alpha = -phase * xnorm;
    // v = x - alpha e1, normalized.
    for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
    v[k + 1] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    const double vnorm = std::sqrt(vnorm2);
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;

    // p = A v on the trailing block, then w = p - (v* p) v.
    Complex vp = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      Complex s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      p[i] = s;
      vp += std::conj(v[i]) * s;
    }
    const double kappa = vp.real();
    for (std::size_t i = k + 1; i < n; ++i) p[i] -= kappa * v[i];
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) -= 2.0 * (v[i] * std::conj(p[j]) + p[i] * std::conj(v[j]));

    // The reduced column has a single entry of modulus |alpha|; the phase is
    // a diagonal similarity away.
    e[k] = xnorm;
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
  if (n >= 2) e[n - 2] = std::abs(a(n - 1, n - 2));

  tridiagonal_ql(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

double largest_eigenvalue(const ComplexMatrix& h) { return hermitian_eigenvalues(h).back(); }

PsdCheck is_psd(const ComplexMatrix& a, double tol) {
  const HermitianEigen eig = hermitian_eig(a, tol);
  PsdCheck out;
  out.min_eig = eig.min();
  out.max_eig = eig.max();
  out.flag = out.min_eig >= -tol * std::max(1.0, out.max_eig);
  return out;
}

double operator_norm(const ComplexMatrix& a) {
  if (a.empty()) return 0.0;
  const ComplexMatrix gram = a.adjoint() * a;
  return std::sqrt(std::max(0.0, largest_eigenvalue(hermitian_part(gram))));
}

HermitianEigen psd_spectrum(const ComplexMatrix& a, double psd_tol) {
  HermitianEigen eig = hermitian_eig(a, psd_tol);
  const double scale = std::max(1.0, eig.max());
  if (eig.min() < -psd_tol * scale) {
    throw Error(ErrorCode::NotPSD, "matrix is not positive semidefinite (min eigenvalue " +
                                       format_number(eig.min()) + ")");
  }
  const double eps_zero = 1e-12 * scale;
  for (double& lambda : eig.eigenvalues)
    if (lambda < eps_zero) lambda = 0.0;
  return eig;
}

ComplexMatrix spectral_function(const HermitianEigen& spectrum, const ScalarFunction& f) {
  const std::size_t n = spectrum.eigenvalues.size();
  std::vector<double> fv(n);
  for (std::size_t k = 0; k < n; ++k) {
    fv[k] = f.at(spectrum.eigenvalues[k]);
    if (!std::isfinite(fv[k])) {
      throw Error(ErrorCode::DomainError,
                  f.name() + " is not finite at " + format_number(spectrum.eigenvalues[k]));
    }
  }
  const ComplexMatrix& u = spectrum.vectors;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += u(i, k) * fv[k] * std::conj(u(j, k));
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

ComplexMatrix apply_spectral_function(const ComplexMatrix& a, const ScalarFunction& f,
                                      double psd_tol) {
  return spectral_function(psd_spectrum(a, psd_tol), f);
}

}  // namespace radiuslab
