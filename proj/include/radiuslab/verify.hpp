#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "radiuslab/eigen.hpp"
#include "radiuslab/function.hpp"
#include "radiuslab/matrix.hpp"

namespace radiuslab {

struct VerifyOptions {
  // omega is evaluated to omega_tol * max(1, ||M||) for each argument M.
  double omega_tol = 1e-9;
  // pass <=> margin >= -rel_tol * max(1, |lhs|, |rhs|)
  double rel_tol = 1e-8;
  double psd_tol = 1e-10;
};

struct InstanceFingerprint {
  std::uint64_t seed = 0;
  std::string stream;
  std::uint64_t index = 0;
  std::vector<std::size_t> dims;
};

struct InequalityReport {
  std::string inequality_id;
  std::string variant;  // sub-form, e.g. "plus" or "two_variable"; may be empty
  std::string pair;     // "f;g" as given, empty when not applicable
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  std::vector<std::pair<std::string, double>> constants;
  bool pass = false;
  InstanceFingerprint fingerprint;
  double omega_abs_tol = 0.0;  // largest absolute omega tolerance used
  std::vector<std::string> flags;
  // Operands, kept so that failing instances can be dumped standalone.
  std::vector<std::pair<std::string, ComplexMatrix>> operands;

  std::optional<double> constant(const std::string& name) const;
  bool has_flag(const std::string& flag) const;
  std::string to_json(bool with_operands) const;
};

// Every verifier throws ParameterOutOfRange on parameters outside the stated
// region and propagates NotPSD / UndefinedAtZero from the spectral calculus.

// omega(H_{f,g}(A)) <= k omega(AX + XA)
InequalityReport verify_hob1(const ScalarFunction& f, const ScalarFunction& g,
                             const ComplexMatrix& a, const ComplexMatrix& x,
                             const VerifyOptions& opt = {});

// omega(H_{f,g}(A,B) +- H_{f,g}(B,A))
//   <= k' (omega((A+B)X + X(A+B)) + omega((A-B)X - X(A-B)))
InequalityReport verify_hob11(const ScalarFunction& f, const ScalarFunction& g,
                              const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& x, int sign, const VerifyOptions& opt = {});

// omega(H_alpha(A)) <= omega(AX + XA)
InequalityReport verify_hob2(double alpha, const ComplexMatrix& a, const ComplexMatrix& x,
                             const VerifyOptions& opt = {});

// omega(f(A)X + Xf(A)) <= f'(0) omega(AX + XA) for f with f(0) = 0 and a
// finite f'(0). Throws MissingDerivativeAtZero otherwise.
InequalityReport verify_hob3(const ScalarFunction& f, const ComplexMatrix& a,
                             const ComplexMatrix& x, const VerifyOptions& opt = {});
// omega((f(A)+f(B))X + X(f(A)+f(B)))
//   <= f'(0) (omega((A+B)X + X(A+B)) + omega((A-B)X - X(A-B)))
InequalityReport verify_hob3(const ScalarFunction& f, const ComplexMatrix& a,
                             const ComplexMatrix& b, const ComplexMatrix& x,
                             const VerifyOptions& opt = {});

// omega(A^1/2 H_{f,g}(A) A^1/2) <= 2k / (t+2) omega(A^2 X + tAXA + XA^2),
// -2 < t <= 2.
InequalityReport verify_hob5(const ScalarFunction& f, const ScalarFunction& g,
                             const ComplexMatrix& a, const ComplexMatrix& x, double t,
                             const VerifyOptions& opt = {});

// The same inequality written out for g = t / f:
//   omega(A^1/2 f(A) X f(A)^-1 A^3/2 + A^3/2 f(A)^-1 X f(A) A^1/2)
//     <= 4 / (t+2) omega(A^2 X + tAXA + XA^2).
// A must be positive definite so that f(A) is invertible. The report fails
// if the written-out left side and the generic one differ by more than
// 1e-9 * max(1, lhs).
InequalityReport verify_hob5_corollary(const ScalarFunction& f, const ComplexMatrix& a,
                                       const ComplexMatrix& x, double t,
                                       const VerifyOptions& opt = {});

// omega(A^1/2 H_{f,g}(A,B) B^1/2) <= 4k' / (t+2) omega(A^2 X + tAXB + XB^2)
InequalityReport verify_hob55(const ScalarFunction& f, const ScalarFunction& g,
                              const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& x, double t, const VerifyOptions& opt = {});

// omega(A^1/2 (log(I+A)X + X log(I+A)) A^1/2) <= 2 / (t+2) omega(A^2 X + tAXA + XA^2)
InequalityReport verify_log_example(const ComplexMatrix& a, const ComplexMatrix& x, double t,
                                    const VerifyOptions& opt = {});

// r0 = min(1/2 + |1-r|, 1 - |1-r|)
double main3_r0(double r);
// t0 = t / (2 beta (1-r0)) + 1 / (beta (1-r0)) - 2
double main3_t0(double beta, double t, double r);
// Throws ParameterOutOfRange unless beta > 0, -2 < t <= 2 beta - 2 and
// 1 <= 2r <= 3.
void check_main3_parameters(double beta, double t, double r);

// omega(A^r X A^(2-r) + A^(2-r) X A^r)
//   <= omega(2(1 - 2 beta + 2 beta r0) AXA + 4 beta (1-r0)/(t+2) (A^2 X + tAXA + XA^2))
InequalityReport verify_main3(const ComplexMatrix& a, const ComplexMatrix& x, double beta,
                              double t, double r, const VerifyOptions& opt = {});

// block_diag: omega(diag(X, Y)) = max(omega(X), omega(Y)), within 2 omega_abs_tol.
// block_offdiag_lower: max(omega(X+Y), omega(X-Y)) / 2 <= omega([0 X; Y 0]).
// block_offdiag_upper: omega([0 X; Y 0]) <= (omega(X+Y) + omega(X-Y)) / 2.
// The two bounds pass with slack down to -2 omega_abs_tol.
std::vector<InequalityReport> verify_block_lemma(const ComplexMatrix& x, const ComplexMatrix& y,
                                                 const VerifyOptions& opt = {});

// omega(A o X) <= max_i a_ii omega(X) for PSD A.
InequalityReport verify_okubo(const ComplexMatrix& a, const ComplexMatrix& x,
                              const VerifyOptions& opt = {});

// ||A|| / 2 <= omega(A) (variant "lower") and omega(A) <= ||A|| ("upper").
std::vector<InequalityReport> verify_sandwich(const ComplexMatrix& a,
                                              const VerifyOptions& opt = {});

// PSD test of a matrix built inside one of the proofs.
struct ProofMatrixCheck {
  ComplexMatrix matrix;
  double min_eig = 0.0;
  double tol = 0.0;  // 1e-10 * max(1, max diagonal)
  bool psd = false;
  // Largest diagonal entry, and for W the worst |w_ii - 1|.
  double max_diag = 0.0;
  double diag_deviation = 0.0;
};

// Z_ij = (f_i g_j + f_j g_i) / (l_i + l_j), i.e. diag(g) K_{f/g} diag(g);
// the diagonal is f_i g_i / l_i.
ProofMatrixCheck check_proof_matrix_Z(const ScalarFunction& f, const ScalarFunction& g,
                                      const std::vector<double>& lambdas);
// Y_ij = (h_i + h_j) / (l_i^2 + t l_i l_j + l_j^2) with h = f / g.
ProofMatrixCheck check_proof_matrix_Y(const ScalarFunction& f, const ScalarFunction& g,
                                      const std::vector<double>& lambdas, double t);
// L_ij = (l_i^r + l_j^r) / (l_i^2 + t l_i l_j + l_j^2), r in [-1, 1].
ProofMatrixCheck check_proof_matrix_L(const std::vector<double>& lambdas, double r, double t);
// W = (t+2) / (4 beta (1-r0)) diag(l)^r ((l_i^(2-2r) + l_j^(2-2r)) /
//     (l_i^2 + t0 l_i l_j + l_j^2)) diag(l)^r, whose diagonal is exactly 1.
ProofMatrixCheck check_proof_matrix_W(const std::vector<double>& lambdas, double beta, double t,
                                      double r);

struct CounterexampleRecord {
  ComplexMatrix a, b, x;
  double alpha = 0.0;
  double lhs = 0.0;        // omega(H_alpha(A, B)), lower estimate at the tight tolerance
  double rhs = 0.0;        // omega(AX + XB), upper estimate at the tight tolerance
  double violation = 0.0;  // lhs - rhs
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  double condition_a = 0.0;
  double condition_b = 0.0;

  std::string to_json() const;
};

struct CounterexampleSearch {
  std::vector<double> alpha_grid;
  int trials = 0;
  std::vector<std::size_t> dims;
  std::uint64_t seed = 0;
  // Eigenvalue ratios of A and B are drawn log-uniformly up to this value.
  double max_condition = 1e4;
};

// Looks for omega(H_alpha(A,B)) > omega(AX+XB). A candidate counts when
// lhs - rhs > 1e-6 max(1, rhs) and still does after both sides are redone at
// omega tolerance 1e-11 * max(1, ||M||), comparing a lower bound of the left
// side with an upper bound of the right side. Trials drawing alpha = 0 or 1
// are skipped: there H_alpha(A,B) is AX + XB.
std::optional<CounterexampleRecord> search_counterexample(const CounterexampleSearch& search);

// Re-runs one trial of a search; used to replay a frozen seed.
std::optional<CounterexampleRecord> replay_counterexample(const CounterexampleSearch& search,
                                                          std::uint64_t trial);

}  // namespace radiuslab
