#include "radiuslab/verify.hpp"

#include <algorithm>
#include <cmath>

#include "json_detail.hpp"
#include "radiuslab/error.hpp"
#include "radiuslab/heinz.hpp"
#include "radiuslab/kwong.hpp"
#include "radiuslab/radius.hpp"
#include "radiuslab/random.hpp"

namespace radiuslab {

namespace {

using detail::Json;

// Lower estimate of omega(M); records the tolerance it was computed at.
double omega(const ComplexMatrix& m, const VerifyOptions& opt, InequalityReport& rep) {
  const double tol = opt.omega_tol * std::max(1.0, operator_norm(m));
  rep.omega_abs_tol = std::max(rep.omega_abs_tol, tol);
  return numerical_radius(m, tol).value;
}

void finish(InequalityReport& rep, const VerifyOptions& opt) {
  rep.margin = rep.rhs - rep.lhs;
  const double scale = std::max({1.0, std::abs(rep.lhs), std::abs(rep.rhs)});
  rep.pass = rep.margin >= -opt.rel_tol * scale;
}

void require_t(double t) {
  if (!(t > -2.0 && t <= 2.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "t out of range (-2, 2]");
  }
}

void note_constant(InequalityReport& rep, const HeinzConstant& k, const char* name) {
  rep.constants.emplace_back(name, k.value);
  if (k.excluded_zero) rep.flags.push_back("singular");
  if (k.diverges_at_zero) rep.flags.push_back("k_excludes_divergent_zero");
}

std::string pair_name(const ScalarFunction& f, const ScalarFunction& g) {
  return f.name() + ";" + g.name();
}

// A^2 X + t A X B + X B^2
ComplexMatrix quadratic_form(const ComplexMatrix& a, const ComplexMatrix& b,
                             const ComplexMatrix& x, double t) {
  return a * a * x + t * (a * x * b) + x * (b * b);
}

const ScalarFunction& sqrt_fn() {
  static const ScalarFunction f = functions::power(0.5);
  return f;
}

ProofMatrixCheck finish_check(ComplexMatrix m) {
  ProofMatrixCheck c;
  c.min_eig = min_eigenvalue(m);
  c.tol = sampled_psd_tol(m);
  c.psd = c.min_eig >= -c.tol;
  c.max_diag = m(0, 0).real();
  for (std::size_t i = 1; i < m.rows(); ++i) c.max_diag = std::max(c.max_diag, m(i, i).real());
  c.matrix = std::move(m);
  return c;
}

std::vector<double> values(const ScalarFunction& f, const std::vector<double>& lambdas) {
  std::vector<double> out(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    out[i] = f(lambdas[i]);
    if (!std::isfinite(out[i])) {
      throw Error(ErrorCode::DomainError,
                  f.name() + " is not finite at " + format_number(lambdas[i]));
    }
  }
  return out;
}

}  // namespace

std::optional<double> InequalityReport::constant(const std::string& name) const {
  for (const auto& [key, value] : constants)
    if (key == name) return value;
  return std::nullopt;
}

bool InequalityReport::has_flag(const std::string& flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

std::string InequalityReport::to_json(bool with_operands) const {
  Json j;
  j["inequality_id"] = inequality_id;
  if (!variant.empty()) j["variant"] = variant;
  if (!pair.empty()) j["pair"] = pair;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["margin"] = margin;
  Json c = Json::object();
  for (const auto& [key, value] : constants) c[key] = value;
  j["constants"] = std::move(c);
  j["pass"] = pass;
  Json fp;
  fp["seed"] = fingerprint.seed;
  fp["stream"] = fingerprint.stream;
  fp["index"] = fingerprint.index;
  fp["dims"] = fingerprint.dims;
  j["instance_fingerprint"] = std::move(fp);
  j["omega_abs_tol"] = omega_abs_tol;
  j["flags"] = flags;
  if (with_operands) {
    Json ops = Json::object();
    for (const auto& [name, m] : operands) ops[name] = detail::matrix_json(m);
    j["matrices"] = std::move(ops);
  }
  return j.dump();
}

InequalityReport verify_hob1(const ScalarFunction& f, const ScalarFunction& g,
                             const ComplexMatrix& a, const ComplexMatrix& x,
                             const VerifyOptions& opt) {
  InequalityReport rep;
  rep.inequality_id = "hob1";
  rep.pair = pair_name(f, g);
  rep.operands = {{"A", a}, {"X", x}};
  const HeinzContext ctx(f, g, a, a, x, opt.psd_tol);
  const HeinzConstant k = constant_k(f, g, ctx.spectrum_a());
  note_constant(rep, k, "k");
  rep.lhs = omega(heinz_operator(ctx), opt, rep);
  rep.rhs = k.value * omega(a * x + x * a, opt, rep);
  finish(rep, opt);
  return rep;
}

InequalityReport verify_hob11(const ScalarFunction& f, const ScalarFunction& g,
                              const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& x, int sign, const VerifyOptions& opt) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  InequalityReport rep;
  rep.inequality_id = sign > 0 ? "hob11_plus" : "hob11_minus";
  rep.pair = pair_name(f, g);
  rep.operands = {{"A", a}, {"B", b}, {"X", x}};
  const ComplexMatrix hab = heinz_operator(HeinzContext(f, g, a, b, x, opt.psd_tol));
  const ComplexMatrix hba = heinz_operator(HeinzContext(f, g, b, a, x, opt.psd_tol));
  const HeinzConstant kp = constant_k_prime(f, g, a, b, opt.psd_tol);
  note_constant(rep, kp, "k_prime");
  rep.lhs = omega(sign > 0 ? hab + hba : hab - hba, opt, rep);
  const ComplexMatrix s = a + b;
  const ComplexMatrix d = a - b;
  rep.rhs = kp.value * (omega(s * x + x * s, opt, rep) + omega(d * x - x * d, opt, rep));
  finish(rep, opt);
  return rep;
}

InequalityReport verify_hob2(double alpha, const ComplexMatrix& a, const ComplexMatrix& x,
                             const VerifyOptions& opt) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "alpha must lie in [0, 1]");
  }
  InequalityReport rep;
  rep.inequality_id = "hob2";
  rep.operands = {{"A", a}, {"X", x}};
  rep.constants.emplace_back("alpha", alpha);
  rep.lhs = omega(heinz_alpha(alpha, a, a, x), opt, rep);
  rep.rhs = omega(a * x + x * a, opt, rep);
  finish(rep, opt);
  return rep;
}

namespace {

double derivative_for_hob3(const ScalarFunction& f) {
  const auto d = f.derivative_at_zero();
  if (!d || !std::isfinite(*d)) {
    throw Error(ErrorCode::MissingDerivativeAtZero, f.name() + " has no finite derivative at 0");
  }
  const auto v = f.value_at_zero();
  if (!v || *v != 0.0) {
    throw Error(ErrorCode::ParameterOutOfRange, f.name() + " must vanish at 0");
  }
  return *d;
}

}  // namespace

InequalityReport verify_hob3(const ScalarFunction& f, const ComplexMatrix& a,
                             const ComplexMatrix& x, const VerifyOptions& opt) {
  const double d0 = derivative_for_hob3(f);
  InequalityReport rep;
  rep.inequality_id = "hob3";
  rep.variant = "one_variable";
  rep.pair = f.name();
  rep.operands = {{"A", a}, {"X", x}};
  rep.constants.emplace_back("f_prime_0", d0);
  const ComplexMatrix fa = apply_spectral_function(a, f, opt.psd_tol);
  rep.lhs = omega(fa * x + x * fa, opt, rep);
  rep.rhs = d0 * omega(a * x + x * a, opt, rep);
  finish(rep, opt);
  return rep;
}

InequalityReport verify_hob3(const ScalarFunction& f, const ComplexMatrix& a,
                             const ComplexMatrix& b, const ComplexMatrix& x,
                             const VerifyOptions& opt) {
  const double d0 = derivative_for_hob3(f);
  InequalityReport rep;
  rep.inequality_id = "hob3";
  rep.variant = "two_variable";
  rep.pair = f.name();
  rep.operands = {{"A", a}, {"B", b}, {"X", x}};
  rep.constants.emplace_back("f_prime_0", d0);
  const ComplexMatrix fs =
      apply_spectral_function(a, f, opt.psd_tol) + apply_spectral_function(b, f, opt.psd_tol);
  rep.lhs = omega(fs * x + x * fs, opt, rep);
  const ComplexMatrix s = a + b;
  const ComplexMatrix d = a - b;
  rep.rhs = d0 * (omega(s * x + x * s, opt, rep) + omega(d * x - x * d, opt, rep));
  finish(rep, opt);
  return rep;
}

InequalityReport verify_hob5(const ScalarFunction& f, const ScalarFunction& g,
                             const ComplexMatrix& a, const ComplexMatrix& x, double t,
                             const VerifyOptions& opt) {
  require_t(t);
  InequalityReport rep;
  rep.inequality_id = "hob5";
  rep.pair = pair_name(f, g);
  rep.operands = {{"A", a}, {"X", x}};
  const HeinzContext ctx(f, g, a, a, x, opt.psd_tol);
  const HeinzConstant k = constant_k(f, g, ctx.spectrum_a());
  note_constant(rep, k, "k");
  rep.constants.emplace_back("t", t);
  const double c = 2.0 * k.value / (t + 2.0);
  rep.constants.emplace_back("constant", c);
  const ComplexMatrix s = spectral_function(ctx.spectrum_a(), sqrt_fn());
  rep.lhs = omega(s * heinz_operator(ctx) * s, opt, rep);
  rep.rhs = c * omega(quadratic_form(a, a, x, t), opt, rep);
  finish(rep, opt);
  return rep;
}

InequalityReport verify_hob5_corollary(const ScalarFunction& f, const ComplexMatrix& a,
                                       const ComplexMatrix& x, double t,
                                       const VerifyOptions& opt) {
  require_t(t);
  const ScalarFunction g = functions::t_over(f);
  const InequalityReport generic = verify_hob5(f, g, a, x, t, opt);

  const HermitianEigen spec = psd_spectrum(a, opt.psd_tol);
  if (!(spec.min() > 0.0)) {
    throw Error(ErrorCode::DomainError, "the written-out form needs a positive definite A");
  }
  const ScalarFunction inv("inv(" + f.name() + ")", [f](double v) { return 1.0 / f(v); },
                           std::nullopt, std::nullopt);
  const ComplexMatrix s = spectral_function(spec, sqrt_fn());
  const ComplexMatrix s3 = spectral_function(spec, functions::power(1.5));
  const ComplexMatrix fa = spectral_function(spec, f);
  const ComplexMatrix fi = spectral_function(spec, inv);

  InequalityReport rep;
  rep.inequality_id = "hob5";
  rep.variant = "corollary";
  rep.pair = pair_name(f, g);
  rep.operands = {{"A", a}, {"X", x}};
  rep.constants = generic.constants;
  const double c = 4.0 / (t + 2.0);
  for (auto& [key, value] : rep.constants)
    if (key == "constant") value = c;
  rep.omega_abs_tol = generic.omega_abs_tol;
  rep.lhs = omega(s * fa * x * fi * s3 + s3 * fi * x * fa * s, opt, rep);
  rep.rhs = c * omega(quadratic_form(a, a, x, t), opt, rep);
  const double gap = std::abs(rep.lhs - generic.lhs);
  rep.constants.emplace_back("generic_lhs", generic.lhs);
  rep.constants.emplace_back("formulation_gap", gap);
  finish(rep, opt);
  if (gap > 1e-9 * std::max(1.0, rep.lhs)) {
    rep.flags.push_back("formulation_mismatch");
    rep.pass = false;
  }
  return rep;
}

InequalityReport verify_hob55(const ScalarFunction& f, const ScalarFunction& g,
                              const ComplexMatrix& a, const ComplexMatrix& b,
                              const ComplexMatrix& x, double t, const VerifyOptions& opt) {
  require_t(t);
  InequalityReport rep;
  rep.inequality_id = "hob55";
  rep.pair = pair_name(f, g);
  rep.operands = {{"A", a}, {"B", b}, {"X", x}};
  const HeinzContext ctx(f, g, a, b, x, opt.psd_tol);
  const HeinzConstant kp = constant_k_prime(f, g, a, b, opt.psd_tol);
  note_constant(rep, kp, "k_prime");
  rep.constants.emplace_back("t", t);
  const double c = 4.0 * kp.value / (t + 2.0);
  rep.constants.emplace_back("constant", c);
  const ComplexMatrix sa = spectral_function(ctx.spectrum_a(), sqrt_fn());
  const ComplexMatrix sb = spectral_function(ctx.spectrum_b(), sqrt_fn());
  rep.lhs = omega(sa * heinz_operator(ctx) * sb, opt, rep);
  rep.rhs = c * omega(quadratic_form(a, b, x, t), opt, rep);
  finish(rep, opt);
  if (a == b) {
    // With B = A this is the single-matrix inequality at twice the constant;
    // keep the sharper margin alongside.
    rep.constants.emplace_back("hob5_margin", verify_hob5(f, g, a, x, t, opt).margin);
  }
  return rep;
}

InequalityReport verify_log_example(const ComplexMatrix& a, const ComplexMatrix& x, double t,
                                    const VerifyOptions& opt) {
  require_t(t);
  const ScalarFunction f = functions::log1p();
  InequalityReport rep;
  rep.inequality_id = "log_example";
  rep.pair = pair_name(f, functions::constant(1.0));
  rep.operands = {{"A", a}, {"X", x}};
  const HermitianEigen spec = psd_spectrum(a, opt.psd_tol);
  const ComplexMatrix la = spectral_function(spec, f);
  const ComplexMatrix s = spectral_function(spec, sqrt_fn());
  rep.constants.emplace_back("t", t);
  const double c = 2.0 / (t + 2.0);
  rep.constants.emplace_back("constant", c);
  rep.lhs = omega(s * (la * x + x * la) * s, opt, rep);
  rep.rhs = c * omega(quadratic_form(a, a, x, t), opt, rep);
  finish(rep, opt);
  return rep;
}

double main3_r0(double r) {
  const double d = std::abs(1.0 - r);
  return std::min(0.5 + d, 1.0 - d);
}

double main3_t0(double beta, double t, double r) {
  const double q = 1.0 - main3_r0(r);
  return t / (2.0 * beta * q) + 1.0 / (beta * q) - 2.0;
}

void check_main3_parameters(double beta, double t, double r) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw Error(ErrorCode::ParameterOutOfRange, "beta must be > 0");
  }
  if (!(t > -2.0 && t <= 2.0 * beta - 2.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "t out of range (-2, 2 beta - 2]");
  }
  if (!(2.0 * r >= 1.0 && 2.0 * r <= 3.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "r out of range [1/2, 3/2]");
  }
}

InequalityReport verify_main3(const ComplexMatrix& a, const ComplexMatrix& x, double beta,
                              double t, double r, const VerifyOptions& opt) {
  check_main3_parameters(beta, t, r);
  const double r0 = main3_r0(r);
  InequalityReport rep;
  rep.inequality_id = "main3";
  rep.operands = {{"A", a}, {"X", x}};
  rep.constants = {{"beta", beta}, {"t", t}, {"r", r}, {"r0", r0}, {"t0", main3_t0(beta, t, r)}};
  const HermitianEigen spec = psd_spectrum(a, opt.psd_tol);
  const ComplexMatrix ar = spectral_function(spec, functions::power(r));
  const ComplexMatrix a2r = spectral_function(spec, functions::power(2.0 - r));
  rep.lhs = omega(ar * x * a2r + a2r * x * ar, opt, rep);
  const ComplexMatrix axa = a * x * a;
  const ComplexMatrix m = (2.0 * (1.0 - 2.0 * beta + 2.0 * beta * r0)) * axa +
                          (4.0 * beta * (1.0 - r0) / (t + 2.0)) * quadratic_form(a, a, x, t);
  rep.rhs = omega(m, opt, rep);
  finish(rep, opt);
  if (spec.min() == 0.0) rep.flags.push_back("singular");
  return rep;
}

std::vector<InequalityReport> verify_block_lemma(const ComplexMatrix& x, const ComplexMatrix& y,
                                                 const VerifyOptions& opt) {
  if (!x.square() || x.rows() != y.rows() || !y.square()) {
    throw Error(ErrorCode::DimensionMismatch, "X and Y must be square of the same size");
  }
  const ComplexMatrix zero(x.rows());
  const std::vector<std::pair<std::string, ComplexMatrix>> ops = {{"X", x}, {"Y", y}};

  std::vector<InequalityReport> out(3);
  for (auto& rep : out) rep.operands = ops;

  InequalityReport& diag = out[0];
  diag.inequality_id = "block_diag";
  diag.variant = "equality";
  diag.lhs = omega(block2x2(x, zero, zero, y), opt, diag);
  diag.rhs = std::max(omega(x, opt, diag), omega(y, opt, diag));
  diag.margin = diag.rhs - diag.lhs;
  diag.pass = std::abs(diag.margin) <= 2.0 * diag.omega_abs_tol;

  const ComplexMatrix off = block2x2(zero, x, y, zero);
  InequalityReport& lower = out[1];
  lower.inequality_id = "block_offdiag_lower";
  const double w_sum = omega(x + y, opt, lower);
  const double w_diff = omega(x - y, opt, lower);
  lower.lhs = std::max(w_sum, w_diff) / 2.0;
  lower.rhs = omega(off, opt, lower);
  lower.margin = lower.rhs - lower.lhs;
  lower.pass = lower.margin >= -2.0 * lower.omega_abs_tol;

  InequalityReport& upper = out[2];
  upper.inequality_id = "block_offdiag_upper";
  upper.omega_abs_tol = lower.omega_abs_tol;
  upper.lhs = lower.rhs;
  upper.rhs = (w_sum + w_diff) / 2.0;
  upper.margin = upper.rhs - upper.lhs;
  upper.pass = upper.margin >= -2.0 * upper.omega_abs_tol;
  return out;
}

InequalityReport verify_okubo(const ComplexMatrix& a, const ComplexMatrix& x,
                              const VerifyOptions& opt) {
  InequalityReport rep;
  rep.inequality_id = "okubo";
  rep.operands = {{"A", a}, {"X", x}};
  const double norm = schur_norm_psd(a, opt.psd_tol);
  rep.constants.emplace_back("max_diag", norm);
  rep.lhs = omega(hadamard(a, x), opt, rep);
  rep.rhs = norm * omega(x, opt, rep);
  finish(rep, opt);
  return rep;
}

std::vector<InequalityReport> verify_sandwich(const ComplexMatrix& a, const VerifyOptions& opt) {
  std::vector<InequalityReport> out(2);
  const double norm = operator_norm(a);
  double w = 0.0;
  for (auto& rep : out) {
    rep.inequality_id = "sandwich";
    rep.operands = {{"A", a}};
    rep.constants.emplace_back("operator_norm", norm);
  }
  w = omega(a, opt, out[0]);
  out[1].omega_abs_tol = out[0].omega_abs_tol;
  out[0].variant = "lower";
  out[0].lhs = norm / 2.0;
  out[0].rhs = w;
  out[1].variant = "upper";
  out[1].lhs = w;
  out[1].rhs = norm;
  for (auto& rep : out) finish(rep, opt);
  return out;
}

ProofMatrixCheck check_proof_matrix_Z(const ScalarFunction& f, const ScalarFunction& g,
                                      const std::vector<double>& lambdas) {
  validate_lambdas(lambdas);
  const auto fv = values(f, lambdas);
  const auto gv = values(g, lambdas);
  const std::size_t n = lambdas.size();
  for (double v : gv)
    if (v == 0.0) throw Error(ErrorCode::ZeroEntry, "g vanishes at a sample point");
  ComplexMatrix z(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      z(i, j) = (fv[i] * gv[j] + fv[j] * gv[i]) / (lambdas[i] + lambdas[j]);
  return finish_check(std::move(z));
}

ProofMatrixCheck check_proof_matrix_Y(const ScalarFunction& f, const ScalarFunction& g,
                                      const std::vector<double>& lambdas, double t) {
  require_t(t);
  validate_lambdas(lambdas);
  const auto fv = values(f, lambdas);
  const auto gv = values(g, lambdas);
  const std::size_t n = lambdas.size();
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (gv[i] == 0.0) throw Error(ErrorCode::ZeroEntry, "g vanishes at a sample point");
    h[i] = fv[i] / gv[i];
  }
  ComplexMatrix y(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double li = lambdas[i], lj = lambdas[j];
      y(i, j) = (h[i] + h[j]) / (li * li + t * li * lj + lj * lj);
    }
  return finish_check(std::move(y));
}

ProofMatrixCheck check_proof_matrix_L(const std::vector<double>& lambdas, double r, double t) {
  if (!(r >= -1.0 && r <= 1.0)) throw Error(ErrorCode::ParameterOutOfRange, "r out of range [-1, 1]");
  require_t(t);
  validate_lambdas(lambdas);
  const std::size_t n = lambdas.size();
  ComplexMatrix l(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double li = lambdas[i], lj = lambdas[j];
      l(i, j) = (std::pow(li, r) + std::pow(lj, r)) / (li * li + t * li * lj + lj * lj);
    }
  return finish_check(std::move(l));
}

ProofMatrixCheck check_proof_matrix_W(const std::vector<double>& lambdas, double beta, double t,
                                      double r) {
  check_main3_parameters(beta, t, r);
  validate_lambdas(lambdas);
  const double r0 = main3_r0(r);
  const double t0 = main3_t0(beta, t, r);
  const double c = (t + 2.0) / (4.0 * beta * (1.0 - r0));
  const std::size_t n = lambdas.size();
  ComplexMatrix w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double li = lambdas[i], lj = lambdas[j];
      w(i, j) = c * std::pow(li, r) * std::pow(lj, r) *
                (std::pow(li, 2.0 - 2.0 * r) + std::pow(lj, 2.0 - 2.0 * r)) /
                (li * li + t0 * li * lj + lj * lj);
    }
  ProofMatrixCheck check = finish_check(std::move(w));
  for (std::size_t i = 0; i < n; ++i)
    check.diag_deviation = std::max(check.diag_deviation, std::abs(check.matrix(i, i).real() - 1.0));
  return check;
}

std::string CounterexampleRecord::to_json() const {
  Json j;
  j["alpha"] = alpha;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["violation"] = violation;
  j["seed"] = seed;
  j["trial"] = trial;
  j["condition_a"] = condition_a;
  j["condition_b"] = condition_b;
  j["A"] = detail::matrix_json(a);
  j["B"] = detail::matrix_json(b);
  j["X"] = detail::matrix_json(x);
  return j.dump();
}

namespace {

std::optional<CounterexampleRecord> run_trial(const CounterexampleSearch& s, std::uint64_t trial) {
  Rng rng(s.seed, "counterexample", trial);
  const std::size_t n = rng.pick(s.dims);
  const double alpha = rng.pick(s.alpha_grid);
  const double cond_a = rng.log_uniform(1.0, s.max_condition);
  const double cond_b = rng.log_uniform(1.0, s.max_condition);
  const ComplexMatrix a = random_psd_conditioned(n, 1.0, cond_a, rng);
  const ComplexMatrix b = random_psd_conditioned(n, 1.0, cond_b, rng);
  const ComplexMatrix x = random_matrix(n, 1.0, rng);
  if (alpha == 0.0 || alpha == 1.0) return std::nullopt;

  const ComplexMatrix h = heinz_alpha(alpha, a, b, x);
  const ComplexMatrix sum = a * x + x * b;
  const double lhs = numerical_radius(h).value;
  const double rhs = numerical_radius(sum).value;
  if (!(lhs - rhs > 1e-6 * std::max(1.0, rhs))) return std::nullopt;

  const RadiusResult tight_l = numerical_radius(h, 1e-11 * std::max(1.0, operator_norm(h)));
  const RadiusResult tight_r = numerical_radius(sum, 1e-11 * std::max(1.0, operator_norm(sum)));
  CounterexampleRecord rec;
  rec.lhs = tight_l.value;
  rec.rhs = tight_r.value + tight_r.certified_abs_error;
  rec.violation = rec.lhs - rec.rhs;
  if (!(rec.violation > 1e-6 * std::max(1.0, rec.rhs))) return std::nullopt;
  rec.a = a;
  rec.b = b;
  rec.x = x;
  rec.alpha = alpha;
  rec.seed = s.seed;
  rec.trial = trial;
  rec.condition_a = cond_a;
  rec.condition_b = cond_b;
  return rec;
}

void validate_search(const CounterexampleSearch& s) {
  if (s.alpha_grid.empty()) throw Error(ErrorCode::InvalidArgument, "alpha grid is empty");
  for (double a : s.alpha_grid)
    if (!(a >= 0.0 && a <= 1.0)) throw Error(ErrorCode::ParameterOutOfRange, "alpha must lie in [0, 1]");
  if (s.dims.empty()) throw Error(ErrorCode::InvalidArgument, "dims is empty");
  for (std::size_t n : s.dims)
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "dims must be >= 1");
  if (!(s.max_condition >= 1.0)) throw Error(ErrorCode::InvalidArgument, "max_condition must be >= 1");
}

}  // namespace

std::optional<CounterexampleRecord> search_counterexample(const CounterexampleSearch& search) {
  validate_search(search);
  for (int trial = 0; trial < search.trials; ++trial)
    if (auto rec = run_trial(search, static_cast<std::uint64_t>(trial))) return rec;
  return std::nullopt;
}

std::optional<CounterexampleRecord> replay_counterexample(const CounterexampleSearch& search,
                                                          std::uint64_t trial) {
  validate_search(search);
  return run_trial(search, trial);
}

}  // namespace radiuslab
