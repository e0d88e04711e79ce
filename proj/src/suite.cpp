#include "radiuslab/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>

#include "radiuslab/error.hpp"
#include "radiuslab/kwong.hpp"
#include "radiuslab/random.hpp"

namespace radiuslab {

namespace {

constexpr double kAlphaGrid[] = {0.1, 0.3, 0.5, 0.7, 0.9};

bool selected(const RunConfig& c, const std::string& id) {
  return c.inequalities.empty() ||
         std::find(c.inequalities.begin(), c.inequalities.end(), id) != c.inequalities.end();
}

bool needs_t_in_unit_range(const RunConfig& c) {
  return selected(c, "hob5") || selected(c, "hob55") || selected(c, "log_example");
}

struct Pair {
  std::string spec;
  ScalarFunction f;
  ScalarFunction g;
};

std::vector<Pair> parse_pairs(const RunConfig& c) {
  const auto& specs = c.pairs.empty() ? default_pairs() : c.pairs;
  std::vector<Pair> out;
  for (const auto& s : specs) {
    auto [f, g] = parse_function_pair(s);
    out.push_back({s, std::move(f), std::move(g)});
  }
  return out;
}

// Draws for one instance; every suite pulls what it needs in a fixed order.
class Draw {
 public:
  Draw(const RunConfig& c, const std::string& stream, std::uint64_t index)
      : rng_(c.seed, stream, index), n_(rng_.pick(c.dims)) {}

  std::size_t n() const { return n_; }
  ComplexMatrix psd() { return random_psd(n_, rng_.log_uniform(0.1, 10.0), rng_); }
  ComplexMatrix general() { return random_matrix(n_, 1.0, rng_); }
  Rng& rng() { return rng_; }

 private:
  Rng rng_;
  std::size_t n_;
};

// Uniform on (-2, 2], and exactly 2 on every tenth instance.
double draw_t(const RunConfig& c, Rng& rng, std::uint64_t index) {
  if (c.t) return *c.t;
  const double u = rng.uniform(0.0, 1.0);
  return index % 10 == 0 ? 2.0 : 2.0 - 4.0 * u;
}

class Runner {
 public:
  explicit Runner(const RunConfig& c) : c_(c), pairs_(parse_pairs(c)) {
    opt_.omega_tol = c.omega_tol;
    opt_.rel_tol = c.rel_tol;
    opt_.psd_tol = c.psd_tol;
  }

  SuiteResult run() {
    precheck_pairs();
    for (const auto& id : all_inequality_ids()) {
      if (!selected(c_, id)) continue;
      if (id == "hob1") per_pair(id, [&](const Pair& p, Draw& d, std::uint64_t) {
        const auto a = d.psd();
        const auto x = d.general();
        emit(verify_hob1(p.f, p.g, a, x, opt_));
      });
      else if (id == "hob11_plus" || id == "hob11_minus") {
        const int sign = id == "hob11_plus" ? 1 : -1;
        // Both signs share a stream, hence share instances.
        per_pair("hob11", [&](const Pair& p, Draw& d, std::uint64_t) {
          const auto a = d.psd();
          const auto b = d.psd();
          const auto x = d.general();
          emit(verify_hob11(p.f, p.g, a, b, x, sign, opt_));
        });
      } else if (id == "hob2") single(id, [&](Draw& d, std::uint64_t) {
        const double alpha = c_.alpha ? *c_.alpha : kAlphaGrid[d.rng().index(std::size(kAlphaGrid))];
        const auto a = d.psd();
        const auto x = d.general();
        emit(verify_hob2(alpha, a, x, opt_));
      });
      else if (id == "hob3") run_hob3();
      else if (id == "hob5") per_pair(id, [&](const Pair& p, Draw& d, std::uint64_t i) {
        const double t = draw_t(c_, d.rng(), i);
        const auto a = d.psd();
        const auto x = d.general();
        emit(verify_hob5(p.f, p.g, a, x, t, opt_));
        if (p.g.name() == "tover(" + p.f.name() + ")") emit(verify_hob5_corollary(p.f, a, x, t, opt_));
      });
      else if (id == "hob55") per_pair(id, [&](const Pair& p, Draw& d, std::uint64_t i) {
        const double t = draw_t(c_, d.rng(), i);
        const auto a = d.psd();
        const auto b = d.psd();
        const auto x = d.general();
        emit(verify_hob55(p.f, p.g, a, b, x, t, opt_));
      });
      else if (id == "main3") single(id, [&](Draw& d, std::uint64_t) { run_main3(d); });
      else if (id == "log_example") single(id, [&](Draw& d, std::uint64_t i) {
        const double t = draw_t(c_, d.rng(), i);
        const auto a = d.psd();
        const auto x = d.general();
        emit(verify_log_example(a, x, t, opt_));
      });
      else if (id == "block_diag" || id == "block_offdiag_lower" || id == "block_offdiag_upper") {
        if (block_done_) continue;
        block_done_ = true;
        single("block", [&](Draw& d, std::uint64_t) {
          const auto x = d.general();
          const auto y = d.general();
          for (auto& rep : verify_block_lemma(x, y, opt_))
            if (selected(c_, rep.inequality_id)) emit(std::move(rep));
        });
      } else if (id == "okubo") single(id, [&](Draw& d, std::uint64_t) {
        const auto a = d.psd();
        const auto x = d.general();
        emit(verify_okubo(a, x, opt_));
      });
      else if (id == "sandwich") single(id, [&](Draw& d, std::uint64_t) {
        for (auto& rep : verify_sandwich(d.general(), opt_)) emit(std::move(rep));
      });
    }
    summarize();
    return std::move(result_);
  }

 private:
  using PairBody = std::function<void(const Pair&, Draw&, std::uint64_t)>;
  using Body = std::function<void(Draw&, std::uint64_t)>;

  void per_pair(const std::string& stream_id, const PairBody& body) {
    for (const Pair& p : pairs_) {
      pair_ = &p;
      instances(stream_id + "|" + p.spec, [&](Draw& d, std::uint64_t i) { body(p, d, i); });
    }
    pair_ = nullptr;
  }

  void single(const std::string& stream_id, const Body& body) { instances(stream_id, body); }

  void instances(const std::string& stream, const Body& body) {
    for (int i = 0; i < c_.trials; ++i) {
      const auto index = static_cast<std::uint64_t>(i);
      Draw d(c_, stream, index);
      fp_ = {c_.seed, stream, index, {d.n()}};
      body(d, index);
    }
  }

  void emit(InequalityReport rep) {
    rep.fingerprint = fp_;
    if (pair_) {
      rep.pair = pair_->spec;
      if (std::find(result_.non_kwong_pairs.begin(), result_.non_kwong_pairs.end(), pair_->spec) !=
          result_.non_kwong_pairs.end())
        rep.flags.push_back("pair_not_kwong");
    }
    result_.reports.push_back(std::move(rep));
  }

  void precheck_pairs() {
    for (const Pair& p : pairs_) {
      const ScalarFunction h = functions::quotient(p.f, p.g);
      const KwongCertificate cert = certify_kwong(h, 0.0, 100.0, 100, 8, c_.seed);
      if (cert.verdict != Verdict::CertifiedSampled) result_.non_kwong_pairs.push_back(p.spec);
    }
  }

  void run_hob3() {
    // f must vanish at 0 with a finite slope there; take such f from the
    // pairs, or log(1+t) when none qualifies.
    std::vector<ScalarFunction> fs;
    std::set<std::string> seen;
    for (const Pair& p : pairs_) {
      const auto v = p.f.value_at_zero();
      const auto d = p.f.derivative_at_zero();
      if (v && *v == 0.0 && d && std::isfinite(*d) && seen.insert(p.f.name()).second) fs.push_back(p.f);
    }
    if (fs.empty()) fs.push_back(functions::log1p());
    for (const auto& f : fs) {
      instances("hob3|" + f.name(), [&](Draw& d, std::uint64_t) {
        const auto a = d.psd();
        const auto b = d.psd();
        const auto x = d.general();
        emit(verify_hob3(f, a, x, opt_));
        emit(verify_hob3(f, a, b, x, opt_));
      });
    }
  }

  void run_main3(Draw& d) {
    Rng& rng = d.rng();
    double beta = c_.beta ? *c_.beta : rng.log_uniform(0.5, 4.0);
    if (c_.t && !c_.beta) beta = std::max(beta, (*c_.t + 2.0) / 2.0);
    // (-2, 2 beta - 2]
    const double t = c_.t ? *c_.t : (2.0 * beta - 2.0) - 2.0 * beta * rng.uniform(0.0, 1.0);
    const double r = c_.r ? *c_.r : rng.uniform(0.5, 1.5);
    const auto a = d.psd();
    const auto x = d.general();
    emit(verify_main3(a, x, beta, t, r, opt_));
  }

  void summarize() {
    for (const auto& id : all_inequality_ids()) {
      SuiteSummaryRow row;
      row.inequality_id = id;
      row.min_margin = INFINITY;
      for (const auto& rep : result_.reports) {
        if (rep.inequality_id != id) continue;
        ++row.instances;
        if (!rep.pass) ++row.failures;
        row.min_margin = std::min(row.min_margin, rep.margin);
      }
      if (row.instances > 0) result_.summary.push_back(row);
    }
  }

  const RunConfig& c_;
  std::vector<Pair> pairs_;
  VerifyOptions opt_;
  SuiteResult result_;
  InstanceFingerprint fp_;
  const Pair* pair_ = nullptr;
  bool block_done_ = false;
};

}  // namespace

const std::vector<std::string>& all_inequality_ids() {
  static const std::vector<std::string> ids = {
      "hob1",  "hob11_plus", "hob11_minus", "hob2",       "hob3",
      "hob5",  "hob55",      "main3",       "log_example", "block_diag",
      "block_offdiag_lower", "block_offdiag_upper",       "okubo",       "sandwich"};
  return ids;
}

const std::vector<std::string>& default_pairs() {
  static const std::vector<std::string> pairs = {
      "power:0.1;power:0.9", "power:0.3;power:0.7", "power:0.5;power:0.5",
      "power:0.7;power:0.3", "power:0.9;power:0.1", "log1p;const:1",
      "power:0.5;tover(power:0.5)"};
  return pairs;
}

void RunConfig::validate() const {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (dims.empty()) throw Error(ErrorCode::InvalidArgument, "dims must not be empty");
  for (std::size_t n : dims)
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "dims must be >= 1");
  if (!(rel_tol > 0.0) || !(omega_tol > 0.0) || !(psd_tol > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "tolerances must be > 0");
  }
  for (const auto& id : inequalities) {
    const auto& all = all_inequality_ids();
    if (std::find(all.begin(), all.end(), id) == all.end()) {
      throw Error(ErrorCode::InvalidArgument, "unknown inequality id '" + id + "'");
    }
  }
  for (const auto& p : pairs) parse_function_pair(p);
  if (t && needs_t_in_unit_range(*this) && !(*t > -2.0 && *t <= 2.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "t out of range (-2, 2]");
  }
  if (alpha && !(*alpha >= 0.0 && *alpha <= 1.0)) {
    throw Error(ErrorCode::ParameterOutOfRange, "alpha out of range [0, 1]");
  }
  if (selected(*this, "main3")) {
    if (beta && !(*beta > 0.0)) throw Error(ErrorCode::ParameterOutOfRange, "beta must be > 0");
    if (r && !(*r >= 0.5 && *r <= 1.5)) throw Error(ErrorCode::ParameterOutOfRange, "r out of range [1/2, 3/2]");
    if (t && !(*t > -2.0)) throw Error(ErrorCode::ParameterOutOfRange, "t out of range (-2, 2 beta - 2]");
    if (t && beta) check_main3_parameters(*beta, *t, r.value_or(1.0));
  }
}

bool SuiteResult::all_pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

std::string SuiteResult::jsonl(bool dump_matrices) const {
  std::string out;
  for (const auto& rep : reports) {
    out += rep.to_json(dump_matrices && !rep.pass);
    out += '\n';
  }
  return out;
}

std::string SuiteResult::summary_table() const {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-22s %10s %9s %14s\n", "inequality", "instances", "failures",
                "min_margin");
  out += line;
  for (const auto& row : summary) {
    std::snprintf(line, sizeof line, "%-22s %10d %9d %14.6e\n", row.inequality_id.c_str(),
                  row.instances, row.failures, row.min_margin);
    out += line;
  }
  for (const auto& p : non_kwong_pairs) out += "warning: f/g of pair '" + p + "' failed the sampled Kwong check\n";
  return out;
}

SuiteResult run_suite(const RunConfig& config) {
  config.validate();
  return Runner(config).run();
}

}  // namespace radiuslab
