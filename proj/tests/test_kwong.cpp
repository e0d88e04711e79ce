#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "radiuslab/eigen.hpp"
#include "radiuslab/error.hpp"
#include "radiuslab/kwong.hpp"

using namespace radiuslab;

namespace {

bool sampled_psd(const ComplexMatrix& m) { return min_eigenvalue(m) >= -sampled_psd_tol(m); }

// Smallest root of the characteristic polynomial of a real symmetric 2x2.
double min_eig_2x2(double a, double b, double d) {
  const double mean = 0.5 * (a + d);
  return mean - std::sqrt(0.25 * (a - d) * (a - d) + b * b);
}

}  // namespace

TEST_CASE("function spec grammar") {
  CHECK(parse_function("power:0.5")(4.0) == doctest::Approx(2.0));
  CHECK(parse_function("const:1")(123.0) == 1.0);
  CHECK(parse_function("log1p")(std::exp(1.0) - 1.0) == doctest::Approx(1.0));
  CHECK(parse_function("quot(power:0.5,const:1)")(9.0) == doctest::Approx(3.0));
  CHECK(parse_function("tf2(power:0.5)")(3.0) == doctest::Approx(9.0));
  CHECK(parse_function("tover(power:0.5)")(16.0) == doctest::Approx(4.0));
  CHECK(parse_function("aud(const:1)")(16.0) == doctest::Approx(4.0));

  for (const char* spec : {"power:0.5", "const:2", "log1p", "quot(power:0.5,const:1)",
                           "tf2(power:0.5)", "prod(log1p,tover(power:0.25))"}) {
    CHECK(parse_function(spec).name() == spec);
  }

  for (const char* bad : {"bogus", "Power:0.5", "power:", "power:abc", "quot(log1p)", "log1p)",
                          "tf2(log1p", "", "power:3"}) {
    CHECK_THROWS_AS(parse_function(bad), Error);
    try {
      parse_function(bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  }

  const auto [f, g] = parse_function_pair("power:0.3;power:0.7");
  CHECK(f.name() == "power:0.3");
  CHECK(g.name() == "power:0.7");
  CHECK_THROWS_AS(parse_function_pair("log1p"), Error);
}

TEST_CASE("values and slopes at zero") {
  CHECK(*functions::power(0.5).value_at_zero() == 0.0);
  CHECK(*functions::power(0.0).value_at_zero() == 1.0);
  CHECK_FALSE(functions::power(-0.5).value_at_zero());
  CHECK(std::isinf(*functions::power(0.5).derivative_at_zero()));
  CHECK(*functions::power(1.0).derivative_at_zero() == 1.0);
  CHECK(*functions::log1p().value_at_zero() == 0.0);
  CHECK(*functions::log1p().derivative_at_zero() == 1.0);
  CHECK(*functions::constant(1.0).value_at_zero() == 1.0);
  // t / sqrt(t) -> 0, t / log(1 + t) -> 1.
  CHECK(*functions::t_over(functions::power(0.5)).value_at_zero() == 0.0);
  CHECK(*functions::t_over(functions::log1p()).value_at_zero() == 1.0);
  CHECK_THROWS_AS(functions::constant(0.0), Error);
}

TEST_CASE("kwong_matrix") {
  const std::vector<double> l{0.5, 1.5, 7.0};
  CHECK(distance(kwong_matrix(functions::power(1.0), l), ComplexMatrix::ones(3)) <= 1e-15);

  const ComplexMatrix k = kwong_matrix(functions::constant(1.0), std::vector<double>{1.0, 2.0});
  CHECK(distance(k, ComplexMatrix::from_rows({{1.0, 2.0 / 3.0}, {2.0 / 3.0, 0.5}})) <= 1e-15);
  CHECK(sampled_psd(k));

  Rng rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    const auto tuple = sample_tuple(0.0, 10.0, 8, rng);
    CHECK(sampled_psd(kwong_matrix(functions::power(0.5), tuple)));
  }

  try {
    kwong_matrix(functions::log1p(), std::vector<double>{1.0, 0.0});
    FAIL("expected NonPositiveLambda");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveLambda);
  }
  try {
    kwong_matrix(functions::log1p(), std::vector<double>{1.0, 2.0, 1.0});
    FAIL("expected DuplicateLambda");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateLambda);
  }
}

TEST_CASE("loewner_matrix") {
  const std::vector<double> l{0.5, 1.5, 7.0};
  CHECK(distance(loewner_matrix(functions::power(1.0), l), ComplexMatrix::ones(3)) <= 1e-9);

  const ComplexMatrix sq = loewner_matrix(functions::power(2.0), std::vector<double>{1.0, 2.0});
  CHECK(distance(sq, ComplexMatrix::from_rows({{2.0, 3.0}, {3.0, 4.0}})) <= 1e-8);
  const double oracle = min_eig_2x2(2.0, 3.0, 4.0);  // 3 - sqrt(10)
  CHECK(oracle < 0.0);
  CHECK(min_eigenvalue(sq) == doctest::Approx(oracle).epsilon(1e-7));

  Rng rng(45);
  for (int trial = 0; trial < 50; ++trial) {
    const auto tuple = sample_tuple(0.0, 10.0, 8, rng);
    CHECK(sampled_psd(loewner_matrix(functions::power(0.5), tuple)));
  }
}

TEST_CASE("certify_kwong") {
  const KwongCertificate id = certify_kwong(functions::power(1.0), 0.0, 10.0, 100, 8, 1);
  CHECK(id.verdict == Verdict::CertifiedSampled);

  const KwongCertificate log = certify_kwong(functions::log1p(), 0.0, 10.0, 200, 8, 2);
  CHECK(log.verdict == Verdict::CertifiedSampled);
  CHECK(log.min_eig_observed >= -1e-10);

  const KwongCertificate sq = certify_kwong(functions::power(2.0), 0.1, 10.0, 200, 8, 3);
  REQUIRE(sq.verdict == Verdict::Refuted);
  REQUIRE(sq.witness);
  const ComplexMatrix w = kwong_matrix(functions::power(2.0), *sq.witness);
  CHECK(min_eigenvalue(w) < -sampled_psd_tol(w));

  // Same seed, same certificate.
  CHECK(certify_kwong(functions::power(2.0), 0.1, 10.0, 200, 8, 3).to_json() == sq.to_json());
}

TEST_CASE("brute-force witness for t^2 over 2-tuples") {
  // Independent of the sampler: a coarse grid of pairs in (0.1, 10).
  bool found = false;
  for (double x = 0.1; x < 10.0 && !found; x *= 1.3)
    for (double y = x * 1.3; y < 10.0 && !found; y *= 1.3) {
      const double kxx = x, kyy = y, kxy = (x * x + y * y) / (x + y);
      found = min_eig_2x2(kxx, kxy, kyy) < -1e-10 * std::max(1.0, kyy);
    }
  CHECK(found);
}

TEST_CASE("certify_operator_monotone") {
  CHECK(certify_operator_monotone(functions::power(1.0), 0.0, 10.0, 100, 8, 4).verdict ==
        Verdict::CertifiedSampled);
  // sqrt(x) * (sqrt(x))^{1/2} = x^{3/4}.
  const ScalarFunction g = audenaert_transform(functions::power(0.5));
  CHECK(g(16.0) == doctest::Approx(8.0));
  CHECK(certify_operator_monotone(g, 0.0, 100.0, 200, 8, 5).verdict == Verdict::CertifiedSampled);
  const KwongCertificate cube = certify_operator_monotone(parse_function("prod(power:2,power:1)"),
                                                          0.0, 10.0, 200, 8, 6);
  CHECK(cube.verdict == Verdict::Refuted);
}

TEST_CASE("audenaert_transform") {
  const ScalarFunction id = audenaert_transform(functions::power(1.0));
  const ScalarFunction root = audenaert_transform(functions::constant(1.0));
  const ScalarFunction pw = audenaert_transform(functions::power(0.3));
  for (double x : {0.01, 0.7, 3.0, 50.0}) {
    CHECK(id(x) == doctest::Approx(x));
    CHECK(root(x) == doctest::Approx(std::sqrt(x)));
    CHECK(pw(x) == doctest::Approx(std::pow(x, 0.65)));
  }
  CHECK(audenaert_interval(0.5, 3.0) == std::pair<double, double>{0.25, 9.0});
}

TEST_CASE("cone, reciprocal and Audenaert properties on shared tuples") {
  const std::vector<ScalarFunction> monotone{functions::power(0.0), functions::power(0.25),
                                             functions::power(0.5), functions::power(1.0),
                                             functions::log1p()};
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto tuple = sample_tuple(0.0, 10.0, 8, rng);
    for (const auto& f : monotone) {
      const ComplexMatrix k = kwong_matrix(f, tuple);
      REQUIRE(sampled_psd(k));
      const ScalarFunction inv = functions::quotient(functions::constant(1.0), f);
      CHECK(sampled_psd(kwong_matrix(inv, tuple)));
    }
    const double c1 = rng.uniform(0.0, 3.0);
    const double c2 = rng.uniform(0.0, 3.0);
    const auto& f1 = rng.pick(monotone);
    const auto& f2 = rng.pick(monotone);
    const ComplexMatrix mixed = kwong_matrix(functions::combination(c1, f1, c2, f2), tuple);
    const ComplexMatrix sum = c1 * kwong_matrix(f1, tuple) + c2 * kwong_matrix(f2, tuple);
    CHECK(distance(mixed, sum) <= 1e-12 * (1.0 + sum.frobenius_norm()));
    CHECK(sampled_psd(mixed));
  }

  for (const auto& f : monotone) {
    CHECK(audenaert_cooccurrence(f, 0.0, 10.0, 100, 8, 9).disagreements() == 0);
  }
  const CooccurrenceCounts sq = audenaert_cooccurrence(functions::power(2.0), 0.1, 10.0, 100, 6, 9);
  CHECK(sq.disagreements() == 0);
  CHECK(sq.neither_psd > 0);
}
