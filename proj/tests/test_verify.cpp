#include <cmath>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "radiuslab/eigen.hpp"
#include "radiuslab/error.hpp"
#include "radiuslab/heinz.hpp"
#include "radiuslab/radius.hpp"
#include "radiuslab/verify.hpp"

using namespace radiuslab;

namespace {

struct Instance {
  ComplexMatrix a, b, x;
};

Instance draw(std::uint64_t seed, std::uint64_t index, std::size_t n) {
  Rng rng(seed, "verify-test", index);
  Instance in;
  in.a = random_psd(n, rng.log_uniform(0.1, 10.0), rng);
  in.b = random_psd(n, rng.log_uniform(0.1, 10.0), rng);
  in.x = random_matrix(n, 1.0, rng);
  return in;
}

std::vector<std::pair<ScalarFunction, ScalarFunction>> kwong_pairs() {
  std::vector<std::pair<ScalarFunction, ScalarFunction>> pairs;
  for (double alpha : {0.1, 0.3, 0.5, 0.7, 0.9})
    pairs.emplace_back(functions::power(alpha), functions::power(1.0 - alpha));
  pairs.emplace_back(functions::log1p(), functions::constant(1.0));
  pairs.emplace_back(functions::power(0.5), functions::t_over(functions::power(0.5)));
  return pairs;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

std::vector<double> tuple(std::uint64_t index, std::size_t max_n = 8) {
  Rng rng(97, "tuple", index);
  const std::size_t n = 1 + rng.index(max_n);
  return random_spectrum(n, 0.01, 10.0, rng);
}

}  // namespace

TEST_CASE("hob1") {
  const auto pw = functions::power(0.3);
  const auto pw_c = functions::power(0.7);
  const Instance in = draw(1, 0, 4);

  const InequalityReport rep = verify_hob1(pw, pw_c, in.a, in.x);
  CHECK(rep.inequality_id == "hob1");
  CHECK(rep.pass);
  CHECK(*rep.constant("k") == doctest::Approx(1.0));
  CHECK(rep.margin == rep.rhs - rep.lhs);
  CHECK(rep.lhs >= 0.0);
  CHECK(rep.omega_abs_tol > 0.0);

  SUBCASE("X = 0") {
    const auto zero = verify_hob1(pw, pw_c, in.a, ComplexMatrix(4));
    CHECK(zero.lhs == 0.0);
    CHECK(zero.rhs == 0.0);
    CHECK(zero.pass);
  }
  SUBCASE("A = I with constant functions") {
    const auto one = functions::constant(1.0);
    const auto r = verify_hob1(one, one, ComplexMatrix::identity(4), in.x);
    const double w2x = numerical_radius(2.0 * in.x).value;
    CHECK(r.lhs == doctest::Approx(w2x).epsilon(1e-9));
    CHECK(r.rhs == doctest::Approx(w2x).epsilon(1e-9));
    CHECK(std::abs(r.margin) <= 1e-8);
    CHECK(r.pass);
  }
  SUBCASE("power pair is the alpha form") {
    const auto r2 = verify_hob2(0.3, in.a, in.x);
    CHECK(r2.lhs == doctest::Approx(rep.lhs).epsilon(1e-9));
    CHECK(r2.rhs == doctest::Approx(rep.rhs).epsilon(1e-9));
    CHECK(r2.pass);
    CHECK(code_of([&] { verify_hob2(1.2, in.a, in.x); }) == ErrorCode::ParameterOutOfRange);
  }
  SUBCASE("singular A is flagged") {
    const auto r = verify_hob1(pw, pw_c, ComplexMatrix::diagonal({1.0, 0.0}), ComplexMatrix::ones(2));
    CHECK(r.has_flag("singular"));
    CHECK(r.pass);
  }
  SUBCASE("non-PSD A") {
    CHECK(code_of([&] { verify_hob1(pw, pw_c, ComplexMatrix::diagonal({1.0, -1.0}), ComplexMatrix::ones(2)); }) ==
          ErrorCode::NotPSD);
  }
}

TEST_CASE("hob11") {
  const auto f = functions::power(0.3);
  const auto g = functions::power(0.7);
  const Instance in = draw(2, 0, 3);

  SUBCASE("B = A, plus sign doubles hob1") {
    const auto r1 = verify_hob1(f, g, in.a, in.x);
    const auto r11 = verify_hob11(f, g, in.a, in.a, in.x, +1);
    CHECK(r11.inequality_id == "hob11_plus");
    CHECK(r11.lhs == doctest::Approx(2.0 * r1.lhs).epsilon(1e-9));
    CHECK(r11.rhs == doctest::Approx(2.0 * r1.rhs).epsilon(1e-9));
    CHECK(r11.pass == r1.pass);
  }
  SUBCASE("B = A, minus sign cancels") {
    const auto r = verify_hob11(f, g, in.a, in.a, in.x, -1);
    CHECK(r.inequality_id == "hob11_minus");
    CHECK(r.lhs <= 1e-12);
    CHECK(r.pass);
  }
  SUBCASE("random instances") {
    for (int i = 0; i < 20; ++i) {
      const Instance s = draw(3, i, 2 + i % 4);
      for (int sign : {+1, -1}) {
        const auto r = verify_hob11(f, g, s.a, s.b, s.x, sign);
        CHECK(r.pass);
        CHECK(*r.constant("k_prime") == doctest::Approx(1.0));
      }
    }
  }
  CHECK(code_of([&] { verify_hob11(f, g, in.a, in.b, in.x, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("hob3") {
  const Instance in = draw(4, 0, 4);
  const auto r = verify_hob3(functions::log1p(), in.a, in.x);
  CHECK(r.pass);
  CHECK(*r.constant("f_prime_0") == 1.0);

  const auto lin = verify_hob3(functions::power(1.0), in.a, in.x);
  CHECK(std::abs(lin.margin) <= 1e-8 * lin.rhs);
  CHECK(lin.pass);

  const auto zero = verify_hob3(functions::log1p(), ComplexMatrix(3), draw(4, 1, 3).x);
  CHECK(zero.lhs == 0.0);
  CHECK(zero.rhs == 0.0);

  const auto two = verify_hob3(functions::log1p(), in.a, in.b, in.x);
  CHECK(two.variant == "two_variable");
  CHECK(two.pass);

  CHECK(code_of([&] { verify_hob3(functions::power(0.5), in.a, in.x); }) ==
        ErrorCode::MissingDerivativeAtZero);
  CHECK(code_of([&] { verify_hob3(functions::power(-0.5), in.a, in.x); }) ==
        ErrorCode::MissingDerivativeAtZero);
  // const:1 has f'(0) = 0 but does not vanish at 0.
  CHECK(code_of([&] { verify_hob3(functions::constant(1.0), in.a, in.x); }) ==
        ErrorCode::ParameterOutOfRange);
}

TEST_CASE("hob5 and its corollary") {
  const auto f = functions::power(0.4);
  const auto g = functions::power(0.6);
  const Instance in = draw(5, 0, 4);

  const auto r = verify_hob5(f, g, in.a, in.x, 2.0);
  CHECK(r.pass);
  CHECK(*r.constant("constant") == doctest::Approx(0.5));

  const auto zero = verify_hob5(f, g, in.a, ComplexMatrix(4), 0.5);
  CHECK(zero.lhs == 0.0);
  CHECK(zero.pass);

  for (double bad : {3.0, -2.0, -2.5}) {
    try {
      verify_hob5(f, g, in.a, in.x, bad);
      FAIL("expected ParameterOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParameterOutOfRange);
      CHECK(std::string(e.what()).find("t out of range") != std::string::npos);
    }
  }

  SUBCASE("written-out corollary form") {
    for (const auto& fn : {functions::power(0.5), functions::log1p(), functions::power(0.2)}) {
      for (int i = 0; i < 10; ++i) {
        const Instance s = draw(6, i, 2 + i % 5);
        const double t = i == 0 ? 2.0 : -1.9 + 0.39 * i;
        const auto c = verify_hob5_corollary(fn, s.a, s.x, t);
        CHECK(c.variant == "corollary");
        CHECK(c.pass);
        CHECK(*c.constant("formulation_gap") <= 1e-9 * std::max(1.0, c.lhs));
        CHECK(*c.constant("constant") == doctest::Approx(4.0 / (t + 2.0)));
        CHECK(*c.constant("k") == doctest::Approx(1.0));
        CHECK_FALSE(c.has_flag("formulation_mismatch"));
      }
    }
    CHECK(code_of([&] {
            verify_hob5_corollary(functions::power(0.5), ComplexMatrix::diagonal({1.0, 0.0}),
                                  ComplexMatrix::ones(2), 0.0);
          }) == ErrorCode::DomainError);
  }
}

TEST_CASE("hob55") {
  const auto f = functions::power(0.25);
  const auto g = functions::power(0.75);
  const Instance in = draw(7, 0, 3);

  const auto same = verify_hob55(f, g, in.a, in.a, in.x, 1.0);
  const auto single = verify_hob5(f, g, in.a, in.x, 1.0);
  CHECK(same.pass);
  CHECK(single.pass);
  CHECK(same.lhs == doctest::Approx(single.lhs).epsilon(1e-9));
  CHECK(same.rhs == doctest::Approx(2.0 * single.rhs).epsilon(1e-9));
  REQUIRE(same.constant("hob5_margin"));
  CHECK(*same.constant("hob5_margin") == doctest::Approx(single.margin).epsilon(1e-9));

  for (int i = 0; i < 10; ++i) {
    const Instance s = draw(8, i, 2 + i % 4);
    const auto r = verify_hob55(f, g, s.a, s.b, s.x, 0.0);
    CHECK(r.pass);
    CHECK_FALSE(r.constant("hob5_margin"));
  }
  const auto zero = verify_hob55(f, g, in.a, in.b, ComplexMatrix(3), 0.0);
  CHECK(zero.lhs == 0.0);
  CHECK(zero.pass);
  CHECK(code_of([&] { verify_hob55(f, g, in.a, in.b, in.x, 2.5); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("log(1+t) example") {
  for (int i = 0; i < 10; ++i) {
    const Instance s = draw(9, i, 2 + i % 5);
    const double t = i == 0 ? 2.0 : -1.95 + 0.4 * i;
    const auto r = verify_log_example(s.a, s.x, t);
    CHECK(r.pass);
    CHECK(*r.constant("constant") == doctest::Approx(2.0 / (t + 2.0)));
  }
}

TEST_CASE("main3") {
  CHECK(main3_r0(1.0) == 0.5);
  CHECK(main3_r0(0.5) == 0.5);
  CHECK(main3_r0(0.75) == 0.75);
  CHECK(main3_r0(1.25) == 0.75);

  // t0 stays in (-2, 2] over the parameter region.
  Rng rng(10);
  for (int i = 0; i < 2000; ++i) {
    const double beta = rng.log_uniform(0.05, 20.0);
    const double t = rng.uniform(-2.0, 2.0 * beta - 2.0);
    const double r = rng.uniform(0.5, 1.5);
    if (!(t > -2.0)) continue;
    const double t0 = main3_t0(beta, t, r);
    CHECK(t0 > -2.0);
    CHECK(t0 <= 2.0 + 1e-12);
  }

  const Instance in = draw(11, 0, 4);
  const auto r = verify_main3(in.a, in.x, 1.0, 0.0, 0.75);
  CHECK(r.pass);
  CHECK(*r.constant("r0") == 0.75);

  const auto r1 = verify_main3(in.a, in.x, 2.0, 1.0, 1.0);
  CHECK(r1.lhs == doctest::Approx(numerical_radius(2.0 * (in.a * in.x * in.a)).value).epsilon(1e-9));
  CHECK(r1.pass);

  CHECK(code_of([&] { verify_main3(in.a, in.x, 0.0, 0.0, 1.0); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([&] { verify_main3(in.a, in.x, 1.0, 0.5, 1.0); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([&] { verify_main3(in.a, in.x, 1.0, -2.0, 1.0); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([&] { verify_main3(in.a, in.x, 1.0, 0.0, 1.6); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([&] { verify_main3(in.a, in.x, 1.0, 0.0, 0.4); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("block lemma") {
  const Instance in = draw(12, 0, 3);
  SUBCASE("Y = X") {
    const auto reps = verify_block_lemma(in.x, in.x);
    REQUIRE(reps.size() == 3);
    const double w = numerical_radius(in.x).value;
    for (const auto& r : reps) CHECK(r.pass);
    CHECK(reps[0].lhs == doctest::Approx(w).epsilon(1e-9));
    CHECK(reps[1].lhs == doctest::Approx(w).epsilon(1e-9));
    CHECK(reps[2].rhs == doctest::Approx(w).epsilon(1e-9));
  }
  SUBCASE("Y = 0") {
    const auto reps = verify_block_lemma(in.x, ComplexMatrix(3));
    CHECK(reps[0].lhs == doctest::Approx(numerical_radius(in.x).value).epsilon(1e-9));
    for (const auto& r : reps) CHECK(r.pass);
  }
  SUBCASE("random pairs") {
    for (int i = 0; i < 10; ++i) {
      const Instance s = draw(13, i, 3);
      for (const auto& r : verify_block_lemma(s.x, s.b * s.x)) CHECK(r.pass);
    }
  }
  CHECK(code_of([&] { verify_block_lemma(in.x, ComplexMatrix(2)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("okubo and sandwich reports") {
  for (int i = 0; i < 10; ++i) {
    const Instance s = draw(14, i, 2 + i % 5);
    CHECK(verify_okubo(s.a, s.x).pass);
    const auto sw = verify_sandwich(s.x);
    REQUIRE(sw.size() == 2);
    CHECK(sw[0].variant == "lower");
    CHECK(sw[1].variant == "upper");
    for (const auto& r : sw) CHECK(r.pass);
  }
}

TEST_CASE("proof matrices") {
  SUBCASE("Z") {
    for (int i = 0; i < 30; ++i) {
      const auto l = tuple(i);
      const auto z = check_proof_matrix_Z(functions::power(0.3), functions::power(0.7), l);
      CHECK(z.psd);
      for (std::size_t k = 0; k < l.size(); ++k) CHECK(z.matrix(k, k).real() == doctest::Approx(1.0));
      CHECK(check_proof_matrix_Z(functions::log1p(), functions::constant(1.0), l).psd);
    }
    // f(t) = t, g = 1: Z = (l_i + l_j)/(l_i + l_j) = J, rank one.
    const auto l = tuple(100);
    const auto z = check_proof_matrix_Z(functions::power(1.0), functions::constant(1.0), l);
    CHECK(z.psd);
    const auto eig = hermitian_eigenvalues(z.matrix);
    if (eig.size() > 1) CHECK(std::abs(eig[eig.size() - 2]) <= 1e-10 * eig.back());
  }
  SUBCASE("Y") {
    for (int i = 0; i < 50; ++i) {
      const auto l = tuple(200 + i);
      CHECK(check_proof_matrix_Y(functions::log1p(), functions::constant(1.0), l, 2.0).psd);
      CHECK(check_proof_matrix_Y(functions::power(0.5), functions::power(0.5), l, 0.0).psd);
    }
    const auto one = check_proof_matrix_Y(functions::log1p(), functions::constant(1.0), {2.0}, 0.0);
    CHECK(one.matrix(0, 0).real() == doctest::Approx(2.0 * std::log(3.0) / 8.0));
    CHECK(code_of([] { check_proof_matrix_Y(functions::log1p(), functions::constant(1.0), {1.0, 2.0}, 2.1); }) ==
          ErrorCode::ParameterOutOfRange);
  }
  SUBCASE("L") {
    for (int i = 0; i < 30; ++i) {
      const auto l = tuple(300 + i);
      CHECK(check_proof_matrix_L(l, 0.0, 0.0).psd);
      CHECK(check_proof_matrix_L(l, -1.0, 0.0).psd);
      const auto cauchy = check_proof_matrix_L(l, 1.0, 2.0);
      for (std::size_t p = 0; p < l.size(); ++p)
        for (std::size_t q = 0; q < l.size(); ++q)
          CHECK(cauchy.matrix(p, q).real() == doctest::Approx(1.0 / (l[p] + l[q])).epsilon(1e-13));
    }
    CHECK(code_of([] { check_proof_matrix_L({1.0, 2.0}, 1.5, 0.0); }) == ErrorCode::ParameterOutOfRange);
  }
  SUBCASE("W") {
    Rng rng(15);
    for (int i = 0; i < 30; ++i) {
      const double beta = rng.log_uniform(0.5, 4.0);
      const double t = -2.0 + rng.uniform(1e-6, 2.0 * beta);
      const double r = rng.uniform(0.5, 1.5);
      const auto w = check_proof_matrix_W(tuple(400 + i), beta, t, r);
      CHECK(w.psd);
      CHECK(w.diag_deviation <= 1e-10);
    }
    const auto single = check_proof_matrix_W({3.0}, 1.0, 0.0, 1.0);
    CHECK(single.matrix(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(check_proof_matrix_W(tuple(500), 1.0, 0.0, 1.0).psd);
    CHECK(code_of([] { check_proof_matrix_W({1.0, 2.0}, 1.0, 0.5, 1.0); }) == ErrorCode::ParameterOutOfRange);
  }
}

TEST_CASE("counterexample search") {
  CounterexampleSearch search;
  search.alpha_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  search.trials = 10000;
  search.dims = {2, 3};
  search.seed = 1;

  SUBCASE("endpoint alphas never violate") {
    CounterexampleSearch ends = search;
    ends.alpha_grid = {0.0, 1.0};
    CHECK_FALSE(search_counterexample(ends).has_value());
  }
  SUBCASE("empty budget") {
    CounterexampleSearch none = search;
    none.trials = 0;
    CHECK_FALSE(search_counterexample(none).has_value());
  }
  SUBCASE("frozen regression witness") {
    const auto rec = search_counterexample(search);
    REQUIRE(rec.has_value());
    CHECK(rec->trial == 35);
    CHECK(rec->alpha == 0.1);

    // Independent re-check at the tight tolerance: lower bound of the left
    // side against upper bound of the right side.
    const ComplexMatrix h = heinz_alpha(rec->alpha, rec->a, rec->b, rec->x);
    const ComplexMatrix s = rec->a * rec->x + rec->x * rec->b;
    const RadiusResult lhs = numerical_radius(h, 1e-11);
    const RadiusResult rhs = numerical_radius(s, 1e-11);
    CHECK(rhs.certified_abs_error <= 1e-11);
    CHECK(lhs.value - (rhs.value + rhs.certified_abs_error) > 1e-6);
    CHECK(numerical_radius_bruteforce(h, 20000, 5) > rhs.value + rhs.certified_abs_error);

    const auto again = replay_counterexample(search, 35);
    REQUIRE(again.has_value());
    CHECK(again->violation == rec->violation);
  }
  SUBCASE("bad grid") {
    CounterexampleSearch bad = search;
    bad.alpha_grid = {1.5};
    CHECK(code_of([&] { search_counterexample(bad); }) == ErrorCode::ParameterOutOfRange);
  }
}

TEST_CASE("report serialization") {
  const Instance in = draw(16, 0, 2);
  const auto r = verify_hob1(functions::log1p(), functions::constant(1.0), in.a, in.x);
  const std::string plain = r.to_json(false);
  CHECK(plain.find("\"inequality_id\":\"hob1\"") != std::string::npos);
  CHECK(plain.find("\"pair\":\"log1p;const:1\"") != std::string::npos);
  CHECK(plain.find("\"matrices\"") == std::string::npos);
  CHECK(r.to_json(true).find("\"matrices\"") != std::string::npos);
  CHECK(plain == verify_hob1(functions::log1p(), functions::constant(1.0), in.a, in.x).to_json(false));
}

TEST_CASE("theorem verifiers over the built-in Kwong pairs") {
  int failures = 0;
  for (const auto& [f, g] : kwong_pairs()) {
    for (int i = 0; i < 15; ++i) {
      const Instance s = draw(17, i, 2 + i % 5);
      const double t = i % 5 == 0 ? 2.0 : -1.9 + 0.27 * (i % 15);
      for (const auto& r : {verify_hob1(f, g, s.a, s.x), verify_hob11(f, g, s.a, s.b, s.x, +1),
                            verify_hob11(f, g, s.a, s.b, s.x, -1), verify_hob5(f, g, s.a, s.x, t),
                            verify_hob55(f, g, s.a, s.b, s.x, t)}) {
        if (!r.pass) ++failures;
      }
    }
  }
  CHECK(failures == 0);
}
