#include "radiuslab/function.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

#include "radiuslab/error.hpp"

namespace radiuslab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool finite(std::optional<double> v) { return v && std::isfinite(*v); }

}  // namespace

std::string format_number(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return std::to_string(v);
  return std::string(buf, end);
}

ScalarFunction::ScalarFunction(std::string name, Eval eval, std::optional<double> value_at_zero,
                               std::optional<double> derivative_at_zero,
                               std::vector<double> params)
    : name_(std::move(name)),
      eval_(std::move(eval)),
      value_at_zero_(value_at_zero),
      derivative_at_zero_(derivative_at_zero),
      params_(std::move(params)) {}

double ScalarFunction::at(double t) const {
  if (t == 0.0) {
    if (!value_at_zero_) {
      throw Error(ErrorCode::UndefinedAtZero, name_ + " has no value at 0");
    }
    return *value_at_zero_;
  }
  return eval_(t);
}

namespace functions {

ScalarFunction power(double alpha) {
  if (!(alpha >= -1.0 && alpha <= 2.0)) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "power: exponent " + format_number(alpha) + " outside [-1, 2]");
  }
  std::optional<double> at_zero;
  std::optional<double> slope;
  if (alpha == 0.0) {
    at_zero = 1.0;
    slope = 0.0;
  } else if (alpha > 0.0) {
    at_zero = 0.0;
    slope = alpha < 1.0 ? kInf : (alpha == 1.0 ? 1.0 : 0.0);
  }
  return ScalarFunction(
      "power:" + format_number(alpha), [alpha](double t) { return std::pow(t, alpha); }, at_zero,
      slope, {alpha});
}

ScalarFunction constant(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw Error(ErrorCode::DomainError, "const: value must be positive and finite");
  }
  return ScalarFunction(
      "const:" + format_number(c), [c](double) { return c; }, c, 0.0, {c});
}

ScalarFunction log1p() {
  return ScalarFunction(
      "log1p", [](double t) { return std::log1p(t); }, 0.0, 1.0);
}

ScalarFunction t_over(const ScalarFunction& f) {
  std::optional<double> at_zero;
  std::optional<double> slope;
  const auto f0 = f.value_at_zero();
  const auto df0 = f.derivative_at_zero();
  if (f0 && *f0 > 0.0) {
    at_zero = 0.0;
    slope = 1.0 / *f0;
  } else if (f0 && *f0 == 0.0 && df0) {
    if (std::isinf(*df0)) {
      at_zero = 0.0;
    } else if (*df0 > 0.0) {
      at_zero = 1.0 / *df0;
    }
  }
  return ScalarFunction(
      "tover(" + f.name() + ")", [f](double t) { return t / f(t); }, at_zero, slope);
}

ScalarFunction t_times_square(const ScalarFunction& f) {
  std::optional<double> at_zero;
  std::optional<double> slope;
  if (const auto f0 = f.value_at_zero()) {
    at_zero = 0.0;
    slope = *f0 * *f0;
  }
  return ScalarFunction(
      "tf2(" + f.name() + ")",
      [f](double t) {
        const double v = f(t);
        return t * v * v;
      },
      at_zero, slope);
}

ScalarFunction product(const ScalarFunction& f, const ScalarFunction& g) {
  std::optional<double> at_zero;
  std::optional<double> slope;
  const auto f0 = f.value_at_zero();
  const auto g0 = g.value_at_zero();
  if (f0 && g0) at_zero = *f0 * *g0;
  if (finite(f0) && finite(g0) && finite(f.derivative_at_zero()) &&
      finite(g.derivative_at_zero())) {
    slope = *f.derivative_at_zero() * *g0 + *f0 * *g.derivative_at_zero();
  }
  return ScalarFunction(
      "prod(" + f.name() + "," + g.name() + ")", [f, g](double t) { return f(t) * g(t); },
      at_zero, slope);
}

ScalarFunction quotient(const ScalarFunction& f, const ScalarFunction& g) {
  std::optional<double> at_zero;
  std::optional<double> slope;
  const auto f0 = f.value_at_zero();
  const auto g0 = g.value_at_zero();
  if (f0 && g0 && *g0 != 0.0) {
    at_zero = *f0 / *g0;
    if (finite(f.derivative_at_zero()) && finite(g.derivative_at_zero())) {
      slope = (*f.derivative_at_zero() * *g0 - *f0 * *g.derivative_at_zero()) / (*g0 * *g0);
    }
  }
  return ScalarFunction(
      "quot(" + f.name() + "," + g.name() + ")", [f, g](double t) { return f(t) / g(t); },
      at_zero, slope);
}

ScalarFunction combination(double c1, const ScalarFunction& f, double c2,
                           const ScalarFunction& g) {
  if (!(c1 >= 0.0) || !(c2 >= 0.0)) {
    throw Error(ErrorCode::DomainError, "combination: weights must be nonnegative");
  }
  std::optional<double> at_zero;
  std::optional<double> slope;
  if (f.value_at_zero() && g.value_at_zero()) {
    at_zero = c1 * *f.value_at_zero() + c2 * *g.value_at_zero();
  }
  if (f.derivative_at_zero() && g.derivative_at_zero()) {
    slope = c1 * *f.derivative_at_zero() + c2 * *g.derivative_at_zero();
  }
  return ScalarFunction(
      format_number(c1) + "*" + f.name() + "+" + format_number(c2) + "*" + g.name(),
      [c1, c2, f, g](double t) { return c1 * f(t) + c2 * g(t); }, at_zero, slope, {c1, c2});
}

ScalarFunction sqrt_composite(const ScalarFunction& f) {
  std::optional<double> at_zero;
  std::optional<double> slope;
  if (const auto f0 = f.value_at_zero()) {
    at_zero = 0.0;
    if (*f0 > 0.0) {
      slope = kInf;
    } else if (finite(f.derivative_at_zero())) {
      slope = *f.derivative_at_zero();
    } else if (f.derivative_at_zero()) {
      slope = kInf;
    }
  }
  return ScalarFunction(
      "aud(" + f.name() + ")",
      [f](double x) {
        const double s = std::sqrt(x);
        return s * f(s);
      },
      at_zero, slope);
}

}  // namespace functions

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  ScalarFunction parse_all() {
    ScalarFunction f = parse_spec();
    if (pos_ != text_.size()) fail("trailing characters");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "function spec '" + std::string(text_) + "': " + why +
                                           " at offset " + std::to_string(pos_));
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  double number() {
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr == first) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  ScalarFunction unary(ScalarFunction (*make)(const ScalarFunction&)) {
    ScalarFunction f = parse_spec();
    expect(')');
    return make(f);
  }

  ScalarFunction binary(ScalarFunction (*make)(const ScalarFunction&, const ScalarFunction&)) {
    ScalarFunction f = parse_spec();
    expect(',');
    ScalarFunction g = parse_spec();
    expect(')');
    return make(f, g);
  }

  ScalarFunction parse_spec() {
    if (consume("power:")) return functions::power(number());
    if (consume("const:")) return functions::constant(number());
    if (consume("log1p")) return functions::log1p();
    if (consume("quot(")) return binary(&functions::quotient);
    if (consume("prod(")) return binary(&functions::product);
    if (consume("tf2(")) return unary(&functions::t_times_square);
    if (consume("tover(")) return unary(&functions::t_over);
    if (consume("aud(")) return unary(&functions::sqrt_composite);
    fail("unknown function");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarFunction parse_function(std::string_view spec) {
  try {
    return SpecParser(spec).parse_all();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::pair<ScalarFunction, ScalarFunction> parse_function_pair(std::string_view spec) {
  const auto semi = spec.find(';');
  if (semi == std::string_view::npos || spec.find(';', semi + 1) != std::string_view::npos) {
    throw Error(ErrorCode::ParseError,
                "function pair '" + std::string(spec) + "': expected exactly one ';'");
  }
  return {parse_function(spec.substr(0, semi)), parse_function(spec.substr(semi + 1))};
}

}  // namespace radiuslab
