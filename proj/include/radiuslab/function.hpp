#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace radiuslab {

// A real function on (0, inf) together with what is known about it at 0.
//
// value_at_zero is the value (or limit) used when a clamped zero eigenvalue
// meets the function; derivative_at_zero may be +inf to record a divergent
// limit (t^a for 0 < a < 1). The name is the canonical spec string, so
// parse_function(f.name()) rebuilds an equivalent function.
class ScalarFunction {
 public:
  using Eval = std::function<double(double)>;

  ScalarFunction(std::string name, Eval eval, std::optional<double> value_at_zero,
                 std::optional<double> derivative_at_zero, std::vector<double> params = {});

  const std::string& name() const noexcept { return name_; }
  double operator()(double t) const { return eval_(t); }

  // Like operator() but routes t == 0 through value_at_zero.
  double at(double t) const;

  std::optional<double> value_at_zero() const noexcept { return value_at_zero_; }
  std::optional<double> derivative_at_zero() const noexcept { return derivative_at_zero_; }
  const std::vector<double>& params() const noexcept { return params_; }

 private:
  std::string name_;
  Eval eval_;
  std::optional<double> value_at_zero_;
  std::optional<double> derivative_at_zero_;
  std::vector<double> params_;
};

namespace functions {

// t^alpha for alpha in [-1, 2].
ScalarFunction power(double alpha);
ScalarFunction constant(double c);
// t -> log(1 + t)
ScalarFunction log1p();
// t -> t / f(t)
ScalarFunction t_over(const ScalarFunction& f);
// t -> t f(t)^2
ScalarFunction t_times_square(const ScalarFunction& f);
ScalarFunction product(const ScalarFunction& f, const ScalarFunction& g);
ScalarFunction quotient(const ScalarFunction& f, const ScalarFunction& g);
// c1 f + c2 g with c1, c2 >= 0.
ScalarFunction combination(double c1, const ScalarFunction& f, double c2, const ScalarFunction& g);
// x -> sqrt(x) f(sqrt(x))
ScalarFunction sqrt_composite(const ScalarFunction& f);

}  // namespace functions

// Grammar (case-sensitive):
//   spec := "power:" num | "const:" num | "log1p"
//         | "quot(" spec "," spec ")" | "prod(" spec "," spec ")"
//         | "tf2(" spec ")" | "tover(" spec ")" | "aud(" spec ")"
// Throws Error(ParseError) on malformed input.
ScalarFunction parse_function(std::string_view spec);

// "f;g" -> {f, g}
std::pair<ScalarFunction, ScalarFunction> parse_function_pair(std::string_view spec);

// Shortest round-trip decimal form, used in canonical names and reports.
std::string format_number(double v);

}  // namespace radiuslab
