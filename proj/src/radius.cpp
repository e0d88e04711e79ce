#include "radiuslab/radius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "radiuslab/eigen.hpp"
#include "radiuslab/error.hpp"

namespace radiuslab {

namespace {

constexpr std::size_t kGridPoints = 720;
constexpr std::size_t kRefineStarts = 3;
constexpr std::size_t kMaxEvaluations = 2'000'000;
constexpr double kMinSpacing = 1e-7;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Sample {
  double theta;
  double value;
};

// lambda_max(cos(theta) re - sin(theta) im) with re = (A + A*)/2 and
// im = (A - A*)/(2i).
class SupportFunction {
 public:
  explicit SupportFunction(const ComplexMatrix& a)
      : re_(hermitian_part(a)), im_(a.rows()), work_(a.rows()) {
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Complex d = a(i, j) - std::conj(a(j, i));
        im_(i, j) = Complex(0.5 * d.imag(), -0.5 * d.real());
      }
    for (std::size_t i = 0; i < n; ++i) im_(i, i) = im_(i, i).real();
  }

  double operator()(double theta) {
    ++count_;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    auto w = work_.data();
    auto r = re_.data();
    auto m = im_.data();
    for (std::size_t k = 0; k < w.size(); ++k) w[k] = c * r[k] - s * m[k];
    return largest_eigenvalue(work_);
  }

  std::size_t count() const { return count_; }

 private:
  ComplexMatrix re_;
  ComplexMatrix im_;
  ComplexMatrix work_;
  std::size_t count_ = 0;
};

// Intersection of the supporting lines at lo and hi (hi - lo in (0, pi)):
// the point e^{-i lo}(h_lo + i s) on the first line that also lies on the
// second.
double vertex_modulus(const Sample& lo, const Sample& hi, double hi_theta) {
  const double delta = hi_theta - lo.theta;
  const double s = (lo.value * std::cos(delta) - hi.value) / std::sin(delta);
  return std::hypot(lo.value, s);
}

void golden_maximize(SupportFunction& h, double a, double b, double width,
                     std::vector<Sample>& out) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = h(c);
  double fd = h(d);
  out.push_back({c, fc});
  out.push_back({d, fd});
  while (b - a > width && h.count() < kMaxEvaluations) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = h(c);
      out.push_back({c, fc});
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = h(d);
      out.push_back({d, fd});
    }
  }
}

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

}  // namespace

ComplexMatrix rotated_hermitian_part(const ComplexMatrix& a, double theta) {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "rotated_hermitian_part: not square");
  const Complex rot = std::polar(1.0, theta);
  const std::size_t n = a.rows();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = (rot * a(i, i)).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (rot * a(i, j) + std::conj(rot * a(j, i)));
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
  return out;
}

double default_radius_tol(const ComplexMatrix& a) {
  return 1e-9 * std::max(1.0, operator_norm(a));
}

RadiusResult numerical_radius(const ComplexMatrix& a) {
  return numerical_radius(a, default_radius_tol(a));
}

RadiusResult numerical_radius(const ComplexMatrix& a, double abs_tol) {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "numerical_radius: not square");
  if (!(abs_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "numerical_radius: abs_tol must be > 0");
  if (!a.all_finite()) throw Error(ErrorCode::InvalidArgument, "numerical_radius: non-finite entry");
  RadiusResult result;
  if (a.rows() == 0) return result;

  SupportFunction h(a);
  const double norm = operator_norm(a);
  const double step = kTwoPi / static_cast<double>(kGridPoints);

  std::vector<Sample> samples;
  samples.reserve(kGridPoints * 2);
  for (std::size_t k = 0; k < kGridPoints; ++k) {
    const double theta = step * static_cast<double>(k);
    samples.push_back({theta, h(theta)});
  }

  // Local maxima of the cyclic grid, best first.
  std::vector<std::size_t> peaks;
  for (std::size_t k = 0; k < kGridPoints; ++k) {
    const double prev = samples[(k + kGridPoints - 1) % kGridPoints].value;
    const double next = samples[(k + 1) % kGridPoints].value;
    if (samples[k].value >= prev && samples[k].value >= next) peaks.push_back(k);
  }
  std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t x, std::size_t y) {
    return samples[x].value > samples[y].value;
  });
  if (peaks.size() > kRefineStarts) peaks.resize(kRefineStarts);

  const double width = abs_tol / std::max(1.0, norm);
  std::vector<Sample> refined;
  for (std::size_t k : peaks) {
    const double centre = samples[k].theta;
    golden_maximize(h, centre - step, centre + step, width, refined);
  }
  for (Sample s : refined) {
    s.theta = wrap_angle(s.theta);
    samples.push_back(s);
  }
  std::sort(samples.begin(), samples.end(),
            [](const Sample& x, const Sample& y) { return x.theta < y.theta; });
  samples.erase(std::unique(samples.begin(), samples.end(),
                            [](const Sample& x, const Sample& y) { return x.theta == y.theta; }),
                samples.end());

  // Close the gap between the supporting-line lower bound and the polygon
  // upper bound. Any subset of supporting lines still encloses the numerical
  // range, so the polygon is built only from samples at least kMinSpacing
  // apart: closer lines meet at a vertex dominated by rounding in h.
  double lower = 0.0;
  double upper = 0.0;
  std::vector<std::size_t> kept;
  for (;;) {
    lower = -std::numeric_limits<double>::infinity();
    for (const Sample& s : samples) lower = std::max(lower, s.value);

    kept.clear();
    for (std::size_t k = 0; k < samples.size(); ++k)
      if (kept.empty() || samples[k].theta - samples[kept.back()].theta >= kMinSpacing)
        kept.push_back(k);
    while (kept.size() > 1 &&
           samples[kept.front()].theta + kTwoPi - samples[kept.back()].theta < kMinSpacing)
      kept.pop_back();

    upper = lower;
    std::vector<double> mids;
    const std::size_t m = kept.size();
    for (std::size_t k = 0; k < m; ++k) {
      const Sample& lo = samples[kept[k]];
      const Sample& hi = samples[kept[(k + 1) % m]];
      const double hi_theta = k + 1 == m ? hi.theta + kTwoPi : hi.theta;
      const double v = vertex_modulus(lo, hi, hi_theta);
      upper = std::max(upper, v);
      if (v > lower + abs_tol && hi_theta - lo.theta >= 2.0 * kMinSpacing)
        mids.push_back(wrap_angle(0.5 * (lo.theta + hi_theta)));
    }
    if (mids.empty() || h.count() >= kMaxEvaluations) break;

    for (double mid : mids) samples.push_back({mid, h(mid)});
    std::sort(samples.begin(), samples.end(),
              [](const Sample& x, const Sample& y) { return x.theta < y.theta; });
  }

  const auto best = std::max_element(samples.begin(), samples.end(),
                                     [](const Sample& x, const Sample& y) { return x.value < y.value; });
  result.value = std::max(0.0, best->value);
  result.argmax_theta = wrap_angle(best->theta);
  result.certified_abs_error = std::max(0.0, upper - lower);
  result.evaluations = h.count();
  return result;
}

double numerical_radius_bruteforce(const ComplexMatrix& a, std::size_t samples,
                                   std::uint64_t seed) {
  if (!a.square()) throw Error(ErrorCode::DimensionMismatch, "numerical_radius_bruteforce: not square");
  if (samples == 0) throw Error(ErrorCode::InvalidArgument, "numerical_radius_bruteforce: samples must be >= 1");
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal;
  const std::size_t n = a.rows();
  std::vector<Complex> x(n);
  double best = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& v : x) v = Complex(normal(engine), normal(engine));
    const double norm2 = inner(x, x).real();
    if (norm2 == 0.0) continue;
    const std::vector<Complex> ax = matvec(a, x);
    best = std::max(best, std::abs(inner(x, ax)) / norm2);
  }
  return best;
}

}  // namespace radiuslab
