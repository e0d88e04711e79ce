#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "radiuslab/matrix.hpp"

namespace radiuslab {

// Random stream keyed by (seed, stream, index). Each instance of a suite
// draws from its own key, so instances can be evaluated in any order (or
// concurrently) without perturbing each other.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::string_view stream, std::uint64_t index);

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double log_uniform(double lo, double hi);
  double normal() { return normal_(engine_); }
  Complex complex_normal() {
    const double re = normal();
    return {re, normal()};
  }
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
  }
  template <typename T>
  const T& pick(const std::vector<T>& values) {
    return values[index(values.size())];
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index);

// Complex Gaussian entries with variance `scale`.
ComplexMatrix random_matrix(std::size_t n, double scale, Rng& rng);
ComplexMatrix random_matrix(std::size_t n, double scale, std::uint64_t seed);

// G* G * (scale / n) with G complex Gaussian; PSD by construction.
ComplexMatrix random_psd(std::size_t n, double scale, Rng& rng);
ComplexMatrix random_psd(std::size_t n, double scale, std::uint64_t seed);

// Haar-like unitary from Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

// U diag(lambda) U* with lambda log-uniform in [scale / condition, scale].
ComplexMatrix random_psd_conditioned(std::size_t n, double scale, double condition, Rng& rng);

// U diag(mu) U* with complex Gaussian mu: a random normal matrix. The
// eigenvalues are written to `eigenvalues` when non-null.
ComplexMatrix random_normal(std::size_t n, Rng& rng, std::vector<Complex>* eigenvalues = nullptr);

// Distinct positive values, log-uniform in [lo, hi].
std::vector<double> random_spectrum(std::size_t n, double lo, double hi, Rng& rng);

}  // namespace radiuslab
