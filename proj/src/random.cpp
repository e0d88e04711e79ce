#include "radiuslab/random.hpp"

#include <algorithm>
#include <cmath>

#include "radiuslab/error.hpp"

namespace radiuslab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_dim(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "random matrix dimension must be >= 1");
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  // FNV-1a over the stream name, then splitmix over the three keys.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : stream) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(splitmix64(seed) ^ h) ^ index);
}

Rng::Rng(std::uint64_t seed, std::string_view stream, std::uint64_t index)
    : engine_(mix_seed(seed, stream, index)) {}

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

ComplexMatrix random_matrix(std::size_t n, double scale, Rng& rng) {
  require_dim(n);
  if (!(scale > 0.0)) throw Error(ErrorCode::InvalidArgument, "random_matrix: scale must be > 0");
  const double sigma = std::sqrt(scale / 2.0);
  ComplexMatrix m(n);
  for (auto& v : m.data()) v = sigma * rng.complex_normal();
  return m;
}

ComplexMatrix random_matrix(std::size_t n, double scale, std::uint64_t seed) {
  Rng rng(seed);
  return random_matrix(n, scale, rng);
}

ComplexMatrix random_psd(std::size_t n, double scale, Rng& rng) {
  const ComplexMatrix g = random_matrix(n, 1.0, rng);
  ComplexMatrix p = hermitian_part(g.adjoint() * g);
  p *= scale / static_cast<double>(n);
  return p;
}

ComplexMatrix random_psd(std::size_t n, double scale, std::uint64_t seed) {
  Rng rng(seed);
  return random_psd(n, scale, rng);
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  require_dim(n);
  ComplexMatrix q(n);
  for (auto& v : q.data()) v = rng.complex_normal();
  // Modified Gram-Schmidt on columns, twice for orthogonality to rounding.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex proj = 0.0;
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
      }
      double norm = 0.0;
      for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
      norm = std::sqrt(norm);
      for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
    }
  }
  return q;
}

ComplexMatrix random_psd_conditioned(std::size_t n, double scale, double condition, Rng& rng) {
  require_dim(n);
  if (!(condition >= 1.0)) throw Error(ErrorCode::InvalidArgument, "condition must be >= 1");
  const ComplexMatrix u = random_unitary(n, rng);
  std::vector<double> lambda(n);
  for (auto& l : lambda) l = rng.log_uniform(scale / condition, scale);
  ComplexMatrix d = ComplexMatrix::diagonal(lambda);
  return hermitian_part(u * d * u.adjoint());
}

ComplexMatrix random_normal(std::size_t n, Rng& rng, std::vector<Complex>* eigenvalues) {
  const ComplexMatrix u = random_unitary(n, rng);
  ComplexMatrix d(n);
  std::vector<Complex> mu(n);
  for (std::size_t i = 0; i < n; ++i) {
    mu[i] = rng.complex_normal();
    d(i, i) = mu[i];
  }
  if (eigenvalues) *eigenvalues = mu;
  return u * d * u.adjoint();
}

std::vector<double> random_spectrum(std::size_t n, double lo, double hi, Rng& rng) {
  if (!(lo > 0.0 && hi > lo)) throw Error(ErrorCode::InvalidArgument, "random_spectrum: need 0 < lo < hi");
  std::vector<double> out;
  out.reserve(n);
  while (out.size() < n) {
    const double v = rng.log_uniform(lo, hi);
    const bool clash = std::any_of(out.begin(), out.end(),
                                   [&](double w) { return std::abs(v - w) < 1e-10 * hi; });
    if (!clash) out.push_back(v);
  }
  return out;
}

}  // namespace radiuslab
