#pragma once

#include <cmath>
#include <cstdint>

#include "radiuslab/matrix.hpp"
#include "radiuslab/random.hpp"

namespace radiuslab::testing {

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  return hermitian_part(random_matrix(n, 1.0, rng));
}

inline double vector_norm(const std::vector<Complex>& x) {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

inline std::vector<Complex> random_unit_vector(std::size_t n, Rng& rng) {
  std::vector<Complex> x(n);
  for (auto& v : x) v = rng.complex_normal();
  const double norm = vector_norm(x);
  for (auto& v : x) v /= norm;
  return x;
}

}  // namespace radiuslab::testing
