#include "radiuslab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "radiuslab/error.hpp"

namespace radiuslab {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()) + " differ");
  }
}

}  // namespace

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  ComplexMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::DimensionMismatch, "from_rows: ragged rows");
    std::size_t j = 0;
    for (const auto& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::ones(std::size_t n) {
  ComplexMatrix m(n);
  for (auto& v : m.data_) v = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
  return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix m(n);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex s = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
  return s;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& v : data_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator-(ComplexMatrix m) { return m *= -1.0; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }
ComplexMatrix operator*(ComplexMatrix m, Complex scalar) { return m *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "operator*: inner dimensions differ");
  }
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex(0.0)) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).frobenius_norm();
}

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "hadamard");
  ComplexMatrix out(a.rows(), a.cols());
  auto o = out.data();
  auto x = a.data();
  auto y = b.data();
  for (std::size_t k = 0; k < o.size(); ++k) o[k] = x[k] * y[k];
  return out;
}

ComplexMatrix entrywise_inverse(const ComplexMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (std::abs(a(i, j)) < 1e-14) {
        throw Error(ErrorCode::ZeroEntry, "entrywise_inverse: entry (" + std::to_string(i) +
                                              ", " + std::to_string(j) + ") is zero");
      }
      out(i, j) = 1.0 / a(i, j);
    }
  }
  return out;
}

ComplexMatrix block2x2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                       const ComplexMatrix& d) {
  if (!a.square() || !d.square() || b.rows() != a.rows() || b.cols() != d.cols() ||
      c.rows() != d.rows() || c.cols() != a.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "block2x2: incompatible block shapes");
  }
  const std::size_t p = a.rows();
  const std::size_t q = d.rows();
  ComplexMatrix out(p + q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < q; ++j) out(i, p + j) = b(i, j);
  }
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < p; ++j) out(p + i, j) = c(i, j);
    for (std::size_t j = 0; j < q; ++j) out(p + i, p + j) = d(i, j);
  }
  return out;
}

ComplexMatrix sub_block(const ComplexMatrix& m, std::size_t row, std::size_t col,
                        std::size_t rows, std::size_t cols) {
  if (row + rows > m.rows() || col + cols > m.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "sub_block: range outside matrix");
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = m(row + i, col + j);
  return out;
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matvec: size mismatch");
  std::vector<Complex> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

bool is_hermitian(const ComplexMatrix& h, double tol) {
  if (!h.square()) return false;
  double diff = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) diff += std::norm(h(i, j) - std::conj(h(j, i)));
  return std::sqrt(diff) <= tol * h.frobenius_norm();
}

ComplexMatrix hermitian_part(const ComplexMatrix& h) {
  ComplexMatrix out(h.rows());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  for (std::size_t i = 0; i < h.rows(); ++i) out(i, i) = out(i, i).real();
  return out;
}

}  // namespace radiuslab
