#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace radiuslab {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Almost everything in the library works on
// square matrices; rectangular shapes exist only so that off-diagonal blocks
// can be assembled and extracted.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : ComplexMatrix(n, n) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  // Real entries, row by row: ComplexMatrix::from_rows({{0, 1}, {0, 0}}).
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix ones(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix diagonal(std::initializer_list<double> values);
  // Single-entry matrix with a 1 at (i, j).
  static ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t dim() const noexcept { return rows_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);

// Frobenius distance, mostly for tests and tolerance checks.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b);

// Entrywise reciprocal; rejects entries with modulus below 1e-14.
ComplexMatrix entrywise_inverse(const ComplexMatrix& a);

// [[a, b], [c, d]] with a and d square.
ComplexMatrix block2x2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                       const ComplexMatrix& d);

ComplexMatrix sub_block(const ComplexMatrix& m, std::size_t row, std::size_t col,
                        std::size_t rows, std::size_t cols);

// <x, y> = sum conj(x_i) y_i.
Complex inner(std::span<const Complex> x, std::span<const Complex> y);
std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> x);

// ||H - H*||_F <= tol * ||H||_F.
bool is_hermitian(const ComplexMatrix& h, double tol);
ComplexMatrix hermitian_part(const ComplexMatrix& h);

}  // namespace radiuslab
