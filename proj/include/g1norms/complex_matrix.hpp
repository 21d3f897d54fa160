#ifndef G1NORMS_COMPLEX_MATRIX_HPP
#define G1NORMS_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "g1norms/errors.hpp"

namespace g1norms {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. The universal carrier for A, B, X, U, I.
// Entries are immutable in spirit: every operation returns a fresh value.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t n) { return ComplexMatrix(n, n); }
  static ComplexMatrix diagonal(const std::vector<Complex>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Complex>& data() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  // Largest entry magnitude; zero matrix gives 0.
  double max_abs() const;
  // Frobenius norm, computed entrywise.
  double frobenius_norm() const;
  bool all_finite() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex scalar);

// Exact matrix product in double precision. Throws ShapeError on mismatch.
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

// Block-diagonal composition diag(a, b); both blocks must be square.
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace g1norms

#endif  // G1NORMS_COMPLEX_MATRIX_HPP
