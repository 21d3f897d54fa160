#include "g1norms/complex_matrix.hpp"

#include <cmath>
#include <utility>

namespace g1norms {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw ShapeError("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                     " does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  if (!all_finite()) {
    throw DomainError("ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw ShapeError("ComplexMatrix: ragged initializer");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!all_finite()) {
    throw DomainError("ComplexMatrix: non-finite entry");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  for (const auto& v : data_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }
ComplexMatrix operator*(ComplexMatrix a, Complex scalar) { return a *= scalar; }

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("multiply: inner dimensions " + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()));
  }
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      t(j, i) = std::conj(a(i, j));
    }
  }
  return t;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || !b.is_square()) {
    throw ShapeError("direct_sum: blocks must be square");
  }
  const std::size_t m = a.rows();
  const std::size_t n = b.rows();
  ComplexMatrix c(m + n, m + n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(m + i, m + j) = b(i, j);
  return c;
}

}  // namespace g1norms
