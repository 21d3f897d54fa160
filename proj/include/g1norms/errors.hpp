#ifndef G1NORMS_ERRORS_HPP
#define G1NORMS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace g1norms {

// Incompatible matrix dimensions.
struct ShapeError : std::invalid_argument {
  explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Input outside the mathematical domain of an operation
// (spectrum not inside the unit disk, invalid norm parameters, ...).
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// Pivot breakdown in elimination.
struct SingularMatrixError : std::runtime_error {
  explicit SingularMatrixError(const std::string& msg) : std::runtime_error(msg) {}
};

// eig_normal called on a matrix that fails the normality test.
struct NotNormalError : std::runtime_error {
  NotNormalError(const std::string& msg, double commutator_norm_)
      : std::runtime_error(msg), commutator_norm(commutator_norm_) {}
  double commutator_norm;
};

// Iterative eigensolver failed to converge.
struct NumericalError : std::runtime_error {
  NumericalError(const std::string& msg, int iterations_)
      : std::runtime_error(msg), iterations(iterations_) {}
  int iterations;
};

// Contour does not enclose the spectrum.
struct ContourError : std::runtime_error {
  explicit ContourError(const std::string& msg) : std::runtime_error(msg) {}
};

// Quadrature failed its self-consistency (doubling) check.
struct AccuracyError : std::runtime_error {
  explicit AccuracyError(const std::string& msg) : std::runtime_error(msg) {}
};

// Checker precondition violated (e.g. commutation residual too large).
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace g1norms

#endif  // G1NORMS_ERRORS_HPP
