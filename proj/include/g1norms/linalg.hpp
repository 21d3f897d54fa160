#ifndef G1NORMS_LINALG_HPP
#define G1NORMS_LINALG_HPP

#include <optional>
#include <vector>

#include "g1norms/complex_matrix.hpp"

namespace g1norms {

// Global comparison slack: lhs <= rhs is accepted when
// lhs <= rhs * (1 + kRelSlack) + kAbsSlack.
inline constexpr double kRelSlack = 1e-9;
inline constexpr double kAbsSlack = 1e-12;

inline bool leq_with_slack(double lhs, double rhs) {
  return lhs <= rhs * (1.0 + kRelSlack) + kAbsSlack;
}

// Singular values, sorted non-increasing, all >= 0.
struct SingularSpectrum {
  std::vector<double> values;
};

// Eigenvalues plus a unitary eigenvector matrix of a normal matrix:
// a = eigenvectors * diag(eigenvalues) * eigenvectors^*.
struct SpectralDecomposition {
  std::vector<Complex> eigenvalues;
  ComplexMatrix eigenvectors;
};

// Eigenvalues (ascending) and accumulated unitary of a Hermitian matrix,
// via cyclic Jacobi rotations. Throws NumericalError on non-convergence.
struct HermitianEigen {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};
HermitianEigen eig_hermitian(const ComplexMatrix& a);

// Singular values via the Hermitian eigensolve of a^* a. Tiny negative
// eigenvalues in [-1e-12, 0] are clamped to 0.
SingularSpectrum singular_values(const ComplexMatrix& a);

// Operator norm = largest singular value.
double operator_norm(const ComplexMatrix& a);

// |a| = (a^* a)^{1/2}; Hermitian positive semidefinite. Requires a square.
ComplexMatrix absolute_value(const ComplexMatrix& a);

// Square root of a Hermitian PSD matrix through its spectral decomposition.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

// Diagonalize a normal matrix through the split a = H + iK with
// H = (a + a^*)/2, K = (a - a^*)/(2i): diagonalize H, then K restricted to
// each eigenspace of H (grouping threshold 1e-8 * ||a||_op, escalated if the
// reconstruction residual demands it). Throws NotNormalError when
// ||a^*a - aa^*||_op > tol * ||a||_op^2.
SpectralDecomposition eig_normal(const ComplexMatrix& a, double tol = 1e-10);

// Residual ||a^*a - aa^*||_op of the normality test.
double normality_residual(const ComplexMatrix& a);

// Solve a X = rhs by elimination with partial pivoting. Throws
// SingularMatrixError when a pivot falls below 1e-14 * ||a||_op.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& rhs);

// Eigenvalues when they are computable without a general nonsymmetric
// eigensolver: the normal-split path, or the closed-form quadratic for
// n <= 2. Empty when neither applies.
std::optional<std::vector<Complex>> try_spectrum(const ComplexMatrix& a, double normal_tol = 1e-10);

}  // namespace g1norms

#endif  // G1NORMS_LINALG_HPP
