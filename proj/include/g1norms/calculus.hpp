#ifndef G1NORMS_CALCULUS_HPP
#define G1NORMS_CALCULUS_HPP

#include <functional>
#include <span>

#include "g1norms/herglotz.hpp"
#include "g1norms/linalg.hpp"

namespace g1norms {

// Circular contour |z| = radius sampled at `nodes` equispaced points for
// the resolvent integral. The spectrum must lie strictly inside.
struct ContourSpec {
  double radius = 0.75;
  std::size_t nodes = 256;

  void validate() const;
};

// Deviations |  ||(z-A)^{-1}|| * dist(z, sigma(A)) - 1  | over a probe grid.
// A certificate with max_deviation <= 1e-7 attests resolvent-growth
// behavior on the grid; a large deviation is a valid (negative) result.
struct G1Certificate {
  std::vector<Complex> grid;
  std::vector<double> deviations;  // signed: ||R|| * dist - 1, always >= -1e-9
  double max_deviation = 0.0;
};

// f(A) for normal A through its spectral decomposition:
// U diag(f(lambda_j)) U^*. All eigenvalues must satisfy |lambda| < 1.
ComplexMatrix apply_spectral(const HerglotzMeasure& m, const SpectralDecomposition& d);

// Same for the analytic continuation to A^* = U diag(conj lambda) U^*.
ComplexMatrix apply_spectral_adjoint(const HerglotzMeasure& m, const SpectralDecomposition& d);

// (zI - A)^{-1}. Proximity to the spectrum surfaces as SingularMatrixError
// from the pivoted solve.
ComplexMatrix resolvent(const ComplexMatrix& a, Complex z);

// f(A) by trapezoidal quadrature of the Riesz-Dunford contour integral,
// (1/N) sum_k f(z_k) z_k (z_k - A)^{-1} over z_k = r e^{2 pi i k / N};
// geometrically convergent for f analytic past the contour. When
// `verify_convergence` is set, the result is recomputed with 2N nodes and
// an AccuracyError is thrown if the two differ by more than 1e-8.
ComplexMatrix riesz_dunford(const std::function<Complex(Complex)>& f, const ComplexMatrix& a,
                            const ContourSpec& c, bool verify_convergence = false);

// min_j (1 - |lambda_j|); requires every eigenvalue inside the unit disk.
double spectral_gap(std::span<const Complex> eigenvalues);

// Deviation ||(z-A)^{-1}||_op * dist(z, spectrum) - 1 at a single point.
double g1_deviation(const ComplexMatrix& a, std::span<const Complex> spectrum, Complex z);

// Probe `probes` unit-circle angles plus `probes` deterministic exterior
// points (distance to the spectrum at least 0.05), plus any caller-supplied
// extra points. The spectrum is recovered with try_spectrum; matrices it
// cannot handle need the overload below.
G1Certificate g1_certify(const ComplexMatrix& a, std::size_t probes,
                         std::span<const Complex> extra_points = {});
G1Certificate g1_certify(const ComplexMatrix& a, std::span<const Complex> spectrum,
                         std::size_t probes, std::span<const Complex> extra_points = {});

}  // namespace g1norms

#endif  // G1NORMS_CALCULUS_HPP
