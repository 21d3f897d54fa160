#ifndef G1NORMS_HERGLOTZ_HPP
#define G1NORMS_HERGLOTZ_HPP

#include <complex>
#include <vector>

#include "g1norms/errors.hpp"

namespace g1norms {

// Finite atomic probability measure on [0, 2pi) representing a member of
// the class of analytic functions on the disk with positive real part and
// f(0) = 1, through the Herglotz kernel (e^{i a} + z) / (e^{i a} - z).
struct HerglotzMeasure {
  struct Atom {
    double angle;   // in [0, 2pi)
    double weight;  // >= 0
  };
  std::vector<Atom> atoms;

  // Total mass; 1 up to rounding for valid measures.
  double total_weight() const;
  // Throws DomainError unless weights are nonnegative and sum to 1 within
  // 1e-12.
  void validate() const;

  // Single atom at the given angle, weight 1. The atom at angle 0 gives the
  // Moebius function (1+z)/(1-z).
  static HerglotzMeasure point(double angle);
  // n equal atoms at angles 2 pi k / n; approaches the constant function 1.
  static HerglotzMeasure uniform(std::size_t n);
};

// f(z) = sum_j w_j (e^{i a_j} + z) / (e^{i a_j} - z). Requires |z| < 1.
std::complex<double> herglotz_eval(const HerglotzMeasure& m, std::complex<double> z);

}  // namespace g1norms

#endif  // G1NORMS_HERGLOTZ_HPP
