#include "g1norms/calculus.hpp"

#include <cmath>

#include "g1norms/prng.hpp"

namespace g1norms {

void ContourSpec::validate() const {
  if (!(radius > 0.0 && radius < 1.0)) {
    throw DomainError("ContourSpec: radius must lie in (0, 1)");
  }
  if (nodes < 16 || nodes % 2 != 0) {
    throw DomainError("ContourSpec: node count must be even and at least 16");
  }
}

namespace {

ComplexMatrix spectral_transform(const SpectralDecomposition& d,
                                 const std::vector<Complex>& diag_values) {
  const std::size_t n = d.eigenvalues.size();
  ComplexMatrix scaled = d.eigenvectors;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= diag_values[j];
  return multiply(scaled, adjoint(d.eigenvectors));
}

void require_spectrum_in_disk(const std::vector<Complex>& eigenvalues, const char* who) {
  for (const Complex& lam : eigenvalues) {
    if (!(std::abs(lam) < 1.0)) {
      throw DomainError(std::string(who) + ": spectrum not inside unit disk");
    }
  }
}

}  // namespace

ComplexMatrix apply_spectral(const HerglotzMeasure& m, const SpectralDecomposition& d) {
  require_spectrum_in_disk(d.eigenvalues, "apply_spectral");
  std::vector<Complex> fvals(d.eigenvalues.size());
  for (std::size_t j = 0; j < d.eigenvalues.size(); ++j) {
    fvals[j] = herglotz_eval(m, d.eigenvalues[j]);
  }
  return spectral_transform(d, fvals);
}

ComplexMatrix apply_spectral_adjoint(const HerglotzMeasure& m, const SpectralDecomposition& d) {
  require_spectrum_in_disk(d.eigenvalues, "apply_spectral_adjoint");
  std::vector<Complex> fvals(d.eigenvalues.size());
  for (std::size_t j = 0; j < d.eigenvalues.size(); ++j) {
    fvals[j] = herglotz_eval(m, std::conj(d.eigenvalues[j]));
  }
  return spectral_transform(d, fvals);
}

ComplexMatrix resolvent(const ComplexMatrix& a, Complex z) {
  if (!a.is_square()) throw ShapeError("resolvent: matrix must be square");
  ComplexMatrix shifted = ComplexMatrix::identity(a.rows()) * z - a;
  return solve(shifted, ComplexMatrix::identity(a.rows()));
}

namespace {

ComplexMatrix contour_quadrature(const std::function<Complex(Complex)>& f, const ComplexMatrix& a,
                                 double radius, std::size_t nodes) {
  const std::size_t n = a.rows();
  ComplexMatrix acc(n, n);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double theta = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(nodes);
    const Complex z = radius * Complex(std::cos(theta), std::sin(theta));
    acc += (f(z) * z) * resolvent(a, z);
  }
  return acc * Complex(1.0 / static_cast<double>(nodes), 0.0);
}

}  // namespace

ComplexMatrix riesz_dunford(const std::function<Complex(Complex)>& f, const ComplexMatrix& a,
                            const ContourSpec& c, bool verify_convergence) {
  if (!a.is_square()) throw ShapeError("riesz_dunford: matrix must be square");
  c.validate();
  // The containment check runs whenever the spectrum is computable without
  // a general eigensolver; otherwise it stays the caller's obligation.
  if (auto spectrum = try_spectrum(a)) {
    for (const Complex& lam : *spectrum) {
      if (std::abs(lam) >= c.radius) {
        throw ContourError("riesz_dunford: spectral radius reaches the contour");
      }
    }
  }
  ComplexMatrix result = contour_quadrature(f, a, c.radius, c.nodes);
  if (verify_convergence) {
    const ComplexMatrix refined = contour_quadrature(f, a, c.radius, 2 * c.nodes);
    if (operator_norm(result - refined) > 1e-8) {
      throw AccuracyError("riesz_dunford: quadrature did not settle between N and 2N nodes");
    }
  }
  return result;
}

double spectral_gap(std::span<const Complex> eigenvalues) {
  double gap = 1.0;
  for (const Complex& lam : eigenvalues) {
    const double mod = std::abs(lam);
    if (!(mod < 1.0)) throw DomainError("spectral_gap: spectrum not inside unit disk");
    gap = std::min(gap, 1.0 - mod);
  }
  return gap;
}

namespace {

double distance_to(std::span<const Complex> spectrum, Complex z) {
  double d = std::numeric_limits<double>::infinity();
  for (const Complex& lam : spectrum) d = std::min(d, std::abs(z - lam));
  return d;
}

}  // namespace

double g1_deviation(const ComplexMatrix& a, std::span<const Complex> spectrum, Complex z) {
  const double dist = distance_to(spectrum, z);
  if (!(dist > 0.0) || !std::isfinite(dist)) {
    throw DomainError("g1_deviation: probe coincides with the spectrum");
  }
  return operator_norm(resolvent(a, z)) * dist - 1.0;
}

G1Certificate g1_certify(const ComplexMatrix& a, std::size_t probes,
                         std::span<const Complex> extra_points) {
  auto spectrum = try_spectrum(a);
  if (!spectrum) {
    throw NotNormalError(
        "g1_certify: spectrum not computable for a non-normal matrix of this size; "
        "pass it explicitly",
        normality_residual(a));
  }
  return g1_certify(a, *spectrum, probes, extra_points);
}

G1Certificate g1_certify(const ComplexMatrix& a, std::span<const Complex> spectrum,
                         std::size_t probes, std::span<const Complex> extra_points) {
  if (probes < 8) throw DomainError("g1_certify: at least 8 probes required");

  G1Certificate cert;
  auto consider = [&](Complex z, double min_dist) {
    if (distance_to(spectrum, z) < min_dist) return;
    const double dev = g1_deviation(a, spectrum, z);
    cert.grid.push_back(z);
    cert.deviations.push_back(dev);
    cert.max_deviation = std::max(cert.max_deviation, std::abs(dev));
  };

  // Unit-circle angles; points nearly touching the spectrum are skipped to
  // keep the resolvent solve well posed.
  for (std::size_t k = 0; k < probes; ++k) {
    const double theta = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(probes);
    consider(Complex(std::cos(theta), std::sin(theta)), 1e-6);
  }
  // Deterministic pseudo-random exterior points, distance at least 0.05.
  CounterRng rng(derive_key(0x6731636572746966ULL, probes));
  std::size_t accepted = 0;
  for (std::size_t attempt = 0; attempt < 8 * probes && accepted < probes; ++attempt) {
    const double angle = 2.0 * M_PI * rng.next_unit();
    const double radius = 1.05 + 0.95 * rng.next_unit();
    const Complex z = radius * Complex(std::cos(angle), std::sin(angle));
    if (distance_to(spectrum, z) < 0.05) continue;
    consider(z, 0.05);
    ++accepted;
  }
  for (const Complex& z : extra_points) consider(z, 1e-8);
  return cert;
}

}  // namespace g1norms
