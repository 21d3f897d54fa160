#include <doctest.h>

#include <cmath>

#include "g1norms/calculus.hpp"
#include "g1norms/samplers.hpp"

using namespace g1norms;

namespace {

const Complex kI(0.0, 1.0);

bool complex_multisets_match(std::vector<Complex> a, std::vector<Complex> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const Complex& x : a) {
    double best = 1e300;
    std::size_t arg = b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double d = std::abs(x - b[j]);
      if (d < best) {
        best = d;
        arg = j;
      }
    }
    if (arg == b.size() || best > tol) return false;
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(arg));
  }
  return true;
}

}  // namespace

TEST_CASE("herglotz evaluation: closed forms") {
  const HerglotzMeasure moebius = HerglotzMeasure::point(0.0);
  CHECK(std::abs(herglotz_eval(moebius, Complex(0.5, 0.0)) - Complex(3.0, 0.0)) <= 1e-14);

  HerglotzMeasure two{{{0.0, 0.5}, {M_PI, 0.5}}};
  CHECK(std::abs(herglotz_eval(two, Complex(0.5, 0.0)) - Complex(5.0 / 3.0, 0.0)) <= 1e-14);

  SamplerConfig cfg;
  cfg.dim = 2;
  for (std::uint64_t k = 0; k < 10; ++k) {
    const HerglotzMeasure m = random_herglotz(cfg.with_seed(k));
    CHECK(std::abs(herglotz_eval(m, Complex(0.0, 0.0)) - Complex(1.0, 0.0)) <= 1e-12);
  }

  CHECK_THROWS_AS(herglotz_eval(moebius, Complex(1.0, 0.0)), DomainError);
  CHECK_THROWS_AS(herglotz_eval(moebius, Complex(0.9, 0.9)), DomainError);
}

TEST_CASE("herglotz positivity on the disk") {
  SamplerConfig cfg;
  cfg.dim = 2;
  CounterRng zrng(314159);
  for (std::uint64_t k = 0; k < 10; ++k) {
    const HerglotzMeasure m = random_herglotz(cfg.with_seed(100 + k));
    for (int rep = 0; rep < 20; ++rep) {
      const Complex z = 0.99 * zrng.next_in_disk(1.0);
      CHECK(herglotz_eval(m, z).real() > 0.0);
    }
  }
}

TEST_CASE("uniform atomic measure approximates the constant 1") {
  const HerglotzMeasure m = HerglotzMeasure::uniform(64);
  CounterRng zrng(2718);
  for (int rep = 0; rep < 50; ++rep) {
    const Complex z = zrng.next_in_disk(0.5);
    CHECK(std::abs(herglotz_eval(m, z) - Complex(1.0, 0.0)) <= 1e-12);
  }
}

TEST_CASE("measure validation") {
  HerglotzMeasure bad{{{0.0, 0.7}, {1.0, 0.2}}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  HerglotzMeasure neg{{{0.0, 1.5}, {1.0, -0.5}}};
  CHECK_THROWS_AS(neg.validate(), DomainError);
  HerglotzMeasure ok{{{0.25, 0.5}, {5.5, 0.5}}};
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("apply_spectral") {
  // zero matrix maps to the identity for any measure
  SamplerConfig cfg;
  cfg.dim = 3;
  const HerglotzMeasure m = random_herglotz(cfg.with_seed(5));
  SpectralDecomposition zero_dec{std::vector<Complex>(3, Complex(0.0, 0.0)),
                                 ComplexMatrix::identity(3)};
  CHECK(operator_norm(apply_spectral(m, zero_dec) - ComplexMatrix::identity(3)) <= 1e-12);

  // scalar evaluation on a diagonal matrix
  SpectralDecomposition diag_dec{{Complex(0.5, 0.0), Complex(-0.25, 0.0)},
                                 ComplexMatrix::identity(2)};
  const ComplexMatrix fd = apply_spectral(HerglotzMeasure::point(0.0), diag_dec);
  CHECK(std::abs(fd(0, 0) - Complex(3.0, 0.0)) <= 1e-13);
  CHECK(std::abs(fd(1, 1) - Complex(0.6, 0.0)) <= 1e-13);

  // spectral mapping: eigenvalues of f(A) are f(eigenvalues)
  for (std::uint64_t k = 0; k < 6; ++k) {
    const NormalSample a = random_normal_in_disk(cfg.with_seed(200 + k));
    const HerglotzMeasure f = random_herglotz(cfg.with_seed(300 + k));
    const ComplexMatrix fa = apply_spectral(f, a.decomposition);
    std::vector<Complex> expect;
    for (const Complex& lam : a.decomposition.eigenvalues)
      expect.push_back(herglotz_eval(f, lam));
    // fa is normal by construction; recover its spectrum
    const SpectralDecomposition dec = eig_normal(fa, 1e-8);
    CHECK(complex_multisets_match(dec.eigenvalues, expect, 1e-9));
  }

  SpectralDecomposition outside{{Complex(1.5, 0.0)}, ComplexMatrix::identity(1)};
  CHECK_THROWS_AS(apply_spectral(m, outside), DomainError);
}

TEST_CASE("resolvent closed forms") {
  const ComplexMatrix zero2 = ComplexMatrix::zero(2);
  CHECK(operator_norm(resolvent(zero2, Complex(2.0, 0.0)) -
                      Complex(0.5, 0.0) * ComplexMatrix::identity(2)) <= 1e-14);

  const ComplexMatrix half{{0.5}};
  CHECK(std::abs(resolvent(half, Complex(1.0, 0.0))(0, 0) - Complex(2.0, 0.0)) <= 1e-14);

  const ComplexMatrix jordan{{0.0, 1.0}, {0.0, 0.0}};
  const ComplexMatrix r = resolvent(jordan, Complex(0.5, 0.0));
  CHECK(std::abs(r(0, 0) - Complex(2.0, 0.0)) <= 1e-13);
  CHECK(std::abs(r(0, 1) - Complex(4.0, 0.0)) <= 1e-13);
  CHECK(std::abs(r(1, 0)) <= 1e-14);
  CHECK(std::abs(r(1, 1) - Complex(2.0, 0.0)) <= 1e-13);
}

TEST_CASE("riesz_dunford: polynomial and constant calculus") {
  const ComplexMatrix jordan{{0.0, 1.0}, {0.0, 0.0}};
  ContourSpec c;
  c.radius = 0.75;
  c.nodes = 64;
  const ComplexMatrix sq = riesz_dunford([](Complex z) { return z * z; }, jordan, c, true);
  CHECK(sq.max_abs() <= 1e-12);  // the block is nilpotent

  SamplerConfig cfg;
  cfg.dim = 4;
  cfg.min_gap = 0.3;
  const NormalSample a = random_normal_in_disk(cfg.with_seed(17));
  ContourSpec wide;
  wide.radius = 0.85;  // comfortable margin over the 0.7 spectral radius cap
  wide.nodes = 256;
  const ComplexMatrix one =
      riesz_dunford([](Complex) { return Complex(1.0, 0.0); }, a.matrix, wide, true);
  CHECK(operator_norm(one - ComplexMatrix::identity(4)) <= 1e-10);
}

TEST_CASE("riesz_dunford vs apply_spectral") {
  // pinned diagonal case
  SpectralDecomposition diag_dec{{Complex(0.5, 0.0), Complex(-0.25, 0.0)},
                                 ComplexMatrix::identity(2)};
  ComplexMatrix diag(2, 2);
  diag(0, 0) = 0.5;
  diag(1, 1) = -0.25;
  const HerglotzMeasure atom = HerglotzMeasure::point(0.0);
  ContourSpec c;
  c.radius = 0.75;
  c.nodes = 256;
  const ComplexMatrix via_contour =
      riesz_dunford([&](Complex z) { return herglotz_eval(atom, z); }, diag, c);
  CHECK(operator_norm(via_contour - apply_spectral(atom, diag_dec)) <= 1e-10);

  // random cross-method agreement at the default contour
  SamplerConfig cfg;
  cfg.dim = 5;
  cfg.min_gap = 0.2;
  for (std::uint64_t k = 0; k < 5; ++k) {
    const NormalSample a = random_normal_in_disk(cfg.with_seed(400 + k));
    const HerglotzMeasure f = random_herglotz(cfg.with_seed(500 + k));
    double rho = 0.0;
    for (const Complex& lam : a.decomposition.eigenvalues) rho = std::max(rho, std::abs(lam));
    ContourSpec cc;
    cc.radius = 0.5 * (rho + 1.0);
    cc.nodes = 256;
    const ComplexMatrix q =
        riesz_dunford([&](Complex z) { return herglotz_eval(f, z); }, a.matrix, cc);
    CHECK(operator_norm(q - apply_spectral(f, a.decomposition)) <= 1e-9);
  }
}

TEST_CASE("riesz_dunford error paths") {
  SamplerConfig cfg;
  cfg.dim = 3;
  cfg.min_gap = 0.2;
  const NormalSample a = random_normal_in_disk(cfg.with_seed(21));
  double rho = 0.0;
  for (const Complex& lam : a.decomposition.eigenvalues) rho = std::max(rho, std::abs(lam));

  ContourSpec tight;
  tight.radius = rho * 0.5;  // contour inside the spectrum
  tight.nodes = 64;
  if (tight.radius > 0.0) {
    CHECK_THROWS_AS(
        riesz_dunford([](Complex z) { return z; }, a.matrix, tight), ContourError);
  }

  ContourSpec bad;
  bad.radius = 0.5;
  bad.nodes = 10;  // too few, odd counts also rejected
  CHECK_THROWS_AS(riesz_dunford([](Complex z) { return z; }, a.matrix, bad), DomainError);

  // grazing contour with few nodes fails the doubling check
  ContourSpec grazing;
  grazing.radius = std::min(0.999, rho + 0.01);
  grazing.nodes = 16;
  if (grazing.radius > rho) {
    CHECK_THROWS_AS(riesz_dunford([](Complex z) { return Complex(1.0, 0.0) / (Complex(1.0, 0.0) - z); },
                                  a.matrix, grazing, true),
                    AccuracyError);
  }
}

TEST_CASE("spectral gap") {
  const std::vector<Complex> spec1 = {Complex(0.5, 0.0), Complex(0.0, 0.3)};
  CHECK(spectral_gap(spec1) == doctest::Approx(0.5).epsilon(1e-12));
  const std::vector<Complex> spec2 = {Complex(0.0, 0.0)};
  CHECK(spectral_gap(spec2) == doctest::Approx(1.0));

  SamplerConfig cfg;
  cfg.dim = 6;
  for (std::uint64_t k = 0; k < 6; ++k) {
    const NormalSample a = random_normal_in_disk(cfg.with_seed(600 + k));
    double max_mod = 0.0;
    for (const Complex& lam : a.decomposition.eigenvalues)
      max_mod = std::max(max_mod, std::abs(lam));
    CHECK(std::abs(spectral_gap(a.decomposition.eigenvalues) - (1.0 - max_mod)) <= 1e-12);
  }

  const std::vector<Complex> outside = {Complex(1.0, 0.0)};
  CHECK_THROWS_AS(spectral_gap(outside), DomainError);
}

TEST_CASE("g1 certification") {
  SamplerConfig cfg;
  cfg.dim = 5;
  for (std::uint64_t k = 0; k < 6; ++k) {
    const NormalSample a = random_normal_in_disk(cfg.with_seed(700 + k));
    const G1Certificate cert = g1_certify(a.matrix, 16);
    CHECK(cert.max_deviation <= 1e-7);
    for (double dev : cert.deviations) CHECK(dev >= -1e-9);
  }

  // scalar case: deviation vanishes
  const ComplexMatrix scalar{{Complex(0.3, 0.4)}};
  CHECK(g1_certify(scalar, 8).max_deviation <= 1e-13);

  // The nilpotent block is detected: at z = 0.5 the resolvent norm is
  // 2 + 2 sqrt(2) while 1/dist = 2.
  const ComplexMatrix jordan{{0.0, 1.0}, {0.0, 0.0}};
  const std::vector<Complex> spectrum = {Complex(0.0, 0.0), Complex(0.0, 0.0)};
  const std::vector<Complex> extra = {Complex(0.5, 0.0)};
  const G1Certificate cert = g1_certify(jordan, spectrum, 16, extra);
  CHECK(cert.max_deviation > 0.5);
  const double at_half = g1_deviation(jordan, spectrum, Complex(0.5, 0.0));
  CHECK(at_half == doctest::Approx(M_SQRT2).epsilon(1e-9));

  CHECK_THROWS_AS(g1_certify(jordan, 4), DomainError);

  ComplexMatrix shift3(3, 3);
  shift3(0, 1) = 1.0;
  shift3(1, 2) = 1.0;
  CHECK_THROWS_AS(g1_certify(shift3, 16), NotNormalError);
  const std::vector<Complex> spec3(3, Complex(0.0, 0.0));
  CHECK_NOTHROW(g1_certify(shift3, spec3, 16));
}
