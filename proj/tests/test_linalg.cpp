#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "g1norms/linalg.hpp"
#include "g1norms/prng.hpp"
#include "g1norms/samplers.hpp"

using namespace g1norms;

namespace {

const Complex kI(0.0, 1.0);

// Independent triple-loop product, written the dumb way on purpose.
ComplexMatrix oracle_multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc(0.0, 0.0);
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  }
  return c;
}

// Largest singular value by power iteration on a^* a.
double oracle_top_singular(const ComplexMatrix& a, int iters = 500) {
  const ComplexMatrix gram = oracle_multiply(adjoint(a), a);
  const std::size_t n = gram.rows();
  std::vector<Complex> v(n, Complex(1.0, 0.25));
  double lambda = 0.0;
  for (int it = 0; it < iters; ++it) {
    std::vector<Complex> w(n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += gram(i, j) * v[j];
    double nrm = 0.0;
    for (const auto& x : w) nrm += std::norm(x);
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) return 0.0;
    lambda = nrm;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / nrm;
  }
  return std::sqrt(lambda);
}

// Closed-form singular values of a 2x2 matrix from the eigenvalues of
// a^* a: lambda = (T +- sqrt(T^2 - 4 D)) / 2.
std::vector<double> oracle_singular_2x2(const ComplexMatrix& a) {
  const ComplexMatrix g = oracle_multiply(adjoint(a), a);
  const double t = g(0, 0).real() + g(1, 1).real();
  const double det = (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)).real();
  const double disc = std::sqrt(std::max(0.0, t * t - 4.0 * det));
  return {std::sqrt(std::max(0.0, 0.5 * (t + disc))), std::sqrt(std::max(0.0, 0.5 * (t - disc)))};
}

ComplexMatrix random_matrix(std::uint64_t key, std::size_t rows, std::size_t cols) {
  CounterRng rng(key);
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.next_complex_gaussian();
  return m;
}

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

TEST_CASE("multiply basics and oracle") {
  const ComplexMatrix x = random_matrix(11, 2, 2);
  const ComplexMatrix eye = ComplexMatrix::identity(2);
  CHECK((multiply(eye, x) - x).max_abs() == 0.0);

  const ComplexMatrix nil{{0.0, 1.0}, {0.0, 0.0}};
  CHECK(multiply(nil, nil).max_abs() == 0.0);

  const ComplexMatrix a = random_matrix(21, 4, 4);
  const ComplexMatrix b = random_matrix(22, 4, 4);
  CHECK((multiply(a, b) - oracle_multiply(a, b)).max_abs() <= 1e-13);

  CHECK_THROWS_AS(multiply(random_matrix(1, 2, 3), random_matrix(2, 2, 3)), ShapeError);
}

TEST_CASE("adjoint") {
  const ComplexMatrix m{{kI}};
  CHECK(adjoint(m)(0, 0) == -kI);

  ComplexMatrix h{{Complex(3.0, 0.0), Complex(1.0, 1.0)}, {Complex(1.0, -1.0), Complex(2.0, 0.0)}};
  CHECK((adjoint(h) - h).max_abs() == 0.0);

  const ComplexMatrix a = random_matrix(31, 3, 5);
  CHECK((adjoint(adjoint(a)) - a).max_abs() == 0.0);
}

TEST_CASE("singular values: pinned cases") {
  const ComplexMatrix d{{3.0, 0.0}, {0.0, -4.0}};
  const SingularSpectrum s = singular_values(d);
  CHECK(s.values[0] == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(s.values[1] == doctest::Approx(3.0).epsilon(1e-12));

  const ComplexMatrix j{{0.0, 2.0}, {0.0, 0.0}};
  const SingularSpectrum sj = singular_values(j);
  CHECK(sj.values[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(sj.values[1] == doctest::Approx(0.0));
}

TEST_CASE("singular values: oracles and invariants") {
  for (std::uint64_t k = 0; k < 12; ++k) {
    const ComplexMatrix a = random_matrix(100 + k, 5, 5);
    const SingularSpectrum s = singular_values(a);

    REQUIRE(s.values.size() == 5);
    for (std::size_t i = 0; i + 1 < 5; ++i) CHECK(s.values[i] >= s.values[i + 1]);
    CHECK(s.values.back() >= 0.0);

    // top value against power iteration
    CHECK(s.values[0] == doctest::Approx(oracle_top_singular(a)).epsilon(1e-8));

    // sum of squares is the Frobenius norm squared
    double sq = 0.0;
    for (double v : s.values) sq += v * v;
    CHECK(sq == doctest::Approx(a.frobenius_norm() * a.frobenius_norm()).epsilon(1e-12));

    // s(A) = s(A^*)
    const SingularSpectrum sa = singular_values(adjoint(a));
    for (std::size_t i = 0; i < 5; ++i)
      CHECK(std::abs(s.values[i] - sa.values[i]) <= 1e-10 * std::max(1.0, s.values[0]));
  }

  for (std::uint64_t k = 0; k < 20; ++k) {
    const ComplexMatrix a = random_matrix(200 + k, 2, 2);
    const auto expect = oracle_singular_2x2(a);
    const SingularSpectrum s = singular_values(a);
    CHECK(s.values[0] == doctest::Approx(expect[0]).epsilon(1e-11));
    CHECK(s.values[1] == doctest::Approx(expect[1]).epsilon(1e-9));
  }
}

TEST_CASE("singular values: unitary invariance") {
  SamplerConfig cfg;
  cfg.dim = 6;
  for (std::uint64_t k = 0; k < 8; ++k) {
    const ComplexMatrix a = random_matrix(300 + k, 6, 6);
    const ComplexMatrix u = random_unitary(cfg.with_seed(400 + k));
    const ComplexMatrix v = random_unitary(cfg.with_seed(500 + k));
    const SingularSpectrum s = singular_values(a);
    const SingularSpectrum su = singular_values(multiply(u, multiply(a, v)));
    for (std::size_t i = 0; i < 6; ++i)
      CHECK(std::abs(s.values[i] - su.values[i]) <= 1e-9 * std::max(1.0, s.values[0]));
  }
}

TEST_CASE("absolute value") {
  const ComplexMatrix j{{0.0, 2.0}, {0.0, 0.0}};
  const ComplexMatrix aj = absolute_value(j);
  CHECK(aj(0, 0).real() == doctest::Approx(0.0));
  CHECK(aj(1, 1).real() == doctest::Approx(2.0));
  CHECK(std::abs(aj(0, 1)) <= 1e-12);

  // PSD fixed point
  const ComplexMatrix g = random_matrix(41, 3, 3);
  const ComplexMatrix p = multiply(adjoint(g), g);
  CHECK(operator_norm(absolute_value(p) - p) <= 1e-9 * operator_norm(p));

  // unitary maps to the identity
  SamplerConfig cfg;
  cfg.dim = 4;
  const ComplexMatrix u = random_unitary(cfg.with_seed(42));
  CHECK(operator_norm(absolute_value(u) - ComplexMatrix::identity(4)) <= 1e-10);

  // |A|^2 = A^* A, |A| Hermitian PSD
  for (std::uint64_t k = 0; k < 8; ++k) {
    const ComplexMatrix a = random_matrix(600 + k, 5, 5);
    const ComplexMatrix abs_a = absolute_value(a);
    CHECK((abs_a - adjoint(abs_a)).max_abs() <= 1e-12);
    const ComplexMatrix gram = multiply(adjoint(a), a);
    CHECK(operator_norm(multiply(abs_a, abs_a) - gram) <= 1e-9 * operator_norm(gram));
    const HermitianEigen eig = eig_hermitian(abs_a);
    CHECK(eig.eigenvalues.front() >= -1e-10);
  }

  CHECK_THROWS_AS(absolute_value(random_matrix(1, 2, 3)), ShapeError);
}

TEST_CASE("eig_normal: pinned cases") {
  const ComplexMatrix d{{Complex(0.5, 0.0), 0.0}, {0.0, Complex(0.0, -0.3)}};
  const SpectralDecomposition sd = eig_normal(d);
  CHECK(complex_multisets_match(sd.eigenvalues, {Complex(0.5, 0.0), Complex(0.0, -0.3)}, 1e-12));

  const ComplexMatrix pauli{{0.0, 1.0}, {1.0, 0.0}};
  const SpectralDecomposition sp = eig_normal(pauli);
  CHECK(complex_multisets_match(sp.eigenvalues, {Complex(1.0, 0.0), Complex(-1.0, 0.0)}, 1e-12));

  const ComplexMatrix jordan{{0.0, 1.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(eig_normal(jordan), NotNormalError);
}

namespace {

void check_reconstruction(const ComplexMatrix& a, const SpectralDecomposition& d) {
  const std::size_t n = a.rows();
  const ComplexMatrix& u = d.eigenvectors;
  CHECK(operator_norm(multiply(adjoint(u), u) - ComplexMatrix::identity(n)) <= 1e-10);
  ComplexMatrix scaled = u;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= d.eigenvalues[j];
  const double residual = operator_norm(multiply(scaled, adjoint(u)) - a);
  CHECK(residual <= 1e-9 * operator_norm(a) + 1e-12);
}

}  // namespace

TEST_CASE("eig_normal: sampled construction is the oracle") {
  SamplerConfig cfg;
  cfg.dim = 7;
  for (std::uint64_t k = 0; k < 10; ++k) {
    const NormalSample s = random_normal_in_disk(cfg.with_seed(700 + k));
    const SpectralDecomposition d = eig_normal(s.matrix);
    CHECK(complex_multisets_match(d.eigenvalues, s.decomposition.eigenvalues, 1e-9));
    check_reconstruction(s.matrix, d);
  }
}

TEST_CASE("eig_normal: near-degenerate spectra") {
  // Pairs of eigenvalues whose real parts straddle the grouping threshold.
  SamplerConfig cfg;
  cfg.dim = 4;
  const double gaps[] = {1e-10, 3e-8, 1e-7, 5e-6, 1e-4};
  for (std::size_t gi = 0; gi < std::size(gaps); ++gi) {
    const ComplexMatrix u = random_unitary(cfg.with_seed(800 + gi));
    const std::vector<Complex> lam = {Complex(0.3, 0.1), Complex(0.3 + gaps[gi], -0.4),
                                      Complex(-0.2, 0.2), Complex(-0.2, 0.2 + gaps[gi])};
    const NormalSample s = make_normal(lam, u);
    const SpectralDecomposition d = eig_normal(s.matrix);
    CHECK(complex_multisets_match(d.eigenvalues, lam, 1e-7));
    check_reconstruction(s.matrix, d);
  }
  // exact repeats
  const ComplexMatrix u = random_unitary(cfg.with_seed(900));
  const std::vector<Complex> lam = {Complex(0.5, 0.25), Complex(0.5, 0.25), Complex(0.5, 0.25),
                                    Complex(-0.1, 0.0)};
  const NormalSample s = make_normal(lam, u);
  const SpectralDecomposition d = eig_normal(s.matrix);
  CHECK(complex_multisets_match(d.eigenvalues, lam, 1e-9));
  check_reconstruction(s.matrix, d);
}

TEST_CASE("direct sum") {
  const ComplexMatrix a{{1.0}};
  const ComplexMatrix b{{2.0}};
  const ComplexMatrix ds = direct_sum(a, b);
  CHECK(ds.rows() == 2);
  CHECK(ds(0, 0) == Complex(1.0, 0.0));
  CHECK(ds(1, 1) == Complex(2.0, 0.0));
  CHECK(ds(0, 1) == Complex(0.0, 0.0));

  // padded-with-zeros case
  const ComplexMatrix m = random_matrix(51, 3, 3);
  const SingularSpectrum sm = singular_values(m);
  const SingularSpectrum spad = singular_values(direct_sum(m, ComplexMatrix::zero(2)));
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(spad.values[i] == doctest::Approx(sm.values[i]).epsilon(1e-12));
  CHECK(spad.values[3] == doctest::Approx(0.0));
  CHECK(spad.values[4] == doctest::Approx(0.0));

  // merge-and-sort oracle
  for (std::uint64_t k = 0; k < 8; ++k) {
    const ComplexMatrix p = random_matrix(1000 + k, 4, 4);
    const ComplexMatrix q = random_matrix(1100 + k, 3, 3);
    std::vector<double> merged = singular_values(p).values;
    const auto sq = singular_values(q).values;
    merged.insert(merged.end(), sq.begin(), sq.end());
    std::sort(merged.begin(), merged.end(), std::greater<double>());
    const SingularSpectrum got = singular_values(direct_sum(p, q));
    for (std::size_t i = 0; i < merged.size(); ++i)
      CHECK(std::abs(got.values[i] - merged[i]) <= 1e-10 * std::max(1.0, merged[0]));
  }

  CHECK_THROWS_AS(direct_sum(random_matrix(1, 2, 3), a), ShapeError);
}

TEST_CASE("solve") {
  const ComplexMatrix b = random_matrix(61, 3, 3);
  CHECK((solve(ComplexMatrix::identity(3), b) - b).max_abs() <= 1e-14);

  const ComplexMatrix d{{2.0, 0.0}, {0.0, 4.0}};
  const ComplexMatrix dinv = solve(d, ComplexMatrix::identity(2));
  CHECK(dinv(0, 0).real() == doctest::Approx(0.5));
  CHECK(dinv(1, 1).real() == doctest::Approx(0.25));

  // forward-multiply oracle and the residual bound
  for (std::uint64_t k = 0; k < 8; ++k) {
    const ComplexMatrix a = random_matrix(1200 + k, 5, 5) + Complex(3.0, 0.0) * ComplexMatrix::identity(5);
    const ComplexMatrix x = random_matrix(1300 + k, 5, 2);
    const ComplexMatrix recovered = solve(a, multiply(a, x));
    CHECK(operator_norm(recovered - x) <= 1e-9 * std::max(1.0, operator_norm(x)));

    const ComplexMatrix rhs = random_matrix(1400 + k, 5, 3);
    const ComplexMatrix sol = solve(a, rhs);
    const double residual = operator_norm(multiply(a, sol) - rhs);
    CHECK(residual <=
          1e-9 * (operator_norm(a) * operator_norm(sol) + operator_norm(rhs)));
  }

  ComplexMatrix singular(2, 2);
  singular(0, 0) = 1.0;
  singular(0, 1) = 1.0;
  singular(1, 0) = 1.0;
  singular(1, 1) = 1.0;
  CHECK_THROWS_AS(solve(singular, ComplexMatrix::identity(2)), SingularMatrixError);
}

TEST_CASE("try_spectrum covers the non-normal 2x2 closed form") {
  const ComplexMatrix jordan{{0.0, 1.0}, {0.0, 0.0}};
  const auto spec = try_spectrum(jordan);
  REQUIRE(spec.has_value());
  CHECK(complex_multisets_match(*spec, {Complex(0.0, 0.0), Complex(0.0, 0.0)}, 1e-12));

  const ComplexMatrix upper{{Complex(0.2, 0.1), 1.0}, {0.0, Complex(-0.4, 0.0)}};
  const auto spec2 = try_spectrum(upper);
  REQUIRE(spec2.has_value());
  CHECK(complex_multisets_match(*spec2, {Complex(0.2, 0.1), Complex(-0.4, 0.0)}, 1e-12));

  // non-normal 3x3 is out of reach by design
  ComplexMatrix big(3, 3);
  big(0, 1) = 1.0;
  big(1, 2) = 1.0;
  CHECK_FALSE(try_spectrum(big).has_value());
}

TEST_CASE("slack rule") {
  CHECK(leq_with_slack(1.0, 1.0));
  CHECK(leq_with_slack(1.0 + 5e-10, 1.0));
  CHECK_FALSE(leq_with_slack(1.0 + 5e-9, 1.0));
  CHECK(leq_with_slack(1e-13, 0.0));
  CHECK_FALSE(leq_with_slack(1e-11, 0.0));
}
