#include "g1norms/samplers.hpp"

#include <algorithm>
#include <cmath>

namespace g1norms {

void SamplerConfig::validate() const {
  if (dim < 1 || dim > 16) throw DomainError("SamplerConfig: dim must be in [1, 16]");
  if (!(min_gap > 0.0 && min_gap < 1.0)) {
    throw DomainError("SamplerConfig: min_gap must be in (0, 1)");
  }
  if (!(max_entry >= 0.0) || !std::isfinite(max_entry)) {
    throw DomainError("SamplerConfig: max_entry must be finite and nonnegative");
  }
}

namespace {

// Sub-stream roles within one sampler call.
enum Role : std::uint64_t { kEigen = 0, kBasis = 1, kSecondEigen = 2 };

ComplexMatrix ginibre(CounterRng& rng, std::size_t n) {
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.next_complex_gaussian();
  return g;
}

// Householder QR; returns Q with the R-diagonal phases absorbed, which
// makes the distribution Haar for Gaussian input.
ComplexMatrix haar_from_ginibre(const ComplexMatrix& g) {
  const std::size_t n = g.rows();
  ComplexMatrix r = g;
  ComplexMatrix q = ComplexMatrix::identity(n);
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k; i < n; ++i) xnorm += std::norm(r(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const Complex x0 = r(k, k);
    const Complex sign = (x0 == Complex(0.0, 0.0)) ? Complex(1.0, 0.0) : x0 / std::abs(x0);
    const Complex alpha = -sign * xnorm;
    double vnorm2 = 0.0;
    for (std::size_t i = k; i < n; ++i) {
      v[i] = r(i, k) - (i == k ? alpha : Complex(0.0, 0.0));
      vnorm2 += std::norm(v[i]);
    }
    if (vnorm2 == 0.0) continue;
    // R <- H R, H = I - 2 v v^* / (v^* v)
    for (std::size_t j = k; j < n; ++j) {
      Complex dot(0.0, 0.0);
      for (std::size_t i = k; i < n; ++i) dot += std::conj(v[i]) * r(i, j);
      dot *= 2.0 / vnorm2;
      for (std::size_t i = k; i < n; ++i) r(i, j) -= dot * v[i];
    }
    // Q <- Q H
    for (std::size_t i = 0; i < n; ++i) {
      Complex dot(0.0, 0.0);
      for (std::size_t j = k; j < n; ++j) dot += q(i, j) * v[j];
      dot *= 2.0 / vnorm2;
      for (std::size_t j = k; j < n; ++j) q(i, j) -= dot * std::conj(v[j]);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const Complex phase = (d == Complex(0.0, 0.0)) ? Complex(1.0, 0.0) : d / std::abs(d);
    for (std::size_t i = 0; i < n; ++i) q(i, j) *= phase;
  }
  return q;
}

}  // namespace

NormalSample make_normal(std::vector<Complex> eigenvalues, ComplexMatrix basis) {
  const std::size_t n = eigenvalues.size();
  ComplexMatrix scaled = basis;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= eigenvalues[j];
  NormalSample s;
  s.matrix = multiply(scaled, adjoint(basis));
  s.decomposition = {std::move(eigenvalues), std::move(basis)};
  return s;
}

HermitianSample make_hermitian(const std::vector<double>& eigenvalues, ComplexMatrix basis) {
  std::vector<Complex> lam(eigenvalues.begin(), eigenvalues.end());
  NormalSample s = make_normal(std::move(lam), std::move(basis));
  const std::size_t n = s.matrix.rows();
  ComplexMatrix herm(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    herm(i, i) = s.matrix(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (s.matrix(i, j) + std::conj(s.matrix(j, i)));
      herm(i, j) = v;
      herm(j, i) = std::conj(v);
    }
  }
  return HermitianSample{std::move(herm), std::move(s.decomposition)};
}

ComplexMatrix random_unitary(const SamplerConfig& cfg) {
  cfg.validate();
  CounterRng rng(derive_key(cfg.seed, kBasis));
  return haar_from_ginibre(ginibre(rng, cfg.dim));
}

NormalSample random_normal_in_disk(const SamplerConfig& cfg) {
  cfg.validate();
  CounterRng eig_rng(derive_key(cfg.seed, kEigen));
  std::vector<Complex> lam(cfg.dim);
  for (auto& l : lam) l = eig_rng.next_in_disk(1.0 - cfg.min_gap);
  return make_normal(std::move(lam), random_unitary(cfg));
}

HermitianSample random_hermitian_in_interval(const SamplerConfig& cfg, double lo, double hi) {
  cfg.validate();
  if (!(-1.0 < lo && lo < hi && hi < 1.0)) {
    throw DomainError("random_hermitian_in_interval: need -1 < lo < hi < 1");
  }
  const double lo_eff = std::max(lo, -(1.0 - cfg.min_gap));
  const double hi_eff = std::min(hi, 1.0 - cfg.min_gap);
  if (!(lo_eff < hi_eff)) {
    throw DomainError("random_hermitian_in_interval: interval infeasible under min_gap");
  }
  CounterRng eig_rng(derive_key(cfg.seed, kEigen));
  std::vector<double> lam(cfg.dim);
  for (auto& l : lam) l = lo_eff + eig_rng.next_unit() * (hi_eff - lo_eff);
  return make_hermitian(lam, random_unitary(cfg));
}

CommutingPair random_commuting_normal_pair(const SamplerConfig& cfg) {
  cfg.validate();
  ComplexMatrix basis = random_unitary(cfg);
  CounterRng a_rng(derive_key(cfg.seed, kEigen));
  CounterRng x_rng(derive_key(cfg.seed, kSecondEigen));
  std::vector<Complex> a_lam(cfg.dim);
  std::vector<Complex> x_lam(cfg.dim);
  for (auto& l : a_lam) l = a_rng.next_in_disk(1.0 - cfg.min_gap);
  for (auto& l : x_lam) l = x_rng.next_in_disk(cfg.max_entry);
  CommutingPair pair;
  pair.a = make_normal(std::move(a_lam), basis);
  pair.x = make_normal(std::move(x_lam), std::move(basis));
  return pair;
}

ComplexMatrix random_general(const SamplerConfig& cfg) {
  cfg.validate();
  CounterRng rng(derive_key(cfg.seed, kEigen));
  const double scale = cfg.max_entry / std::sqrt(static_cast<double>(cfg.dim));
  ComplexMatrix x(cfg.dim, cfg.dim);
  for (std::size_t i = 0; i < cfg.dim; ++i)
    for (std::size_t j = 0; j < cfg.dim; ++j) x(i, j) = scale * rng.next_complex_gaussian();
  return x;
}

HerglotzMeasure random_herglotz(const SamplerConfig& cfg) {
  cfg.validate();
  CounterRng rng(derive_key(cfg.seed, kEigen));
  const std::size_t count = 1 + static_cast<std::size_t>(rng.next_unit() * 8.0);
  HerglotzMeasure m;
  m.atoms.resize(count);
  double total = 0.0;
  for (auto& atom : m.atoms) {
    atom.angle = 2.0 * M_PI * rng.next_unit();
    atom.weight = -std::log(rng.next_unit_open());
    total += atom.weight;
  }
  for (auto& atom : m.atoms) atom.weight /= total;
  // Fold the rounding residual into the heaviest atom so the mass is 1.
  auto heaviest = std::max_element(
      m.atoms.begin(), m.atoms.end(),
      [](const auto& a, const auto& b) { return a.weight < b.weight; });
  double rest = 0.0;
  for (const auto& atom : m.atoms) {
    if (&atom != &*heaviest) rest += atom.weight;
  }
  heaviest->weight = 1.0 - rest;
  return m;
}

}  // namespace g1norms
