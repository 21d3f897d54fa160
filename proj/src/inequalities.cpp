#include "g1norms/inequalities.hpp"

#include <cmath>
#include <limits>

#include "g1norms/format.hpp"

namespace g1norms {

namespace {

constexpr double kTwoSqrtTwo = 2.0 * M_SQRT2;

// Sub-stream roles of one trial; trial_key = derive_key(seed, trial_index).
enum Role : std::uint64_t { kRoleA = 0, kRoleB = 1, kRoleX = 2, kRoleF = 3, kRoleG = 4, kRoleAux = 5 };

SamplerConfig role_cfg(const SamplerConfig& cfg, std::uint64_t trial_index, std::uint64_t role) {
  return cfg.with_seed(derive_key(derive_key(cfg.seed, trial_index), role));
}

TrialBody norm_body(std::size_t dim, std::size_t norm_dim, const ComplexMatrix& lhs,
                    std::vector<ComplexMatrix> rhs_terms, double factor, double d_a, double d_b) {
  TrialBody body;
  body.dim = dim;
  body.norm_dim = norm_dim;
  body.lhs = singular_values(lhs);
  body.rhs_terms.reserve(rhs_terms.size());
  for (const auto& term : rhs_terms) body.rhs_terms.push_back(singular_values(term));
  body.factor = factor;
  body.d_a = d_a;
  body.d_b = d_b;
  return body;
}

TrialBody scalar_body(std::size_t dim, double lhs, double rhs, double d_a, double d_b) {
  TrialBody body;
  body.dim = dim;
  body.norm_dim = dim;
  body.scalar_mode = true;
  body.scalar_lhs = lhs;
  body.scalar_rhs = rhs;
  body.d_a = d_a;
  body.d_b = d_b;
  return body;
}

}  // namespace

TrialReport evaluate(const TrialBody& body, const NormKind& kind, const std::string& theorem_id,
                     std::uint64_t seed, std::uint64_t trial_index) {
  TrialReport r;
  r.theorem_id = theorem_id;
  r.dim = body.dim;
  r.norm = kind;
  r.d_a = body.d_a;
  r.d_b = body.d_b;
  r.seed = seed;
  r.trial_index = trial_index;
  if (body.scalar_mode) {
    r.lhs = body.scalar_lhs;
    r.rhs = body.scalar_rhs;
  } else {
    r.lhs = norm(body.lhs, kind);
    double rhs_sum = 0.0;
    for (const auto& term : body.rhs_terms) rhs_sum += norm(term, kind);
    r.rhs = body.factor * rhs_sum;
  }
  if (r.rhs == 0.0) {
    r.pass = r.lhs <= kAbsSlack;
    r.ratio = r.pass ? 0.0 : std::numeric_limits<double>::infinity();
  } else {
    r.pass = leq_with_slack(r.lhs, r.rhs);
    r.ratio = r.lhs / r.rhs;
  }
  r.pass = r.pass && body.aux_ok;
  return r;
}

// ----- theorem bodies -----

TrialBody thm1_body(Sign sign, const NormalSample& a, const NormalSample& b,
                    const ComplexMatrix& x, const HerglotzMeasure& f, const HerglotzMeasure& g) {
  const double d_a = spectral_gap(a.decomposition.eigenvalues);
  const double d_b = spectral_gap(b.decomposition.eigenvalues);
  const ComplexMatrix fa = apply_spectral(f, a.decomposition);
  const ComplexMatrix gb = apply_spectral(g, b.decomposition);
  const ComplexMatrix fxg = multiply(fa, multiply(x, gb));
  const ComplexMatrix lhs = (sign == Sign::Plus) ? fxg + x : fxg - x;
  ComplexMatrix rhs = (sign == Sign::Plus)
                          ? absolute_value(multiply(a.matrix, multiply(x, b.matrix))) +
                                absolute_value(x)
                          : absolute_value(multiply(a.matrix, x)) +
                                absolute_value(multiply(x, b.matrix));
  return norm_body(x.rows(), x.rows(), lhs, {std::move(rhs)}, kTwoSqrtTwo / (d_a * d_b), d_a, d_b);
}

TrialBody remark1_body(const NormalSample& a, const NormalSample& b, const ComplexMatrix& x,
                       const HerglotzMeasure& f, const HerglotzMeasure& g) {
  const std::size_t n = x.rows();
  const double d_a = spectral_gap(a.decomposition.eigenvalues);
  const double d_b = spectral_gap(b.decomposition.eigenvalues);
  const ComplexMatrix fa = apply_spectral(f, a.decomposition);
  const ComplexMatrix gb = apply_spectral(g, b.decomposition);
  const ComplexMatrix lhs =
      direct_sum(multiply(fa, multiply(x, gb)) + x, ComplexMatrix::zero(n));
  ComplexMatrix rhs = direct_sum(multiply(a.matrix, multiply(x, b.matrix)), x);
  return norm_body(n, 2 * n, lhs, {std::move(rhs)}, 2.0 * kTwoSqrtTwo / (d_a * d_b), d_a, d_b);
}

TrialBody cor_c1_body(Sign sign, const CommutingPair& pair, const HerglotzMeasure& f,
                      const HerglotzMeasure& g) {
  const ComplexMatrix& a = pair.a.matrix;
  const ComplexMatrix& x = pair.x.matrix;
  const double commutation = operator_norm(multiply(a, x) - multiply(x, a));
  if (commutation > 1e-10) {
    throw PreconditionError("cor_c1: commutation residual " + std::to_string(commutation));
  }
  const double d_a = spectral_gap(pair.a.decomposition.eigenvalues);
  const ComplexMatrix fa = apply_spectral(f, pair.a.decomposition);
  const ComplexMatrix ga_star = apply_spectral_adjoint(g, pair.a.decomposition);
  const ComplexMatrix a_star = adjoint(a);
  const ComplexMatrix fxg = multiply(fa, multiply(x, ga_star));
  const ComplexMatrix abs_x = absolute_value(x);
  const ComplexMatrix lhs = (sign == Sign::Plus) ? fxg + x : fxg - x;
  ComplexMatrix rhs = (sign == Sign::Plus)
                          ? multiply(a, multiply(abs_x, a_star)) + abs_x
                          : absolute_value(multiply(a, x)) + absolute_value(multiply(x, a_star));
  TrialBody body =
      norm_body(x.rows(), x.rows(), lhs, {std::move(rhs)}, 2.0 / (d_a * d_a), d_a, d_a);
  // Proof ingredient: AXA^* is normal and |AXA^*| = A|X|A^*.
  const double identity_residual = operator_norm(
      absolute_value(multiply(a, multiply(x, a_star))) - multiply(a, multiply(abs_x, a_star)));
  body.aux_ok = identity_residual <= 1e-9;
  return body;
}

TrialBody cor_c2_body(const NormalSample& a, const ComplexMatrix& x, const HerglotzMeasure& f,
                      const HerglotzMeasure& g) {
  const double d_a = spectral_gap(a.decomposition.eigenvalues);
  const ComplexMatrix fa = apply_spectral(f, a.decomposition);
  const ComplexMatrix ga = apply_spectral(g, a.decomposition);
  const ComplexMatrix lhs = multiply(fa, multiply(x, ga)) - x;
  ComplexMatrix rhs = absolute_value(multiply(a.matrix, x)) + absolute_value(multiply(x, a.matrix));
  return norm_body(x.rows(), x.rows(), lhs, {std::move(rhs)}, kTwoSqrtTwo / (d_a * d_a), d_a, d_a);
}

TrialBody cor_c3_body(Sign sign, const NormalSample& a, const NormalSample& b,
                      const HerglotzMeasure& f, const HerglotzMeasure& g) {
  const std::size_t n = a.matrix.rows();
  const double d_a = spectral_gap(a.decomposition.eigenvalues);
  const double d_b = spectral_gap(b.decomposition.eigenvalues);
  const ComplexMatrix fa = apply_spectral(f, a.decomposition);
  const ComplexMatrix gb = apply_spectral(g, b.decomposition);
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  const ComplexMatrix fg = multiply(fa, gb);
  const ComplexMatrix lhs = (sign == Sign::Plus) ? fg + eye : fg - eye;
  ComplexMatrix rhs = (sign == Sign::Plus)
                          ? absolute_value(multiply(a.matrix, b.matrix)) + eye
                          : absolute_value(a.matrix) + absolute_value(b.matrix);
  return norm_body(n, n, lhs, {std::move(rhs)}, kTwoSqrtTwo / (d_a * d_b), d_a, d_b);
}

TrialBody prop_c4_body(const HermitianSample& a, const ComplexMatrix& u, const HerglotzMeasure& f,
                       const HerglotzMeasure& g) {
  for (const Complex& lam : a.decomposition.eigenvalues) {
    if (lam.real() < 0.0 || lam.real() >= 1.0 || std::abs(lam.imag()) > 1e-12) {
      throw DomainError("prop_c4: spectrum must lie in [0, 1)");
    }
  }
  const double d_a = spectral_gap(a.decomposition.eigenvalues);
  const ComplexMatrix fa = apply_spectral(f, a.decomposition);
  const ComplexMatrix ga = apply_spectral(g, a.decomposition);
  const ComplexMatrix lhs = multiply(fa, multiply(u, ga)) - u;
  ComplexMatrix rhs = multiply(a.matrix, u) + multiply(u, a.matrix);
  return norm_body(u.rows(), u.rows(), lhs, {std::move(rhs)}, kTwoSqrtTwo / (d_a * d_a), d_a, d_a);
}

TrialBody thm_sum_body(Sign sign, const NormalSample& a, const NormalSample& b,
                       const ComplexMatrix& x, const HerglotzMeasure& f, const HerglotzMeasure& g) {
  const double d_a = spectral_gap(a.decomposition.eigenvalues);
  const double d_b = spectral_gap(b.decomposition.eigenvalues);
  const ComplexMatrix fa = apply_spectral(f, a.decomposition);
  const ComplexMatrix gb = apply_spectral(g, b.decomposition);
  const ComplexMatrix fax = multiply(fa, x);
  const ComplexMatrix xgb = multiply(x, gb);
  const ComplexMatrix lhs = (sign == Sign::Plus) ? fax + xgb : fax - xgb;
  ComplexMatrix rhs = (sign == Sign::Plus)
                          ? absolute_value(multiply(a.matrix, multiply(x, b.matrix))) +
                                absolute_value(x)
                          : absolute_value(multiply(a.matrix, x)) +
                                absolute_value(multiply(x, b.matrix));
  return norm_body(x.rows(), x.rows(), lhs, {std::move(rhs)}, kTwoSqrtTwo / (d_a * d_b), d_a, d_b);
}

std::pair<TrialBody, TrialBody> prop_t2n_bodies(const NormalSample& a, const NormalSample& b,
                                                const ComplexMatrix& x, const HerglotzMeasure& f,
                                                const HerglotzMeasure& g) {
  const std::size_t n = x.rows();
  const double d_a = spectral_gap(a.decomposition.eigenvalues);
  const double d_b = spectral_gap(b.decomposition.eigenvalues);
  const ComplexMatrix fa = apply_spectral(f, a.decomposition);
  const ComplexMatrix gb = apply_spectral(g, b.decomposition);
  const ComplexMatrix fax = multiply(fa, x);
  const ComplexMatrix lhs = fax + multiply(fax, gb) + multiply(x, gb);

  const ComplexMatrix abs_axb = absolute_value(multiply(a.matrix, multiply(x, b.matrix)));
  const ComplexMatrix abs_ax = absolute_value(multiply(a.matrix, x));
  const ComplexMatrix abs_xb = absolute_value(multiply(x, b.matrix));
  const ComplexMatrix abs_x = absolute_value(x);

  TrialBody first = norm_body(n, n, lhs, {abs_axb + abs_x, abs_xb + abs_x, abs_ax + abs_x},
                              M_SQRT2 / (d_a * d_b), d_a, d_b);
  TrialBody second = norm_body(n, n, lhs, {abs_axb + abs_ax + abs_xb + Complex(3.0, 0.0) * abs_x},
                               2.0 / (d_a * d_b), d_a, d_b);
  return {std::move(first), std::move(second)};
}

std::pair<TrialBody, TrialBody> thm_hs_bodies(Sign sign, const HermitianSample& a,
                                              const HermitianSample& b, const ComplexMatrix& x,
                                              const HerglotzMeasure& f, const HerglotzMeasure& g) {
  const std::size_t n = x.rows();
  const double d_a = spectral_gap(a.decomposition.eigenvalues);
  const double d_b = spectral_gap(b.decomposition.eigenvalues);
  const ComplexMatrix fa = apply_spectral(f, a.decomposition);
  const ComplexMatrix gb = apply_spectral(g, b.decomposition);
  const ComplexMatrix abs_a = absolute_value(a.matrix);
  const ComplexMatrix abs_b = absolute_value(b.matrix);
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  const Complex inv_da(1.0 / d_a, 0.0);
  const Complex inv_db(1.0 / d_b, 0.0);

  const ComplexMatrix fax = multiply(fa, x);
  const ComplexMatrix xgb = multiply(x, gb);
  const ComplexMatrix lhs_first = (sign == Sign::Plus) ? fax + xgb : fax - xgb;
  ComplexMatrix rhs_first =
      (x + multiply(abs_a, x)) * inv_da + (x + multiply(x, abs_b)) * inv_db;

  const ComplexMatrix fxg = multiply(fa, xgb);
  const ComplexMatrix lhs_second = (sign == Sign::Plus) ? fxg + x : fxg - x;
  ComplexMatrix rhs_second =
      multiply((eye + abs_a) * inv_da, multiply(x, (eye + abs_b) * inv_db)) + x;

  TrialBody first = norm_body(n, n, lhs_first, {std::move(rhs_first)}, 1.0, d_a, d_b);
  TrialBody second = norm_body(n, n, lhs_second, {std::move(rhs_second)}, 1.0, d_a, d_b);
  return {std::move(first), std::move(second)};
}

// ----- lemma bodies -----

TrialBody andozhan_body(const ComplexMatrix& c, const ComplexMatrix& d) {
  const ComplexMatrix lhs = psd_sqrt(c + d);
  ComplexMatrix rhs = psd_sqrt(c) + psd_sqrt(d);
  return norm_body(c.rows(), c.rows(), lhs, {std::move(rhs)}, 1.0, 0.0, 0.0);
}

TrialBody bouldin_body(const NormalSample& c, const NormalSample& d) {
  const ComplexMatrix lhs = c.matrix + d.matrix;
  ComplexMatrix rhs = absolute_value(c.matrix) + absolute_value(d.matrix);
  return norm_body(lhs.rows(), lhs.rows(), lhs, {std::move(rhs)},
                   1.0, spectral_gap(c.decomposition.eigenvalues),
                   spectral_gap(d.decomposition.eigenvalues));
}

TrialBody halfsum_body(const ComplexMatrix& c, const ComplexMatrix& d) {
  const std::size_t n = c.rows();
  const ComplexMatrix half = Complex(0.5, 0.0) * (c + d);
  ComplexMatrix dsum = direct_sum(c, d);
  TrialBody body = norm_body(n, 2 * n, half, {std::move(dsum)}, 1.0, 0.0, 0.0);
  // The statement is singular-value-wise; assert the strong form too.
  for (std::size_t j = 0; j < body.lhs.values.size(); ++j) {
    if (!leq_with_slack(body.lhs.values[j], body.rhs_terms[0].values[j])) {
      body.aux_ok = false;
      break;
    }
  }
  return body;
}

TrialBody resolvent_bound_body(const NormalSample& a, std::size_t angles) {
  const double d_a = spectral_gap(a.decomposition.eigenvalues);
  double worst = 0.0;
  for (std::size_t k = 0; k < angles; ++k) {
    const double theta = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(angles);
    const Complex z(std::cos(theta), std::sin(theta));
    worst = std::max(worst, operator_norm(resolvent(a.matrix, z)));
  }
  return scalar_body(a.matrix.rows(), worst, 1.0 / d_a, d_a, d_a);
}

TrialBody conjugation_body(const HermitianSample& a, const ComplexMatrix& u,
                           const HerglotzMeasure& f) {
  // f(UAU^*) through a fresh eigensolve against U f(A) U^*.
  const ComplexMatrix conjugated = multiply(u, multiply(a.matrix, adjoint(u)));
  const ComplexMatrix via_conjugated = apply_spectral(f, eig_normal(conjugated));
  const ComplexMatrix via_basis =
      multiply(u, multiply(apply_spectral(f, a.decomposition), adjoint(u)));
  const double residual = operator_norm(via_conjugated - via_basis);
  const double d_a = spectral_gap(a.decomposition.eigenvalues);
  return scalar_body(a.matrix.rows(), residual, 1e-9, d_a, d_a);
}

TrialBody fugledeputnam_body(const CommutingPair& pair) {
  const ComplexMatrix x_star = adjoint(pair.x.matrix);
  const double residual = operator_norm(multiply(pair.a.matrix, x_star) -
                                        multiply(x_star, pair.a.matrix));
  const double d_a = spectral_gap(pair.a.decomposition.eigenvalues);
  return scalar_body(pair.a.matrix.rows(), residual, 1e-10, d_a, d_a);
}

TrialBody s4_body(const NormalSample& a, const NormalSample& b, const ComplexMatrix& x,
                  double alpha, double beta) {
  const Complex phase(std::cos(alpha + beta), std::sin(alpha + beta));
  const ComplexMatrix axb = multiply(a.matrix, multiply(x, b.matrix));
  const ComplexMatrix lhs = axb + phase * x;
  ComplexMatrix rhs = absolute_value(axb) + absolute_value(x);
  return norm_body(x.rows(), x.rows(), lhs, {std::move(rhs)}, M_SQRT2,
                   spectral_gap(a.decomposition.eigenvalues),
                   spectral_gap(b.decomposition.eigenvalues));
}

// ----- plain-matrix checker operations -----

namespace {

NormalSample normal_from_matrix(const ComplexMatrix& a) {
  return NormalSample{a, eig_normal(a)};
}

HermitianSample hermitian_from_matrix(const ComplexMatrix& a, const char* who) {
  if (operator_norm(a - adjoint(a)) > 1e-10 * std::max(1.0, operator_norm(a))) {
    throw DomainError(std::string(who) + ": matrix must be Hermitian");
  }
  return HermitianSample{a, eig_normal(a)};
}

}  // namespace

TrialReport check_thm1(Sign sign, const ComplexMatrix& a, const ComplexMatrix& b,
                       const ComplexMatrix& x, const HerglotzMeasure& f, const HerglotzMeasure& g,
                       const NormKind& kind) {
  f.validate();
  g.validate();
  const std::string id = sign == Sign::Plus ? "thm1-plus" : "thm1-minus";
  return evaluate(thm1_body(sign, normal_from_matrix(a), normal_from_matrix(b), x, f, g), kind, id,
                  0, 0);
}

TrialReport check_remark1(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x,
                          const HerglotzMeasure& f, const HerglotzMeasure& g,
                          const NormKind& kind) {
  f.validate();
  g.validate();
  return evaluate(remark1_body(normal_from_matrix(a), normal_from_matrix(b), x, f, g), kind,
                  "remark1", 0, 0);
}

TrialReport check_cor_c1(Sign sign, const ComplexMatrix& a, const ComplexMatrix& x,
                         const HerglotzMeasure& f, const HerglotzMeasure& g, const NormKind& kind) {
  f.validate();
  g.validate();
  CommutingPair pair{normal_from_matrix(a), normal_from_matrix(x)};
  const std::string id = sign == Sign::Plus ? "cor-c1-plus" : "cor-c1-minus";
  return evaluate(cor_c1_body(sign, pair, f, g), kind, id, 0, 0);
}

TrialReport check_cor_c2(const ComplexMatrix& a, const ComplexMatrix& x, const HerglotzMeasure& f,
                         const HerglotzMeasure& g, const NormKind& kind) {
  f.validate();
  g.validate();
  return evaluate(cor_c2_body(normal_from_matrix(a), x, f, g), kind, "cor-c2", 0, 0);
}

TrialReport check_cor_c3(Sign sign, const ComplexMatrix& a, const ComplexMatrix& b,
                         const HerglotzMeasure& f, const HerglotzMeasure& g, const NormKind& kind) {
  f.validate();
  g.validate();
  const std::string id = sign == Sign::Plus ? "cor-c3-plus" : "cor-c3-minus";
  return evaluate(cor_c3_body(sign, normal_from_matrix(a), normal_from_matrix(b), f, g), kind, id,
                  0, 0);
}

TrialReport check_prop_c4(const ComplexMatrix& a, const ComplexMatrix& u, const HerglotzMeasure& f,
                          const HerglotzMeasure& g, const NormKind& kind) {
  f.validate();
  g.validate();
  return evaluate(prop_c4_body(hermitian_from_matrix(a, "prop_c4"), u, f, g), kind, "prop-c4", 0,
                  0);
}

TrialReport check_thm_sum(Sign sign, const ComplexMatrix& a, const ComplexMatrix& b,
                          const ComplexMatrix& x, const HerglotzMeasure& f,
                          const HerglotzMeasure& g, const NormKind& kind) {
  f.validate();
  g.validate();
  const std::string id = sign == Sign::Plus ? "thm-sum-plus" : "thm-sum-minus";
  return evaluate(thm_sum_body(sign, normal_from_matrix(a), normal_from_matrix(b), x, f, g), kind,
                  id, 0, 0);
}

std::pair<TrialReport, TrialReport> check_prop_t2n(const ComplexMatrix& a, const ComplexMatrix& b,
                                                   const ComplexMatrix& x, const HerglotzMeasure& f,
                                                   const HerglotzMeasure& g, const NormKind& kind) {
  f.validate();
  g.validate();
  auto bodies = prop_t2n_bodies(normal_from_matrix(a), normal_from_matrix(b), x, f, g);
  return {evaluate(bodies.first, kind, "prop-t2n-bound1", 0, 0),
          evaluate(bodies.second, kind, "prop-t2n-bound2", 0, 0)};
}

std::pair<TrialReport, TrialReport> check_thm_hs(Sign sign, const ComplexMatrix& a,
                                                 const ComplexMatrix& b, const ComplexMatrix& x,
                                                 const HerglotzMeasure& f,
                                                 const HerglotzMeasure& g) {
  f.validate();
  g.validate();
  auto bodies = thm_hs_bodies(sign, hermitian_from_matrix(a, "thm_hs"),
                              hermitian_from_matrix(b, "thm_hs"), x, f, g);
  const std::string suffix = sign == Sign::Plus ? "plus" : "minus";
  const NormKind hs = NormKind::schatten(2.0);
  return {evaluate(bodies.first, hs, "thm-hs-" + suffix + "-first", 0, 0),
          evaluate(bodies.second, hs, "thm-hs-" + suffix + "-second", 0, 0)};
}

// ----- registry -----

namespace {

NormalSample draw_normal(const SamplerConfig& cfg, std::uint64_t trial, std::uint64_t role) {
  return random_normal_in_disk(role_cfg(cfg, trial, role));
}

HermitianSample draw_hermitian_disk(const SamplerConfig& cfg, std::uint64_t trial,
                                    std::uint64_t role) {
  return random_hermitian_in_interval(role_cfg(cfg, trial, role), -0.999999999, 0.999999999);
}

HermitianSample draw_psd(const SamplerConfig& cfg, std::uint64_t trial, std::uint64_t role) {
  return random_hermitian_in_interval(role_cfg(cfg, trial, role), 0.0, 0.999999999);
}

ComplexMatrix draw_general(const SamplerConfig& cfg, std::uint64_t trial, std::uint64_t role) {
  return random_general(role_cfg(cfg, trial, role));
}

HerglotzMeasure draw_measure(const SamplerConfig& cfg, std::uint64_t trial, std::uint64_t role) {
  return random_herglotz(role_cfg(cfg, trial, role));
}

template <Sign S>
TrialBody run_thm1(const SamplerConfig& cfg, std::uint64_t trial) {
  return thm1_body(S, draw_normal(cfg, trial, kRoleA), draw_normal(cfg, trial, kRoleB),
                   draw_general(cfg, trial, kRoleX), draw_measure(cfg, trial, kRoleF),
                   draw_measure(cfg, trial, kRoleG));
}

TrialBody run_remark1(const SamplerConfig& cfg, std::uint64_t trial) {
  return remark1_body(draw_normal(cfg, trial, kRoleA), draw_normal(cfg, trial, kRoleB),
                      draw_general(cfg, trial, kRoleX), draw_measure(cfg, trial, kRoleF),
                      draw_measure(cfg, trial, kRoleG));
}

template <Sign S>
TrialBody run_cor_c1(const SamplerConfig& cfg, std::uint64_t trial) {
  return cor_c1_body(S, random_commuting_normal_pair(role_cfg(cfg, trial, kRoleA)),
                     draw_measure(cfg, trial, kRoleF), draw_measure(cfg, trial, kRoleG));
}

TrialBody run_cor_c2(const SamplerConfig& cfg, std::uint64_t trial) {
  return cor_c2_body(draw_normal(cfg, trial, kRoleA), draw_general(cfg, trial, kRoleX),
                     draw_measure(cfg, trial, kRoleF), draw_measure(cfg, trial, kRoleG));
}

template <Sign S>
TrialBody run_cor_c3(const SamplerConfig& cfg, std::uint64_t trial) {
  return cor_c3_body(S, draw_normal(cfg, trial, kRoleA), draw_normal(cfg, trial, kRoleB),
                     draw_measure(cfg, trial, kRoleF), draw_measure(cfg, trial, kRoleG));
}

TrialBody run_prop_c4(const SamplerConfig& cfg, std::uint64_t trial) {
  return prop_c4_body(draw_psd(cfg, trial, kRoleA),
                      random_unitary(role_cfg(cfg, trial, kRoleB)),
                      draw_measure(cfg, trial, kRoleF), draw_measure(cfg, trial, kRoleG));
}

template <Sign S>
TrialBody run_thm_sum(const SamplerConfig& cfg, std::uint64_t trial) {
  return thm_sum_body(S, draw_normal(cfg, trial, kRoleA), draw_normal(cfg, trial, kRoleB),
                      draw_general(cfg, trial, kRoleX), draw_measure(cfg, trial, kRoleF),
                      draw_measure(cfg, trial, kRoleG));
}

template <bool First>
TrialBody run_prop_t2n(const SamplerConfig& cfg, std::uint64_t trial) {
  auto bodies = prop_t2n_bodies(draw_normal(cfg, trial, kRoleA), draw_normal(cfg, trial, kRoleB),
                                draw_general(cfg, trial, kRoleX), draw_measure(cfg, trial, kRoleF),
                                draw_measure(cfg, trial, kRoleG));
  return First ? std::move(bodies.first) : std::move(bodies.second);
}

template <Sign S, bool First>
TrialBody run_thm_hs(const SamplerConfig& cfg, std::uint64_t trial) {
  auto bodies = thm_hs_bodies(S, draw_hermitian_disk(cfg, trial, kRoleA),
                              draw_hermitian_disk(cfg, trial, kRoleB),
                              draw_general(cfg, trial, kRoleX), draw_measure(cfg, trial, kRoleF),
                              draw_measure(cfg, trial, kRoleG));
  return First ? std::move(bodies.first) : std::move(bodies.second);
}

TrialBody run_andozhan(const SamplerConfig& cfg, std::uint64_t trial) {
  return andozhan_body(draw_psd(cfg, trial, kRoleA).matrix, draw_psd(cfg, trial, kRoleB).matrix);
}

TrialBody run_bouldin(const SamplerConfig& cfg, std::uint64_t trial) {
  return bouldin_body(draw_normal(cfg, trial, kRoleA), draw_normal(cfg, trial, kRoleB));
}

TrialBody run_halfsum(const SamplerConfig& cfg, std::uint64_t trial) {
  return halfsum_body(draw_general(cfg, trial, kRoleA), draw_general(cfg, trial, kRoleB));
}

TrialBody run_resolvent(const SamplerConfig& cfg, std::uint64_t trial) {
  return resolvent_bound_body(draw_normal(cfg, trial, kRoleA));
}

TrialBody run_conjugation(const SamplerConfig& cfg, std::uint64_t trial) {
  return conjugation_body(draw_hermitian_disk(cfg, trial, kRoleA),
                          random_unitary(role_cfg(cfg, trial, kRoleB)),
                          draw_measure(cfg, trial, kRoleF));
}

TrialBody run_fugledeputnam(const SamplerConfig& cfg, std::uint64_t trial) {
  return fugledeputnam_body(random_commuting_normal_pair(role_cfg(cfg, trial, kRoleA)));
}

TrialBody run_s4(const SamplerConfig& cfg, std::uint64_t trial) {
  CounterRng angle_rng(role_cfg(cfg, trial, kRoleAux).seed);
  const double alpha = 2.0 * M_PI * angle_rng.next_unit();
  const double beta = 2.0 * M_PI * angle_rng.next_unit();
  return s4_body(draw_normal(cfg, trial, kRoleA), draw_normal(cfg, trial, kRoleB),
                 draw_general(cfg, trial, kRoleX), alpha, beta);
}

// ----- instance dumps (same streams as the run functions) -----

std::string dump_pair_x(const SamplerConfig& cfg, std::uint64_t trial) {
  return "{\"A\":" + matrix_to_json(draw_normal(cfg, trial, kRoleA).matrix) +
         ",\"B\":" + matrix_to_json(draw_normal(cfg, trial, kRoleB).matrix) +
         ",\"X\":" + matrix_to_json(draw_general(cfg, trial, kRoleX)) +
         ",\"f\":" + measure_to_json(draw_measure(cfg, trial, kRoleF)) +
         ",\"g\":" + measure_to_json(draw_measure(cfg, trial, kRoleG)) + "}";
}

std::string dump_pair(const SamplerConfig& cfg, std::uint64_t trial) {
  return "{\"A\":" + matrix_to_json(draw_normal(cfg, trial, kRoleA).matrix) +
         ",\"B\":" + matrix_to_json(draw_normal(cfg, trial, kRoleB).matrix) +
         ",\"f\":" + measure_to_json(draw_measure(cfg, trial, kRoleF)) +
         ",\"g\":" + measure_to_json(draw_measure(cfg, trial, kRoleG)) + "}";
}

std::string dump_commuting(const SamplerConfig& cfg, std::uint64_t trial) {
  const CommutingPair pair = random_commuting_normal_pair(role_cfg(cfg, trial, kRoleA));
  return "{\"A\":" + matrix_to_json(pair.a.matrix) + ",\"X\":" + matrix_to_json(pair.x.matrix) +
         ",\"f\":" + measure_to_json(draw_measure(cfg, trial, kRoleF)) +
         ",\"g\":" + measure_to_json(draw_measure(cfg, trial, kRoleG)) + "}";
}

std::string dump_single_x(const SamplerConfig& cfg, std::uint64_t trial) {
  return "{\"A\":" + matrix_to_json(draw_normal(cfg, trial, kRoleA).matrix) +
         ",\"X\":" + matrix_to_json(draw_general(cfg, trial, kRoleX)) +
         ",\"f\":" + measure_to_json(draw_measure(cfg, trial, kRoleF)) +
         ",\"g\":" + measure_to_json(draw_measure(cfg, trial, kRoleG)) + "}";
}

std::string dump_psd_unitary(const SamplerConfig& cfg, std::uint64_t trial) {
  return "{\"A\":" + matrix_to_json(draw_psd(cfg, trial, kRoleA).matrix) +
         ",\"U\":" + matrix_to_json(random_unitary(role_cfg(cfg, trial, kRoleB))) +
         ",\"f\":" + measure_to_json(draw_measure(cfg, trial, kRoleF)) +
         ",\"g\":" + measure_to_json(draw_measure(cfg, trial, kRoleG)) + "}";
}

std::string dump_hermitian_pair_x(const SamplerConfig& cfg, std::uint64_t trial) {
  return "{\"A\":" + matrix_to_json(draw_hermitian_disk(cfg, trial, kRoleA).matrix) +
         ",\"B\":" + matrix_to_json(draw_hermitian_disk(cfg, trial, kRoleB).matrix) +
         ",\"X\":" + matrix_to_json(draw_general(cfg, trial, kRoleX)) +
         ",\"f\":" + measure_to_json(draw_measure(cfg, trial, kRoleF)) +
         ",\"g\":" + measure_to_json(draw_measure(cfg, trial, kRoleG)) + "}";
}

std::string dump_psd_cd(const SamplerConfig& cfg, std::uint64_t trial) {
  return "{\"C\":" + matrix_to_json(draw_psd(cfg, trial, kRoleA).matrix) +
         ",\"D\":" + matrix_to_json(draw_psd(cfg, trial, kRoleB).matrix) + "}";
}

std::string dump_normal_cd(const SamplerConfig& cfg, std::uint64_t trial) {
  return "{\"C\":" + matrix_to_json(draw_normal(cfg, trial, kRoleA).matrix) +
         ",\"D\":" + matrix_to_json(draw_normal(cfg, trial, kRoleB).matrix) + "}";
}

std::string dump_general_cd(const SamplerConfig& cfg, std::uint64_t trial) {
  return "{\"C\":" + matrix_to_json(draw_general(cfg, trial, kRoleA)) +
         ",\"D\":" + matrix_to_json(draw_general(cfg, trial, kRoleB)) + "}";
}

std::string dump_normal_a(const SamplerConfig& cfg, std::uint64_t trial) {
  return "{\"A\":" + matrix_to_json(draw_normal(cfg, trial, kRoleA).matrix) + "}";
}

std::string dump_conjugation(const SamplerConfig& cfg, std::uint64_t trial) {
  return "{\"A\":" + matrix_to_json(draw_hermitian_disk(cfg, trial, kRoleA).matrix) +
         ",\"U\":" + matrix_to_json(random_unitary(role_cfg(cfg, trial, kRoleB))) +
         ",\"f\":" + measure_to_json(draw_measure(cfg, trial, kRoleF)) + "}";
}

std::string dump_fugledeputnam(const SamplerConfig& cfg, std::uint64_t trial) {
  const CommutingPair pair = random_commuting_normal_pair(role_cfg(cfg, trial, kRoleA));
  return "{\"A\":" + matrix_to_json(pair.a.matrix) + ",\"X\":" + matrix_to_json(pair.x.matrix) +
         "}";
}

std::string dump_s4(const SamplerConfig& cfg, std::uint64_t trial) {
  CounterRng angle_rng(role_cfg(cfg, trial, kRoleAux).seed);
  const double alpha = 2.0 * M_PI * angle_rng.next_unit();
  const double beta = 2.0 * M_PI * angle_rng.next_unit();
  return "{\"A\":" + matrix_to_json(draw_normal(cfg, trial, kRoleA).matrix) +
         ",\"B\":" + matrix_to_json(draw_normal(cfg, trial, kRoleB).matrix) +
         ",\"X\":" + matrix_to_json(draw_general(cfg, trial, kRoleX)) +
         ",\"alpha\":" + format_g17(alpha) + ",\"beta\":" + format_g17(beta) + "}";
}

}  // namespace

const std::vector<CheckerDef>& checker_registry() {
  static const std::vector<CheckerDef> registry = {
      {"thm1-plus", NormSelection::Suite, 1, InputPattern::NormalPairGeneralX,
       &run_thm1<Sign::Plus>, &dump_pair_x},
      {"thm1-minus", NormSelection::Suite, 1, InputPattern::NormalPairGeneralX,
       &run_thm1<Sign::Minus>, &dump_pair_x},
      {"remark1", NormSelection::Suite, 2, InputPattern::NormalPairGeneralX, &run_remark1,
       &dump_pair_x},
      {"cor-c1-plus", NormSelection::Suite, 1, InputPattern::CommutingNormalPair,
       &run_cor_c1<Sign::Plus>, &dump_commuting},
      {"cor-c1-minus", NormSelection::Suite, 1, InputPattern::CommutingNormalPair,
       &run_cor_c1<Sign::Minus>, &dump_commuting},
      {"cor-c2", NormSelection::Suite, 1, InputPattern::NormalSingleGeneralX, &run_cor_c2,
       &dump_single_x},
      {"cor-c3-plus", NormSelection::Suite, 1, InputPattern::NormalPairIdentityX,
       &run_cor_c3<Sign::Plus>, &dump_pair},
      {"cor-c3-minus", NormSelection::Suite, 1, InputPattern::NormalPairIdentityX,
       &run_cor_c3<Sign::Minus>, &dump_pair},
      {"prop-c4", NormSelection::Suite, 1, InputPattern::PsdWithUnitary, &run_prop_c4,
       &dump_psd_unitary},
      {"thm-sum-plus", NormSelection::Suite, 1, InputPattern::NormalPairGeneralX,
       &run_thm_sum<Sign::Plus>, &dump_pair_x},
      {"thm-sum-minus", NormSelection::Suite, 1, InputPattern::NormalPairGeneralX,
       &run_thm_sum<Sign::Minus>, &dump_pair_x},
      {"prop-t2n-bound1", NormSelection::Suite, 1, InputPattern::NormalPairGeneralX,
       &run_prop_t2n<true>, &dump_pair_x},
      {"prop-t2n-bound2", NormSelection::Suite, 1, InputPattern::NormalPairGeneralX,
       &run_prop_t2n<false>, &dump_pair_x},
      {"thm-hs-plus-first", NormSelection::Schatten2Only, 1, InputPattern::HermitianPairGeneralX,
       &run_thm_hs<Sign::Plus, true>, &dump_hermitian_pair_x},
      {"thm-hs-minus-first", NormSelection::Schatten2Only, 1, InputPattern::HermitianPairGeneralX,
       &run_thm_hs<Sign::Minus, true>, &dump_hermitian_pair_x},
      {"thm-hs-plus-second", NormSelection::Schatten2Only, 1, InputPattern::HermitianPairGeneralX,
       &run_thm_hs<Sign::Plus, false>, &dump_hermitian_pair_x},
      {"thm-hs-minus-second", NormSelection::Schatten2Only, 1, InputPattern::HermitianPairGeneralX,
       &run_thm_hs<Sign::Minus, false>, &dump_hermitian_pair_x},
      {"lemma-andozhan", NormSelection::Suite, 1, InputPattern::LemmaSpecific, &run_andozhan,
       &dump_psd_cd},
      {"lemma-bouldin", NormSelection::Suite, 1, InputPattern::LemmaSpecific, &run_bouldin,
       &dump_normal_cd},
      {"lemma-halfsum", NormSelection::Suite, 2, InputPattern::LemmaSpecific, &run_halfsum,
       &dump_general_cd},
      {"lemma-resolvent", NormSelection::OperatorOnly, 1, InputPattern::LemmaSpecific,
       &run_resolvent, &dump_normal_a},
      {"lemma-conjugation", NormSelection::OperatorOnly, 1, InputPattern::LemmaSpecific,
       &run_conjugation, &dump_conjugation},
      {"lemma-fugledeputnam", NormSelection::OperatorOnly, 1, InputPattern::LemmaSpecific,
       &run_fugledeputnam, &dump_fugledeputnam},
      {"lemma-s4", NormSelection::Suite, 1, InputPattern::LemmaSpecific, &run_s4, &dump_s4},
  };
  return registry;
}

const CheckerDef* find_checker(const std::string& id) {
  for (const auto& def : checker_registry()) {
    if (def.id == id) return &def;
  }
  return nullptr;
}

std::vector<NormKind> norm_kinds_for(const CheckerDef& def, std::size_t dim) {
  switch (def.norms) {
    case NormSelection::Suite:
      return norm_suite(def.dim_multiplier * dim);
    case NormSelection::OperatorOnly:
      return {NormKind::op()};
    case NormSelection::Schatten2Only:
      return {NormKind::schatten(2.0)};
  }
  return {};
}

std::vector<TrialReport> check_lemma_suite(const SamplerConfig& cfg, std::uint64_t trial_index) {
  std::vector<TrialReport> reports;
  for (const auto& def : checker_registry()) {
    if (def.pattern != InputPattern::LemmaSpecific) continue;
    TrialBody body = def.run(cfg, trial_index);
    reports.push_back(evaluate(body, NormKind::op(), def.id, cfg.seed, trial_index));
  }
  return reports;
}

}  // namespace g1norms
