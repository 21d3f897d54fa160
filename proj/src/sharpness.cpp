#include "g1norms/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "g1norms/format.hpp"

namespace g1norms {

namespace {

struct SearchSpace {
  const CheckerDef* def;
  std::size_t dim;
  double min_gap;
  double max_entry;

  bool has_b() const {
    return def->pattern == InputPattern::NormalPairGeneralX ||
           def->pattern == InputPattern::NormalPairIdentityX ||
           def->pattern == InputPattern::HermitianPairGeneralX;
  }
  bool has_general_x() const {
    return def->pattern == InputPattern::NormalPairGeneralX ||
           def->pattern == InputPattern::NormalSingleGeneralX ||
           def->pattern == InputPattern::HermitianPairGeneralX;
  }
  bool has_unitary_x() const { return def->pattern == InputPattern::PsdWithUnitary; }
  bool has_commuting_x() const { return def->pattern == InputPattern::CommutingNormalPair; }
  bool hermitian_a() const {
    return def->pattern == InputPattern::PsdWithUnitary ||
           def->pattern == InputPattern::HermitianPairGeneralX;
  }
};

Complex project_eigenvalue(const SearchSpace& space, Complex lam) {
  const double cap = 1.0 - space.min_gap;
  if (space.def->pattern == InputPattern::PsdWithUnitary) {
    return Complex(std::clamp(lam.real(), 0.0, cap), 0.0);
  }
  if (space.def->pattern == InputPattern::HermitianPairGeneralX) {
    return Complex(std::clamp(lam.real(), -cap, cap), 0.0);
  }
  const double mod = std::abs(lam);
  if (mod > cap) lam *= cap / mod;
  return lam;
}

void reorthonormalize(ComplexMatrix& u) {
  const std::size_t n = u.rows();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Complex dot(0.0, 0.0);
      for (std::size_t r = 0; r < n; ++r) dot += std::conj(u(r, i)) * u(r, j);
      for (std::size_t r = 0; r < n; ++r) u(r, j) -= dot * u(r, i);
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < n; ++r) nrm += std::norm(u(r, j));
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) {
      u(j, j) = 1.0;
      continue;
    }
    for (std::size_t r = 0; r < n; ++r) u(r, j) /= nrm;
  }
}

// Geodesic step: multiply by exp(i * step * H) with H a random Hermitian
// direction, then re-orthonormalize against drift.
void unitary_step(CounterRng& rng, ComplexMatrix& u, double step) {
  const std::size_t n = u.rows();
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = rng.next_gaussian();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = rng.next_complex_gaussian();
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  const HermitianEigen eig = eig_hermitian(h);
  ComplexMatrix rot = eig.eigenvectors;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex phase = std::exp(Complex(0.0, step * eig.eigenvalues[j]));
    for (std::size_t i = 0; i < n; ++i) rot(i, j) *= phase;
  }
  u = multiply(multiply(u, rot), adjoint(eig.eigenvectors));
  reorthonormalize(u);
}

void measure_step(CounterRng& rng, HerglotzMeasure& m, double step) {
  double total = 0.0;
  for (auto& atom : m.atoms) {
    atom.angle = std::fmod(atom.angle + step * rng.next_gaussian(), 2.0 * M_PI);
    if (atom.angle < 0.0) atom.angle += 2.0 * M_PI;
    atom.weight = std::max(0.0, atom.weight + 0.3 * step * rng.next_gaussian());
    total += atom.weight;
  }
  if (total <= 0.0) {
    const double w = 1.0 / static_cast<double>(m.atoms.size());
    for (auto& atom : m.atoms) atom.weight = w;
    total = 1.0;
  }
  for (auto& atom : m.atoms) atom.weight /= total;
  std::size_t heaviest = 0;
  for (std::size_t i = 1; i < m.atoms.size(); ++i) {
    if (m.atoms[i].weight > m.atoms[heaviest].weight) heaviest = i;
  }
  double rest = 0.0;
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    if (i != heaviest) rest += m.atoms[i].weight;
  }
  m.atoms[heaviest].weight = 1.0 - rest;
}

SamplerConfig sub_cfg(const SearchSpace& space, CounterRng& rng) {
  SamplerConfig cfg;
  cfg.seed = rng.next_u64();
  cfg.dim = space.dim;
  cfg.min_gap = space.min_gap;
  cfg.max_entry = space.max_entry;
  return cfg;
}

void normalize_x(ComplexMatrix& x) {
  const double f = x.frobenius_norm();
  if (f > 0.0) x *= Complex(1.0 / f, 0.0);
}

SharpnessInstance propose(const SearchSpace& space, CounterRng& rng, bool degenerate) {
  SharpnessInstance inst;
  const std::size_t n = space.dim;
  auto fresh_eigs = [&](bool hermitian) {
    std::vector<Complex> lam(n);
    CounterRng local(rng.next_u64());
    for (auto& l : lam) {
      if (degenerate) {
        l = 0.0;
      } else if (hermitian) {
        l = project_eigenvalue(space, Complex(2.0 * local.next_unit() - 1.0, 0.0));
      } else {
        l = local.next_in_disk(1.0 - space.min_gap);
      }
    }
    return lam;
  };
  inst.lam_a = fresh_eigs(space.hermitian_a());
  inst.basis_a = degenerate ? ComplexMatrix::identity(n) : random_unitary(sub_cfg(space, rng));
  if (space.has_b()) {
    inst.lam_b = fresh_eigs(space.hermitian_a());
    inst.basis_b = degenerate ? ComplexMatrix::identity(n) : random_unitary(sub_cfg(space, rng));
  }
  if (space.has_general_x()) {
    inst.x = random_general(sub_cfg(space, rng));
    normalize_x(inst.x);
  } else if (space.has_unitary_x()) {
    inst.x = random_unitary(sub_cfg(space, rng));
  } else if (space.has_commuting_x()) {
    CounterRng local(rng.next_u64());
    inst.lam_x.resize(n);
    for (auto& l : inst.lam_x) l = local.next_in_disk(space.max_entry);
  }
  inst.f = random_herglotz(sub_cfg(space, rng));
  inst.g = random_herglotz(sub_cfg(space, rng));
  return inst;
}

SharpnessInstance perturb(const SearchSpace& space, CounterRng& rng,
                          const SharpnessInstance& base, double step) {
  SharpnessInstance inst = base;
  for (auto& lam : inst.lam_a) {
    lam = project_eigenvalue(space, lam + step * rng.next_complex_gaussian());
  }
  unitary_step(rng, inst.basis_a, step);
  if (space.has_b()) {
    for (auto& lam : inst.lam_b) {
      lam = project_eigenvalue(space, lam + step * rng.next_complex_gaussian());
    }
    unitary_step(rng, inst.basis_b, step);
  }
  if (space.has_general_x()) {
    for (std::size_t i = 0; i < inst.x.rows(); ++i)
      for (std::size_t j = 0; j < inst.x.cols(); ++j)
        inst.x(i, j) += step * space.max_entry * rng.next_complex_gaussian();
    normalize_x(inst.x);
  } else if (space.has_unitary_x()) {
    unitary_step(rng, inst.x, step);
  } else if (space.has_commuting_x()) {
    for (auto& lam : inst.lam_x) {
      lam += step * rng.next_complex_gaussian();
      const double mod = std::abs(lam);
      if (mod > space.max_entry) lam *= space.max_entry / mod;
    }
  }
  measure_step(rng, inst.f, step);
  measure_step(rng, inst.g, step);
  return inst;
}

std::vector<double> real_parts(const std::vector<Complex>& lam) {
  std::vector<double> out(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) out[i] = lam[i].real();
  return out;
}

}  // namespace

TrialBody sharpness_body(const std::string& theorem_id, const SharpnessInstance& inst) {
  const CheckerDef* def = find_checker(theorem_id);
  if (!def) throw DomainError("sharpness: unknown theorem id '" + theorem_id + "'");
  const std::string& id = def->id;
  if (id == "thm1-plus" || id == "thm1-minus") {
    return thm1_body(id == "thm1-plus" ? Sign::Plus : Sign::Minus,
                     make_normal(inst.lam_a, inst.basis_a), make_normal(inst.lam_b, inst.basis_b),
                     inst.x, inst.f, inst.g);
  }
  if (id == "remark1") {
    return remark1_body(make_normal(inst.lam_a, inst.basis_a),
                        make_normal(inst.lam_b, inst.basis_b), inst.x, inst.f, inst.g);
  }
  if (id == "cor-c1-plus" || id == "cor-c1-minus") {
    CommutingPair pair{make_normal(inst.lam_a, inst.basis_a),
                       make_normal(inst.lam_x, inst.basis_a)};
    return cor_c1_body(id == "cor-c1-plus" ? Sign::Plus : Sign::Minus, pair, inst.f, inst.g);
  }
  if (id == "cor-c2") {
    return cor_c2_body(make_normal(inst.lam_a, inst.basis_a), inst.x, inst.f, inst.g);
  }
  if (id == "cor-c3-plus" || id == "cor-c3-minus") {
    return cor_c3_body(id == "cor-c3-plus" ? Sign::Plus : Sign::Minus,
                       make_normal(inst.lam_a, inst.basis_a),
                       make_normal(inst.lam_b, inst.basis_b), inst.f, inst.g);
  }
  if (id == "prop-c4") {
    return prop_c4_body(make_hermitian(real_parts(inst.lam_a), inst.basis_a), inst.x, inst.f,
                        inst.g);
  }
  if (id == "thm-sum-plus" || id == "thm-sum-minus") {
    return thm_sum_body(id == "thm-sum-plus" ? Sign::Plus : Sign::Minus,
                        make_normal(inst.lam_a, inst.basis_a),
                        make_normal(inst.lam_b, inst.basis_b), inst.x, inst.f, inst.g);
  }
  if (id == "prop-t2n-bound1" || id == "prop-t2n-bound2") {
    auto bodies = prop_t2n_bodies(make_normal(inst.lam_a, inst.basis_a),
                                  make_normal(inst.lam_b, inst.basis_b), inst.x, inst.f, inst.g);
    return id == "prop-t2n-bound1" ? std::move(bodies.first) : std::move(bodies.second);
  }
  if (id.rfind("thm-hs-", 0) == 0) {
    const Sign sign = id.find("-plus-") != std::string::npos ? Sign::Plus : Sign::Minus;
    auto bodies = thm_hs_bodies(sign, make_hermitian(real_parts(inst.lam_a), inst.basis_a),
                                make_hermitian(real_parts(inst.lam_b), inst.basis_b), inst.x,
                                inst.f, inst.g);
    return id.ends_with("-first") ? std::move(bodies.first) : std::move(bodies.second);
  }
  throw DomainError("sharpness: checker '" + id + "' is not searchable");
}

double replay_ratio(const std::string& theorem_id, const SharpnessInstance& instance,
                    const NormKind& kind) {
  const TrialBody body = sharpness_body(theorem_id, instance);
  return evaluate(body, kind, theorem_id, 0, 0).ratio;
}

std::string sharpness_instance_json(const std::string& theorem_id,
                                    const SharpnessInstance& inst) {
  const CheckerDef* def = find_checker(theorem_id);
  if (!def) throw DomainError("sharpness: unknown theorem id '" + theorem_id + "'");
  SearchSpace space{def, inst.lam_a.size(), 0.0, 0.0};
  std::string out = "{\"A\":";
  out += space.hermitian_a()
             ? matrix_to_json(make_hermitian(real_parts(inst.lam_a), inst.basis_a).matrix)
             : matrix_to_json(make_normal(inst.lam_a, inst.basis_a).matrix);
  if (space.has_b()) {
    out += ",\"B\":";
    out += space.hermitian_a()
               ? matrix_to_json(make_hermitian(real_parts(inst.lam_b), inst.basis_b).matrix)
               : matrix_to_json(make_normal(inst.lam_b, inst.basis_b).matrix);
  }
  if (space.has_general_x()) {
    out += ",\"X\":" + matrix_to_json(inst.x);
  } else if (space.has_unitary_x()) {
    out += ",\"U\":" + matrix_to_json(inst.x);
  } else if (space.has_commuting_x()) {
    out += ",\"X\":" + matrix_to_json(make_normal(inst.lam_x, inst.basis_a).matrix);
  }
  out += ",\"f\":" + measure_to_json(inst.f);
  out += ",\"g\":" + measure_to_json(inst.g);
  out += "}";
  return out;
}

SharpnessResult run_sharpness(const std::string& theorem_id, std::size_t dim, std::uint64_t budget,
                              std::uint64_t seed, double min_gap, double max_entry) {
  const CheckerDef* def = find_checker(theorem_id);
  if (!def) throw DomainError("sharpness: unknown theorem id '" + theorem_id + "'");
  if (def->pattern == InputPattern::LemmaSpecific) {
    throw DomainError("sharpness: checker '" + theorem_id + "' is not searchable");
  }
  if (budget < 100) throw DomainError("sharpness: budget must be >= 100");
  if (dim < 1 || dim > 16) throw DomainError("sharpness: dim must be in [1, 16]");

  const SearchSpace space{def, dim, min_gap, max_entry};
  const std::vector<NormKind> kinds = norm_kinds_for(*def, dim);
  CounterRng rng(derive_key(seed, 0x73686172706eULL));

  SharpnessResult result;
  result.theorem_id = def->id;
  result.dim = dim;

  auto assess = [&](const SharpnessInstance& inst) -> std::pair<double, NormKind> {
    const TrialBody body = sharpness_body(def->id, inst);
    double best = -1.0;
    NormKind best_kind = kinds.front();
    for (const auto& kind : kinds) {
      const TrialReport r = evaluate(body, kind, def->id, 0, 0);
      const double ratio = std::isfinite(r.ratio) ? r.ratio : 2.0;  // anomalous already
      if (ratio > best) {
        best = ratio;
        best_kind = kind;
      }
    }
    ++result.evaluations_used;
    return {best, best_kind};
  };

  // The degenerate witness opens the search; it is in the closure of the
  // proposal distribution anyway.
  SharpnessInstance current = propose(space, rng, /*degenerate=*/true);
  auto [current_ratio, current_kind] = assess(current);
  result.best_ratio = current_ratio;
  result.best_kind = current_kind;
  result.best_instance = current;

  double step = 0.3;
  std::uint64_t stalled = 0;
  while (result.evaluations_used < budget) {
    SharpnessInstance candidate = perturb(space, rng, current, step);
    const auto [ratio, kind] = assess(candidate);
    if (ratio > current_ratio) {
      current = std::move(candidate);
      current_ratio = ratio;
      current_kind = kind;
      stalled = 0;
    } else {
      ++stalled;
      step = std::max(1e-4, step * 0.995);
    }
    if (current_ratio > result.best_ratio) {
      result.best_ratio = current_ratio;
      result.best_kind = current_kind;
      result.best_instance = current;
    }
    if (stalled >= 200 && result.evaluations_used < budget) {
      current = propose(space, rng, /*degenerate=*/false);
      std::tie(current_ratio, current_kind) = assess(current);
      if (current_ratio > result.best_ratio) {
        result.best_ratio = current_ratio;
        result.best_kind = current_kind;
        result.best_instance = current;
      }
      stalled = 0;
      step = 0.3;
    }
  }
  result.anomaly = !(result.best_ratio <= 1.0 + kRelSlack);
  return result;
}

}  // namespace g1norms
