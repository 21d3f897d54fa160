#include "g1norms/herglotz.hpp"

#include <cmath>

namespace g1norms {

double HerglotzMeasure::total_weight() const {
  double s = 0.0;
  for (const auto& atom : atoms) s += atom.weight;
  return s;
}

void HerglotzMeasure::validate() const {
  for (const auto& atom : atoms) {
    if (!(atom.weight >= 0.0)) throw DomainError("HerglotzMeasure: negative atom weight");
    if (!std::isfinite(atom.angle)) throw DomainError("HerglotzMeasure: non-finite angle");
  }
  if (std::abs(total_weight() - 1.0) > 1e-12) {
    throw DomainError("HerglotzMeasure: total mass differs from 1");
  }
}

HerglotzMeasure HerglotzMeasure::point(double angle) { return HerglotzMeasure{{{angle, 1.0}}}; }

HerglotzMeasure HerglotzMeasure::uniform(std::size_t n) {
  HerglotzMeasure m;
  m.atoms.reserve(n);
  const double w = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    m.atoms.push_back({2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n), w});
  }
  return m;
}

std::complex<double> herglotz_eval(const HerglotzMeasure& m, std::complex<double> z) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError("herglotz_eval: argument must lie strictly inside the unit disk");
  }
  std::complex<double> acc(0.0, 0.0);
  for (const auto& atom : m.atoms) {
    const std::complex<double> e(std::cos(atom.angle), std::sin(atom.angle));
    acc += atom.weight * ((e + z) / (e - z));
  }
  return acc;
}

}  // namespace g1norms
