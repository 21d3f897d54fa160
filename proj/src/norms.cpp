#include "g1norms/norms.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace g1norms {

NormKind NormKind::ky_fan(std::size_t k) {
  if (k < 1) throw DomainError("NormKind: Ky Fan order must be >= 1");
  return {Variant::KyFan, k, 0.0};
}

NormKind NormKind::schatten(double p) {
  if (!(p >= 1.0)) throw DomainError("NormKind: Schatten exponent must be >= 1");
  return {Variant::Schatten, 0, p};
}

std::string to_string(const NormKind& kind) {
  switch (kind.variant) {
    case NormKind::Variant::Operator:
      return "operator";
    case NormKind::Variant::KyFan:
      return "kyfan:" + std::to_string(kind.k);
    case NormKind::Variant::Schatten: {
      if (std::isinf(kind.p)) return "schatten:inf";
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%g", kind.p);
      return std::string("schatten:") + buf;
    }
  }
  return "operator";
}

NormKind parse_norm_kind(const std::string& text) {
  if (text == "operator") return NormKind::op();
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string head = text.substr(0, colon);
    const std::string tail = text.substr(colon + 1);
    try {
      if (head == "kyfan") return NormKind::ky_fan(std::stoul(tail));
      if (head == "schatten") {
        if (tail == "inf") return NormKind::schatten(std::numeric_limits<double>::infinity());
        return NormKind::schatten(std::stod(tail));
      }
    } catch (const std::logic_error&) {
      // fall through to the DomainError below
    }
  }
  throw DomainError("parse_norm_kind: unrecognized norm '" + text + "'");
}

double norm(const SingularSpectrum& s, const NormKind& kind) {
  switch (kind.variant) {
    case NormKind::Variant::Operator:
      return s.values.empty() ? 0.0 : s.values.front();
    case NormKind::Variant::KyFan: {
      if (kind.k < 1) throw DomainError("norm: Ky Fan order must be >= 1");
      double acc = 0.0;
      const std::size_t limit = std::min<std::size_t>(kind.k, s.values.size());
      for (std::size_t j = 0; j < limit; ++j) acc += s.values[j];
      return acc;  // s_k = 0 beyond the rank
    }
    case NormKind::Variant::Schatten: {
      if (!(kind.p >= 1.0)) throw DomainError("norm: Schatten exponent must be >= 1");
      if (std::isinf(kind.p)) return s.values.empty() ? 0.0 : s.values.front();
      double acc = 0.0;
      for (double v : s.values) acc += std::pow(v, kind.p);
      return std::pow(acc, 1.0 / kind.p);
    }
  }
  return 0.0;
}

double norm(const ComplexMatrix& a, const NormKind& kind) {
  return norm(singular_values(a), kind);
}

DominanceResult ky_fan_dominates(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw ShapeError("ky_fan_dominates: matrices must be square and of equal size");
  }
  const SingularSpectrum sa = singular_values(a);
  const SingularSpectrum sb = singular_values(b);
  DominanceResult result;
  result.dominated = true;
  double prefix_a = 0.0;
  double prefix_b = 0.0;
  bool first = true;
  for (std::size_t j = 0; j < sa.values.size(); ++j) {
    prefix_a += sa.values[j];
    prefix_b += sb.values[j];
    const double gap = prefix_a - prefix_b;
    if (first || gap > result.max_violation) {
      result.max_violation = gap;
      first = false;
    }
    if (!leq_with_slack(prefix_a, prefix_b)) result.dominated = false;
  }
  return result;
}

std::vector<NormKind> norm_suite(std::size_t n) {
  if (n < 1) throw DomainError("norm_suite: size must be >= 1");
  std::vector<NormKind> suite;
  suite.reserve(n + 4);
  suite.push_back(NormKind::op());
  suite.push_back(NormKind::schatten(1.0));
  suite.push_back(NormKind::schatten(2.0));
  suite.push_back(NormKind::schatten(3.0));
  for (std::size_t k = 1; k <= n; ++k) suite.push_back(NormKind::ky_fan(k));
  return suite;
}

}  // namespace g1norms
