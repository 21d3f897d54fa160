#ifndef G1NORMS_NORMS_HPP
#define G1NORMS_NORMS_HPP

#include <string>
#include <vector>

#include "g1norms/linalg.hpp"

namespace g1norms {

// Selector for a unitarily invariant norm: operator norm, Ky Fan k-norm
// (sum of the k largest singular values, zero-padded beyond the rank), or
// Schatten p-norm (p >= 1; p = infinity coincides with the operator norm).
struct NormKind {
  enum class Variant { Operator, KyFan, Schatten };

  Variant variant = Variant::Operator;
  std::size_t k = 0;  // Ky Fan order
  double p = 0.0;     // Schatten exponent

  static NormKind op() { return {Variant::Operator, 0, 0.0}; }
  static NormKind ky_fan(std::size_t k);
  static NormKind schatten(double p);

  bool operator==(const NormKind&) const = default;
};

// String form used in reports: "operator", "kyfan:3", "schatten:2".
std::string to_string(const NormKind& kind);
// Inverse of to_string; throws DomainError on an unrecognized form.
NormKind parse_norm_kind(const std::string& text);

double norm(const SingularSpectrum& s, const NormKind& kind);
double norm(const ComplexMatrix& a, const NormKind& kind);

struct DominanceResult {
  bool dominated = false;
  // Largest Ky Fan gap max_k ( ||a||_(k) - ||b||_(k) ); negative when a is
  // strictly dominated.
  double max_violation = 0.0;
};

// Ky Fan dominance test: ||a||_(k) <= ||b||_(k) for all k = 1..n under the
// global slack rule. Requires square matrices of equal size.
DominanceResult ky_fan_dominates(const ComplexMatrix& a, const ComplexMatrix& b);

// The certificate family for an n x n problem: operator, Schatten {1,2,3},
// and the full Ky Fan family k = 1..n. Checking every Ky Fan norm certifies
// all unitarily invariant norms by Ky Fan dominance.
std::vector<NormKind> norm_suite(std::size_t n);

}  // namespace g1norms

#endif  // G1NORMS_NORMS_HPP
