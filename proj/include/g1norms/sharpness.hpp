#ifndef G1NORMS_SHARPNESS_HPP
#define G1NORMS_SHARPNESS_HPP

#include "g1norms/inequalities.hpp"

namespace g1norms {

// Searchable parameterization of a theorem instance. Which fields are live
// depends on the checker's InputPattern; matrices are always assembled as
// basis * diag(lambda) * basis^* so spectral constraints stay exact under
// perturbation.
struct SharpnessInstance {
  std::vector<Complex> lam_a;
  ComplexMatrix basis_a;
  std::vector<Complex> lam_b;
  ComplexMatrix basis_b;
  std::vector<Complex> lam_x;  // commuting-pair X, diagonal in basis_a
  ComplexMatrix x;             // general X, or the unitary U
  HerglotzMeasure f;
  HerglotzMeasure g;
};

struct SharpnessResult {
  std::string theorem_id;
  std::size_t dim = 0;
  double best_ratio = 0.0;
  NormKind best_kind;
  SharpnessInstance best_instance;
  std::uint64_t evaluations_used = 0;
  // best_ratio above 1 + 1e-9 contradicts a proved inequality and is
  // surfaced loudly instead of being clipped.
  bool anomaly = false;
};

// Random-restart hill climbing over instances of the named checker:
// Gaussian steps on eigenvalues (projected back into the admissible
// region), geodesic steps on the unitary factors, entry jitter on X, atom
// jitter on the measures. Restarts after 200 stalled evaluations; the
// first proposal is the degenerate A = B = 0 witness. Deterministic in
// (seed); lemma checkers are not searchable.
SharpnessResult run_sharpness(const std::string& theorem_id, std::size_t dim, std::uint64_t budget,
                              std::uint64_t seed, double min_gap = 0.05, double max_entry = 1.0);

// Rebuild the body of an instance; used by the replay check.
TrialBody sharpness_body(const std::string& theorem_id, const SharpnessInstance& instance);
double replay_ratio(const std::string& theorem_id, const SharpnessInstance& instance,
                    const NormKind& kind);

// Fully serialized instance (assembled matrices plus measure atoms).
std::string sharpness_instance_json(const std::string& theorem_id,
                                    const SharpnessInstance& instance);

}  // namespace g1norms

#endif  // G1NORMS_SHARPNESS_HPP
