#ifndef G1NORMS_INEQUALITIES_HPP
#define G1NORMS_INEQUALITIES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "g1norms/calculus.hpp"
#include "g1norms/norms.hpp"
#include "g1norms/samplers.hpp"

namespace g1norms {

enum class Sign { Plus, Minus };

// One inequality evaluation under one norm.
struct TrialReport {
  std::string theorem_id;
  std::size_t dim = 0;
  NormKind norm;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs; 0 when both sides vanish
  double d_a = 0.0;
  double d_b = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t trial_index = 0;
  bool pass = false;
};

// The norm-independent payload of one trial: both sides are reduced to
// singular spectra once, then any norm kind is evaluated in O(n).
struct TrialBody {
  std::size_t dim = 0;       // dimension of the sampled inputs
  std::size_t norm_dim = 0;  // matrix size the norm family certifies (2n for direct sums)
  SingularSpectrum lhs;
  std::vector<SingularSpectrum> rhs_terms;  // norms of the terms are summed
  double factor = 1.0;
  double d_a = 0.0;
  double d_b = 0.0;
  // Fixed-scalar checks (residual bounds) bypass the norm machinery.
  bool scalar_mode = false;
  double scalar_lhs = 0.0;
  double scalar_rhs = 0.0;
  // Auxiliary identities asserted alongside the main inequality
  // (Fuglede-Putnam consequences, singular-value-wise dominance).
  bool aux_ok = true;
};

TrialReport evaluate(const TrialBody& body, const NormKind& kind, const std::string& theorem_id,
                     std::uint64_t seed, std::uint64_t trial_index);

// ----- body builders (decompositions supplied by the caller) -----

TrialBody thm1_body(Sign sign, const NormalSample& a, const NormalSample& b,
                    const ComplexMatrix& x, const HerglotzMeasure& f, const HerglotzMeasure& g);
TrialBody remark1_body(const NormalSample& a, const NormalSample& b, const ComplexMatrix& x,
                       const HerglotzMeasure& f, const HerglotzMeasure& g);
TrialBody cor_c1_body(Sign sign, const CommutingPair& pair, const HerglotzMeasure& f,
                      const HerglotzMeasure& g);
TrialBody cor_c2_body(const NormalSample& a, const ComplexMatrix& x, const HerglotzMeasure& f,
                      const HerglotzMeasure& g);
TrialBody cor_c3_body(Sign sign, const NormalSample& a, const NormalSample& b,
                      const HerglotzMeasure& f, const HerglotzMeasure& g);
TrialBody prop_c4_body(const HermitianSample& a, const ComplexMatrix& u, const HerglotzMeasure& f,
                       const HerglotzMeasure& g);
TrialBody thm_sum_body(Sign sign, const NormalSample& a, const NormalSample& b,
                       const ComplexMatrix& x, const HerglotzMeasure& f, const HerglotzMeasure& g);
std::pair<TrialBody, TrialBody> prop_t2n_bodies(const NormalSample& a, const NormalSample& b,
                                                const ComplexMatrix& x, const HerglotzMeasure& f,
                                                const HerglotzMeasure& g);
std::pair<TrialBody, TrialBody> thm_hs_bodies(Sign sign, const HermitianSample& a,
                                              const HermitianSample& b, const ComplexMatrix& x,
                                              const HerglotzMeasure& f, const HerglotzMeasure& g);

// lemma bodies
TrialBody andozhan_body(const ComplexMatrix& c, const ComplexMatrix& d);
TrialBody bouldin_body(const NormalSample& c, const NormalSample& d);
TrialBody halfsum_body(const ComplexMatrix& c, const ComplexMatrix& d);
TrialBody resolvent_bound_body(const NormalSample& a, std::size_t angles = 64);
TrialBody conjugation_body(const HermitianSample& a, const ComplexMatrix& u,
                           const HerglotzMeasure& f);
TrialBody fugledeputnam_body(const CommutingPair& pair);
TrialBody s4_body(const NormalSample& a, const NormalSample& b, const ComplexMatrix& x,
                  double alpha, double beta);

// ----- checker operations on plain matrices (decompositions recomputed) -----

TrialReport check_thm1(Sign sign, const ComplexMatrix& a, const ComplexMatrix& b,
                       const ComplexMatrix& x, const HerglotzMeasure& f, const HerglotzMeasure& g,
                       const NormKind& kind);
TrialReport check_remark1(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x,
                          const HerglotzMeasure& f, const HerglotzMeasure& g, const NormKind& kind);
TrialReport check_cor_c1(Sign sign, const ComplexMatrix& a, const ComplexMatrix& x,
                         const HerglotzMeasure& f, const HerglotzMeasure& g, const NormKind& kind);
TrialReport check_cor_c2(const ComplexMatrix& a, const ComplexMatrix& x, const HerglotzMeasure& f,
                         const HerglotzMeasure& g, const NormKind& kind);
TrialReport check_cor_c3(Sign sign, const ComplexMatrix& a, const ComplexMatrix& b,
                         const HerglotzMeasure& f, const HerglotzMeasure& g, const NormKind& kind);
TrialReport check_prop_c4(const ComplexMatrix& a, const ComplexMatrix& u, const HerglotzMeasure& f,
                          const HerglotzMeasure& g, const NormKind& kind);
TrialReport check_thm_sum(Sign sign, const ComplexMatrix& a, const ComplexMatrix& b,
                          const ComplexMatrix& x, const HerglotzMeasure& f,
                          const HerglotzMeasure& g, const NormKind& kind);
std::pair<TrialReport, TrialReport> check_prop_t2n(const ComplexMatrix& a, const ComplexMatrix& b,
                                                   const ComplexMatrix& x, const HerglotzMeasure& f,
                                                   const HerglotzMeasure& g, const NormKind& kind);
std::pair<TrialReport, TrialReport> check_thm_hs(Sign sign, const ComplexMatrix& a,
                                                 const ComplexMatrix& b, const ComplexMatrix& x,
                                                 const HerglotzMeasure& f, const HerglotzMeasure& g);
// All proof-ingredient lemmas for one seeded trial, one report per lemma id,
// evaluated under the operator norm (the per-kind family is reachable
// through the registry).
std::vector<TrialReport> check_lemma_suite(const SamplerConfig& cfg, std::uint64_t trial_index);

// ----- registry -----

enum class NormSelection { Suite, OperatorOnly, Schatten2Only };

// How inputs are drawn and perturbed; sharpness search keys off this.
enum class InputPattern {
  NormalPairGeneralX,   // A, B normal in disk; X general
  NormalPairIdentityX,  // A, B normal in disk; X = I
  CommutingNormalPair,  // (A, X) commuting normal pair
  NormalSingleGeneralX, // A normal in disk; X general; B tied to A
  PsdWithUnitary,       // A Hermitian PSD in [0,1); X unitary
  HermitianPairGeneralX,// A, B Hermitian in (-1,1); X general
  LemmaSpecific,        // not searchable
};

struct CheckerDef {
  std::string id;
  NormSelection norms;
  std::size_t dim_multiplier;  // norm_dim = dim_multiplier * dim
  InputPattern pattern;
  // Draw the instance for (cfg, trial_index) and reduce it to a body.
  TrialBody (*run)(const SamplerConfig& cfg, std::uint64_t trial_index);
  // Serialize the same draw as a JSON object (--dump-instances support).
  std::string (*dump)(const SamplerConfig& cfg, std::uint64_t trial_index);
};

const std::vector<CheckerDef>& checker_registry();
const CheckerDef* find_checker(const std::string& id);

// The norm kinds a checker is evaluated under at the given input dimension.
std::vector<NormKind> norm_kinds_for(const CheckerDef& def, std::size_t dim);

}  // namespace g1norms

#endif  // G1NORMS_INEQUALITIES_HPP
