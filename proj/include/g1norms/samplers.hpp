#ifndef G1NORMS_SAMPLERS_HPP
#define G1NORMS_SAMPLERS_HPP

#include "g1norms/herglotz.hpp"
#include "g1norms/linalg.hpp"
#include "g1norms/prng.hpp"

namespace g1norms {

// Seeded description of one random draw. Identical configs produce
// bit-identical outputs; see prng.hpp for the stream discipline.
struct SamplerConfig {
  std::uint64_t seed = 0;
  std::size_t dim = 2;
  double min_gap = 0.05;   // enforced lower bound on dist(unit circle, spectrum)
  double max_entry = 1.0;  // scale of X-type draws

  void validate() const;
  SamplerConfig with_seed(std::uint64_t s) const {
    SamplerConfig c = *this;
    c.seed = s;
    return c;
  }
};

struct NormalSample {
  ComplexMatrix matrix;
  SpectralDecomposition decomposition;
};

struct HermitianSample {
  ComplexMatrix matrix;
  SpectralDecomposition decomposition;  // real eigenvalues
};

struct CommutingPair {
  NormalSample a;
  NormalSample x;  // normal, shares the eigenbasis of a, commutes with it
};

// Assemble U diag(lambda) U^* together with its decomposition.
NormalSample make_normal(std::vector<Complex> eigenvalues, ComplexMatrix basis);
// Same with real eigenvalues; the matrix is made exactly self-adjoint.
HermitianSample make_hermitian(const std::vector<double>& eigenvalues, ComplexMatrix basis);

// Haar-distributed unitary: QR of a complex Gaussian matrix with the
// phases of the R diagonal folded back into Q.
ComplexMatrix random_unitary(const SamplerConfig& cfg);

// Normal matrix U diag(lambda) U^* with lambda uniform on the disk of
// radius 1 - min_gap.
NormalSample random_normal_in_disk(const SamplerConfig& cfg);

// Hermitian matrix with eigenvalues uniform in [lo, hi] intersected with
// [-(1 - min_gap), 1 - min_gap]. Requires -1 < lo < hi < 1; throws
// DomainError when the intersection is empty.
HermitianSample random_hermitian_in_interval(const SamplerConfig& cfg, double lo, double hi);

// Commuting normal pair: A with spectrum in the gap-constrained disk, X
// with arbitrary complex eigenvalues of magnitude at most max_entry, both
// diagonal in one Haar basis.
CommutingPair random_commuting_normal_pair(const SamplerConfig& cfg);

// Entries i.i.d. complex Gaussian scaled by max_entry / sqrt(dim).
ComplexMatrix random_general(const SamplerConfig& cfg);

// 1..8 atoms at uniform angles; weights are normalized i.i.d. exponentials
// (flat on the simplex), patched so they sum to 1 exactly.
HerglotzMeasure random_herglotz(const SamplerConfig& cfg);

}  // namespace g1norms

#endif  // G1NORMS_SAMPLERS_HPP
