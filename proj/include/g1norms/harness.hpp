#ifndef G1NORMS_HARNESS_HPP
#define G1NORMS_HARNESS_HPP

#include <string>

#include "g1norms/inequalities.hpp"

namespace g1norms {

// One batch verification run of a registered checker.
struct RunConfig {
  std::string theorem_id;
  std::size_t dim = 2;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  double min_gap = 0.05;
  double max_entry = 1.0;
  std::string norms = "all";  // "all" or a comma-separated subset
  std::string output_path;    // empty: no report file
  enum class Format { JsonLines, Csv } format = Format::JsonLines;
  bool dump_instances = false;

  void validate() const;
};

struct VerifySummary {
  std::uint64_t trials = 0;
  std::uint64_t records = 0;
  std::uint64_t records_passed = 0;
  double max_ratio = 0.0;
  std::string report_path;

  bool all_passed() const { return records_passed == records; }
};

// Runs `trials` seeded instances through the named checker across the
// selected norms, one record per (trial, norm), in trial-major order.
// Trials are evaluated by a worker pool; records are identical regardless
// of scheduling because each trial draws from its own (seed, trial) stream.
VerifySummary run_verify(const RunConfig& cfg);

// Same evaluation without file output; used by tests and the acceptance
// suite.
std::vector<TrialReport> collect_reports(const RunConfig& cfg);

std::string report_to_json_line(const TrialReport& r);
std::string report_to_csv_line(const TrialReport& r);
inline const char* kCsvHeader = "theorem_id,dim,seed,trial_index,norm,lhs,rhs,ratio,d_A,d_B,pass";

// Cross-validation of the two functional-calculus routes on random normal
// matrices with spectral radius at most 0.8: the spectral form against the
// contour quadrature at nodes/2, nodes and 2*nodes.
struct CalculusSummary {
  std::uint64_t trials = 0;
  std::size_t nodes = 0;
  double worst_half = 0.0;    // nodes / 2
  double worst = 0.0;         // nodes
  double worst_double = 0.0;  // 2 * nodes
  bool pass = false;          // worst <= 1e-8
};

CalculusSummary run_calculus_check(std::size_t dim, std::uint64_t trials, std::uint64_t seed,
                                   std::size_t nodes = 256);

}  // namespace g1norms

#endif  // G1NORMS_HARNESS_HPP
