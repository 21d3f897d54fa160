// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The CLI binary path is taken from argv[1] for the byte-level
// determinism checks; everything else drives the library directly.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "g1norms/format.hpp"
#include "g1norms/harness.hpp"
#include "g1norms/sharpness.hpp"

using namespace g1norms;

namespace {

int failures = 0;

void report(int criterion, const std::string& label, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, label.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct BatchOutcome {
  std::uint64_t records = 0;
  std::uint64_t passed = 0;
  std::string first_failure;
};

BatchOutcome run_batch(const std::string& id, std::size_t dim, std::uint64_t trials,
                       std::uint64_t seed) {
  RunConfig cfg;
  cfg.theorem_id = id;
  cfg.dim = dim;
  cfg.trials = trials;
  cfg.seed = seed;
  BatchOutcome out;
  for (const auto& r : collect_reports(cfg)) {
    ++out.records;
    if (r.pass) {
      ++out.passed;
    } else if (out.first_failure.empty()) {
      out.first_failure = id + " dim=" + std::to_string(dim) +
                          " trial=" + std::to_string(r.trial_index) + " norm=" + to_string(r.norm);
    }
  }
  return out;
}

void criterion_1() {
  BatchOutcome total;
  for (const char* id : {"thm1-plus", "thm1-minus"}) {
    for (std::size_t dim : {1u, 2u, 4u, 8u}) {
      const BatchOutcome b = run_batch(id, dim, 1000, 20250807);
      total.records += b.records;
      total.passed += b.passed;
      if (total.first_failure.empty()) total.first_failure = b.first_failure;
    }
  }
  report(1, "theorem 2.1 suite, dims {1,2,4,8} x 1000 trials, full norm family",
         total.records == total.passed,
         std::to_string(total.passed) + "/" + std::to_string(total.records) + " records" +
             (total.first_failure.empty() ? "" : ", first failure: " + total.first_failure));
}

void criterion_2() {
  BatchOutcome total;
  for (const auto& def : checker_registry()) {
    for (std::size_t dim : {1u, 2u, 4u, 6u}) {
      const BatchOutcome b = run_batch(def.id, dim, 500, 424242);
      total.records += b.records;
      total.passed += b.passed;
      if (total.first_failure.empty()) total.first_failure = b.first_failure;
    }
  }
  report(2, "full statement matrix, every registered id, dims {1,2,4,6} x 500 trials",
         total.records == total.passed,
         std::to_string(total.passed) + "/" + std::to_string(total.records) + " records" +
             (total.first_failure.empty() ? "" : ", first failure: " + total.first_failure));
}

void criterion_3() {
  BatchOutcome total;
  for (const char* id : {"lemma-andozhan", "lemma-bouldin", "lemma-halfsum", "lemma-resolvent",
                         "lemma-conjugation", "lemma-fugledeputnam", "lemma-s4"}) {
    const BatchOutcome b = run_batch(id, 8, 500, 777001);
    total.records += b.records;
    total.passed += b.passed;
    if (total.first_failure.empty()) total.first_failure = b.first_failure;
  }
  report(3, "lemma suite, 500 trials each at dim 8", total.records == total.passed,
         std::to_string(total.passed) + "/" + std::to_string(total.records) + " records" +
             (total.first_failure.empty() ? "" : ", first failure: " + total.first_failure));
}

void criterion_4() {
  const CalculusSummary s = run_calculus_check(8, 100, 6061, 256);
  const bool agree = s.worst <= 1e-9;
  const bool shrink = s.worst < s.worst_half && s.worst_double < s.worst;
  report(4, "calculus cross-check, dim 8, 100 trials, N=256", agree && shrink,
         "worst@128=" + format_g17(s.worst_half) + " worst@256=" + format_g17(s.worst) +
             " worst@512=" + format_g17(s.worst_double));
}

void criterion_5() {
  const std::size_t n = 2;
  const ComplexMatrix zero = ComplexMatrix::zero(n);
  SamplerConfig cfg;
  cfg.dim = n;
  const ComplexMatrix x = random_general(cfg.with_seed(1));
  const HerglotzMeasure f = random_herglotz(cfg.with_seed(2));
  const HerglotzMeasure g = random_herglotz(cfg.with_seed(3));
  bool ok = true;
  double worst = 0.0;
  for (const auto& kind : norm_suite(n)) {
    const TrialReport r = check_thm1(Sign::Plus, zero, zero, x, f, g, kind);
    worst = std::max(worst, std::abs(r.ratio - 1.0 / M_SQRT2));
    ok = ok && r.pass && std::abs(r.ratio - 1.0 / M_SQRT2) <= 1e-12;
  }
  const auto [hs_first, hs_second] = check_thm_hs(Sign::Plus, zero, zero, x, f, g);
  const double hs_err = std::abs(hs_first.ratio - 1.0);
  ok = ok && hs_first.pass && hs_err <= 1e-12 && hs_second.pass;
  report(5, "exact witnesses: thm1-plus ratio 1/sqrt(2), thm-hs-plus-first ratio 1", ok,
         "thm1 deviation " + format_g17(worst) + ", hs deviation " + format_g17(hs_err));
}

void criterion_6() {
  double worst = 0.0;
  bool ok = true;
  for (std::uint64_t k = 0; k < 1000; ++k) {
    SamplerConfig cfg;
    cfg.dim = 1 + (k % 8);
    cfg.seed = derive_key(515151, k);
    const NormalSample s = random_normal_in_disk(cfg);
    const double dev = g1_certify(s.matrix, 16).max_deviation;
    worst = std::max(worst, dev);
    ok = ok && dev <= 1e-7;
  }
  const ComplexMatrix jordan{{0.0, 1.0}, {0.0, 0.0}};
  const std::vector<Complex> spectrum = {Complex(0.0, 0.0), Complex(0.0, 0.0)};
  const std::vector<Complex> probe = {Complex(0.5, 0.0)};
  const G1Certificate cert = g1_certify(jordan, spectrum, 16, probe);
  const double jordan_dev = g1_deviation(jordan, spectrum, Complex(0.5, 0.0));
  ok = ok && cert.max_deviation > 0.5 && jordan_dev > 0.5;
  report(6, "resolvent-growth certification: 1000 normal samples, nilpotent detection", ok,
         "worst normal deviation " + format_g17(worst) + ", jordan deviation at 0.5 " +
             format_g17(jordan_dev));
}

void criterion_7(const std::string& cli) {
  bool ok = true;
  std::string detail;
  for (const std::string fmt : {std::string("json-lines"), std::string("csv")}) {
    const std::string base = "acc7_" + fmt.substr(0, 3);
    const std::string cmd_common = cli + " verify --theorem thm1-plus --dim 3 --trials 25"
                                         " --seed 11 --format " + fmt + " --out ";
    const int rc1 = std::system((cmd_common + base + "_a.out > /dev/null").c_str());
    const int rc2 = std::system((cmd_common + base + "_b.out > /dev/null").c_str());
    const std::string a = slurp(base + "_a.out");
    const std::string b = slurp(base + "_b.out");
    if (rc1 != 0 || rc2 != 0 || a.empty() || a != b) {
      ok = false;
      detail = "format " + fmt + " differs or run failed";
    }
    std::remove((base + "_a.out").c_str());
    std::remove((base + "_b.out").c_str());
  }
  report(7, "byte-identical reports across repeated verify invocations", ok, detail);
}

void criterion_8() {
  const SharpnessResult r = run_sharpness("thm1-plus", 2, 20000, 909090);
  const double replayed = replay_ratio(r.theorem_id, r.best_instance, r.best_kind);
  const bool in_range = r.best_ratio > 1.0 / M_SQRT2 - 1e-9 && r.best_ratio <= 1.0 + 1e-9;
  const bool replays = std::abs(replayed - r.best_ratio) <= 1e-10;
  report(8, "sharpness sanity on thm1-plus, dim 2, budget 20000",
         in_range && replays && !r.anomaly,
         "best_ratio=" + format_g17(r.best_ratio) + " replay_delta=" +
             format_g17(std::abs(replayed - r.best_ratio)) + " evals=" +
             std::to_string(r.evaluations_used));
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  if (cli.empty()) {
    report(7, "byte-identical reports across repeated verify invocations", false,
           "CLI path not supplied");
  } else {
    criterion_7(cli);
  }
  criterion_8();
  if (failures == 0) {
    std::printf("acceptance: all 8 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return 1;
}
