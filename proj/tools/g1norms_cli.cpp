// Command-line front end: seeded batch verification of the inequality
// suite, empirical sharpness search, and the cross-check of the two
// functional-calculus routes.
//
//   g1norms verify --theorem thm1-plus --dim 4 --trials 1000 --seed 7 \
//       --out report.jsonl
//   g1norms sharpness --theorem thm1-plus --dim 2 --budget 20000 --seed 1
//   g1norms calculus-check --dim 8 --trials 100 --seed 3
//
// Exit status is nonzero iff any trial fails or an anomaly is raised.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "g1norms/format.hpp"
#include "g1norms/harness.hpp"
#include "g1norms/sharpness.hpp"

namespace {

std::string registered_ids() {
  std::string out;
  for (const auto& def : g1norms::checker_registry()) {
    if (!out.empty()) out += ", ";
    out += def.id;
  }
  return out;
}

int run_verify_command(const g1norms::RunConfig& cfg) {
  const g1norms::VerifySummary summary = g1norms::run_verify(cfg);
  std::printf("theorem=%s dim=%zu trials=%llu records=%llu passed=%llu max_ratio=%s%s%s\n",
              cfg.theorem_id.c_str(), cfg.dim,
              static_cast<unsigned long long>(summary.trials),
              static_cast<unsigned long long>(summary.records),
              static_cast<unsigned long long>(summary.records_passed),
              g1norms::format_g17(summary.max_ratio).c_str(),
              summary.report_path.empty() ? "" : " report=",
              summary.report_path.c_str());
  return summary.all_passed() ? 0 : 1;
}

int run_sharpness_command(const std::string& theorem, std::size_t dim, std::uint64_t budget,
                          std::uint64_t seed, double min_gap, const std::string& quarantine) {
  const g1norms::SharpnessResult result =
      g1norms::run_sharpness(theorem, dim, budget, seed, min_gap);
  const double replayed =
      g1norms::replay_ratio(result.theorem_id, result.best_instance, result.best_kind);
  std::string json = "{\"theorem_id\":\"" + result.theorem_id + "\"";
  json += ",\"dim\":" + std::to_string(result.dim);
  json += ",\"best_ratio\":" + g1norms::format_g17(result.best_ratio);
  json += ",\"best_norm\":\"" + g1norms::to_string(result.best_kind) + "\"";
  json += ",\"replayed_ratio\":" + g1norms::format_g17(replayed);
  json += ",\"evaluations_used\":" + std::to_string(result.evaluations_used);
  json += std::string(",\"anomaly\":") + (result.anomaly ? "true" : "false");
  json += ",\"best_instance\":" +
          g1norms::sharpness_instance_json(result.theorem_id, result.best_instance);
  json += "}";
  std::cout << json << "\n";
  if (result.anomaly) {
    std::ofstream out(quarantine, std::ios::binary);
    out << json << "\n";
    std::cerr << "sharpness: ratio exceeds 1; instance quarantined to " << quarantine << "\n";
    return 1;
  }
  return 0;
}

int run_calculus_command(std::size_t dim, std::uint64_t trials, std::uint64_t seed,
                         std::size_t nodes) {
  const g1norms::CalculusSummary s = g1norms::run_calculus_check(dim, trials, seed, nodes);
  std::printf("trials=%llu nodes=%zu worst@N/2=%s worst@N=%s worst@2N=%s pass=%s\n",
              static_cast<unsigned long long>(s.trials), s.nodes,
              g1norms::format_g17(s.worst_half).c_str(), g1norms::format_g17(s.worst).c_str(),
              g1norms::format_g17(s.worst_double).c_str(), s.pass ? "true" : "false");
  return s.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized verification of unitarily invariant norm inequalities"};
  app.require_subcommand(1);

  g1norms::RunConfig cfg;
  std::string format = "json-lines";
  auto* verify = app.add_subcommand("verify", "Run seeded trials of one registered checker");
  verify->add_option("--theorem", cfg.theorem_id, "checker id (" + registered_ids() + ")")
      ->required();
  verify->add_option("--dim", cfg.dim, "matrix dimension")->check(CLI::Range(1, 16))->required();
  verify->add_option("--trials", cfg.trials, "trial count")->check(CLI::PositiveNumber)->required();
  verify->add_option("--seed", cfg.seed, "64-bit seed")->required();
  verify->add_option("--min-gap", cfg.min_gap, "spectral gap floor")->check(CLI::Range(1e-6, 0.999));
  verify->add_option("--norms", cfg.norms, "'all' or comma list like operator,kyfan:2,schatten:2");
  verify->add_option("--format", format, "json-lines or csv")
      ->check(CLI::IsMember({"json-lines", "csv"}));
  verify->add_option("--out", cfg.output_path, "report path")->required();
  verify->add_flag("--dump-instances", cfg.dump_instances,
                   "also write fully serialized inputs next to the report");

  std::string sharp_theorem;
  std::size_t sharp_dim = 2;
  std::uint64_t sharp_budget = 10000;
  std::uint64_t sharp_seed = 0;
  double sharp_gap = 0.05;
  std::string quarantine = "sharpness_quarantine.json";
  auto* sharpness = app.add_subcommand("sharpness", "Hill-climb the ratio of one checker");
  sharpness->add_option("--theorem", sharp_theorem, "checker id")->required();
  sharpness->add_option("--dim", sharp_dim, "matrix dimension")->check(CLI::Range(1, 16))->required();
  sharpness->add_option("--budget", sharp_budget, "evaluation budget")
      ->check(CLI::Range(100u, 100000000u))
      ->required();
  sharpness->add_option("--seed", sharp_seed, "64-bit seed")->required();
  sharpness->add_option("--min-gap", sharp_gap, "spectral gap floor")
      ->check(CLI::Range(1e-6, 0.999));
  sharpness->add_option("--quarantine", quarantine, "file for anomalous instances");

  std::size_t calc_dim = 4;
  std::uint64_t calc_trials = 100;
  std::uint64_t calc_seed = 0;
  std::size_t calc_nodes = 256;
  auto* calculus = app.add_subcommand("calculus-check",
                                      "Contour quadrature against the spectral route");
  calculus->add_option("--dim", calc_dim, "matrix dimension")->check(CLI::Range(1, 16))->required();
  calculus->add_option("--trials", calc_trials, "trial count")
      ->check(CLI::PositiveNumber)
      ->required();
  calculus->add_option("--seed", calc_seed, "64-bit seed")->required();
  calculus->add_option("--nodes", calc_nodes, "contour nodes (even, >= 32)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      cfg.format = (format == "csv") ? g1norms::RunConfig::Format::Csv
                                     : g1norms::RunConfig::Format::JsonLines;
      return run_verify_command(cfg);
    }
    if (*sharpness) {
      return run_sharpness_command(sharp_theorem, sharp_dim, sharp_budget, sharp_seed, sharp_gap,
                                   quarantine);
    }
    if (*calculus) {
      return run_calculus_command(calc_dim, calc_trials, calc_seed, calc_nodes);
    }
  } catch (const g1norms::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
