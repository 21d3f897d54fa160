#include "g1norms/harness.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "g1norms/format.hpp"

namespace g1norms {

void RunConfig::validate() const {
  if (trials < 1) throw DomainError("RunConfig: trials must be >= 1");
  if (dim < 1 || dim > 16) throw DomainError("RunConfig: dim must be in [1, 16]");
  if (!find_checker(theorem_id)) {
    throw DomainError("RunConfig: unknown theorem id '" + theorem_id + "'");
  }
  if (!(min_gap > 0.0 && min_gap < 1.0)) throw DomainError("RunConfig: min_gap must be in (0, 1)");
}

namespace {

std::vector<NormKind> resolve_norms(const RunConfig& cfg, const CheckerDef& def) {
  const std::vector<NormKind> supported = norm_kinds_for(def, cfg.dim);
  if (cfg.norms == "all") return supported;
  std::vector<NormKind> selected;
  std::stringstream ss(cfg.norms);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    const NormKind kind = parse_norm_kind(token);
    bool ok = false;
    for (const auto& s : supported) ok = ok || s == kind;
    if (!ok) {
      throw DomainError("RunConfig: norm '" + token + "' not in the certificate family of '" +
                        def.id + "' at dim " + std::to_string(cfg.dim));
    }
    selected.push_back(kind);
  }
  if (selected.empty()) throw DomainError("RunConfig: empty norm selection");
  return selected;
}

void parallel_trials(std::uint64_t count, const std::function<void(std::uint64_t)>& work) {
  unsigned threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min<std::uint64_t>(threads, count);
  if (threads <= 1) {
    for (std::uint64_t t = 0; t < count; ++t) work(t);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t t = w; t < count; t += threads) work(t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::string ratio_field(double ratio) {
  if (!std::isfinite(ratio)) return "null";
  return format_g17(ratio);
}

}  // namespace

std::string report_to_json_line(const TrialReport& r) {
  std::string line = "{\"theorem_id\":\"" + r.theorem_id + "\"";
  line += ",\"dim\":" + std::to_string(r.dim);
  line += ",\"seed\":" + std::to_string(r.seed);
  line += ",\"trial_index\":" + std::to_string(r.trial_index);
  line += ",\"norm\":\"" + to_string(r.norm) + "\"";
  line += ",\"lhs\":" + format_g17(r.lhs);
  line += ",\"rhs\":" + format_g17(r.rhs);
  line += ",\"ratio\":" + ratio_field(r.ratio);
  line += ",\"d_A\":" + format_g17(r.d_a);
  line += ",\"d_B\":" + format_g17(r.d_b);
  line += std::string(",\"pass\":") + (r.pass ? "true" : "false");
  line += "}";
  return line;
}

std::string report_to_csv_line(const TrialReport& r) {
  std::string line = r.theorem_id;
  line += "," + std::to_string(r.dim);
  line += "," + std::to_string(r.seed);
  line += "," + std::to_string(r.trial_index);
  line += "," + to_string(r.norm);
  line += "," + format_g17(r.lhs);
  line += "," + format_g17(r.rhs);
  line += "," + format_g17(r.ratio);
  line += "," + format_g17(r.d_a);
  line += "," + format_g17(r.d_b);
  line += r.pass ? ",true" : ",false";
  return line;
}

std::vector<TrialReport> collect_reports(const RunConfig& cfg) {
  cfg.validate();
  const CheckerDef& def = *find_checker(cfg.theorem_id);
  const std::vector<NormKind> kinds = resolve_norms(cfg, def);

  SamplerConfig scfg;
  scfg.seed = cfg.seed;
  scfg.dim = cfg.dim;
  scfg.min_gap = cfg.min_gap;
  scfg.max_entry = cfg.max_entry;

  std::vector<TrialReport> reports(cfg.trials * kinds.size());
  parallel_trials(cfg.trials, [&](std::uint64_t t) {
    const TrialBody body = def.run(scfg, t);
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      reports[t * kinds.size() + k] = evaluate(body, kinds[k], def.id, cfg.seed, t);
    }
  });
  return reports;
}

VerifySummary run_verify(const RunConfig& cfg) {
  const std::vector<TrialReport> reports = collect_reports(cfg);

  VerifySummary summary;
  summary.trials = cfg.trials;
  summary.records = reports.size();
  for (const auto& r : reports) {
    if (r.pass) ++summary.records_passed;
    if (std::isfinite(r.ratio)) summary.max_ratio = std::max(summary.max_ratio, r.ratio);
  }

  if (!cfg.output_path.empty()) {
    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) throw std::runtime_error("run_verify: cannot open '" + cfg.output_path + "'");
    if (cfg.format == RunConfig::Format::Csv) out << kCsvHeader << "\n";
    for (const auto& r : reports) {
      out << (cfg.format == RunConfig::Format::Csv ? report_to_csv_line(r)
                                                   : report_to_json_line(r))
          << "\n";
    }
    if (!out) throw std::runtime_error("run_verify: write failure on '" + cfg.output_path + "'");
    summary.report_path = cfg.output_path;

    if (cfg.dump_instances) {
      const CheckerDef& def = *find_checker(cfg.theorem_id);
      SamplerConfig scfg;
      scfg.seed = cfg.seed;
      scfg.dim = cfg.dim;
      scfg.min_gap = cfg.min_gap;
      scfg.max_entry = cfg.max_entry;
      const std::string dump_path = cfg.output_path + ".instances.jsonl";
      std::ofstream dump(dump_path, std::ios::binary);
      if (!dump) throw std::runtime_error("run_verify: cannot open '" + dump_path + "'");
      for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        dump << "{\"theorem_id\":\"" << def.id << "\",\"dim\":" << cfg.dim
             << ",\"seed\":" << cfg.seed << ",\"trial_index\":" << t
             << ",\"inputs\":" << def.dump(scfg, t) << "}\n";
      }
    }
  }
  return summary;
}

CalculusSummary run_calculus_check(std::size_t dim, std::uint64_t trials, std::uint64_t seed,
                                   std::size_t nodes) {
  if (trials < 1) throw DomainError("run_calculus_check: trials must be >= 1");
  if (nodes < 32 || nodes % 2 != 0) {
    throw DomainError("run_calculus_check: nodes must be even and at least 32");
  }
  CalculusSummary summary;
  summary.trials = trials;
  summary.nodes = nodes;

  SamplerConfig base;
  base.dim = dim;
  base.min_gap = 0.2;  // keeps the spectral radius at or below 0.8

  std::vector<double> half(trials), full(trials), twice(trials);
  parallel_trials(trials, [&](std::uint64_t t) {
    const std::uint64_t trial_key = derive_key(seed, t);
    const NormalSample a = random_normal_in_disk(base.with_seed(derive_key(trial_key, 0)));
    const HerglotzMeasure f = random_herglotz(base.with_seed(derive_key(trial_key, 3)));

    double rho = 0.0;
    for (const Complex& lam : a.decomposition.eigenvalues) rho = std::max(rho, std::abs(lam));
    ContourSpec contour;
    contour.radius = 0.5 * (rho + 1.0);
    const auto f_eval = [&f](Complex z) { return herglotz_eval(f, z); };
    const ComplexMatrix exact = apply_spectral(f, a.decomposition);

    contour.nodes = nodes / 2;
    half[t] = operator_norm(riesz_dunford(f_eval, a.matrix, contour) - exact);
    contour.nodes = nodes;
    full[t] = operator_norm(riesz_dunford(f_eval, a.matrix, contour) - exact);
    contour.nodes = 2 * nodes;
    twice[t] = operator_norm(riesz_dunford(f_eval, a.matrix, contour) - exact);
  });
  for (std::uint64_t t = 0; t < trials; ++t) {
    summary.worst_half = std::max(summary.worst_half, half[t]);
    summary.worst = std::max(summary.worst, full[t]);
    summary.worst_double = std::max(summary.worst_double, twice[t]);
  }
  summary.pass = summary.worst <= 1e-8;
  return summary;
}

}  // namespace g1norms
