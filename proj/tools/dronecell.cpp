// Command-line front end: closed-form queries, simulations, figure sweeps and
// the closed-form vs simulation report.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dronecell/error.hpp"
#include "dronecell/experiment.hpp"
#include "dronecell/interference.hpp"
#include "dronecell/kernels.hpp"
#include "dronecell/montecarlo.hpp"
#include "dronecell/performance.hpp"
#include "dronecell/units.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;
using namespace dronecell;

struct GlobalOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<unsigned> workers;
  std::string out;
};

ExperimentSpec resolve_spec(const GlobalOptions& g, std::optional<ExperimentKind> kind) {
  ExperimentSpec spec = g.config.empty()
                            ? default_spec(kind.value_or(ExperimentKind::custom_sweep))
                            : load_config(g.config);
  if (kind && spec.kind != *kind) {
    throw ConfigError("config kind '" + std::string(to_string(spec.kind)) +
                      "' does not match requested figure '" + std::string(to_string(*kind)) + "'");
  }
  if (g.seed) spec.seed = *g.seed;
  if (g.trials) spec.trials = *g.trials;
  if (g.workers) spec.workers = *g.workers;
  if (!g.out.empty()) spec.output_path = g.out;
  return spec;
}

SimConfig sim_from(const ExperimentSpec& spec) {
  SimConfig cfg;
  cfg.trials = spec.trials;
  cfg.master_seed = spec.seed;
  cfg.h = spec.fixed.h_m;
  cfg.net = spec.fixed.network();
  cfg.workers = spec.workers;
  return cfg;
}

void emit(const ordered_json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    out << text;
  }
}

void write_trace(const std::string& path, const char* x_col, const char* y_col,
                 const OptimizationResult& res) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << x_col << ',' << y_col << '\n';
  for (const auto& [x, y] : res.trace) out << format_number(x) << ',' << format_number(y) << '\n';
}

int cmd_interference_mean(const GlobalOptions& g) {
  const ExperimentSpec spec = resolve_spec(g, std::nullopt);
  const Parameters& p = spec.fixed;
  const NetworkConfig net = p.network();
  const InterferenceStats s = interference_stats(net, p.h_m);
  ordered_json doc = {{"environment", net.env.name},
                      {"lambda", p.lambda},
                      {"h_m", p.h_m},
                      {"beamwidth_deg", p.beamwidth_deg},
                      {"upsilon_mu", upsilon_mu(net.beamwidth_rad, net.env)},
                      {"upsilon_sigma", upsilon_sigma(net.beamwidth_rad, net.env)},
                      {"mean_watts", s.mean},
                      {"mean_dbw", s.mean > 0.0 ? linear_to_db(s.mean) : -INFINITY},
                      {"variance_watts2", s.variance},
                      {"cv", s.cv}};
  emit(doc, g.out);
  return 0;
}

int cmd_interference_cdf(const GlobalOptions& g) {
  ExperimentSpec spec = resolve_spec(g, std::nullopt);
  const std::string out = g.out.empty() ? "interference_samples.csv" : g.out;
  const SimConfig cfg = sim_from(spec);
  std::vector<double> samples = simulate_samples(cfg);
  {
    std::ofstream csv(out, std::ios::binary);
    if (!csv) throw ConfigError("cannot write " + out);
    csv << "trial,i_agg_watts\n";
    for (std::size_t i = 0; i < samples.size(); ++i) {
      csv << i << ',' << format_number(samples[i]) << '\n';
    }
  }
  const EmpiricalDistribution dist = EmpiricalDistribution::from_samples(std::move(samples));
  ordered_json summary = {{"mean", dist.mean()},
                          {"variance", dist.variance()},
                          {"cv", dist.cv()},
                          {"trials", spec.trials},
                          {"seed", spec.seed}};
  emit(summary, out + ".json");
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int cmd_coverage(const GlobalOptions& g, bool simulate) {
  const ExperimentSpec spec = resolve_spec(g, std::nullopt);
  const Parameters& p = spec.fixed;
  const CoverageModel model(p.network());
  ordered_json doc = {{"environment", p.env.name},
                      {"r_m", p.r_m},
                      {"h_m", p.h_m},
                      {"threshold_db", p.threshold_db},
                      {"mean_iagg_watts", model.mean_interference()}};
  if (model.mean_interference() > 0.0) doc["psi_db"] = model.psi_db(p.r_m, p.h_m, p.threshold_db);
  doc["pcov_analytic"] = model.coverage(p.r_m, p.h_m, p.threshold_db);
  if (simulate) {
    const SimConfig cfg = sim_from(spec);
    const double t = db_to_linear(p.threshold_db);
    doc["pcov_sim_mean_field"] =
        simulate_coverage(cfg, p.r_m, t, InterferenceMode::mean_field).probability;
    doc["pcov_sim_actual"] = simulate_coverage(cfg, p.r_m, t, InterferenceMode::actual).probability;
    doc["trials"] = spec.trials;
    doc["seed"] = spec.seed;
  }
  emit(doc, "");
  return 0;
}

int cmd_rate(const GlobalOptions& g) {
  const ExperimentSpec spec = resolve_spec(g, std::nullopt);
  const Parameters& p = spec.fixed;
  const CoverageModel model(p.network());
  const OptimizationResult best =
      optimal_altitude(model, p.r_m, p.threshold_db, {p.h_min_m, p.h_max_m});
  ordered_json doc = {{"threshold_db", p.threshold_db},
                      {"rate_bps_hz", std::log2(1.0 + db_to_linear(p.threshold_db)) * best.value},
                      {"h_opt_m", best.argmax},
                      {"pcov_max", best.value},
                      {"at_boundary", best.at_boundary}};
  emit(doc, g.out);
  return 0;
}

int cmd_optimize_altitude(const GlobalOptions& g) {
  const ExperimentSpec spec = resolve_spec(g, std::nullopt);
  const Parameters& p = spec.fixed;
  const OptimizationResult res =
      optimal_altitude(CoverageModel(p.network()), p.r_m, p.threshold_db, {p.h_min_m, p.h_max_m});
  ordered_json doc = {{"r_m", p.r_m},
                      {"threshold_db", p.threshold_db},
                      {"argmax_h_m", res.argmax},
                      {"pcov", res.value},
                      {"at_boundary", res.at_boundary},
                      {"lower_bound_clipped", res.lower_bound_clipped},
                      {"requested_h_min_m", res.requested_lower_bound}};
  if (!g.out.empty()) write_trace(g.out, "h_m", "pcov", res);
  emit(doc, "");
  return 0;
}

int cmd_optimize_threshold(const GlobalOptions& g) {
  const ExperimentSpec spec = resolve_spec(g, std::nullopt);
  const Parameters& p = spec.fixed;
  const ThresholdSearchResult res = optimal_threshold(CoverageModel(p.network()), p.r_m,
                                                      p.t_min_db, p.t_max_db, {p.h_min_m, p.h_max_m});
  ordered_json doc = {{"r_m", p.r_m},
                      {"argmax_t_db", res.rate.argmax},
                      {"rate_bps_hz", res.rate.value},
                      {"at_boundary", res.rate.at_boundary},
                      {"h_opt_m", res.altitude.argmax},
                      {"pcov_at_argmax", res.altitude.value}};
  if (!g.out.empty()) write_trace(g.out, "t_db", "rate_bps_hz", res.rate);
  emit(doc, "");
  return 0;
}

int cmd_figure(const GlobalOptions& g, const std::string& name) {
  const ExperimentSpec spec = resolve_spec(g, parse_experiment_kind(name));
  const RunSummary summary = run_experiment(spec);
  std::cerr << "wrote " << summary.rows << " rows to " << summary.csv_path.string() << " ("
            << summary.failed_rows << " failed), sidecar " << summary.sidecar_path.string() << "\n";
  return summary.exit_code();
}

int cmd_validate(const GlobalOptions& g) {
  const ExperimentSpec spec = resolve_spec(g, std::nullopt);
  const ValidationReport report = validate_against_oracle(spec);
  const std::string text = report.to_text();
  std::cout << text;
  if (!g.out.empty()) {
    std::ofstream out(g.out, std::ios::binary);
    out << text;
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Drone uplink interference, coverage and rate engine"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  unsigned workers = 0;
  app.add_option("--config", g.config, "JSON experiment/config file")->check(CLI::ExistingFile);
  auto* seed_opt = app.add_option("--seed", seed, "Master seed (u64)");
  auto* trials_opt = app.add_option("--trials", trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  auto* workers_opt = app.add_option("--workers", workers, "Worker threads (0 = all cores)");
  app.add_option("--out", g.out, "Output path");

  auto* mean_cmd = app.add_subcommand("interference-mean", "Closed-form interference moments");
  auto* cdf_cmd = app.add_subcommand("interference-cdf", "Simulated interference samples and summary");
  bool simulate = false;
  auto* cov_cmd = app.add_subcommand("coverage", "Coverage probability at the configured point");
  cov_cmd->add_flag("--simulate", simulate, "Also run both Monte Carlo estimators");
  auto* rate_cmd = app.add_subcommand("rate", "Normalized rate at the configured threshold");
  auto* alt_cmd = app.add_subcommand("optimize-altitude", "Coverage-maximizing altitude");
  auto* thr_cmd = app.add_subcommand("optimize-threshold", "Rate-maximizing SIR threshold");
  std::string figure;
  auto* fig_cmd = app.add_subcommand("figure", "Run a figure sweep and write CSV + JSON sidecar");
  fig_cmd->add_option("name", figure, "fig2|fig3|fig4|fig5|fig6|custom-sweep")->required();
  auto* val_cmd = app.add_subcommand("validate", "Compare closed forms against simulation");
  bool show_isa = false;
  app.add_flag("--show-isa", show_isa, "Print the active SIMD kernel variant to stderr");

  CLI11_PARSE(app, argc, argv);
  if (*seed_opt) g.seed = seed;
  if (*trials_opt) g.trials = trials;
  if (*workers_opt) g.workers = workers;
  if (show_isa) std::cerr << "kernels: " << kernels::isa_name(kernels::active_isa()) << "\n";

  try {
    if (*mean_cmd) return cmd_interference_mean(g);
    if (*cdf_cmd) return cmd_interference_cdf(g);
    if (*cov_cmd) return cmd_coverage(g, simulate);
    if (*rate_cmd) return cmd_rate(g);
    if (*alt_cmd) return cmd_optimize_altitude(g);
    if (*thr_cmd) return cmd_optimize_threshold(g);
    if (*fig_cmd) return cmd_figure(g, figure);
    if (*val_cmd) return cmd_validate(g);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
