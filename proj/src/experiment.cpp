#include "dronecell/experiment.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "dronecell/error.hpp"
#include "dronecell/montecarlo.hpp"
#include "dronecell/performance.hpp"
#include "dronecell/units.hpp"
#include "json.hpp"

namespace dronecell {
namespace {

using nlohmann::json;

constexpr double kCoverageTolerance = 0.05;
constexpr double kStandardErrors = 4.0;
constexpr std::uint64_t kMinValidationTrials = 10000;

struct NumericField {
  const char* name;
  double Parameters::*member;
};

constexpr std::array<NumericField, 11> kNumericFields = {{
    {"lambda", &Parameters::lambda},
    {"p_interferer_dbw", &Parameters::p_interferer_dbw},
    {"p_ue_dbw", &Parameters::p_ue_dbw},
    {"beamwidth_deg", &Parameters::beamwidth_deg},
    {"h_m", &Parameters::h_m},
    {"r_m", &Parameters::r_m},
    {"threshold_db", &Parameters::threshold_db},
    {"h_min_m", &Parameters::h_min_m},
    {"h_max_m", &Parameters::h_max_m},
    {"t_min_db", &Parameters::t_min_db},
    {"t_max_db", &Parameters::t_max_db},
}};

const NumericField* find_field(std::string_view name) {
  for (const auto& f : kNumericFields) {
    if (name == f.name) return &f;
  }
  return nullptr;
}

void fail(const std::string& message) { throw ConfigError(message); }

bool is_interference_kind(ExperimentKind k) {
  return k == ExperimentKind::fig2 || k == ExperimentKind::fig3 || k == ExperimentKind::fig4 ||
         k == ExperimentKind::custom_sweep;
}

bool is_coverage_kind(ExperimentKind k) {
  return k == ExperimentKind::fig5 || k == ExperimentKind::fig6 ||
         k == ExperimentKind::custom_sweep;
}

Axis numeric_axis(std::string name, std::vector<double> values) {
  Axis a{std::move(name), {}};
  for (double v : values) a.values.emplace_back(v);
  return a;
}

std::vector<double> linear_range(double start, double stop, double step) {
  std::vector<double> out;
  const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(start + step * static_cast<double>(i));
  return out;
}

std::vector<double> spaced(double start, double stop, std::size_t count, bool log_spacing) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    out[i] = log_spacing ? start * std::pow(stop / start, t) : start + (stop - start) * t;
  }
  if (count > 1) out.back() = stop;
  return out;
}

EnvironmentParams environment_from_value(const json& value, const std::filesystem::path& base_dir) {
  if (value.is_object()) return environment_from_json_text(value.dump());
  if (!value.is_string()) fail("environment must be a built-in name, a file path or an object");
  const std::string name = value.get<std::string>();
  if (name == "synthetic-urban" || name == "synthetic-dense") return builtin_environment(name);
  std::filesystem::path p(name);
  if (p.is_relative()) p = base_dir / p;
  return load_environment(p);
}

double number_in(const json& obj, const std::string& context, const char* key) {
  const json& v = obj.at(key);
  if (!v.is_number()) fail(context + ": '" + key + "' must be a number");
  return v.get<double>();
}

Axis parse_axis(const json& obj, const std::string& context, const std::filesystem::path& base_dir) {
  if (!obj.is_object()) fail(context + " must be an object");
  static const std::array<const char*, 7> allowed = {"axis", "values", "start", "stop",
                                                     "count", "step", "spacing"};
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      fail(context + ": unknown key '" + item.key() + "'");
    }
  }
  if (!obj.contains("axis") || !obj.at("axis").is_string()) fail(context + ": missing 'axis'");
  Axis axis;
  axis.name = obj.at("axis").get<std::string>();
  if (!is_known_axis(axis.name)) fail(context + ": unrecognized axis '" + axis.name + "'");

  if (obj.contains("values")) {
    const json& vals = obj.at("values");
    if (!vals.is_array() || vals.empty()) fail(context + ": 'values' must be a non-empty array");
    for (const json& v : vals) {
      if (axis.name == "environment") {
        axis.values.emplace_back(environment_from_value(v, base_dir));
      } else {
        if (!v.is_number()) fail(context + ": values of axis '" + axis.name + "' must be numbers");
        axis.values.emplace_back(v.get<double>());
      }
    }
    return axis;
  }
  if (axis.name == "environment") fail(context + ": environment axis needs explicit 'values'");
  if (!obj.contains("start") || !obj.contains("stop")) {
    fail(context + ": give either 'values' or 'start'/'stop' with 'count' or 'step'");
  }
  const double start = number_in(obj, context, "start");
  const double stop = number_in(obj, context, "stop");
  if (!(stop > start)) fail(context + ": 'stop' must exceed 'start'");
  std::vector<double> values;
  if (obj.contains("step")) {
    const double step = number_in(obj, context, "step");
    if (!(step > 0.0)) fail(context + ": 'step' must be > 0");
    values = linear_range(start, stop, step);
  } else if (obj.contains("count")) {
    const json& c = obj.at("count");
    if (!c.is_number_integer() || c.get<long>() < 1) fail(context + ": 'count' must be an integer >= 1");
    std::string spacing = "linear";
    if (obj.contains("spacing")) spacing = obj.at("spacing").get<std::string>();
    if (spacing != "linear" && spacing != "log") fail(context + ": 'spacing' must be linear or log");
    if (spacing == "log" && !(start > 0.0)) fail(context + ": log spacing needs start > 0");
    values = spaced(start, stop, static_cast<std::size_t>(c.get<long>()), spacing == "log");
  } else {
    fail(context + ": give 'count' or 'step' with 'start'/'stop'");
  }
  return numeric_axis(axis.name, values);
}

json axis_to_json(const Axis& axis) {
  json values = json::array();
  for (const auto& v : axis.values) {
    if (const double* d = std::get_if<double>(&v)) {
      values.push_back(*d);
    } else {
      values.push_back(json::parse(environment_to_json_text(std::get<EnvironmentParams>(v))));
    }
  }
  return {{"axis", axis.name}, {"values", values}};
}

struct Point {
  Parameters params;
  std::string series_label;
  std::string sweep_label;
};

std::vector<Point> enumerate_points(const ExperimentSpec& spec) {
  std::vector<Point> points;
  const std::vector<AxisValue> none{AxisValue{0.0}};
  const auto& outer = spec.series ? spec.series->values : none;
  for (const auto& s : outer) {
    Parameters base = spec.fixed;
    std::string slabel;
    if (spec.series) {
      base = with_axis_value(base, spec.series->name, s);
      slabel = axis_value_label(s);
    }
    for (const auto& v : spec.sweep.values) {
      points.push_back({with_axis_value(base, spec.sweep.name, v), slabel, axis_value_label(v)});
    }
  }
  return points;
}

SimConfig sim_config(const ExperimentSpec& spec, const Parameters& p) {
  SimConfig cfg;
  cfg.trials = spec.trials;
  cfg.master_seed = spec.seed;
  cfg.h = p.h_m;
  cfg.net = p.network();
  cfg.workers = spec.workers;
  return cfg;
}

std::vector<std::string> error_row(std::vector<std::string> keys, std::size_t value_columns) {
  for (std::size_t i = 0; i < value_columns; ++i) keys.emplace_back(kErrorMarker);
  return keys;
}

void check_fixed_keys(const json& fixed) {
  for (const auto& item : fixed.items()) {
    if (item.key() == "environment") continue;
    if (find_field(item.key()) == nullptr) fail("fixed: unknown key '" + item.key() + "'");
  }
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::fig2: return "fig2";
    case ExperimentKind::fig3: return "fig3";
    case ExperimentKind::fig4: return "fig4";
    case ExperimentKind::fig5: return "fig5";
    case ExperimentKind::fig6: return "fig6";
    case ExperimentKind::custom_sweep: return "custom-sweep";
  }
  return "unknown";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
  for (ExperimentKind k : {ExperimentKind::fig2, ExperimentKind::fig3, ExperimentKind::fig4,
                           ExperimentKind::fig5, ExperimentKind::fig6, ExperimentKind::custom_sweep}) {
    if (name == to_string(k)) return k;
  }
  throw ConfigError("unknown experiment kind '" + std::string(name) +
                    "' (expected fig2, fig3, fig4, fig5, fig6 or custom-sweep)");
}

NetworkConfig Parameters::network() const {
  NetworkConfig net;
  net.lambda = lambda;
  net.p_interferer_w = db_to_linear(p_interferer_dbw);
  net.p_ue_w = db_to_linear(p_ue_dbw);
  net.beamwidth_rad = deg_to_rad(beamwidth_deg);
  net.env = env;
  return net;
}

void Parameters::validate() const {
  for (const auto& f : kNumericFields) {
    if (!std::isfinite(this->*f.member)) fail(std::string(f.name) + " must be finite");
  }
  if (lambda < 0.0) fail("lambda = " + format_number(lambda) + " out of range [0, inf)");
  if (!(beamwidth_deg > 0.0) || beamwidth_deg > 150.0) {
    fail("beamwidth_deg = " + format_number(beamwidth_deg) + " out of range (0, 150]");
  }
  if (!(h_m > 0.0)) fail("h_m = " + format_number(h_m) + " out of range (0, inf)");
  if (r_m < 0.0) fail("r_m = " + format_number(r_m) + " out of range [0, inf)");
  if (!(h_min_m > 0.0)) fail("h_min_m = " + format_number(h_min_m) + " out of range (0, inf)");
  if (!(h_max_m > h_min_m)) fail("h_max_m must exceed h_min_m");
  if (!(t_max_db > t_min_db)) fail("t_max_db must exceed t_min_db");
  try {
    env.validate();
  } catch (const DomainError& e) {
    fail(e.what());
  }
}

bool is_known_axis(std::string_view name) {
  return name == "environment" || find_field(name) != nullptr;
}

Parameters with_axis_value(Parameters params, std::string_view axis, const AxisValue& value) {
  if (axis == "environment") {
    const auto* env = std::get_if<EnvironmentParams>(&value);
    if (env == nullptr) fail("environment axis value must be an environment table");
    params.env = *env;
    return params;
  }
  const NumericField* f = find_field(axis);
  if (f == nullptr) fail("unrecognized axis '" + std::string(axis) + "'");
  const auto* d = std::get_if<double>(&value);
  if (d == nullptr) fail("axis '" + std::string(axis) + "' needs numeric values");
  params.*(f->member) = *d;
  return params;
}

std::string axis_value_label(const AxisValue& value) {
  if (const double* d = std::get_if<double>(&value)) return format_number(*d);
  return std::get<EnvironmentParams>(value).name;
}

ExperimentSpec default_spec(ExperimentKind kind) {
  ExperimentSpec spec;
  spec.kind = kind;
  spec.output_path = std::string(to_string(kind)) + ".csv";
  switch (kind) {
    case ExperimentKind::fig2:
      spec.sweep = numeric_axis("beamwidth_deg", linear_range(30.0, 150.0, 10.0));
      spec.series = numeric_axis("lambda", {1e-5});
      break;
    case ExperimentKind::fig3:
      spec.sweep = numeric_axis("h_m", {100.0, 1000.0});
      spec.series = numeric_axis("lambda", {1e-5, 1e-4});
      break;
    case ExperimentKind::fig4:
      spec.sweep = numeric_axis("lambda", spaced(1e-6, 1e-4, 9, true));
      spec.series = numeric_axis("h_m", {500.0, 1000.0});
      break;
    case ExperimentKind::fig5:
      spec.fixed.r_m = 400.0;
      spec.sweep = numeric_axis(
          "h_m", {150.0, 200.0, 300.0, 400.0, 500.0, 700.0, 1000.0, 1500.0, 2000.0, 2500.0, 3000.0});
      spec.series = Axis{"environment",
                         {AxisValue{synthetic_urban_environment()},
                          AxisValue{synthetic_dense_environment()}}};
      break;
    case ExperimentKind::fig6:
      spec.sweep = numeric_axis("threshold_db", linear_range(-10.0, 10.0, 0.5));
      break;
    case ExperimentKind::custom_sweep:
      spec.sweep = numeric_axis("h_m", {500.0});
      break;
  }
  return spec;
}

ExperimentSpec parse_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(std::string("config JSON parse error: ") + e.what());
  }
  if (!root.is_object()) fail("config must be a JSON object");
  static const std::array<const char*, 8> allowed = {"kind",   "sweep",  "series", "fixed",
                                                     "output", "seed",   "trials", "workers"};
  for (const auto& item : root.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      fail("config: unknown key '" + item.key() + "'");
    }
  }

  ExperimentKind kind = ExperimentKind::custom_sweep;
  if (root.contains("kind")) {
    if (!root.at("kind").is_string()) fail("config: 'kind' must be a string");
    kind = parse_experiment_kind(root.at("kind").get<std::string>());
  }
  ExperimentSpec spec = default_spec(kind);

  if (root.contains("fixed")) {
    const json& fixed = root.at("fixed");
    if (!fixed.is_object()) fail("config: 'fixed' must be an object");
    check_fixed_keys(fixed);
    for (const auto& f : kNumericFields) {
      if (fixed.contains(f.name)) spec.fixed.*(f.member) = number_in(fixed, "fixed", f.name);
    }
    if (fixed.contains("environment")) {
      spec.fixed.env = environment_from_value(fixed.at("environment"), base_dir);
    }
  }
  if (root.contains("sweep")) spec.sweep = parse_axis(root.at("sweep"), "sweep", base_dir);
  if (root.contains("series")) {
    if (root.at("series").is_null()) {
      spec.series.reset();
    } else {
      spec.series = parse_axis(root.at("series"), "series", base_dir);
    }
  }
  if (spec.series && spec.series->name == spec.sweep.name) {
    fail("config: series and sweep must use different axes");
  }
  if (root.contains("output")) {
    if (!root.at("output").is_string()) fail("config: 'output' must be a string");
    spec.output_path = root.at("output").get<std::string>();
  }
  if (root.contains("seed")) {
    if (!root.at("seed").is_number_unsigned()) fail("config: 'seed' must be a non-negative integer");
    spec.seed = root.at("seed").get<std::uint64_t>();
  }
  if (root.contains("trials")) {
    if (!root.at("trials").is_number_unsigned() || root.at("trials").get<std::uint64_t>() < 2) {
      fail("config: 'trials' must be an integer >= 2");
    }
    spec.trials = root.at("trials").get<std::uint64_t>();
  }
  if (root.contains("workers")) {
    if (!root.at("workers").is_number_unsigned()) fail("config: 'workers' must be a non-negative integer");
    spec.workers = root.at("workers").get<unsigned>();
  }

  spec.fixed.validate();
  for (const Point& p : enumerate_points(spec)) p.params.validate();
  return spec;
}

ExperimentSpec load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path.parent_path().empty() ? "." : path.parent_path());
}

std::string spec_to_json(const ExperimentSpec& spec) {
  json fixed = json::object();
  for (const auto& f : kNumericFields) fixed[f.name] = spec.fixed.*(f.member);
  fixed["environment"] = json::parse(environment_to_json_text(spec.fixed.env));
  json root = {{"kind", std::string(to_string(spec.kind))},
               {"seed", spec.seed},
               {"trials", spec.trials},
               {"output", spec.output_path.string()},
               {"fixed", fixed},
               {"sweep", axis_to_json(spec.sweep)},
               {"series", spec.series ? axis_to_json(*spec.series) : json(nullptr)}};
  return root.dump(2) + "\n";
}

Table run_table(const ExperimentSpec& spec) {
  Table table;
  const std::vector<Point> points = enumerate_points(spec);
  auto guarded = [&](std::vector<std::string> keys, std::size_t value_columns,
                     const std::function<void(std::vector<std::string>&)>& compute) {
    std::vector<std::string> row = keys;
    try {
      compute(row);
      table.rows.push_back(std::move(row));
    } catch (const std::exception&) {
      table.rows.push_back(error_row(std::move(keys), value_columns));
      ++table.failed_rows;
    }
  };

  switch (spec.kind) {
    case ExperimentKind::fig2:
      table.header = {"beamwidth_deg", "lambda", "mean_iagg_watts", "mean_iagg_db"};
      for (const Point& p : points) {
        guarded({format_number(p.params.beamwidth_deg), format_number(p.params.lambda)}, 2,
                [&](auto& row) {
                  const double m = mean_aggregate_interference(p.params.network());
                  row.push_back(format_number(m));
                  row.push_back(format_number(linear_to_db(m)));
                });
      }
      break;

    case ExperimentKind::fig3:
      table.header = {"x_watts", "cdf", "h_m", "lambda"};
      for (const Point& p : points) {
        try {
          const EmpiricalDistribution dist = simulate_distribution(sim_config(spec, p.params));
          const auto s = dist.samples();
          const double n = static_cast<double>(s.size());
          for (std::size_t i = 0; i < s.size(); ++i) {
            if (i + 1 < s.size() && s[i + 1] == s[i]) continue;  // one row per distinct value
            table.rows.push_back({format_number(s[i]), format_number(static_cast<double>(i + 1) / n),
                                  format_number(p.params.h_m), format_number(p.params.lambda)});
          }
        } catch (const std::exception&) {
          table.rows.push_back({std::string(kErrorMarker), std::string(kErrorMarker),
                                format_number(p.params.h_m), format_number(p.params.lambda)});
          ++table.failed_rows;
        }
      }
      break;

    case ExperimentKind::fig4:
      table.header = {"lambda", "h_m", "cv"};
      for (const Point& p : points) {
        guarded({format_number(p.params.lambda), format_number(p.params.h_m)}, 1, [&](auto& row) {
          row.push_back(format_number(coefficient_of_variation(p.params.network(), p.params.h_m)));
        });
      }
      break;

    case ExperimentKind::fig5:
      table.header = {"h_m", "pcov_analytic", "pcov_sim", "env"};
      for (const Point& p : points) {
        std::vector<std::string> row{format_number(p.params.h_m)};
        try {
          const NetworkConfig net = p.params.network();
          const double analytic = CoverageModel(net).coverage(p.params.r_m, p.params.h_m,
                                                              p.params.threshold_db);
          const CoverageEstimate sim =
              simulate_coverage(sim_config(spec, p.params), p.params.r_m,
                                db_to_linear(p.params.threshold_db), InterferenceMode::actual);
          row.push_back(format_number(analytic));
          row.push_back(format_number(sim.probability));
        } catch (const std::exception&) {
          row.resize(1);
          row.emplace_back(kErrorMarker);
          row.emplace_back(kErrorMarker);
          ++table.failed_rows;
        }
        row.push_back(p.params.env.name);
        table.rows.push_back(std::move(row));
      }
      break;

    case ExperimentKind::fig6:
      table.header = {"t_db", "rate_bps_hz", "pcov_at_argmax"};
      for (const Point& p : points) {
        guarded({format_number(p.params.threshold_db)}, 2, [&](auto& row) {
          const CoverageModel model(p.params.network());
          const OptimizationResult best = optimal_altitude(
              model, p.params.r_m, p.params.threshold_db, {p.params.h_min_m, p.params.h_max_m});
          row.push_back(
              format_number(std::log2(1.0 + db_to_linear(p.params.threshold_db)) * best.value));
          row.push_back(format_number(best.value));
        });
      }
      break;

    case ExperimentKind::custom_sweep:
      table.header = {spec.sweep.name};
      if (spec.series) table.header.insert(table.header.begin(), spec.series->name);
      for (const char* c : {"mean_iagg_watts", "var_iagg_watts2", "cv", "pcov_analytic"}) {
        table.header.emplace_back(c);
      }
      for (const Point& p : points) {
        std::vector<std::string> keys{p.sweep_label};
        if (spec.series) keys.insert(keys.begin(), p.series_label);
        guarded(keys, 4, [&](auto& row) {
          const NetworkConfig net = p.params.network();
          const InterferenceStats stats = interference_stats(net, p.params.h_m);
          row.push_back(format_number(stats.mean));
          row.push_back(format_number(stats.variance));
          row.push_back(format_number(stats.cv));
          row.push_back(format_number(
              CoverageModel(net).coverage(p.params.r_m, p.params.h_m, p.params.threshold_db)));
        });
      }
      break;
  }
  return table;
}

std::string to_csv(const Table& table) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
  return out;
}

RunSummary run_experiment(const ExperimentSpec& spec) {
  const Table table = run_table(spec);
  RunSummary summary;
  summary.csv_path = spec.output_path;
  summary.sidecar_path = spec.output_path;
  summary.sidecar_path += ".json";
  summary.rows = table.rows.size();
  summary.failed_rows = table.failed_rows;

  if (spec.output_path.has_parent_path()) {
    std::filesystem::create_directories(spec.output_path.parent_path());
  }
  {
    std::ofstream csv(summary.csv_path, std::ios::binary);
    if (!csv) fail("cannot write " + summary.csv_path.string());
    csv << to_csv(table);
  }
  {
    std::ofstream side(summary.sidecar_path, std::ios::binary);
    if (!side) fail("cannot write " + summary.sidecar_path.string());
    side << spec_to_json(spec);
  }
  return summary;
}

bool ValidationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.pass; });
}

std::string ValidationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.point << ' ' << c.quantity
        << " analytic=" << format_number(c.analytic) << " simulated=" << format_number(c.simulated)
        << " se=" << format_number(c.standard_error) << " tol=" << format_number(c.tolerance)
        << '\n';
  }
  return out.str();
}

ValidationReport validate_against_oracle(const ExperimentSpec& spec) {
  if (spec.trials < kMinValidationTrials) {
    throw DomainError("validation needs at least 10^4 trials");
  }
  ValidationReport report;
  for (const Point& p : enumerate_points(spec)) {
    std::string label = spec.sweep.name + "=" + p.sweep_label;
    if (spec.series) label = spec.series->name + "=" + p.series_label + "," + label;
    const SimConfig cfg = sim_config(spec, p.params);

    if (is_interference_kind(spec.kind)) {
      const InterferenceStats an = interference_stats(cfg.net, cfg.h);
      const EmpiricalDistribution mc = simulate_distribution(cfg);
      ValidationCheck mean{label, "mean_watts", an.mean, mc.mean(), mc.standard_error_of_mean(),
                           kStandardErrors * mc.standard_error_of_mean(), false};
      mean.pass = std::abs(mean.analytic - mean.simulated) <= mean.tolerance;
      ValidationCheck var{label, "variance_watts2", an.variance, mc.variance(),
                          mc.variance_standard_error(),
                          kStandardErrors * mc.variance_standard_error(), false};
      var.pass = std::abs(var.analytic - var.simulated) <= var.tolerance;
      report.checks.push_back(mean);
      report.checks.push_back(var);
    }
    if (is_coverage_kind(spec.kind)) {
      const double t = db_to_linear(p.params.threshold_db);
      const double analytic =
          CoverageModel(cfg.net).coverage(p.params.r_m, p.params.h_m, p.params.threshold_db);
      const CoverageEstimate mf =
          simulate_coverage(cfg, p.params.r_m, t, InterferenceMode::mean_field);
      const BinomialInterval ci = wilson_interval(mf.covered, mf.trials);
      const double n = static_cast<double>(mf.trials);
      const double se = std::sqrt(mf.probability * (1.0 - mf.probability) / n);
      ValidationCheck mean_field{label, "pcov_mean_field", analytic, mf.probability, se,
                                 0.5 * (ci.upper - ci.lower), false};
      mean_field.pass = analytic >= ci.lower && analytic <= ci.upper;
      const CoverageEstimate act = simulate_coverage(cfg, p.params.r_m, t, InterferenceMode::actual);
      ValidationCheck actual{label, "pcov_actual", analytic, act.probability,
                             std::sqrt(act.probability * (1.0 - act.probability) / n),
                             kCoverageTolerance, false};
      actual.pass = std::abs(analytic - act.probability) <= kCoverageTolerance;
      report.checks.push_back(mean_field);
      report.checks.push_back(actual);
    }
  }
  return report;
}

}  // namespace dronecell
