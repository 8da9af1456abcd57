#pragma once

// Experiment runner: JSON configuration, parameter sweeps for the figure
// reproductions, CSV/JSON artifacts and the closed-form vs simulation report.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dronecell/channel.hpp"
#include "dronecell/interference.hpp"

namespace dronecell {

enum class ExperimentKind { fig2, fig3, fig4, fig5, fig6, custom_sweep };

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view name);

/// Scalar experiment parameters in configuration units (dB, degrees, metres).
struct Parameters {
  double lambda = 1e-5;
  double p_interferer_dbw = -10.0;
  double p_ue_dbw = 0.0;
  double beamwidth_deg = 120.0;
  double h_m = 500.0;
  double r_m = 200.0;
  double threshold_db = -2.0;
  double h_min_m = 10.0;
  double h_max_m = 4000.0;
  double t_min_db = -10.0;
  double t_max_db = 10.0;
  EnvironmentParams env = synthetic_urban_environment();

  /// The single dB-to-linear and degree-to-radian conversion point.
  NetworkConfig network() const;

  /// Throws ConfigError naming the offending parameter and its legal range.
  void validate() const;
};

using AxisValue = std::variant<double, EnvironmentParams>;

struct Axis {
  std::string name;  // a Parameters field name, or "environment"
  std::vector<AxisValue> values;
};

bool is_known_axis(std::string_view name);

/// Returns params with the named field replaced.
Parameters with_axis_value(Parameters params, std::string_view axis, const AxisValue& value);

std::string axis_value_label(const AxisValue& value);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::custom_sweep;
  Axis sweep;
  std::optional<Axis> series;  // second dimension, outer loop
  Parameters fixed;
  std::filesystem::path output_path;
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
  unsigned workers = 0;
};

/// Spec for a figure kind with every default filled in.
ExperimentSpec default_spec(ExperimentKind kind);

ExperimentSpec parse_config(std::string_view json_text,
                            const std::filesystem::path& base_dir = ".");
ExperimentSpec load_config(const std::filesystem::path& path);

/// Canonical JSON of the resolved spec (the reproducibility sidecar).
std::string spec_to_json(const ExperimentSpec& spec);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::size_t failed_rows = 0;
};

/// Marker written into every value column of a row whose computation failed.
inline constexpr std::string_view kErrorMarker = "error";

Table run_table(const ExperimentSpec& spec);
std::string to_csv(const Table& table);

struct RunSummary {
  std::filesystem::path csv_path;
  std::filesystem::path sidecar_path;
  std::size_t rows = 0;
  std::size_t failed_rows = 0;

  int exit_code() const { return failed_rows == 0 ? 0 : 1; }
};

/// Writes the CSV to spec.output_path and the resolved spec to <output>.json.
RunSummary run_experiment(const ExperimentSpec& spec);

struct ValidationCheck {
  std::string point;
  std::string quantity;
  double analytic = 0.0;
  double simulated = 0.0;
  double standard_error = 0.0;
  double tolerance = 0.0;  // allowed |analytic - simulated|
  bool pass = false;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool all_passed() const;
  std::string to_text() const;
};

/// Interference kinds check mean within 4 SE and variance within 4 SE of the
/// variance estimator. Coverage kinds check that the closed form lies in the
/// 95% Wilson interval of mean-field simulation and within 0.05 of simulation
/// with the realized interference. Needs trials >= 10^4.
ValidationReport validate_against_oracle(const ExperimentSpec& spec);

/// Shortest round-trip decimal representation.
std::string format_number(double x);

}  // namespace dronecell
