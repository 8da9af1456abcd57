#pragma once

// Link coverage under the mean-interference approximation, the normalized
// rate, and the one-dimensional searches over altitude and SIR threshold.

#include <utility>
#include <vector>

#include "dronecell/interference.hpp"

namespace dronecell {

/// Gaussian tail P[N(0,1) > x].
double q_function(double x);

struct CoverageQuery {
  double r = 200.0;           // m
  double h = 500.0;           // m
  double threshold_db = -2.0;  // SIR threshold T
  NetworkConfig net;
};

/// 10 log10(P_U / (mean_interference * L_f * T)); throws DomainError when the
/// mean interference is zero.
double psi(const CoverageQuery& query, const QuadratureSpec& quad = {});

double coverage_probability(const CoverageQuery& query, const QuadratureSpec& quad = {});

/// Mean-field coverage model for one network. The mean aggregate interference
/// does not depend on altitude, so it is computed once and reused by the searches.
class CoverageModel {
public:
  explicit CoverageModel(NetworkConfig net, const QuadratureSpec& quad = {});

  const NetworkConfig& network() const { return net_; }
  double mean_interference() const { return mean_interference_; }

  double psi_db(double r, double h, double threshold_db) const;
  double coverage(double r, double h, double threshold_db) const;

private:
  NetworkConfig net_;
  double mean_interference_ = 0.0;
};

struct AltitudeBracket {
  double h_min = 10.0;
  double h_max = 4000.0;
};

struct SearchOptions {
  int altitude_grid_points = 64;  // log-spaced, >= 64
  double altitude_tolerance_m = 0.1;
  double threshold_grid_step_db = 0.25;
  double threshold_tolerance_db = 0.01;
};

struct OptimizationResult {
  double argmax = 0.0;  // m for altitude, dB for threshold
  double value = 0.0;
  std::vector<std::pair<double, double>> trace;  // (input, objective), grid first
  bool at_boundary = false;
  /// Set when the lower bracket was raised to keep the UE inside the 5pi/12 model
  /// domain; holds the requested lower bound.
  bool lower_bound_clipped = false;
  double requested_lower_bound = 0.0;
};

OptimizationResult optimal_altitude(const CoverageModel& model, double r, double threshold_db,
                                    AltitudeBracket bracket = {}, const SearchOptions& opts = {});
OptimizationResult optimal_altitude(double r, double threshold_db, const NetworkConfig& net,
                                    double h_min, double h_max, const SearchOptions& opts = {});

/// log2(1 + T) * max_h coverage.
double normalized_rate(const CoverageModel& model, double threshold_db, double r,
                       AltitudeBracket bracket = {}, const SearchOptions& opts = {});
double normalized_rate(double threshold_db, double r, const NetworkConfig& net,
                       AltitudeBracket bracket = {}, const SearchOptions& opts = {});

struct ThresholdSearchResult {
  OptimizationResult rate;          // argmax in dB, value in bit/s/Hz
  OptimizationResult altitude;      // altitude search at the best threshold
};

ThresholdSearchResult optimal_threshold(const CoverageModel& model, double r, double t_min_db,
                                        double t_max_db, AltitudeBracket bracket = {},
                                        const SearchOptions& opts = {});
OptimizationResult optimal_threshold(double r, const NetworkConfig& net, double t_min_db,
                                     double t_max_db, AltitudeBracket bracket = {},
                                     const SearchOptions& opts = {});

}  // namespace dronecell
