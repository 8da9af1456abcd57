#pragma once

// Poisson-field simulator: realizes interferer fields inside the antenna disc,
// sums their received power, and estimates coverage with either the realized
// or the mean interference.

#include <cstdint>
#include <span>
#include <vector>

#include "dronecell/channel.hpp"
#include "dronecell/interference.hpp"
#include "dronecell/random.hpp"

namespace dronecell {

struct SimConfig {
  std::uint64_t trials = 100000;
  std::uint64_t master_seed = 1;
  double h = 500.0;
  NetworkConfig net;
  unsigned workers = 0;  // 0: one per hardware thread; results do not depend on it

  void validate() const;
};

/// One realization of the interferer field. Only the off-nadir angle of each
/// interferer is kept; received power does not depend on azimuth.
struct FieldRealization {
  std::size_t count = 0;
  std::vector<double> angles;
  std::vector<LinkKind> kinds;
  std::vector<double> shadowings;  // linear excess loss Psi
};

class EmpiricalDistribution {
public:
  EmpiricalDistribution() = default;

  /// Moments are taken over the samples in the given (trial) order, then the
  /// samples are sorted for CDF queries.
  static EmpiricalDistribution from_samples(std::vector<double> samples);

  std::span<const double> samples() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }
  double mean() const { return mean_; }
  double variance() const { return variance_; }  // unbiased
  double standard_error_of_mean() const { return sem_; }
  /// Large-sample standard error of the sample variance, from the fourth central moment.
  double variance_standard_error() const { return var_se_; }
  double cv() const;

  /// Fraction of samples <= x.
  double cdf(double x) const;

private:
  std::vector<double> sorted_;
  double mean_ = 0.0;
  double variance_ = 0.0;
  double sem_ = 0.0;
  double var_se_ = 0.0;
};

/// lambda * |C| with |C| = pi (h tan(beamwidth/2))^2.
double expected_interferer_count(const NetworkConfig& net, double h);

std::uint64_t sample_interferer_count(const NetworkConfig& net, double h, RandomStream& rng);

/// Off-nadir angle of a point at radius h tan(beamwidth/2) sqrt(u); independent of h.
double angle_from_uniform(double beamwidth_rad, double u);

/// P[Phi <= phi] = tan^2(phi) / tan^2(beamwidth/2) for a uniform point in the disc.
double interferer_angle_cdf(double phi, double beamwidth_rad);

double sample_interferer_angle(const NetworkConfig& net, RandomStream& rng);

FieldRealization realize_field(const SimConfig& cfg, RandomStream& rng);

/// Sum of P_I / (L_f(phi_i, h) Psi_i) over the field.
double aggregate_interference(const FieldRealization& field, const SimConfig& cfg);

/// Aggregate interference of cfg.trials independent fields, in trial order.
/// Trial i always uses trial_stream(cfg.master_seed, i).
std::vector<double> simulate_samples(const SimConfig& cfg);

EmpiricalDistribution simulate_distribution(const SimConfig& cfg);

enum class InterferenceMode { actual, mean_field };

struct CoverageEstimate {
  double probability = 0.0;
  std::uint64_t covered = 0;
  std::uint64_t trials = 0;
};

/// Fraction of trials with SIR = P_U / (I L_f Psi) > threshold, where the UE's
/// LoS state and shadowing are redrawn each trial. Trials with I = 0 count as covered.
CoverageEstimate simulate_coverage(const SimConfig& cfg, double r, double threshold_linear,
                                   InterferenceMode mode);

struct BinomialInterval {
  double lower = 0.0;
  double upper = 1.0;
};

/// Wilson score interval; z = 1.96 gives 95% coverage.
BinomialInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                                 double z = 1.959963984540054);

}  // namespace dronecell
