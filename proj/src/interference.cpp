#include "dronecell/interference.hpp"

#include <cmath>
#include <numbers>

#include "dronecell/error.hpp"
#include "dronecell/units.hpp"

namespace dronecell {
namespace {

void check_beamwidth(double beamwidth_rad) {
  if (!(beamwidth_rad >= 0.0) || beamwidth_rad > kMaxBeamwidth * (1.0 + 1e-12)) {
    throw DomainError("beamwidth must lie in [0, 5pi/6] rad (0 to 150 deg)");
  }
}

// Both integrands share the LoS/NLoS mixture; only the weight and the moment differ.
template <class Weight, class Moment>
double mixture_integral(double beamwidth_rad, const EnvironmentParams& env,
                        const QuadratureSpec& quad, Weight weight, Moment moment) {
  check_beamwidth(beamwidth_rad);
  const double upper = std::min(beamwidth_rad / 2.0, kMaxOffNadirAngle);
  const auto result = integrate_adaptive(
      [&](std::span<const double> x, std::span<double> fx) {
        for (std::size_t i = 0; i < x.size(); ++i) {
          const double p_los = los_probability(x[i], env);
          fx[i] = weight(x[i]) * (p_los * moment(x[i], LinkKind::los, env) +
                                  (1.0 - p_los) * moment(x[i], LinkKind::nlos, env));
        }
      },
      0.0, upper, quad);
  return result.value;
}

}  // namespace

void NetworkConfig::validate() const {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw DomainError("lambda must be finite and >= 0");
  }
  if (!(p_interferer_w > 0.0) || !std::isfinite(p_interferer_w)) {
    throw DomainError("interferer power must be finite and > 0 W");
  }
  if (!(p_ue_w > 0.0) || !std::isfinite(p_ue_w)) {
    throw DomainError("UE power must be finite and > 0 W");
  }
  if (!(beamwidth_rad > 0.0) || beamwidth_rad > kMaxBeamwidth * (1.0 + 1e-12)) {
    throw DomainError("beamwidth must lie in (0, 5pi/6] rad (0 to 150 deg)");
  }
  env.validate();
}

double upsilon_mu(double beamwidth_rad, const EnvironmentParams& env, const QuadratureSpec& quad) {
  return mixture_integral(
      beamwidth_rad, env, quad, [](double phi) { return std::tan(phi); },
      inverse_shadowing_mean);
}

double upsilon_sigma(double beamwidth_rad, const EnvironmentParams& env,
                     const QuadratureSpec& quad) {
  return mixture_integral(
      beamwidth_rad, env, quad, [](double phi) { return std::sin(2.0 * phi); },
      inverse_shadowing_second_moment);
}

double mean_aggregate_interference(const NetworkConfig& cfg, const QuadratureSpec& quad) {
  cfg.validate();
  if (cfg.lambda == 0.0) return 0.0;
  const double af = free_space_constant(cfg.env.frequency_hz);
  return 2.0 * std::numbers::pi * cfg.lambda * cfg.p_interferer_w / af *
         upsilon_mu(cfg.beamwidth_rad, cfg.env, quad);
}

double variance_aggregate_interference(const NetworkConfig& cfg, double h,
                                       const QuadratureSpec& quad) {
  cfg.validate();
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("altitude must be finite and > 0");
  if (cfg.lambda == 0.0) return 0.0;
  const double af = free_space_constant(cfg.env.frequency_hz);
  return std::numbers::pi * cfg.lambda * cfg.p_interferer_w * cfg.p_interferer_w /
         (af * af * (h * h)) * upsilon_sigma(cfg.beamwidth_rad, cfg.env, quad);
}

double coefficient_of_variation(const NetworkConfig& cfg, double h, const QuadratureSpec& quad) {
  const double mean = mean_aggregate_interference(cfg, quad);
  if (!(mean > 0.0)) throw DomainError("coefficient of variation undefined for zero mean");
  return std::sqrt(variance_aggregate_interference(cfg, h, quad)) / mean;
}

InterferenceStats interference_stats(const NetworkConfig& cfg, double h,
                                     const QuadratureSpec& quad) {
  InterferenceStats s;
  s.mean = mean_aggregate_interference(cfg, quad);
  s.variance = variance_aggregate_interference(cfg, h, quad);
  s.cv = s.mean > 0.0 ? std::sqrt(s.variance) / s.mean : std::nan("");
  return s;
}

}  // namespace dronecell
