#pragma once

// Closed-form moments of the aggregate interference received by a drone from
// a Poisson field of ground transmitters inside its antenna main-lobe disc.

#include "dronecell/channel.hpp"
#include "dronecell/quadrature.hpp"

namespace dronecell {

struct NetworkConfig {
  double lambda = 0.0;           // interferers per m^2
  double p_interferer_w = 0.1;   // transmit power of each interferer
  double p_ue_w = 1.0;           // transmit power of the served UE
  double beamwidth_rad = 0.0;    // full main-lobe aperture, (0, 5pi/6]
  EnvironmentParams env;

  void validate() const;
};

struct InterferenceStats {
  double mean = 0.0;      // W
  double variance = 0.0;  // W^2
  double cv = 0.0;        // NaN when the mean is zero
};

/// Integral over [0, beamwidth/2] of tan(phi) times the LoS/NLoS mixture of E[1/Psi].
double upsilon_mu(double beamwidth_rad, const EnvironmentParams& env,
                  const QuadratureSpec& quad = {});

/// Integral over [0, beamwidth/2] of sin(2 phi) times the mixture of E[1/Psi^2].
double upsilon_sigma(double beamwidth_rad, const EnvironmentParams& env,
                     const QuadratureSpec& quad = {});

/// (2 pi lambda P_I / A_f) * upsilon_mu. Independent of altitude.
double mean_aggregate_interference(const NetworkConfig& cfg, const QuadratureSpec& quad = {});

/// (pi lambda P_I^2 / (A_f^2 h^2)) * upsilon_sigma.
double variance_aggregate_interference(const NetworkConfig& cfg, double h,
                                       const QuadratureSpec& quad = {});

double coefficient_of_variation(const NetworkConfig& cfg, double h,
                                const QuadratureSpec& quad = {});

InterferenceStats interference_stats(const NetworkConfig& cfg, double h,
                                     const QuadratureSpec& quad = {});

}  // namespace dronecell
