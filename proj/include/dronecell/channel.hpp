#pragma once

// Air-to-ground propagation: free-space loss, LoS probability and
// elevation-dependent log-normal excess loss for ground-to-drone links.

#include <filesystem>
#include <random>
#include <string>
#include <string_view>

namespace dronecell {

enum class LinkKind { los, nlos };

std::string_view to_string(LinkKind kind);

/// Environment- and frequency-dependent channel constants.
///
/// Angles are radians throughout: the shadowing growth rates are per radian
/// of off-nadir angle. Tables fitted against the elevation angle in degrees,
/// sigma = a * exp(-b * theta_deg), convert as
///   a_rad = a * exp(-90 * b),  b_rad = b * 180 / pi.
struct EnvironmentParams {
  std::string name;
  double mu_los_db = 0.0;   // mean excess loss, LoS
  double mu_nlos_db = 0.0;  // mean excess loss, NLoS
  double a_los_db = 0.0;    // shadowing spread at nadir, LoS
  double a_nlos_db = 0.0;
  double b_los_per_rad = 0.0;  // shadowing growth rate, LoS
  double b_nlos_per_rad = 0.0;
  double beta1 = 1.0;
  double beta2 = 1.0;
  double frequency_hz = 2.0e9;

  double mu_db(LinkKind kind) const { return kind == LinkKind::los ? mu_los_db : mu_nlos_db; }
  double a_db(LinkKind kind) const { return kind == LinkKind::los ? a_los_db : a_nlos_db; }
  double b_per_rad(LinkKind kind) const {
    return kind == LinkKind::los ? b_los_per_rad : b_nlos_per_rad;
  }

  /// Throws DomainError naming the first violated invariant.
  void validate() const;
};

/// Built-in environment tables. These are synthetic: shaped like published
/// urban air-to-ground fits but not taken from any measurement campaign.
EnvironmentParams synthetic_urban_environment();
EnvironmentParams synthetic_dense_environment();

/// Looks up a built-in table by name ("synthetic-urban", "synthetic-dense").
EnvironmentParams builtin_environment(std::string_view name);

/// Strict JSON ingestion; rejects missing and unknown keys.
EnvironmentParams environment_from_json_text(std::string_view text);
EnvironmentParams load_environment(const std::filesystem::path& path);
std::string environment_to_json_text(const EnvironmentParams& env);

struct LinkGeometry {
  double h = 0.0;    // drone altitude, m
  double r = 0.0;    // ground distance from the nadir point, m
  double phi = 0.0;  // off-nadir angle, rad
  double d = 0.0;    // slant distance, m
};

LinkGeometry geometry_from(double r, double h);

/// (4 pi f / c)^2, the altitude-free factor of the free-space loss.
double free_space_constant(double frequency_hz);

/// Linear free-space loss A_f * h^2 / cos^2(phi).
double free_space_path_loss(const LinkGeometry& geom, double frequency_hz);
double free_space_path_loss(double h, double phi, double frequency_hz);

/// beta1 * (5pi/12 - phi)^beta2, clamped to [0, 1].
double los_probability(double phi, const EnvironmentParams& env);

/// Shadowing spread a * exp(b * phi), dB.
double shadowing_sigma(double phi, LinkKind kind, const EnvironmentParams& env);

/// E[1/Psi] for the log-normal excess loss Psi.
double inverse_shadowing_mean(double phi, LinkKind kind, const EnvironmentParams& env);

/// E[(1/Psi)^2].
double inverse_shadowing_second_moment(double phi, LinkKind kind, const EnvironmentParams& env);

/// Linear excess loss 10^(G/10) with G = mu + sigma(phi) * z.
double shadowing_from_standard_normal(double phi, LinkKind kind, const EnvironmentParams& env,
                                      double z);

template <class Rng>
double sample_shadowing(double phi, LinkKind kind, const EnvironmentParams& env, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  return shadowing_from_standard_normal(phi, kind, env, normal(rng));
}

}  // namespace dronecell
