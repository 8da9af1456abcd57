#include "dronecell/channel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "dronecell/error.hpp"
#include "dronecell/units.hpp"
#include "json.hpp"

namespace dronecell {
namespace {

using nlohmann::json;

constexpr std::array<const char*, 10> kEnvironmentKeys = {
    "name",          "mu_los_db",      "mu_nlos_db", "a_los_db", "a_nlos_db",
    "b_los_per_rad", "b_nlos_per_rad", "beta1",      "beta2",    "frequency_hz"};

// Angles computed as atan(r/h) at the clipped altitude may land an ulp past the edge.
constexpr double kAngleSlack = 1e-12;

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

double number_field(const json& obj, const char* key) {
  const json& value = obj.at(key);
  if (!value.is_number()) {
    throw ConfigError(std::string("environment key '") + key + "' must be a number");
  }
  return value.get<double>();
}

}  // namespace

std::string_view to_string(LinkKind kind) { return kind == LinkKind::los ? "LoS" : "NLoS"; }

void EnvironmentParams::validate() const {
  auto finite = [](double x) { return std::isfinite(x); };
  require(finite(mu_los_db) && finite(mu_nlos_db) && finite(a_los_db) && finite(a_nlos_db) &&
              finite(b_los_per_rad) && finite(b_nlos_per_rad) && finite(beta1) && finite(beta2),
          "environment '" + name + "': all parameters must be finite");
  require(mu_nlos_db >= mu_los_db,
          "environment '" + name + "': mu_nlos_db must be >= mu_los_db");
  require(a_los_db >= 0.0 && a_nlos_db >= 0.0,
          "environment '" + name + "': a_los_db and a_nlos_db must be >= 0");
  require(beta1 > 0.0 && beta2 > 0.0, "environment '" + name + "': beta1 and beta2 must be > 0");
  require(frequency_hz > 0.0 && finite(frequency_hz),
          "environment '" + name + "': frequency_hz must be > 0");
}

EnvironmentParams synthetic_urban_environment() {
  EnvironmentParams env;
  env.name = "synthetic-urban";
  env.mu_los_db = 1.0;
  env.mu_nlos_db = 20.0;
  env.a_los_db = 1.0;
  env.a_nlos_db = 3.0;
  env.b_los_per_rad = 1.5;
  env.b_nlos_per_rad = 1.0;
  env.beta1 = 0.9;
  env.beta2 = 0.25;
  env.frequency_hz = 2.0e9;
  return env;
}

EnvironmentParams synthetic_dense_environment() {
  EnvironmentParams env;
  env.name = "synthetic-dense";
  env.mu_los_db = 1.5;
  env.mu_nlos_db = 25.0;
  env.a_los_db = 1.0;
  env.a_nlos_db = 3.5;
  env.b_los_per_rad = 1.5;
  env.b_nlos_per_rad = 1.0;
  env.beta1 = 0.6;
  env.beta2 = 0.5;
  env.frequency_hz = 2.0e9;
  return env;
}

EnvironmentParams builtin_environment(std::string_view name) {
  if (name == "synthetic-urban") return synthetic_urban_environment();
  if (name == "synthetic-dense") return synthetic_dense_environment();
  throw ConfigError("unknown built-in environment '" + std::string(name) +
                    "' (known: synthetic-urban, synthetic-dense)");
}

EnvironmentParams environment_from_json_text(std::string_view text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("environment JSON parse error: ") + e.what());
  }
  if (!obj.is_object()) throw ConfigError("environment JSON must be an object");

  for (const char* key : kEnvironmentKeys) {
    if (!obj.contains(key)) throw ConfigError(std::string("environment missing key '") + key + "'");
  }
  for (const auto& item : obj.items()) {
    if (std::find_if(kEnvironmentKeys.begin(), kEnvironmentKeys.end(), [&](const char* k) {
          return item.key() == k;
        }) == kEnvironmentKeys.end()) {
      throw ConfigError("environment has unknown key '" + item.key() + "'");
    }
  }
  if (!obj.at("name").is_string()) throw ConfigError("environment key 'name' must be a string");

  EnvironmentParams env;
  env.name = obj.at("name").get<std::string>();
  env.mu_los_db = number_field(obj, "mu_los_db");
  env.mu_nlos_db = number_field(obj, "mu_nlos_db");
  env.a_los_db = number_field(obj, "a_los_db");
  env.a_nlos_db = number_field(obj, "a_nlos_db");
  env.b_los_per_rad = number_field(obj, "b_los_per_rad");
  env.b_nlos_per_rad = number_field(obj, "b_nlos_per_rad");
  env.beta1 = number_field(obj, "beta1");
  env.beta2 = number_field(obj, "beta2");
  env.frequency_hz = number_field(obj, "frequency_hz");
  env.validate();
  return env;
}

EnvironmentParams load_environment(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read environment file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return environment_from_json_text(buf.str());
}

std::string environment_to_json_text(const EnvironmentParams& env) {
  json obj = {{"name", env.name},
              {"mu_los_db", env.mu_los_db},
              {"mu_nlos_db", env.mu_nlos_db},
              {"a_los_db", env.a_los_db},
              {"a_nlos_db", env.a_nlos_db},
              {"b_los_per_rad", env.b_los_per_rad},
              {"b_nlos_per_rad", env.b_nlos_per_rad},
              {"beta1", env.beta1},
              {"beta2", env.beta2},
              {"frequency_hz", env.frequency_hz}};
  return obj.dump(2);
}

LinkGeometry geometry_from(double r, double h) {
  require(std::isfinite(r) && std::isfinite(h), "geometry: non-finite input");
  require(h > 0.0, "geometry: altitude must be > 0");
  require(r >= 0.0, "geometry: ground distance must be >= 0");
  LinkGeometry g;
  g.h = h;
  g.r = r;
  g.phi = std::atan2(r, h);
  g.d = std::hypot(h, r);
  return g;
}

double free_space_constant(double frequency_hz) {
  require(frequency_hz > 0.0, "free-space loss: frequency must be > 0");
  const double k = 4.0 * std::numbers::pi * frequency_hz / kSpeedOfLight;
  return k * k;
}

double free_space_path_loss(double h, double phi, double frequency_hz) {
  const double c = std::cos(phi);
  return free_space_constant(frequency_hz) * (h * h) / (c * c);
}

double free_space_path_loss(const LinkGeometry& geom, double frequency_hz) {
  return free_space_path_loss(geom.h, geom.phi, frequency_hz);
}

double los_probability(double phi, const EnvironmentParams& env) {
  require(phi >= 0.0, "LoS probability: angle must be >= 0");
  require(phi <= kMaxOffNadirAngle * (1.0 + kAngleSlack),
          "LoS probability: angle exceeds 5pi/12 model domain");
  const double base = std::max(kMaxOffNadirAngle - phi, 0.0);
  return std::clamp(env.beta1 * std::pow(base, env.beta2), 0.0, 1.0);
}

double shadowing_sigma(double phi, LinkKind kind, const EnvironmentParams& env) {
  return env.a_db(kind) * std::exp(env.b_per_rad(kind) * phi);
}

double inverse_shadowing_mean(double phi, LinkKind kind, const EnvironmentParams& env) {
  const double s = shadowing_sigma(phi, kind, env);
  return std::pow(10.0, (-env.mu_db(kind) + kDbToNeper * s * s / 2.0) / 10.0);
}

double inverse_shadowing_second_moment(double phi, LinkKind kind, const EnvironmentParams& env) {
  const double s = shadowing_sigma(phi, kind, env);
  return std::pow(10.0, (-env.mu_db(kind) + kDbToNeper * s * s) / 5.0);
}

double shadowing_from_standard_normal(double phi, LinkKind kind, const EnvironmentParams& env,
                                      double z) {
  const double g_db = env.mu_db(kind) + shadowing_sigma(phi, kind, env) * z;
  return std::pow(10.0, g_db / 10.0);
}

}  // namespace dronecell
