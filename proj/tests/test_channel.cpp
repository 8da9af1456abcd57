#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "dronecell/channel.hpp"
#include "dronecell/error.hpp"
#include "dronecell/units.hpp"

using namespace dronecell;
using doctest::Approx;

namespace {

EnvironmentParams flat_env(double mu_db, double sigma_db) {
  EnvironmentParams env;
  env.name = "flat";
  env.mu_los_db = mu_db;
  env.mu_nlos_db = mu_db;
  env.a_los_db = sigma_db;
  env.a_nlos_db = sigma_db;
  env.b_los_per_rad = 0.0;
  env.b_nlos_per_rad = 0.0;
  env.beta1 = 0.6;
  env.beta2 = 0.11;
  return env;
}

}  // namespace

TEST_CASE("geometry: nadir, 45 degrees and a generic point") {
  const LinkGeometry nadir = geometry_from(0.0, 500.0);
  CHECK(nadir.phi == 0.0);
  CHECK(nadir.d == 500.0);

  const LinkGeometry diag = geometry_from(100.0, 100.0);
  CHECK(diag.phi == Approx(std::numbers::pi / 4).epsilon(1e-15));
  CHECK(diag.d == Approx(100.0 * std::numbers::sqrt2).epsilon(1e-15));

  const LinkGeometry g = geometry_from(200.0, 500.0);
  CHECK(g.phi == Approx(0.38050637711236488630).epsilon(1e-14));
  CHECK(g.d == Approx(538.516480713450403125).epsilon(1e-14));
}

TEST_CASE("geometry: invariants over a sweep") {
  for (double h : {1.0, 37.5, 500.0, 4000.0}) {
    for (double r : {0.0, 0.1, 10.0, 250.0, 9000.0}) {
      const LinkGeometry g = geometry_from(r, h);
      CHECK(g.d * std::cos(g.phi) == Approx(h).epsilon(1e-12));
      if (r > 0.0) CHECK(h * std::tan(g.phi) == Approx(r).epsilon(1e-12));
      CHECK((g.phi == 0.0) == (r == 0.0));
    }
  }
}

TEST_CASE("geometry: domain errors") {
  CHECK_THROWS_AS(geometry_from(10.0, 0.0), DomainError);
  CHECK_THROWS_AS(geometry_from(10.0, -5.0), DomainError);
  CHECK_THROWS_AS(geometry_from(-1.0, 5.0), DomainError);
  CHECK_THROWS_AS(geometry_from(NAN, 5.0), DomainError);
  CHECK_THROWS_AS(geometry_from(1.0, INFINITY), DomainError);
}

TEST_CASE("free-space loss") {
  const double unit_f = kSpeedOfLight / (4.0 * std::numbers::pi);
  CHECK(free_space_constant(unit_f) == Approx(1.0).epsilon(1e-15));
  CHECK(free_space_path_loss(geometry_from(0.0, 123.0), unit_f) == Approx(123.0 * 123.0).epsilon(1e-14));

  const double f = 2.0e9;
  const double at_zero = free_space_path_loss(300.0, 0.0, f);
  CHECK(free_space_path_loss(300.0, std::numbers::pi / 3, f) == Approx(4.0 * at_zero).epsilon(1e-13));

  const double l500 = free_space_path_loss(geometry_from(0.0, 500.0), f);
  CHECK(l500 == Approx(1757026542.4158582468).epsilon(1e-13));
  CHECK(linear_to_db(l500) == Approx(92.44778322188337).epsilon(1e-12));

  for (double phi : {0.0, 0.3, 1.0, 1.3}) {
    CHECK(free_space_path_loss(1000.0, phi, f) == 4.0 * free_space_path_loss(500.0, phi, f));
  }
}

TEST_CASE("LoS probability") {
  EnvironmentParams env = flat_env(0.0, 0.0);
  CHECK(los_probability(kMaxOffNadirAngle, env) == 0.0);
  CHECK(los_probability(0.0, env) == Approx(0.618037034199058976725).epsilon(1e-14));
  CHECK_THROWS_AS(los_probability(kMaxOffNadirAngle + 1e-6, env), DomainError);
  CHECK_THROWS_AS(los_probability(-0.01, env), DomainError);

  env.beta1 = 2.0;  // unclamped value would exceed one near nadir
  CHECK(los_probability(0.0, env) == 1.0);

  for (const EnvironmentParams& e : {synthetic_urban_environment(), synthetic_dense_environment(), env}) {
    double prev = 2.0;
    for (int i = 0; i <= 500; ++i) {
      const double phi = kMaxOffNadirAngle * i / 500.0;
      const double p = los_probability(phi, e);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      CHECK(p <= prev);
      prev = p;
    }
  }
}

TEST_CASE("shadowing spread") {
  EnvironmentParams env = flat_env(0.0, 2.0);
  CHECK(shadowing_sigma(0.7, LinkKind::los, env) == 2.0);
  env.a_los_db = 1.0;
  env.b_los_per_rad = 1.0;
  CHECK(shadowing_sigma(std::log(3.0), LinkKind::los, env) == Approx(3.0).epsilon(1e-15));
  const EnvironmentParams urban = synthetic_urban_environment();
  CHECK(shadowing_sigma(0.0, LinkKind::nlos, urban) == urban.a_nlos_db);
  CHECK(shadowing_sigma(0.5, LinkKind::los, urban) < shadowing_sigma(0.6, LinkKind::los, urban));
}

TEST_CASE("inverse shadowing moments: closed forms") {
  CHECK(inverse_shadowing_mean(0.2, LinkKind::los, flat_env(0.0, 0.0)) == 1.0);
  CHECK(inverse_shadowing_second_moment(0.2, LinkKind::los, flat_env(0.0, 0.0)) == 1.0);
  CHECK(inverse_shadowing_mean(0.2, LinkKind::nlos, flat_env(7.0, 0.0)) ==
        Approx(std::pow(10.0, -0.7)).epsilon(1e-15));
  CHECK(inverse_shadowing_mean(0.0, LinkKind::los, flat_env(0.0, 10.0)) ==
        Approx(14.1674779862377088159).epsilon(1e-13));
  CHECK(inverse_shadowing_second_moment(0.0, LinkKind::los, flat_env(0.0, 10.0)) ==
        Approx(40287.4877055905022122).epsilon(1e-13));

  for (double mu : {0.0, 1.0, 20.0}) {
    for (double s : {0.0, 0.5, 5.0, 10.0}) {
      const EnvironmentParams env = flat_env(mu, s);
      const double m1 = inverse_shadowing_mean(0.1, LinkKind::los, env);
      CHECK(inverse_shadowing_second_moment(0.1, LinkKind::los, env) >= m1 * m1 * (1.0 - 1e-15));
    }
  }
}

TEST_CASE("sample_shadowing: degenerate spread is deterministic") {
  std::mt19937_64 rng(7);
  const EnvironmentParams env = flat_env(3.0, 0.0);
  for (int i = 0; i < 100; ++i) {
    CHECK(sample_shadowing(0.4, LinkKind::los, env, rng) == Approx(std::pow(10.0, 0.3)).epsilon(1e-15));
  }
}

// The estimator's standard error is taken from the analytic variance of the
// sampled quantity, which stays meaningful for heavy log-normal tails where
// the sample standard deviation is itself badly biased at 10^6 draws.
TEST_CASE("sample_shadowing: inverse moments match closed forms within 4 standard errors") {
  constexpr int kDraws = 1000000;
  std::uint64_t seed = 100;
  for (double mu : {0.0, 1.0, 20.0}) {
    for (double s : {0.5, 5.0, 10.0}) {
      const EnvironmentParams env = flat_env(mu, s);
      std::mt19937_64 rng(seed++);
      long double sum1 = 0.0L;
      long double sum2 = 0.0L;
      for (int i = 0; i < kDraws; ++i) {
        const double inv = 1.0 / sample_shadowing(0.0, LinkKind::los, env, rng);
        sum1 += inv;
        sum2 += static_cast<long double>(inv) * inv;
      }
      const double m1 = inverse_shadowing_mean(0.0, LinkKind::los, env);
      const double m2 = inverse_shadowing_second_moment(0.0, LinkKind::los, env);
      // E[(1/Psi)^4] for the fourth-moment-based error of the second moment.
      const double v = kDbToNeper;
      const double m4 = std::exp(-4.0 * v * mu + 8.0 * v * v * s * s);
      const double se1 = std::sqrt((m2 - m1 * m1) / kDraws);
      const double se2 = std::sqrt((m4 - m2 * m2) / kDraws);
      INFO("mu=" << mu << " sigma=" << s);
      CHECK(std::abs(static_cast<double>(sum1 / kDraws) - m1) <= 4.0 * se1);
      CHECK(std::abs(static_cast<double>(sum2 / kDraws) - m2) <= 4.0 * se2);
    }
  }
}

TEST_CASE("environment validation") {
  EnvironmentParams env = synthetic_urban_environment();
  CHECK_NOTHROW(env.validate());
  env.mu_nlos_db = env.mu_los_db - 1.0;
  CHECK_THROWS_AS(env.validate(), DomainError);
  env = synthetic_urban_environment();
  env.a_los_db = -0.1;
  CHECK_THROWS_AS(env.validate(), DomainError);
  env = synthetic_urban_environment();
  env.beta2 = 0.0;
  CHECK_THROWS_AS(env.validate(), DomainError);
  env = synthetic_urban_environment();
  env.frequency_hz = 0.0;
  CHECK_THROWS_AS(env.validate(), DomainError);
}

TEST_CASE("environment JSON: strict key set") {
  const EnvironmentParams env = synthetic_dense_environment();
  const EnvironmentParams back = environment_from_json_text(environment_to_json_text(env));
  CHECK(back.name == env.name);
  CHECK(back.mu_nlos_db == env.mu_nlos_db);
  CHECK(back.b_los_per_rad == env.b_los_per_rad);
  CHECK(back.frequency_hz == env.frequency_hz);

  const std::string missing = R"({"name":"x","mu_los_db":1,"mu_nlos_db":20,"a_los_db":1,
    "a_nlos_db":3,"b_los_per_rad":1,"b_nlos_per_rad":1,"beta1":0.9,"beta2":0.2})";
  CHECK_THROWS_WITH_AS(environment_from_json_text(missing), doctest::Contains("frequency_hz"),
                       ConfigError);
  const std::string extra = R"({"name":"x","mu_los_db":1,"mu_nlos_db":20,"a_los_db":1,
    "a_nlos_db":3,"b_los_per_rad":1,"b_nlos_per_rad":1,"beta1":0.9,"beta2":0.2,
    "frequency_hz":2e9,"b_los_per_deg":0.1})";
  CHECK_THROWS_WITH_AS(environment_from_json_text(extra), doctest::Contains("b_los_per_deg"),
                       ConfigError);
  const std::string bad_type = R"({"name":"x","mu_los_db":"1","mu_nlos_db":20,"a_los_db":1,
    "a_nlos_db":3,"b_los_per_rad":1,"b_nlos_per_rad":1,"beta1":0.9,"beta2":0.2,"frequency_hz":2e9})";
  CHECK_THROWS_AS(environment_from_json_text(bad_type), ConfigError);
}

TEST_CASE("environment files shipped in data/ load and match the built-ins") {
  const std::string dir = DRONECELL_DATA_DIR;
  const EnvironmentParams urban = load_environment(dir + "/environments/synthetic_urban.json");
  const EnvironmentParams ref = synthetic_urban_environment();
  CHECK(urban.name == ref.name);
  CHECK(urban.mu_los_db == ref.mu_los_db);
  CHECK(urban.a_nlos_db == ref.a_nlos_db);
  CHECK(urban.beta2 == ref.beta2);
  const EnvironmentParams dense = load_environment(dir + "/environments/synthetic_dense.json");
  CHECK(dense.beta1 == synthetic_dense_environment().beta1);
  CHECK_THROWS_AS(load_environment(dir + "/environments/does_not_exist.json"), ConfigError);
}
