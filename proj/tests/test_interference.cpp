#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dronecell/error.hpp"
#include "dronecell/interference.hpp"
#include "dronecell/units.hpp"
#include "oracles.hpp"

using namespace dronecell;
using doctest::Approx;

namespace {

NetworkConfig config(double lambda, double beam_deg, const EnvironmentParams& env) {
  NetworkConfig net;
  net.lambda = lambda;
  net.beamwidth_rad = deg_to_rad(beam_deg);
  net.env = env;
  return net;
}

// Ground-plane form of the field moments: integrates P/L and (P/L)^2 against
// the mixture of inverse shadowing moments over the disk of radius h tan(bw/2).
struct Reference {
  double mean;
  double variance;
};

Reference campbell_reference(const NetworkConfig& net, double h) {
  const EnvironmentParams& e = net.env;
  const double af = std::pow(4.0 * std::numbers::pi * e.frequency_hz / 299792458.0, 2);
  const double v = std::log(10.0) / 10.0;
  auto mixture = [&](double r, int order) {
    const double phi = std::atan(r / h);
    const double base = 5.0 * std::numbers::pi / 12.0 - phi;
    const double p = std::clamp(e.beta1 * std::pow(base, e.beta2), 0.0, 1.0);
    auto moment = [&](double mu, double a, double b) {
      const double s = a * std::exp(b * phi);
      const double k = order;
      return std::exp(-k * v * mu + 0.5 * k * k * v * v * s * s);
    };
    return p * moment(e.mu_los_db, e.a_los_db, e.b_los_per_rad) +
           (1.0 - p) * moment(e.mu_nlos_db, e.a_nlos_db, e.b_nlos_per_rad);
  };
  const double radius = h * std::tan(net.beamwidth_rad / 2.0);
  auto gain = [&](double r) { return net.p_interferer_w / (af * (h * h + r * r)); };
  const std::size_t n = 400000;
  const double mean = net.lambda * oracle::trapezoid(
      [&](double r) { return 2.0 * std::numbers::pi * r * gain(r) * mixture(r, 1); }, 0.0, radius, n);
  const double var = net.lambda * oracle::trapezoid(
      [&](double r) { return 2.0 * std::numbers::pi * r * gain(r) * gain(r) * mixture(r, 2); }, 0.0,
      radius, n);
  return {mean, var};
}

EnvironmentParams degenerate_env() {
  EnvironmentParams env;
  env.name = "degenerate";
  env.mu_los_db = env.mu_nlos_db = 0.0;
  env.a_los_db = env.a_nlos_db = 0.0;
  env.b_los_per_rad = env.b_nlos_per_rad = 0.0;
  env.beta1 = 0.6;
  env.beta2 = 0.11;
  return env;
}

}  // namespace

TEST_CASE("degenerate propagation reduces to elementary integrals") {
  const EnvironmentParams env = degenerate_env();
  const double bw = 2.0 * std::numbers::pi / 3.0;
  CHECK(upsilon_mu(bw, env) == Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(upsilon_sigma(bw, env) == Approx(0.75).epsilon(1e-12));
  for (double deg : {10.0, 45.0, 90.0, 150.0}) {
    const double half = deg_to_rad(deg) / 2.0;
    CHECK(upsilon_mu(2.0 * half, env) == Approx(-std::log(std::cos(half))).epsilon(1e-11));
    CHECK(upsilon_sigma(2.0 * half, env) == Approx(std::sin(half) * std::sin(half)).epsilon(1e-11));
  }
  CHECK(upsilon_mu(0.0, env) == 0.0);
}

TEST_CASE("closed-form moments against a ground-plane reference") {
  for (const EnvironmentParams& env : {synthetic_urban_environment(), synthetic_dense_environment()}) {
    for (double deg : {30.0, 60.0, 120.0, 150.0}) {
      for (double h : {120.0, 500.0, 2000.0}) {
        const NetworkConfig net = config(1e-5, deg, env);
        const Reference ref = campbell_reference(net, h);
        CAPTURE(env.name);
        CAPTURE(deg);
        CAPTURE(h);
        CHECK(mean_aggregate_interference(net) == Approx(ref.mean).epsilon(1e-7));
        CHECK(variance_aggregate_interference(net, h) == Approx(ref.variance).epsilon(1e-7));
      }
    }
  }
}

TEST_CASE("mean is altitude independent and linear in density and power") {
  NetworkConfig net = config(1e-5, 120.0, synthetic_urban_environment());
  const double base = mean_aggregate_interference(net);
  for (double h : {50.0, 500.0, 4000.0}) CHECK(interference_stats(net, h).mean == base);
  net.lambda = 3e-5;
  CHECK(mean_aggregate_interference(net) == Approx(3.0 * base).epsilon(1e-14));
  net.lambda = 1e-5;
  net.p_interferer_w = 0.5;
  CHECK(mean_aggregate_interference(net) == Approx(5.0 * base).epsilon(1e-14));
}

TEST_CASE("coefficient of variation scales as 1/(h sqrt(lambda))") {
  const EnvironmentParams env = synthetic_dense_environment();
  const NetworkConfig net = config(1e-5, 90.0, env);
  const double k = coefficient_of_variation(net, 500.0) * 500.0 * std::sqrt(1e-5);
  for (double lambda : {1e-6, 1e-4}) {
    for (double h : {100.0, 3000.0}) {
      const NetworkConfig n2 = config(lambda, 90.0, env);
      CHECK(coefficient_of_variation(n2, h) * h * std::sqrt(lambda) == Approx(k).epsilon(1e-12));
    }
  }
  // Power cancels in the ratio.
  NetworkConfig loud = net;
  loud.p_interferer_w = 10.0;
  CHECK(coefficient_of_variation(loud, 500.0) == Approx(coefficient_of_variation(net, 500.0)).epsilon(1e-13));
}

TEST_CASE("moments grow with beamwidth") {
  const EnvironmentParams env = synthetic_urban_environment();
  double prev_mu = 0.0;
  double prev_sigma = 0.0;
  for (int deg = 10; deg <= 150; deg += 5) {
    const double m = upsilon_mu(deg_to_rad(deg), env);
    const double s = upsilon_sigma(deg_to_rad(deg), env);
    CHECK(m > prev_mu);
    CHECK(s > prev_sigma);
    prev_mu = m;
    prev_sigma = s;
  }
}

TEST_CASE("zero density") {
  const NetworkConfig net = config(0.0, 120.0, synthetic_urban_environment());
  const InterferenceStats st = [&] {
    InterferenceStats s;
    s.mean = mean_aggregate_interference(net);
    s.variance = variance_aggregate_interference(net, 300.0);
    return s;
  }();
  CHECK(st.mean == 0.0);
  CHECK(st.variance == 0.0);
  CHECK_THROWS_AS(coefficient_of_variation(net, 300.0), DomainError);
}

TEST_CASE("input validation") {
  const EnvironmentParams env = synthetic_urban_environment();
  CHECK_THROWS_AS(mean_aggregate_interference(config(-1e-5, 120.0, env)), DomainError);
  CHECK_THROWS_AS(mean_aggregate_interference(config(1e-5, 151.0, env)), DomainError);
  CHECK_THROWS_AS(mean_aggregate_interference(config(1e-5, 0.0, env)), DomainError);
  CHECK_NOTHROW(mean_aggregate_interference(config(1e-5, 150.0, env)));
  CHECK_THROWS_AS(variance_aggregate_interference(config(1e-5, 120.0, env), 0.0), DomainError);
  CHECK_THROWS_AS(upsilon_mu(-0.1, env), DomainError);
  NetworkConfig net = config(1e-5, 120.0, env);
  net.p_interferer_w = 0.0;
  CHECK_THROWS_AS(net.validate(), DomainError);
}
