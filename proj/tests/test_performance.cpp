#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dronecell/error.hpp"
#include "dronecell/performance.hpp"
#include "dronecell/units.hpp"
#include "oracles.hpp"

using namespace dronecell;
using doctest::Approx;

namespace {

NetworkConfig network(const EnvironmentParams& env, double lambda = 1e-5) {
  NetworkConfig net;
  net.lambda = lambda;
  net.beamwidth_rad = deg_to_rad(120.0);
  net.env = env;
  return net;
}

// Coverage recomputed from its ingredients, given the mean interference.
double coverage_reference(const NetworkConfig& net, double mean_i, double r, double h, double t_db) {
  const EnvironmentParams& e = net.env;
  const double phi = std::atan2(r, h);
  const double af = std::pow(4.0 * std::numbers::pi * e.frequency_hz / 299792458.0, 2);
  const double lf = af * (h * h + r * r);
  const double psi = 10.0 * std::log10(net.p_ue_w / (mean_i * lf * std::pow(10.0, t_db / 10.0)));
  const double p = std::clamp(e.beta1 * std::pow(5.0 * std::numbers::pi / 12.0 - phi, e.beta2), 0.0, 1.0);
  auto q = [](double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); };
  const double sl = e.a_los_db * std::exp(e.b_los_per_rad * phi);
  const double sn = e.a_nlos_db * std::exp(e.b_nlos_per_rad * phi);
  return q((e.mu_los_db - psi) / sl) * p + q((e.mu_nlos_db - psi) / sn) * (1.0 - p);
}

}  // namespace

TEST_CASE("Q function") {
  CHECK(q_function(0.0) == 0.5);
  CHECK(q_function(1.2816) == Approx(0.0999915000976752).epsilon(1e-13));
  for (double x : {-3.0, -0.5, 0.7, 2.0, 5.0, 8.0}) {
    CHECK(q_function(x) == Approx(oracle::gaussian_tail(x)).epsilon(1e-9));
    CHECK(q_function(x) + q_function(-x) == Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("coverage matches an ingredient-level reference") {
  for (const EnvironmentParams& env : {synthetic_urban_environment(), synthetic_dense_environment()}) {
    const NetworkConfig net = network(env);
    const CoverageModel model(net);
    for (double r : {0.0, 200.0, 400.0}) {
      for (double h : {150.0, 500.0, 2000.0}) {
        for (double t : {-10.0, -2.0, 5.0}) {
          CHECK(model.coverage(r, h, t) ==
                Approx(coverage_reference(net, model.mean_interference(), r, h, t)).epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("free functions agree with the cached model") {
  CoverageQuery q;
  q.net = network(synthetic_urban_environment());
  const CoverageModel model(q.net);
  CHECK(coverage_probability(q) == model.coverage(q.r, q.h, q.threshold_db));
  CHECK(psi(q) == model.psi_db(q.r, q.h, q.threshold_db));
}

TEST_CASE("coverage is a probability and monotone in threshold and density") {
  const EnvironmentParams env = synthetic_urban_environment();
  const CoverageModel sparse(network(env, 1e-6));
  const CoverageModel dense(network(env, 1e-4));
  for (double h : {60.0, 300.0, 1000.0, 3000.0}) {
    double prev = 1.0;
    for (double t = -20.0; t <= 20.0; t += 0.5) {
      const double p = sparse.coverage(200.0, h, t);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      CHECK(p <= prev);
      CHECK(dense.coverage(200.0, h, t) <= p);
      prev = p;
    }
  }
}

TEST_CASE("zero spread gives a step in the threshold") {
  EnvironmentParams env = synthetic_urban_environment();
  env.a_los_db = env.a_nlos_db = 0.0;
  const CoverageModel model(network(env));
  for (double t : {-10.0, 0.0, 10.0}) {
    const double c = model.coverage(0.0, 500.0, t);
    const double p_los = los_probability(0.0, env);
    const bool ok = c == 0.0 || c == 1.0 || std::abs(c - p_los) < 1e-15 || std::abs(c - (1.0 - p_los)) < 1e-15;
    CHECK(ok);
  }
}

TEST_CASE("zero density means certain coverage") {
  const CoverageModel model(network(synthetic_urban_environment(), 0.0));
  CHECK(model.coverage(200.0, 500.0, 30.0) == 1.0);
  CHECK_THROWS_AS(model.psi_db(200.0, 500.0, 0.0), DomainError);
}

TEST_CASE("altitude search matches an exhaustive grid") {
  for (const EnvironmentParams& env : {synthetic_urban_environment(), synthetic_dense_environment()}) {
    const CoverageModel model(network(env));
    for (double r : {200.0, 400.0}) {
      const OptimizationResult res = optimal_altitude(model, r, -2.0);
      const double floor_h = r / std::tan(5.0 * std::numbers::pi / 12.0) * (1.0 + 1e-12);
      const auto ref = oracle::grid_argmax([&](double h) { return model.coverage(r, h, -2.0); },
                                           std::max(10.0, floor_h), 4000.0, 20000, true);
      CAPTURE(env.name);
      CAPTURE(r);
      CHECK(res.value >= ref.f - 1e-9);
      CHECK(res.argmax == Approx(ref.x).epsilon(2e-3));
      CHECK(res.trace.size() >= 64);
      CHECK_FALSE(res.at_boundary);
      CHECK(res.lower_bound_clipped == (floor_h > 10.0));
      CHECK(res.requested_lower_bound == 10.0);
    }
  }
}

TEST_CASE("altitude search flags a bracket that excludes the peak") {
  const CoverageModel model(network(synthetic_urban_environment()));
  const OptimizationResult full = optimal_altitude(model, 400.0, -2.0);
  const OptimizationResult high = optimal_altitude(model, 400.0, -2.0, {2.0 * full.argmax, 4000.0});
  CHECK(high.at_boundary);
  CHECK(high.argmax == Approx(2.0 * full.argmax).epsilon(1e-12));
  CHECK_FALSE(high.lower_bound_clipped);
}

TEST_CASE("altitude bracket below the angle limit") {
  const CoverageModel model(network(synthetic_urban_environment()));
  CHECK_THROWS_AS(optimal_altitude(model, 4000.0, -2.0, {10.0, 500.0}), DomainError);
  CHECK_THROWS_AS(optimal_altitude(model, 100.0, -2.0, {500.0, 100.0}), DomainError);
  CHECK_THROWS_AS(optimal_altitude(model, -1.0, -2.0), DomainError);
}

TEST_CASE("rate and threshold search") {
  const CoverageModel model(network(synthetic_urban_environment()));
  const double r = 200.0;
  const OptimizationResult alt = optimal_altitude(model, r, 3.0);
  CHECK(normalized_rate(model, 3.0, r) == Approx(std::log2(1.0 + std::pow(10.0, 0.3)) * alt.value).epsilon(1e-14));

  const ThresholdSearchResult best = optimal_threshold(model, r, -10.0, 10.0);
  const auto ref = oracle::grid_argmax([&](double t) { return normalized_rate(model, t, r); }, -10.0, 10.0, 401);
  CHECK(best.rate.value >= ref.f - 1e-9);
  CHECK(best.rate.argmax == Approx(ref.x).epsilon(0.02));
  CHECK_FALSE(best.rate.at_boundary);
  CHECK(best.altitude.value * std::log2(1.0 + db_to_linear(best.rate.argmax)) ==
        Approx(best.rate.value).epsilon(1e-12));
  CHECK_THROWS_AS(optimal_threshold(model, r, 5.0, 5.0), DomainError);
}
