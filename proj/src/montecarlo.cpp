#include "dronecell/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <thread>

#include "dronecell/error.hpp"
#include "dronecell/kernels.hpp"
#include "dronecell/units.hpp"

namespace dronecell {
namespace {

// Poisson means beyond this are far outside any physical deployment and would
// make a single realization exhaust memory.
constexpr double kMaxExpectedCount = 1e8;

unsigned resolve_workers(unsigned requested, std::uint64_t trials) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(n, std::max<std::uint64_t>(trials, 1)));
}

// Runs body(i) for every trial index; each worker owns a contiguous block.
template <class Body>
void for_each_trial(std::uint64_t trials, unsigned workers, Body body) {
  const unsigned n = resolve_workers(workers, trials);
  if (n == 1) {
    for (std::uint64_t i = 0; i < trials; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w) {
      const std::uint64_t begin = trials * w / n;
      const std::uint64_t end = trials * (w + 1) / n;
      pool.emplace_back([&, w, begin, end] {
        try {
          for (std::uint64_t i = begin; i < end; ++i) body(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double interference_of(const FieldRealization& field, double h, double p_interferer_w,
                       double frequency_hz, std::vector<double>& power,
                       std::vector<double>& loss) {
  const std::size_t k = field.count;
  power.assign(k, p_interferer_w);
  loss.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    loss[i] = free_space_path_loss(h, field.angles[i], frequency_hz) * field.shadowings[i];
  }
  return kernels::ratio_sum(power, loss);
}

}  // namespace

void SimConfig::validate() const {
  if (trials < 1) throw DomainError("trials must be >= 1");
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("altitude must be finite and > 0");
  net.validate();
}

EmpiricalDistribution EmpiricalDistribution::from_samples(std::vector<double> samples) {
  EmpiricalDistribution d;
  const std::size_t n = samples.size();
  if (n > 0) {
    d.mean_ = kernels::sum(samples) / static_cast<double>(n);
    if (n > 1) {
      const kernels::MomentSums m = kernels::central_moment_sums(samples, d.mean_);
      const double nd = static_cast<double>(n);
      d.variance_ = m.squares / (nd - 1.0);
      d.sem_ = std::sqrt(d.variance_ / nd);
      const double m2 = m.squares / nd;
      const double m4 = m.fourth / nd;
      d.var_se_ = std::sqrt(std::max(m4 - m2 * m2, 0.0) / nd);
    }
  }
  std::sort(samples.begin(), samples.end());
  d.sorted_ = std::move(samples);
  return d;
}

double EmpiricalDistribution::cv() const {
  return mean_ > 0.0 ? std::sqrt(variance_) / mean_ : 0.0;
}

double EmpiricalDistribution::cdf(double x) const {
  if (sorted_.empty()) return 0.0;
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double expected_interferer_count(const NetworkConfig& net, double h) {
  const double radius = h * std::tan(net.beamwidth_rad / 2.0);
  return net.lambda * std::numbers::pi * radius * radius;
}

std::uint64_t sample_interferer_count(const NetworkConfig& net, double h, RandomStream& rng) {
  if (!(h > 0.0)) throw DomainError("altitude must be > 0");
  const double mean = expected_interferer_count(net, h);
  if (!std::isfinite(mean) || mean > kMaxExpectedCount) {
    throw DomainError("expected interferer count " + std::to_string(mean) +
                      " exceeds simulator limit");
  }
  if (mean == 0.0) return 0;
  std::poisson_distribution<std::uint64_t> poisson(mean);
  return poisson(rng);
}

double angle_from_uniform(double beamwidth_rad, double u) {
  return std::atan(std::tan(beamwidth_rad / 2.0) * std::sqrt(u));
}

double interferer_angle_cdf(double phi, double beamwidth_rad) {
  if (phi <= 0.0) return 0.0;
  const double half = beamwidth_rad / 2.0;
  if (phi >= half) return 1.0;
  const double t = std::tan(phi) / std::tan(half);
  return t * t;
}

double sample_interferer_angle(const NetworkConfig& net, RandomStream& rng) {
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  return angle_from_uniform(net.beamwidth_rad, uniform(rng));
}

FieldRealization realize_field(const SimConfig& cfg, RandomStream& rng) {
  FieldRealization field;
  field.count = static_cast<std::size_t>(sample_interferer_count(cfg.net, cfg.h, rng));
  field.angles.resize(field.count);
  field.kinds.resize(field.count);
  field.shadowings.resize(field.count);

  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  const EnvironmentParams& env = cfg.net.env;
  for (std::size_t i = 0; i < field.count; ++i) {
    const double phi = angle_from_uniform(cfg.net.beamwidth_rad, uniform(rng));
    const LinkKind kind = uniform(rng) < los_probability(phi, env) ? LinkKind::los : LinkKind::nlos;
    field.angles[i] = phi;
    field.kinds[i] = kind;
    field.shadowings[i] = shadowing_from_standard_normal(phi, kind, env, normal(rng));
  }
  return field;
}

double aggregate_interference(const FieldRealization& field, const SimConfig& cfg) {
  std::vector<double> power;
  std::vector<double> loss;
  return interference_of(field, cfg.h, cfg.net.p_interferer_w, cfg.net.env.frequency_hz, power,
                         loss);
}

std::vector<double> simulate_samples(const SimConfig& cfg) {
  cfg.validate();
  std::vector<double> samples(cfg.trials);
  for_each_trial(cfg.trials, cfg.workers, [&](std::uint64_t i) {
    RandomStream rng = trial_stream(cfg.master_seed, i);
    samples[i] = aggregate_interference(realize_field(cfg, rng), cfg);
  });
  return samples;
}

EmpiricalDistribution simulate_distribution(const SimConfig& cfg) {
  if (cfg.trials < 2) throw DomainError("distribution estimate needs at least 2 trials");
  return EmpiricalDistribution::from_samples(simulate_samples(cfg));
}

CoverageEstimate simulate_coverage(const SimConfig& cfg, double r, double threshold_linear,
                                   InterferenceMode mode) {
  cfg.validate();
  if (!(threshold_linear >= 0.0)) throw DomainError("SIR threshold must be >= 0");
  const LinkGeometry geom = geometry_from(r, cfg.h);
  const EnvironmentParams& env = cfg.net.env;
  const double p_los = los_probability(geom.phi, env);
  const double path_loss = free_space_path_loss(geom, env.frequency_hz);
  const double mean_interference =
      mode == InterferenceMode::mean_field ? mean_aggregate_interference(cfg.net) : 0.0;

  std::vector<unsigned char> covered(cfg.trials, 0);
  for_each_trial(cfg.trials, cfg.workers, [&](std::uint64_t i) {
    RandomStream rng = trial_stream(cfg.master_seed, i);
    const double interference = mode == InterferenceMode::actual
                                    ? aggregate_interference(realize_field(cfg, rng), cfg)
                                    : mean_interference;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    const LinkKind kind = uniform(rng) < p_los ? LinkKind::los : LinkKind::nlos;
    const double psi = shadowing_from_standard_normal(geom.phi, kind, env, normal(rng));
    if (interference <= 0.0) {
      covered[i] = 1;
    } else {
      covered[i] = cfg.net.p_ue_w / (interference * path_loss * psi) > threshold_linear;
    }
  });

  CoverageEstimate est;
  est.trials = cfg.trials;
  for (unsigned char c : covered) est.covered += c;
  est.probability = static_cast<double>(est.covered) / static_cast<double>(est.trials);
  return est;
}

BinomialInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {successes == 0 ? 0.0 : std::max(0.0, center - half),
          successes == trials ? 1.0 : std::min(1.0, center + half)};
}

}  // namespace dronecell
