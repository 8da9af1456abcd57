#include "dronecell/performance.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dronecell/error.hpp"
#include "dronecell/units.hpp"

namespace dronecell {
namespace {

constexpr double kInvPhi = 0.6180339887498948482;  // 1 / golden ratio

struct Probe {
  double x;
  double f;
};

// Golden-section search for a maximum of a unimodal f on [lo, hi]. Ties keep
// the left part, so flat objectives converge to the left edge. Every
// evaluation is appended to the trace; the best probe is returned.
template <class F>
Probe golden_section_maximize(F&& f, double lo, double hi, double tol,
                              std::vector<std::pair<double, double>>& trace) {
  auto eval = [&](double x) {
    const double v = f(x);
    trace.emplace_back(x, v);
    return v;
  };
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  Probe best = fc >= fd ? Probe{c, fc} : Probe{d, fd};
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = eval(d);
    }
    if (fc > best.f || (fc == best.f && c < best.x)) best = {c, fc};
    if (fd > best.f) best = {d, fd};
  }
  return best;
}

// Grid scan with leftmost tie-break, then golden refinement between the
// neighbours of the best grid point. The refined point only replaces the grid
// point when strictly better, so the result dominates every grid value.
template <class F>
OptimizationResult grid_then_golden(F&& f, const std::vector<double>& grid, double tol) {
  OptimizationResult res;
  res.trace.reserve(grid.size() + 64);
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = f(grid[i]);
    res.trace.emplace_back(grid[i], v);
    if (v > res.trace[best].second) best = i;
  }
  res.argmax = grid[best];
  res.value = res.trace[best].second;

  const std::size_t n = grid.size();
  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[best + 1 < n ? best + 1 : n - 1];
  const Probe refined = golden_section_maximize(f, lo, hi, tol, res.trace);
  if (refined.f > res.value) {
    res.argmax = refined.x;
    res.value = refined.f;
  }
  res.at_boundary = best == 0 || best == n - 1 || res.argmax < grid[1] || res.argmax > grid[n - 2];
  return res;
}

double coverage_term(double mu_db, double sigma_db, double psi_db) {
  if (sigma_db == 0.0) return mu_db < psi_db ? 1.0 : 0.0;
  return q_function((mu_db - psi_db) / sigma_db);
}

}  // namespace

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

CoverageModel::CoverageModel(NetworkConfig net, const QuadratureSpec& quad)
    : net_(std::move(net)), mean_interference_(mean_aggregate_interference(net_, quad)) {}

double CoverageModel::psi_db(double r, double h, double threshold_db) const {
  if (!(mean_interference_ > 0.0)) {
    throw DomainError("psi undefined for zero mean interference");
  }
  const LinkGeometry geom = geometry_from(r, h);
  const double path_loss = free_space_path_loss(geom, net_.env.frequency_hz);
  return linear_to_db(net_.p_ue_w / (mean_interference_ * path_loss * db_to_linear(threshold_db)));
}

double CoverageModel::coverage(double r, double h, double threshold_db) const {
  const LinkGeometry geom = geometry_from(r, h);
  const double p_los = los_probability(geom.phi, net_.env);
  if (mean_interference_ == 0.0) return 1.0;
  const double psi = psi_db(r, h, threshold_db);
  const EnvironmentParams& env = net_.env;
  const double los = coverage_term(env.mu_los_db, shadowing_sigma(geom.phi, LinkKind::los, env), psi);
  const double nlos =
      coverage_term(env.mu_nlos_db, shadowing_sigma(geom.phi, LinkKind::nlos, env), psi);
  return los * p_los + nlos * (1.0 - p_los);
}

double psi(const CoverageQuery& query, const QuadratureSpec& quad) {
  return CoverageModel(query.net, quad).psi_db(query.r, query.h, query.threshold_db);
}

double coverage_probability(const CoverageQuery& query, const QuadratureSpec& quad) {
  return CoverageModel(query.net, quad).coverage(query.r, query.h, query.threshold_db);
}

OptimizationResult optimal_altitude(const CoverageModel& model, double r, double threshold_db,
                                    AltitudeBracket bracket, const SearchOptions& opts) {
  if (!(bracket.h_min > 0.0) || !(bracket.h_max > bracket.h_min) || !std::isfinite(bracket.h_max)) {
    throw DomainError("altitude bracket must satisfy 0 < h_min < h_max");
  }
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("ground distance must be >= 0");

  const double requested = bracket.h_min;
  const double h_floor = r / std::tan(kMaxOffNadirAngle) * (1.0 + 1e-12);
  double h_min = bracket.h_min;
  bool clipped = false;
  if (h_min < h_floor) {
    h_min = h_floor;
    clipped = true;
    if (!(h_min < bracket.h_max)) {
      throw DomainError("altitude bracket lies entirely below the 5pi/12 angle limit for r = " +
                        std::to_string(r) + " m");
    }
  }

  const int n = std::max(opts.altitude_grid_points, 64);
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double ratio = bracket.h_max / h_min;
  for (int i = 0; i < n; ++i) {
    grid[static_cast<std::size_t>(i)] = h_min * std::pow(ratio, static_cast<double>(i) / (n - 1));
  }
  grid.front() = h_min;
  grid.back() = bracket.h_max;

  OptimizationResult res = grid_then_golden(
      [&](double h) { return model.coverage(r, h, threshold_db); }, grid,
      opts.altitude_tolerance_m);
  res.lower_bound_clipped = clipped;
  res.requested_lower_bound = requested;
  return res;
}

OptimizationResult optimal_altitude(double r, double threshold_db, const NetworkConfig& net,
                                    double h_min, double h_max, const SearchOptions& opts) {
  return optimal_altitude(CoverageModel(net), r, threshold_db, {h_min, h_max}, opts);
}

double normalized_rate(const CoverageModel& model, double threshold_db, double r,
                       AltitudeBracket bracket, const SearchOptions& opts) {
  const double t = db_to_linear(threshold_db);
  return std::log2(1.0 + t) * optimal_altitude(model, r, threshold_db, bracket, opts).value;
}

double normalized_rate(double threshold_db, double r, const NetworkConfig& net,
                       AltitudeBracket bracket, const SearchOptions& opts) {
  return normalized_rate(CoverageModel(net), threshold_db, r, bracket, opts);
}

ThresholdSearchResult optimal_threshold(const CoverageModel& model, double r, double t_min_db,
                                        double t_max_db, AltitudeBracket bracket,
                                        const SearchOptions& opts) {
  if (!(t_min_db < t_max_db) || !std::isfinite(t_min_db) || !std::isfinite(t_max_db)) {
    throw DomainError("threshold bracket must satisfy t_min_db < t_max_db");
  }
  if (!(opts.threshold_grid_step_db > 0.0)) throw DomainError("threshold grid step must be > 0");

  std::vector<double> grid;
  const double span = t_max_db - t_min_db;
  const auto steps = static_cast<long>(std::floor(span / opts.threshold_grid_step_db + 1e-9));
  for (long i = 0; i <= steps; ++i) grid.push_back(t_min_db + opts.threshold_grid_step_db * i);
  if (grid.back() < t_max_db - 1e-12) grid.push_back(t_max_db);
  if (grid.size() < 3) {
    grid = {t_min_db, 0.5 * (t_min_db + t_max_db), t_max_db};
  }

  ThresholdSearchResult out;
  out.rate = grid_then_golden([&](double t) { return normalized_rate(model, t, r, bracket, opts); },
                              grid, opts.threshold_tolerance_db);
  out.altitude = optimal_altitude(model, r, out.rate.argmax, bracket, opts);
  return out;
}

OptimizationResult optimal_threshold(double r, const NetworkConfig& net, double t_min_db,
                                     double t_max_db, AltitudeBracket bracket,
                                     const SearchOptions& opts) {
  return optimal_threshold(CoverageModel(net), r, t_min_db, t_max_db, bracket, opts).rate;
}

}  // namespace dronecell
