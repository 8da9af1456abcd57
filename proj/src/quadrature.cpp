#include "dronecell/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "dronecell/error.hpp"
#include "dronecell/kernels.hpp"

namespace dronecell {
namespace {

constexpr std::size_t kNodes = 15;

// Kronrod abscissae on [0, 1) in decreasing order, with the Gauss nodes at odd positions.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Rule {
  std::array<double, kNodes> unit_nodes{};  // on [-1, 1]
  std::array<double, kNodes> kronrod{};
  std::array<double, kNodes> gauss{};  // zero at Kronrod-only nodes
};

constexpr Rule make_rule() {
  Rule r;
  for (std::size_t j = 0; j < 7; ++j) {
    r.unit_nodes[2 * j] = -kXk[j];
    r.unit_nodes[2 * j + 1] = kXk[j];
    r.kronrod[2 * j] = kWk[j];
    r.kronrod[2 * j + 1] = kWk[j];
    if (j % 2 == 1) {
      r.gauss[2 * j] = kWg[j / 2];
      r.gauss[2 * j + 1] = kWg[j / 2];
    }
  }
  r.unit_nodes[14] = 0.0;
  r.kronrod[14] = kWk[7];
  r.gauss[14] = kWg[3];
  return r;
}

constexpr Rule kRule = make_rule();

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment apply_rule(const BatchIntegrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, kNodes> x{};
  std::array<double, kNodes> fx{};
  for (std::size_t i = 0; i < kNodes; ++i) x[i] = center + half * kRule.unit_nodes[i];
  f(x, fx);
  for (double v : fx) {
    if (!std::isfinite(v)) {
      throw NumericalError("integrand is not finite on [" + std::to_string(a) + ", " +
                               std::to_string(b) + "]",
                           INFINITY);
    }
  }
  const double k15 = half * kernels::dot(kRule.kronrod, fx);
  const double g7 = half * kernels::dot(kRule.gauss, fx);
  return {a, b, k15, std::abs(k15 - g7)};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw DomainError("quadrature tolerances must be > 0");
  }
  if (max_subdivisions < 1) throw DomainError("quadrature max_subdivisions must be >= 1");
}

QuadratureResult integrate_adaptive(const BatchIntegrand& f, double a, double b,
                                    const QuadratureSpec& spec) {
  spec.validate();
  QuadratureResult result;
  if (a == b) return result;

  std::priority_queue<Segment> heap;
  Segment first = apply_rule(f, a, b);
  double total = first.value;
  double error = first.error;
  heap.push(first);
  result.evaluations = static_cast<int>(kNodes);

  while (error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (result.subdivisions >= spec.max_subdivisions) {
      throw NumericalError("adaptive quadrature did not converge within " +
                               std::to_string(spec.max_subdivisions) +
                               " subdivisions; residual estimate " + std::to_string(error),
                           error);
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = apply_rule(f, worst.a, mid);
    const Segment right = apply_rule(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++result.subdivisions;
    result.evaluations += 2 * static_cast<int>(kNodes);
  }

  // Re-sum from the pieces to shed the drift of the running updates.
  std::vector<Segment> pieces;
  pieces.reserve(heap.size());
  while (!heap.empty()) {
    pieces.push_back(heap.top());
    heap.pop();
  }
  std::sort(pieces.begin(), pieces.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
  total = 0.0;
  error = 0.0;
  for (const Segment& s : pieces) {
    total += s.value;
    error += s.error;
  }
  result.value = total;
  result.error_estimate = error;
  return result;
}

}  // namespace dronecell
