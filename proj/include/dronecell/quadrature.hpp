#pragma once

#include <functional>
#include <span>

namespace dronecell {

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-15;
  int max_subdivisions = 500;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
  int evaluations = 0;
};

/// Fills fx[i] = f(x[i]) for every node; called with 15 nodes at a time.
using BatchIntegrand = std::function<void(std::span<const double> x, std::span<double> fx)>;

/// Globally adaptive 7/15-point Gauss-Kronrod integration over [a, b].
/// Bisects the interval with the largest |K15 - G7| until the summed estimate
/// drops below max(abs_tol, rel_tol * |I|). Throws NumericalError, carrying
/// the residual estimate, when max_subdivisions is exhausted.
QuadratureResult integrate_adaptive(const BatchIntegrand& f, double a, double b,
                                    const QuadratureSpec& spec = {});

template <class F>
QuadratureResult integrate_adaptive_scalar(F&& f, double a, double b,
                                           const QuadratureSpec& spec = {}) {
  return integrate_adaptive(
      [&f](std::span<const double> x, std::span<double> fx) {
        for (std::size_t i = 0; i < x.size(); ++i) fx[i] = f(x[i]);
      },
      a, b, spec);
}

}  // namespace dronecell
