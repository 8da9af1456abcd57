#include <cstddef>

#include "dronecell/kernels.hpp"

namespace dronecell::kernels::scalar {
namespace {

constexpr std::size_t kLanes = 4;

inline double combine(const double (&acc)[kLanes]) { return (acc[0] + acc[1]) + (acc[2] + acc[3]); }

}  // namespace

double sum(std::span<const double> x) {
  double acc[kLanes] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n = x.size();
  const std::size_t body = n - n % kLanes;
  for (std::size_t i = 0; i < body; i += kLanes) {
    for (std::size_t j = 0; j < kLanes; ++j) acc[j] += x[i + j];
  }
  double total = combine(acc);
  for (std::size_t i = body; i < n; ++i) total += x[i];
  return total;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc[kLanes] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n = a.size();
  const std::size_t body = n - n % kLanes;
  for (std::size_t i = 0; i < body; i += kLanes) {
    for (std::size_t j = 0; j < kLanes; ++j) acc[j] += a[i + j] * b[i + j];
  }
  double total = combine(acc);
  for (std::size_t i = body; i < n; ++i) total += a[i] * b[i];
  return total;
}

double ratio_sum(std::span<const double> num, std::span<const double> den) {
  double acc[kLanes] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n = num.size();
  const std::size_t body = n - n % kLanes;
  for (std::size_t i = 0; i < body; i += kLanes) {
    for (std::size_t j = 0; j < kLanes; ++j) acc[j] += num[i + j] / den[i + j];
  }
  double total = combine(acc);
  for (std::size_t i = body; i < n; ++i) total += num[i] / den[i];
  return total;
}

MomentSums central_moment_sums(std::span<const double> x, double center) {
  double sq[kLanes] = {0.0, 0.0, 0.0, 0.0};
  double qu[kLanes] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n = x.size();
  const std::size_t body = n - n % kLanes;
  for (std::size_t i = 0; i < body; i += kLanes) {
    for (std::size_t j = 0; j < kLanes; ++j) {
      const double d = x[i + j] - center;
      const double d2 = d * d;
      sq[j] += d2;
      qu[j] += d2 * d2;
    }
  }
  MomentSums out{combine(sq), combine(qu)};
  for (std::size_t i = body; i < n; ++i) {
    const double d = x[i] - center;
    const double d2 = d * d;
    out.squares += d2;
    out.fourth += d2 * d2;
  }
  return out;
}

}  // namespace dronecell::kernels::scalar
