#include <arm_neon.h>

#include <cstddef>

#include "dronecell/kernels.hpp"

// Two float64x2 registers stand in for the four reference lanes: lo holds
// lanes 0-1, hi holds lanes 2-3.
namespace dronecell::kernels::neon {
namespace {

inline double combine(float64x2_t lo, float64x2_t hi) {
  return (vgetq_lane_f64(lo, 0) + vgetq_lane_f64(lo, 1)) +
         (vgetq_lane_f64(hi, 0) + vgetq_lane_f64(hi, 1));
}

}  // namespace

double sum(std::span<const double> x) {
  const std::size_t n = x.size();
  const std::size_t body = n - n % 4;
  const double* p = x.data();
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < body; i += 4) {
    lo = vaddq_f64(lo, vld1q_f64(p + i));
    hi = vaddq_f64(hi, vld1q_f64(p + i + 2));
  }
  double total = combine(lo, hi);
  for (std::size_t i = body; i < n; ++i) total += p[i];
  return total;
}

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const std::size_t body = n - n % 4;
  const double* pa = a.data();
  const double* pb = b.data();
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < body; i += 4) {
    lo = vaddq_f64(lo, vmulq_f64(vld1q_f64(pa + i), vld1q_f64(pb + i)));
    hi = vaddq_f64(hi, vmulq_f64(vld1q_f64(pa + i + 2), vld1q_f64(pb + i + 2)));
  }
  double total = combine(lo, hi);
  for (std::size_t i = body; i < n; ++i) total += pa[i] * pb[i];
  return total;
}

double ratio_sum(std::span<const double> num, std::span<const double> den) {
  const std::size_t n = num.size();
  const std::size_t body = n - n % 4;
  const double* pn = num.data();
  const double* pd = den.data();
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < body; i += 4) {
    lo = vaddq_f64(lo, vdivq_f64(vld1q_f64(pn + i), vld1q_f64(pd + i)));
    hi = vaddq_f64(hi, vdivq_f64(vld1q_f64(pn + i + 2), vld1q_f64(pd + i + 2)));
  }
  double total = combine(lo, hi);
  for (std::size_t i = body; i < n; ++i) total += pn[i] / pd[i];
  return total;
}

MomentSums central_moment_sums(std::span<const double> x, double center) {
  const std::size_t n = x.size();
  const std::size_t body = n - n % 4;
  const double* p = x.data();
  const float64x2_t c = vdupq_n_f64(center);
  float64x2_t sq_lo = vdupq_n_f64(0.0), sq_hi = vdupq_n_f64(0.0);
  float64x2_t qu_lo = vdupq_n_f64(0.0), qu_hi = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < body; i += 4) {
    const float64x2_t d_lo = vsubq_f64(vld1q_f64(p + i), c);
    const float64x2_t d_hi = vsubq_f64(vld1q_f64(p + i + 2), c);
    const float64x2_t d2_lo = vmulq_f64(d_lo, d_lo);
    const float64x2_t d2_hi = vmulq_f64(d_hi, d_hi);
    sq_lo = vaddq_f64(sq_lo, d2_lo);
    sq_hi = vaddq_f64(sq_hi, d2_hi);
    qu_lo = vaddq_f64(qu_lo, vmulq_f64(d2_lo, d2_lo));
    qu_hi = vaddq_f64(qu_hi, vmulq_f64(d2_hi, d2_hi));
  }
  MomentSums out{combine(sq_lo, sq_hi), combine(qu_lo, qu_hi)};
  for (std::size_t i = body; i < n; ++i) {
    const double d = p[i] - center;
    const double d2 = d * d;
    out.squares += d2;
    out.fourth += d2 * d2;
  }
  return out;
}

}  // namespace dronecell::kernels::neon
