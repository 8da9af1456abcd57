#include <immintrin.h>

#include <cstddef>

#include "dronecell/kernels.hpp"

namespace dronecell::kernels::avx2 {
namespace {

inline double combine(__m256d acc) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace

double sum(std::span<const double> x) {
  const std::size_t n = x.size();
  const std::size_t body = n - n % 4;
  const double* p = x.data();
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < body; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(p + i));
  double total = combine(acc);
  for (std::size_t i = body; i < n; ++i) total += p[i];
  return total;
}

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const std::size_t body = n - n % 4;
  const double* pa = a.data();
  const double* pb = b.data();
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < body; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i)));
  }
  double total = combine(acc);
  for (std::size_t i = body; i < n; ++i) total += pa[i] * pb[i];
  return total;
}

double ratio_sum(std::span<const double> num, std::span<const double> den) {
  const std::size_t n = num.size();
  const std::size_t body = n - n % 4;
  const double* pn = num.data();
  const double* pd = den.data();
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < body; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_div_pd(_mm256_loadu_pd(pn + i), _mm256_loadu_pd(pd + i)));
  }
  double total = combine(acc);
  for (std::size_t i = body; i < n; ++i) total += pn[i] / pd[i];
  return total;
}

MomentSums central_moment_sums(std::span<const double> x, double center) {
  const std::size_t n = x.size();
  const std::size_t body = n - n % 4;
  const double* p = x.data();
  const __m256d c = _mm256_set1_pd(center);
  __m256d sq = _mm256_setzero_pd();
  __m256d qu = _mm256_setzero_pd();
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(p + i), c);
    const __m256d d2 = _mm256_mul_pd(d, d);
    sq = _mm256_add_pd(sq, d2);
    qu = _mm256_add_pd(qu, _mm256_mul_pd(d2, d2));
  }
  MomentSums out{combine(sq), combine(qu)};
  for (std::size_t i = body; i < n; ++i) {
    const double d = p[i] - center;
    const double d2 = d * d;
    out.squares += d2;
    out.fourth += d2 * d2;
  }
  return out;
}

}  // namespace dronecell::kernels::avx2
