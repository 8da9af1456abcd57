#pragma once

// Reduction kernels used by the quadrature, the field simulator and the
// empirical-moment code. Each kernel has a scalar reference and SIMD variants.
//
// All variants accumulate into four interleaved lanes (element i goes to lane
// i % 4), combine the lanes as (l0 + l1) + (l2 + l3), then add the tail in
// order. Since only IEEE add/sub/mul/div are used and contraction is disabled,
// every variant returns bit-identical results to the scalar reference.

#include <span>
#include <string_view>

namespace dronecell::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);

/// The variant used by the dispatching entry points below. Chosen on first use
/// from CPU features; DRONECELL_ISA=scalar|avx2|neon in the environment forces one.
Isa active_isa();

/// Throws DomainError if the ISA is not supported on this machine.
void set_active_isa(Isa isa);

struct MomentSums {
  double squares = 0.0;  // sum (x - c)^2
  double fourth = 0.0;   // sum (x - c)^4
};

double sum(std::span<const double> x);
double dot(std::span<const double> a, std::span<const double> b);
double ratio_sum(std::span<const double> num, std::span<const double> den);
MomentSums central_moment_sums(std::span<const double> x, double center);

namespace scalar {
double sum(std::span<const double> x);
double dot(std::span<const double> a, std::span<const double> b);
double ratio_sum(std::span<const double> num, std::span<const double> den);
MomentSums central_moment_sums(std::span<const double> x, double center);
}  // namespace scalar

#if defined(DRONECELL_HAVE_AVX2)
namespace avx2 {
double sum(std::span<const double> x);
double dot(std::span<const double> a, std::span<const double> b);
double ratio_sum(std::span<const double> num, std::span<const double> den);
MomentSums central_moment_sums(std::span<const double> x, double center);
}  // namespace avx2
#endif

#if defined(DRONECELL_HAVE_NEON)
namespace neon {
double sum(std::span<const double> x);
double dot(std::span<const double> a, std::span<const double> b);
double ratio_sum(std::span<const double> num, std::span<const double> den);
MomentSums central_moment_sums(std::span<const double> x, double center);
}  // namespace neon
#endif

}  // namespace dronecell::kernels
