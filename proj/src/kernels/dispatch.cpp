#include <atomic>
#include <cstdlib>
#include <string>

#include "dronecell/error.hpp"
#include "dronecell/kernels.hpp"

namespace dronecell::kernels {
namespace {

struct Table {
  Isa isa;
  double (*sum)(std::span<const double>);
  double (*dot)(std::span<const double>, std::span<const double>);
  double (*ratio_sum)(std::span<const double>, std::span<const double>);
  MomentSums (*central_moment_sums)(std::span<const double>, double);
};

constexpr Table kScalar{Isa::scalar, scalar::sum, scalar::dot, scalar::ratio_sum,
                        scalar::central_moment_sums};
#if defined(DRONECELL_HAVE_AVX2)
constexpr Table kAvx2{Isa::avx2, avx2::sum, avx2::dot, avx2::ratio_sum,
                      avx2::central_moment_sums};
#endif
#if defined(DRONECELL_HAVE_NEON)
constexpr Table kNeon{Isa::neon, neon::sum, neon::dot, neon::ratio_sum,
                      neon::central_moment_sums};
#endif

const Table* table_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &kScalar;
    case Isa::avx2:
#if defined(DRONECELL_HAVE_AVX2)
      if (isa_supported(Isa::avx2)) return &kAvx2;
#endif
      return nullptr;
    case Isa::neon:
#if defined(DRONECELL_HAVE_NEON)
      return &kNeon;
#endif
      return nullptr;
  }
  return nullptr;
}

const Table* detect() {
  if (const char* forced = std::getenv("DRONECELL_ISA")) {
    const std::string name(forced);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (name == isa_name(isa)) {
        if (const Table* t = table_for(isa)) return t;
      }
    }
  }
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (const Table* t = table_for(isa)) return t;
  }
  return &kScalar;
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> table{detect()};
  return table;
}

const Table& active() { return *current().load(std::memory_order_acquire); }

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(DRONECELL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(DRONECELL_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return active().isa; }

void set_active_isa(Isa isa) {
  const Table* t = table_for(isa);
  if (t == nullptr) {
    throw DomainError("kernel ISA '" + std::string(isa_name(isa)) + "' not supported here");
  }
  current().store(t, std::memory_order_release);
}

double sum(std::span<const double> x) { return active().sum(x); }
double dot(std::span<const double> a, std::span<const double> b) { return active().dot(a, b); }
double ratio_sum(std::span<const double> num, std::span<const double> den) {
  return active().ratio_sum(num, den);
}
MomentSums central_moment_sums(std::span<const double> x, double center) {
  return active().central_moment_sums(x, center);
}

}  // namespace dronecell::kernels
