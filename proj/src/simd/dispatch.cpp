#include <atomic>
#include <stdexcept>

#include "zolo/simd.hpp"

namespace zolo::simd {

namespace {

struct KernelTable {
  Isa isa;
  void (*axpy)(std::span<cdouble>, cdouble, std::span<const cdouble>);
  double (*norm)(std::span<const cdouble>);
};

constexpr KernelTable kScalar{Isa::Scalar, scalar::complex_axpy_neg, scalar::squared_norm};
constexpr KernelTable kAvx2{Isa::Avx2, avx2::complex_axpy_neg, avx2::squared_norm};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* pick() { return detected_isa() == Isa::Avx2 ? &kAvx2 : &kScalar; }

std::atomic<const KernelTable*>& active() {
  static std::atomic<const KernelTable*> table{pick()};
  return table;
}

}  // namespace

const char* to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
  static const Isa isa = (avx2::compiled() && cpu_has_avx2()) ? Isa::Avx2 : Isa::Scalar;
  return isa;
}

Isa active_isa() { return active().load()->isa; }

void set_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) {
    throw std::invalid_argument("AVX2 kernels are not available on this CPU/build");
  }
  active().store(isa == Isa::Avx2 ? &kAvx2 : &kScalar);
}

void complex_axpy_neg(std::span<cdouble> y, cdouble f, std::span<const cdouble> x) { active().load()->axpy(y, f, x); }

double squared_norm(std::span<const cdouble> x) { return active().load()->norm(x); }

}  // namespace zolo::simd
