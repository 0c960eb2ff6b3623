#pragma once

// Inner loops of the complex elimination behind rank/nullity. Each kernel has
// a scalar reference and an AVX2/FMA variant; the active table is chosen at
// runtime from CPU features and can be pinned for equivalence testing.

#include <complex>
#include <cstddef>
#include <span>

namespace zolo::simd {

using cdouble = std::complex<double>;

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa);

/// Best instruction set the running CPU supports (and this build compiled).
Isa detected_isa();
Isa active_isa();
/// Pins the kernel table; throws std::invalid_argument when unsupported.
void set_isa(Isa isa);

/// y[i] -= f * x[i]
void complex_axpy_neg(std::span<cdouble> y, cdouble f, std::span<const cdouble> x);

/// sum |x[i]|^2
double squared_norm(std::span<const cdouble> x);

namespace scalar {
void complex_axpy_neg(std::span<cdouble> y, cdouble f, std::span<const cdouble> x);
double squared_norm(std::span<const cdouble> x);
}  // namespace scalar

namespace avx2 {
bool compiled();
void complex_axpy_neg(std::span<cdouble> y, cdouble f, std::span<const cdouble> x);
double squared_norm(std::span<const cdouble> x);
}  // namespace avx2

}  // namespace zolo::simd
