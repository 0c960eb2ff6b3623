#include <cassert>

#include "zolo/simd.hpp"

namespace zolo::simd::scalar {

void complex_axpy_neg(std::span<cdouble> y, cdouble f, std::span<const cdouble> x) {
  assert(y.size() == x.size());
  const double fr = f.real(), fi = f.imag();
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = {y[i].real() - (fr * xr - fi * xi), y[i].imag() - (fr * xi + fi * xr)};
  }
}

double squared_norm(std::span<const cdouble> x) {
  double s = 0.0;
  for (const cdouble& v : x) s += v.real() * v.real() + v.imag() * v.imag();
  return s;
}

}  // namespace zolo::simd::scalar
