#include <doctest.h>

#include <random>

#include "zolo/linalg.hpp"
#include "zolo/simd.hpp"
#include "zolo/specop.hpp"

using namespace zolo;
using zolo::simd::Isa;

namespace {

std::vector<cdouble> random_vector(std::mt19937_64& rng, std::size_t len) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<cdouble> v(len);
  for (auto& x : v) x = {u(rng), u(rng)};
  return v;
}

bool avx2_available() { return simd::avx2::compiled() && simd::detected_isa() == Isa::Avx2; }

struct IsaGuard {
  Isa saved = simd::active_isa();
  ~IsaGuard() { simd::set_isa(saved); }
};

}  // namespace

TEST_CASE("scalar kernels") {
  std::vector<cdouble> y{{1, 1}, {2, 0}, {0, -1}};
  const std::vector<cdouble> x{{1, 0}, {0, 1}, {1, 1}};
  simd::scalar::complex_axpy_neg(y, {0, 1}, x);
  CHECK(y[0] == cdouble(1, 0));
  CHECK(y[1] == cdouble(3, 0));
  CHECK(y[2] == cdouble(1, -2));
  CHECK(simd::scalar::squared_norm(x) == doctest::Approx(4.0));
  CHECK(simd::scalar::squared_norm(std::span<const cdouble>{}) == 0.0);
}

TEST_CASE("avx2 kernels match the scalar reference") {
  if (!avx2_available()) {
    MESSAGE("AVX2 not available on this machine; equivalence test skipped");
    return;
  }
  std::mt19937_64 rng(20240611);
  for (std::size_t len = 0; len <= 67; ++len) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_vector(rng, len);
      const auto y0 = random_vector(rng, len);
      const cdouble f = random_vector(rng, 1)[0];
      auto ys = y0, yv = y0;
      simd::scalar::complex_axpy_neg(ys, f, x);
      simd::avx2::complex_axpy_neg(yv, f, x);
      for (std::size_t i = 0; i < len; ++i) CHECK(std::abs(ys[i] - yv[i]) <= 1e-12 * (1 + std::abs(ys[i])));
      const double ns = simd::scalar::squared_norm(x), nv = simd::avx2::squared_norm(x);
      CHECK(std::abs(ns - nv) <= 1e-12 * (1 + ns));
    }
  }
}

TEST_CASE("dispatch can be pinned") {
  IsaGuard guard;
  simd::set_isa(Isa::Scalar);
  CHECK(simd::active_isa() == Isa::Scalar);
  if (avx2_available()) {
    simd::set_isa(Isa::Avx2);
    CHECK(simd::active_isa() == Isa::Avx2);
  } else {
    CHECK_THROWS_AS(simd::set_isa(Isa::Avx2), std::invalid_argument);
  }
}

TEST_CASE("rank and nullity are identical under both kernel tables") {
  if (!avx2_available()) return;
  IsaGuard guard;
  for (Int L = 1; L <= 40; ++L) {
    for (Int n = 1; n <= 12; ++n) {
      const auto m = operator_matrix(n, L, 2).dense();
      simd::set_isa(Isa::Scalar);
      const auto rs = rank(m);
      simd::set_isa(Isa::Avx2);
      CHECK(rank(m) == rs);
    }
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    ComplexMatrix m;
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    const std::size_t r = 1 + rng() % std::min(rows, cols);
    // rank-r product of random factors
    const auto a = random_vector(rng, rows * r), b = random_vector(rng, r * cols);
    for (std::size_t i = 0; i < rows; ++i) {
      std::vector<cdouble> row(cols);
      for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t k = 0; k < r; ++k) row[j] += a[i * r + k] * b[k * cols + j];
      }
      m.append_row(row);
    }
    simd::set_isa(Isa::Scalar);
    const auto rs = rank(m);
    simd::set_isa(Isa::Avx2);
    CHECK(rank(m) == rs);
    CHECK(rs == r);
  }
}
