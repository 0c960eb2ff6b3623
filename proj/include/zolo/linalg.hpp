#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace zolo {

using cdouble = std::complex<double>;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cdouble& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cdouble& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<cdouble> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const cdouble> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const cdouble> values);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cdouble> data_;
};

inline constexpr double kDefaultRankTolerance = 1e-8;

/// Numerical rank by Gaussian elimination with partial pivoting. A pivot
/// counts when its modulus exceeds tol times the larger of the largest row
/// norm and `scale`. Pass the size of the entries before any cancellation as
/// `scale` so that a shifted matrix which is zero up to rounding has rank 0.
std::size_t rank(ComplexMatrix m, double tol = kDefaultRankTolerance, double scale = 0.0);

/// Dimension of the null space {v : m v = 0}.
inline std::size_t nullity(const ComplexMatrix& m, double tol = kDefaultRankTolerance, double scale = 0.0) {
  return m.cols() - rank(m, tol, scale);
}

}  // namespace zolo
