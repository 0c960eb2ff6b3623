#include "zolo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zolo/simd.hpp"

namespace zolo {

void ComplexMatrix::append_row(std::span<const cdouble> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::size_t rank(ComplexMatrix m, double tol, double scale) {
  const std::size_t rows = m.rows(), cols = m.cols();
  double max_norm = 0.0;
  for (std::size_t r = 0; r < rows; ++r) max_norm = std::max(max_norm, simd::squared_norm(m.row(r)));
  if (max_norm == 0.0) return 0;
  const double threshold = tol * std::max(std::sqrt(max_norm), scale);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    double best = std::norm(m(rank, col));
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const double v = std::norm(m(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (std::sqrt(best) <= threshold) continue;
    if (pivot != rank) std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(rank).begin());

    const cdouble p = m(rank, col);
    const auto pivot_tail = m.row(rank).subspan(col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const cdouble entry = m(r, col);
      if (entry == cdouble{}) continue;
      simd::complex_axpy_neg(m.row(r).subspan(col), entry / p, pivot_tail);
    }
    ++rank;
  }
  return rank;
}

}  // namespace zolo
