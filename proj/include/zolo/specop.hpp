#pragma once

// The dissection operator U_n restricted to R(L, kappa), the space of series
// sum_k k^(kappa-1) a(k) x^k with a(k + L) = a(k). On that space U_n acts on
// the periodic part as a(k) -> n^(kappa-1) a(n k mod L).

#include <optional>
#include <string>
#include <vector>

#include "zolo/errors.hpp"
#include "zolo/linalg.hpp"
#include "zolo/scalars.hpp"
#include "zolo/zgraph.hpp"

namespace zolo {

template <typename Scalar>
struct PeriodicSeries {
  Int level = 1;
  Int weight = 1;
  std::vector<Scalar> coeffs;  // a(0), ..., a(level - 1)

  const Scalar& at(Int k) const {
    Int r = k % level;
    return coeffs[r < 0 ? r + level : r];
  }

  /// Least period of the coefficient sequence (a divisor of level).
  Int minimal_level() const {
    for (Int p : divisors(level)) {
      bool periodic = true;
      for (Int k = p; k < level && periodic; ++k) periodic = same_value(coeffs[k], coeffs[k % p]);
      if (periodic) return p;
    }
    return level;
  }

  bool is_zero_series() const {
    for (const auto& c : coeffs) {
      if (!is_zero(c)) return false;
    }
    return true;
  }
};

/// U_n on R(L, kappa) as an L x L matrix with a single nonzero per row:
/// row k holds n^(kappa-1) in column n k mod L.
struct OperatorMatrix {
  Int n = 1;
  Int L = 1;
  Int kappa = 1;
  Int scale = 1;            // n^(kappa-1)
  std::vector<Int> column;  // column[k] = n k mod L

  ComplexMatrix dense() const;

  template <typename Scalar>
  PeriodicSeries<Scalar> apply(const PeriodicSeries<Scalar>& f) const;
};

OperatorMatrix operator_matrix(Int n, Int L, Int kappa);

/// n^(kappa-1), overflow-checked.
Int weight_scale(Int n, Int kappa);

struct KernelReport {
  Int n, L, kappa;
  Int dim;                      // L - L / gcd(n, L)
  std::optional<Int> dim_rank;  // numeric nullity of the operator matrix
  std::vector<Int> leaves;      // basis: indicator vectors of these residues
  std::vector<PeriodicSeries<mpq_class>> basis() const;
};

KernelReport kernel(Int n, Int L, Int kappa, bool numeric = true, double tol = kDefaultRankTolerance);

/// F_{omega, L, kappa, n, r}: coefficient omega^(-d(i, r)) on nodes that reach r,
/// zero elsewhere; omega = e^{2 pi i / m}.
struct EigenBasisFunction {
  Int n, L, kappa, m;
  Int root;
  Int cycle_length;
  std::vector<Int> coeff_exponents;  // exponent mod m, -1 for zero

  PeriodicSeries<RootOfUnity> series() const;
  std::vector<cdouble> complex_coeffs() const;
};

struct EigenReport {
  Int n, L, Ln, kappa, m;
  Int dim_formula;              // sum_j b_{j m}
  std::optional<Int> dim_rank;  // nullity of M - n^(kappa-1) omega I
  std::vector<EigenBasisFunction> basis;
};

EigenReport eigenbasis(Int n, Int L, Int kappa, Int m, bool numeric = true, double tol = kDefaultRankTolerance);

/// E_n(omega, L) and E_n(omega, L_n) have equal dimension and the level-L_n
/// basis, extended periodically, lies in the span of the level-L basis.
bool level_reduction_check(Int n, Int L, Int kappa, Int m, double tol = kDefaultRankTolerance);

/// dim S_n(L, kappa) = L_n; cross-checked against sum_{m | c} phi(m) dim E_n(omega_m).
Int s_dimension(Int n, Int L, Int kappa);

struct DiagonalizabilityReport {
  Int n, L;
  bool dims_fill_space;     // dim S + dim ker = L
  bool level_identity;      // L / gcd(L, n) = L_n
  bool no_branches;
  bool n_is_root;
  bool unit_height;         // H(1) = 1, or gcd(n, L) = 1
  bool verdict;
};

DiagonalizabilityReport diagonalizable(Int n, Int L);

struct SpectrumWitness {
  Int L;
  Int m;
  Int order;  // ord_L(n) = N * m
  Int scale;  // n^(kappa-1)
};

/// Smallest L <= bound with gcd(n, L) = 1 and N | ord_L(n). nullopt means
/// inconclusive below the bound.
std::optional<SpectrumWitness> spectrum_search(Int n, Int N, Int kappa, Int bound);

/// Returns w when a(n k mod L) = w a(k) for every k with w a root of unity.
template <typename Scalar>
std::optional<RootExponent> verify_eigen(const PeriodicSeries<Scalar>& f, Int n);

struct ArtinRow {
  Int p;
  bool qualifies;
  Int order;  // ord_p(n)
};

struct ArtinReport {
  Int n;
  Int bound;
  std::vector<ArtinRow> rows;
  std::vector<Int> primes;  // qualifying
  Int scanned = 0;
  double density = 0.0;
};

/// Odd primes p <= bound with p not dividing n: b_{p-1} = 1 from the cycle
/// formula must agree with ord_p(n) = p - 1.
ArtinReport artin_scan(Int n, Int bound);

struct PhiImageWitness {
  Int p;          // prime with p == 1 (mod N), or 1 for N = 1
  Int primitive;  // primitive root mod p
  Int n;          // primitive^((p-1)/N) mod p, of order N
  Int order;
};

std::optional<PhiImageWitness> phi_image_eigenvalue_check(Int N, Int bound);

bool in_phi_image(Int N);

// ---------------------------------------------------------------------------

template <typename Scalar>
PeriodicSeries<Scalar> OperatorMatrix::apply(const PeriodicSeries<Scalar>& f) const {
  if (f.level != L) throw InvalidArgument("operator level does not match series level");
  PeriodicSeries<Scalar> out{L, f.weight, {}};
  out.coeffs.reserve(L);
  for (Int k = 0; k < L; ++k) out.coeffs.push_back(scale_by(f.coeffs[column[k]], scale));
  return out;
}

template <typename Scalar>
std::optional<RootExponent> verify_eigen(const PeriodicSeries<Scalar>& f, Int n) {
  std::optional<RootExponent> omega;
  bool image_nonzero = false;
  for (Int k = 0; k < f.level; ++k) {
    const Scalar& source = f.coeffs[k];
    const Scalar& image = f.at(static_cast<Int>(static_cast<__int128>(n) * k % f.level));
    if (is_zero(source)) {
      if (!is_zero(image)) return std::nullopt;
      continue;
    }
    if (is_zero(image)) return std::nullopt;
    image_nonzero = true;
    auto w = unit_ratio(image, source);
    if (!w) return std::nullopt;
    if (omega && !(*omega == *w)) return std::nullopt;
    omega = w;
  }
  if (!image_nonzero) return std::nullopt;
  return omega;
}

}  // namespace zolo
