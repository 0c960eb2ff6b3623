#pragma once

// Simultaneous eigenfunctions of every U_n: the sets C(f), the eigenvalue
// maps omega_f, and the character-series basis of V(L, kappa).

#include <optional>
#include <string>
#include <vector>

#include "zolo/numtheory.hpp"
#include "zolo/scalars.hpp"
#include "zolo/specop.hpp"

namespace zolo {

/// sum_k k^(kappa-1) chi(k) x^k for a Dirichlet character chi mod `modulus`.
struct CharacterSeries {
  Int modulus = 1;
  Int index = 0;
  Int kappa = 1;
  Character chi;

  PeriodicSeries<RootOfUnity> series() const;
  /// Coefficients a(k mod L) for a multiple L of the modulus.
  std::vector<cdouble> complex_coeffs_at(Int L) const;
};

struct VBasisReport {
  Int L = 1;
  Int kappa = 1;
  std::vector<Int> moduli;  // A_L
  std::vector<CharacterSeries> members;
  Int dim_product = 0;  // prod (phi(q_i) + 1) over prime powers q_i || L
  Int dim_sum = 0;      // sum_{M in A_L} phi(M)
  Int dim_rank = 0;
};

/// Throws InternalTheoremViolation when the dimension counts disagree.
VBasisReport v_basis(Int L, Int kappa, double tol = kDefaultRankTolerance);

/// dim V(L, kappa) from the prime factorization alone.
Int v_dimension(Int L);

struct CSetEntry {
  Int n;
  std::optional<RootExponent> omega;  // nullopt: U_n f = 0
};

struct CSetReport {
  Int n_max = 0;
  std::vector<CSetEntry> entries;  // ascending n; only members of C(f)
  std::vector<std::string> closure_failures;

  bool contains(Int n) const;
  const CSetEntry* find(Int n) const;
  bool closed() const { return closure_failures.empty(); }
};

/// C(f) restricted to [1, n_max] with omega_f, plus the closure checks
/// n, m in C => n m in C and m + L in C (where in range).
template <typename Scalar>
CSetReport c_set(const PeriodicSeries<Scalar>& f, Int n_max);

struct CharacterMatch {
  Int modulus;
  Int index;
};

struct MatchResult {
  std::optional<CharacterMatch> match;
  std::string diagnostic;
};

/// The Dirichlet character mod minimal_level(f) agreeing with omega_f on units.
template <typename Scalar>
MatchResult match_character(const PeriodicSeries<Scalar>& f, Int n_max);

// ---------------------------------------------------------------------------

namespace detail {

void check_closure(CSetReport& report, Int L);
MatchResult match_omega(const CSetReport& report, Int minimal_level);

}  // namespace detail

template <typename Scalar>
CSetReport c_set(const PeriodicSeries<Scalar>& f, Int n_max) {
  CSetReport report;
  report.n_max = n_max;
  if (f.is_zero_series()) return report;
  for (Int n = 1; n <= n_max; ++n) {
    bool image_zero = true;
    for (Int k = 0; k < f.level && image_zero; ++k) {
      image_zero = is_zero(f.at(static_cast<Int>(static_cast<__int128>(n) * k % f.level)));
    }
    if (image_zero) {
      report.entries.push_back({n, std::nullopt});
    } else if (auto w = verify_eigen(f, n)) {
      report.entries.push_back({n, *w});
    }
  }
  detail::check_closure(report, f.level);
  return report;
}

template <typename Scalar>
MatchResult match_character(const PeriodicSeries<Scalar>& f, Int n_max) {
  if (f.is_zero_series()) return {std::nullopt, "zero series"};
  const CSetReport report = c_set(f, n_max);
  for (Int n = 1; n <= n_max; ++n) {
    if (!report.contains(n)) return {std::nullopt, "not an eigenfunction of U_" + std::to_string(n)};
  }
  return detail::match_omega(report, f.minimal_level());
}

}  // namespace zolo
