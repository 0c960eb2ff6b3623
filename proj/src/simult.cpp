#include "zolo/simult.hpp"

#include <algorithm>

#include "zolo/errors.hpp"
#include "zolo/linalg.hpp"

namespace zolo {

PeriodicSeries<RootOfUnity> CharacterSeries::series() const {
  PeriodicSeries<RootOfUnity> f{modulus, kappa, {}};
  f.coeffs.reserve(modulus);
  for (Int k = 0; k < modulus; ++k) {
    f.coeffs.push_back(chi.vanishes_at(k) ? RootOfUnity::zero_value(chi.order)
                                          : RootOfUnity{chi.order, chi.exponent_at(k), false});
  }
  return f;
}

std::vector<cdouble> CharacterSeries::complex_coeffs_at(Int L) const {
  if (L % modulus != 0) throw InvalidArgument("level must be a multiple of the character modulus");
  std::vector<cdouble> out(L);
  for (Int k = 0; k < L; ++k) out[k] = chi.value(k % modulus);
  return out;
}

Int v_dimension(Int L) {
  Int dim = 1;
  for (const auto& q : factorize(L)) dim *= euler_phi(q.value) + 1;
  return dim;
}

VBasisReport v_basis(Int L, Int kappa, double tol) {
  if (L < 1) throw InvalidArgument("L must be >= 1");
  if (kappa < 1) throw InvalidArgument("kappa must be >= 1");
  VBasisReport r;
  r.L = L;
  r.kappa = kappa;
  r.moduli = unitary_divisors(L);
  r.dim_product = v_dimension(L);
  ComplexMatrix stacked;
  for (Int M : r.moduli) {
    r.dim_sum += euler_phi(M);
    for (const Character& chi : characters_mod(M).characters) {
      CharacterSeries s{M, chi.index, kappa, chi};
      stacked.append_row(s.complex_coeffs_at(L));
      r.members.push_back(std::move(s));
    }
  }
  r.dim_rank = static_cast<Int>(rank(stacked, tol));
  const Int count = static_cast<Int>(r.members.size());
  if (r.dim_product != r.dim_sum || r.dim_sum != count || count != r.dim_rank) {
    throw InternalTheoremViolation("dim V(" + std::to_string(L) + ") counts disagree: product " +
                                   std::to_string(r.dim_product) + ", sum " + std::to_string(r.dim_sum) +
                                   ", members " + std::to_string(count) + ", rank " + std::to_string(r.dim_rank));
  }
  return r;
}

bool CSetReport::contains(Int n) const { return find(n) != nullptr; }

const CSetEntry* CSetReport::find(Int n) const {
  auto it = std::ranges::lower_bound(entries, n, {}, &CSetEntry::n);
  return it != entries.end() && it->n == n ? &*it : nullptr;
}

namespace detail {

namespace {

bool same_omega(const std::optional<RootExponent>& a, const std::optional<RootExponent>& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

std::optional<RootExponent> times(const std::optional<RootExponent>& a, const std::optional<RootExponent>& b) {
  if (!a || !b) return std::nullopt;
  return *a * *b;
}

}  // namespace

void check_closure(CSetReport& report, Int L) {
  for (const auto& a : report.entries) {
    for (const auto& b : report.entries) {
      if (b.n > report.n_max / a.n) break;
      const CSetEntry* ab = report.find(a.n * b.n);
      if (!ab) {
        report.closure_failures.push_back(std::to_string(a.n * b.n) + " missing from C(f)");
      } else if (!same_omega(ab->omega, times(a.omega, b.omega))) {
        report.closure_failures.push_back("omega(" + std::to_string(a.n * b.n) + ") is not multiplicative");
      }
    }
    if (a.n + L <= report.n_max) {
      const CSetEntry* shifted = report.find(a.n + L);
      if (!shifted) {
        report.closure_failures.push_back(std::to_string(a.n + L) + " missing from C(f)");
      } else if (!same_omega(shifted->omega, a.omega)) {
        report.closure_failures.push_back("omega(" + std::to_string(a.n + L) + ") differs from omega(" +
                                          std::to_string(a.n) + ")");
      }
    }
  }
}

MatchResult match_omega(const CSetReport& report, Int minimal_level) {
  const CharacterTable table = characters_mod(minimal_level);
  const Int checked = std::min(report.n_max, minimal_level);
  if (checked < minimal_level) {
    return {std::nullopt, "n_max " + std::to_string(report.n_max) + " does not cover the units mod " +
                              std::to_string(minimal_level)};
  }
  for (const Character& chi : table.characters) {
    bool ok = true;
    for (Int n = 1; n <= checked && ok; ++n) {
      if (chi.vanishes_at(n)) continue;
      const CSetEntry* e = report.find(n);
      ok = e && e->omega && *e->omega == RootExponent::make(chi.exponent_at(n), chi.order);
    }
    if (ok) return {CharacterMatch{minimal_level, chi.index}, ""};
  }
  return {std::nullopt, "omega_f matches no character mod " + std::to_string(minimal_level)};
}

}  // namespace detail

}  // namespace zolo
