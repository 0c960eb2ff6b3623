#pragma once

// Rational functions over Q analytic at the origin, their Taylor expansions,
// series dissection, and reconstruction from coefficient prefixes.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zolo/numtheory.hpp"
#include "zolo/specop.hpp"

namespace zolo {

using Rational = mpq_class;
using Series = std::vector<Rational>;

/// Dense polynomial, coefficient i multiplies x^i; no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial monomial(Rational c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  /// Quotient and remainder; throws on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial truncated(std::size_t terms) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial polynomial_gcd(Polynomial a, Polynomial b);

/// The d-th cyclotomic polynomial.
const Polynomial& cyclotomic(Int d);

/// numerator / denominator, reduced, with denominator(0) = 1.
class RationalFunction {
 public:
  RationalFunction() : den_(std::vector<Rational>{1}) {}
  /// Throws InvalidArgument when the reduced denominator vanishes at 0.
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator*(const Rational& c) const;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  Polynomial num_;
  Polynomial den_;
};

Series taylor(const RationalFunction& f, std::size_t terms);

/// out[k] = in[n k], length floor((len - 1) / n) + 1.
Series dissect(const Series& coeffs, Int n);

/// Minimal rational function reproducing coeffs, via the shortest linear
/// recurrence (Berlekamp-Massey over Q). Throws InsufficientTerms when the
/// recurrence is too long to be confirmed by the prefix.
RationalFunction reconstruct(const Series& coeffs);

/// U_n f as a rational function. `terms` overrides the automatic budget
/// 2 (deg num + deg den + 4) n; the budget doubles up to 4 times on failure.
RationalFunction apply_un(const RationalFunction& f, Int n, std::optional<std::size_t> terms = std::nullopt);

inline constexpr Int kDefaultCyclotomicBound = 200;

struct LevelWeightReport {
  Int level = 1;
  std::optional<Int> weight;               // common multiplicity, when uniform
  std::map<Int, Int> cyclotomic_factors;  // d -> multiplicity of Phi_d
  Polynomial residual;                     // leftover factor, normalized to residual(0) = 1
  bool residual_is_one() const { return residual == Polynomial(std::vector<Rational>{1}); }
};

LevelWeightReport level_weight(const RationalFunction& f, Int max_d = kDefaultCyclotomicBound);

/// Periodic part a(k) of f = sum k^(kappa-1) a(k mod L) x^k. Throws NotInRLkappa.
PeriodicSeries<Rational> to_periodic(const RationalFunction& f, Int max_d = kDefaultCyclotomicBound);
RationalFunction from_periodic(const PeriodicSeries<Rational>& p);

/// Parses "p(x) / q(x)" with sparse terms such as "3/2*x^4 - x + 7".
/// A bare polynomial means denominator 1.
RationalFunction parse_rational_function(std::string_view text);
Polynomial parse_polynomial(std::string_view text);

std::string format_polynomial(const Polynomial& p);
std::string format_rational_function(const RationalFunction& f);

}  // namespace zolo
