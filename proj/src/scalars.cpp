#include "zolo/scalars.hpp"

#include <cmath>
#include <numbers>

#include "zolo/errors.hpp"

namespace zolo {

RootExponent RootExponent::make(Int numerator, Int order) {
  if (order < 1) throw InvalidArgument("root of unity order must be >= 1");
  numerator %= order;
  if (numerator < 0) numerator += order;
  const Int g = gcd(numerator, order);
  return {numerator / g, order / g};
}

std::complex<double> RootExponent::value() const {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(numerator) / static_cast<double>(order));
}

RootExponent RootExponent::operator*(const RootExponent& o) const {
  const Int common = lcm(order, o.order);
  return make(numerator * (common / order) + o.numerator * (common / o.order), common);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  const Int common = lcm(order, o.order);
  if (zero || o.zero) return zero_value(common);
  return {common, (exponent * (common / order) + o.exponent * (common / o.order)) % common, false};
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) { return same_value(a, b); }

std::complex<double> to_complex(const RootOfUnity& a) { return a.zero ? std::complex<double>{} : a.as_exponent().value(); }

std::complex<double> to_complex(const mpq_class& a) { return {a.get_d(), 0.0}; }

std::optional<RootExponent> unit_ratio(const RootOfUnity& top, const RootOfUnity& bottom) {
  if (bottom.zero || top.zero) return std::nullopt;
  const Int common = lcm(top.order, bottom.order);
  return RootExponent::make(top.exponent * (common / top.order) - bottom.exponent * (common / bottom.order), common);
}

std::optional<RootExponent> unit_ratio(const mpq_class& top, const mpq_class& bottom) {
  if (sgn(bottom) == 0 || sgn(top) == 0) return std::nullopt;
  if (top == bottom) return RootExponent{0, 1};
  if (top == -bottom) return RootExponent{1, 2};
  return std::nullopt;
}

std::optional<RootExponent> unit_ratio(const std::complex<double>& top, const std::complex<double>& bottom) {
  constexpr double kTol = 1e-9;
  if (std::abs(bottom) <= kTol || std::abs(top) <= kTol) return std::nullopt;
  const std::complex<double> w = top / bottom;
  if (std::abs(std::abs(w) - 1.0) > kTol) return std::nullopt;
  double turns = std::arg(w) / (2.0 * std::numbers::pi);
  if (turns < 0) turns += 1.0;
  // Smallest denominator reproducing the angle; orders here stay far below 1e5.
  for (Int q = 1; q <= 100000; ++q) {
    const double scaled = turns * static_cast<double>(q);
    const double p = std::round(scaled);
    if (std::abs(scaled - p) <= kTol * static_cast<double>(q)) return RootExponent::make(static_cast<Int>(p), q);
  }
  return std::nullopt;
}

RootOfUnity scale_by(const RootOfUnity& x, Int k) {
  if (k != 1) throw InvalidArgument("exponent form cannot carry a weight factor other than 1");
  return x;
}

mpq_class scale_by(const mpq_class& x, Int k) { return x * mpq_class(mpz_class(static_cast<long>(k))); }

std::complex<double> scale_by(const std::complex<double>& x, Int k) { return x * static_cast<double>(k); }

bool same_value(const RootOfUnity& a, const RootOfUnity& b) {
  if (a.zero || b.zero) return a.zero == b.zero;
  return a.as_exponent() == b.as_exponent();
}

bool same_value(const mpq_class& a, const mpq_class& b) { return a == b; }

bool same_value(const std::complex<double>& a, const std::complex<double>& b, double tol) {
  return std::abs(a - b) <= tol;
}

}  // namespace zolo
