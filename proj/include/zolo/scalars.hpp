#pragma once

// Scalar carriers for periodic coefficient sequences: exact rationals
// (mpq_class), roots of unity in exponent form, and complex doubles.

#include <gmpxx.h>

#include <complex>
#include <optional>

#include "zolo/numtheory.hpp"

namespace zolo {

/// e^{2 pi i numerator / order}, kept reduced with 0 <= numerator < order.
struct RootExponent {
  Int numerator = 0;
  Int order = 1;

  static RootExponent make(Int numerator, Int order);
  std::complex<double> value() const;
  RootExponent operator*(const RootExponent& o) const;
  friend bool operator==(const RootExponent&, const RootExponent&) = default;
};

/// Either zero or a root of unity e^{2 pi i exponent / order}.
struct RootOfUnity {
  Int order = 1;
  Int exponent = 0;
  bool zero = false;

  static RootOfUnity zero_value(Int order = 1) { return {order, 0, true}; }
  static RootOfUnity one(Int order = 1) { return {order, 0, false}; }
  static RootOfUnity from(const RootExponent& e) { return {e.order, e.numerator, false}; }

  RootExponent as_exponent() const { return RootExponent::make(exponent, order); }
  RootOfUnity operator*(const RootOfUnity& o) const;
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);
};

inline bool is_zero(const RootOfUnity& a) { return a.zero; }
inline bool is_zero(const mpq_class& a) { return sgn(a) == 0; }
inline bool is_zero(const std::complex<double>& a, double tol = 1e-9) { return std::abs(a) <= tol; }

std::complex<double> to_complex(const RootOfUnity& a);
std::complex<double> to_complex(const mpq_class& a);
inline std::complex<double> to_complex(const std::complex<double>& a) { return a; }

/// The root of unity w with top == w * bottom (bottom nonzero), when one exists.
std::optional<RootExponent> unit_ratio(const RootOfUnity& top, const RootOfUnity& bottom);
std::optional<RootExponent> unit_ratio(const mpq_class& top, const mpq_class& bottom);
std::optional<RootExponent> unit_ratio(const std::complex<double>& top, const std::complex<double>& bottom);

/// x * k for an integer weight factor k. Exponent form only admits k = 1.
RootOfUnity scale_by(const RootOfUnity& x, Int k);
mpq_class scale_by(const mpq_class& x, Int k);
std::complex<double> scale_by(const std::complex<double>& x, Int k);

bool same_value(const RootOfUnity& a, const RootOfUnity& b);
bool same_value(const mpq_class& a, const mpq_class& b);
bool same_value(const std::complex<double>& a, const std::complex<double>& b, double tol = 1e-9);

}  // namespace zolo
