#include "zolo/ratfun.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

#include "zolo/errors.hpp"

namespace zolo {

// ---- polynomials ----------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(Rational c, std::size_t degree) {
  std::vector<Rational> v(degree + 1, 0);
  v[degree] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Rational(-1); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const long dd = d.degree();
  if (degree() < dd) return {Polynomial{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1), 0);
  const Rational& lead = d.coeffs_.back();
  for (long i = degree(); i >= dd; --i) {
    if (sgn(rem[i]) == 0) continue;
    const Rational q = rem[i] / lead;
    quot[i - dd] = q;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= q * d.coeffs_[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::truncated(std::size_t terms) const {
  std::vector<Rational> v(coeffs_.begin(), coeffs_.begin() + std::min(terms, coeffs_.size()));
  return Polynomial(std::move(v));
}

Polynomial polynomial_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.coeffs().back());
}

const Polynomial& cyclotomic(Int d) {
  if (d < 1) throw InvalidArgument("cyclotomic index must be >= 1");
  static std::recursive_mutex mu;
  static std::map<Int, Polynomial> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  // x^d - 1 = prod_{e | d} Phi_e
  Polynomial p = Polynomial::monomial(1, static_cast<std::size_t>(d)) - Polynomial(std::vector<Rational>{1});
  for (Int e : divisors(d)) {
    if (e != d) p = p.divmod(cyclotomic(e)).first;
  }
  return cache.emplace(d, std::move(p)).first->second;
}

// ---- rational functions ---------------------------------------------------

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator) {
  if (denominator.is_zero()) throw InvalidArgument("zero denominator");
  if (numerator.is_zero()) {
    den_ = Polynomial(std::vector<Rational>{1});
    return;
  }
  const Polynomial g = polynomial_gcd(numerator, denominator);
  num_ = numerator.divmod(g).first;
  den_ = denominator.divmod(g).first;
  if (sgn(den_[0]) == 0) throw InvalidArgument("pole at the origin");
  const Rational c = Rational(1) / den_[0];
  num_ = num_ * c;
  den_ = den_ * c;
}

RationalFunction RationalFunction::operator*(const Rational& c) const { return {num_ * c, den_}; }

Series taylor(const RationalFunction& f, std::size_t terms) {
  const auto& q = f.denominator().coeffs();
  Series a(terms, 0);
  for (std::size_t k = 0; k < terms; ++k) {
    Rational v = f.numerator()[k];
    for (std::size_t i = 1; i < q.size() && i <= k; ++i) v -= q[i] * a[k - i];
    a[k] = std::move(v);
  }
  return a;
}

Series dissect(const Series& coeffs, Int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  Series out;
  for (std::size_t k = 0; k < coeffs.size(); k += static_cast<std::size_t>(n)) out.push_back(coeffs[k]);
  return out;
}

RationalFunction reconstruct(const Series& s) {
  // Berlekamp-Massey: shortest C with sum_j C_j s_{i-j} = 0 for i >= ell.
  std::vector<Rational> C{1}, B{1};
  std::size_t ell = 0, shift = 1;
  Rational b = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Rational d = s[i];
    for (std::size_t j = 1; j <= ell && j < C.size(); ++j) d += C[j] * s[i - j];
    if (sgn(d) == 0) {
      ++shift;
      continue;
    }
    const Rational coef = d / b;
    std::vector<Rational> T = C;
    if (C.size() < B.size() + shift) C.resize(B.size() + shift, 0);
    for (std::size_t j = 0; j < B.size(); ++j) C[j + shift] -= coef * B[j];
    if (2 * ell <= i) {
      ell = i + 1 - ell;
      B = std::move(T);
      b = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  if (ell == 0) return {};
  if (2 * ell + 2 > s.size()) {
    throw InsufficientTerms("recurrence of length " + std::to_string(ell) + " cannot be confirmed by " +
                            std::to_string(s.size()) + " terms");
  }
  const Polynomial den(C);
  const Polynomial num = (Polynomial(s) * den).truncated(ell);
  RationalFunction f(num, den);
  if (taylor(f, s.size()) != s) throw InsufficientTerms("reconstruction does not reproduce the prefix");
  return f;
}

RationalFunction apply_un(const RationalFunction& f, Int n, std::optional<std::size_t> terms) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  const auto deg = [](const Polynomial& p) { return static_cast<std::size_t>(std::max<long>(p.degree(), 0)); };
  std::size_t budget =
      terms.value_or(2 * (deg(f.numerator()) + deg(f.denominator()) + 4) * static_cast<std::size_t>(n));
  for (int attempt = 0;; ++attempt) {
    try {
      return reconstruct(dissect(taylor(f, budget), n));
    } catch (const InsufficientTerms&) {
      if (attempt == 4) throw;
      budget *= 2;
    }
  }
}

LevelWeightReport level_weight(const RationalFunction& f, Int max_d) {
  LevelWeightReport r;
  Polynomial den = f.denominator();
  for (Int d = 1; d <= max_d && den.degree() > 0; ++d) {
    const Polynomial& phi = cyclotomic(d);
    if (phi.degree() > den.degree()) continue;
    Int mult = 0;
    for (;;) {
      auto [q, rem] = den.divmod(phi);
      if (!rem.is_zero()) break;
      den = std::move(q);
      ++mult;
    }
    if (mult > 0) {
      r.cyclotomic_factors[d] = mult;
      r.level = lcm(r.level, d);
    }
  }
  r.residual = den * (Rational(1) / den[0]);
  if (!r.cyclotomic_factors.empty()) {
    const Int w = r.cyclotomic_factors.begin()->second;
    const bool uniform = std::ranges::all_of(r.cyclotomic_factors, [w](const auto& e) { return e.second == w; });
    if (uniform) r.weight = w;
  }
  return r;
}

namespace {

Rational int_power(Int base, Int e) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return Rational(v);
}

}  // namespace

RationalFunction from_periodic(const PeriodicSeries<Rational>& p) {
  if (p.level < 1 || p.weight < 1 || static_cast<Int>(p.coeffs.size()) != p.level) {
    throw InvalidArgument("periodic series needs level >= 1, weight >= 1 and level coefficients");
  }
  const Int L = p.level, kappa = p.weight;
  const auto terms = static_cast<std::size_t>(L * kappa);
  Series prefix(terms);
  for (std::size_t k = 0; k < terms; ++k) prefix[k] = int_power(static_cast<Int>(k), kappa - 1) * p.at(k);
  // (1 - x^L)^kappa
  Polynomial den(std::vector<Rational>{1});
  const Polynomial base = Polynomial(std::vector<Rational>{1}) - Polynomial::monomial(1, static_cast<std::size_t>(L));
  for (Int i = 0; i < kappa; ++i) den = den * base;
  return {(Polynomial(prefix) * den).truncated(terms), den};
}

PeriodicSeries<Rational> to_periodic(const RationalFunction& f, Int max_d) {
  if (f.is_zero()) return {1, 1, {Rational(0)}};
  const LevelWeightReport lw = level_weight(f, max_d);
  if (!lw.residual_is_one()) throw NotInRLkappa("denominator has poles that are not roots of unity of order <= " +
                                                std::to_string(max_d));
  if (!lw.weight) throw NotInRLkappa("poles do not share a common multiplicity");
  const Int L = lw.level, kappa = *lw.weight;
  // read a(r) at k = r + tL beyond the polynomial part, where k > 0 always
  const Int t = std::max<long>(f.numerator().degree(), 0) / L + 1;
  const Series s = taylor(f, static_cast<std::size_t>((t + 1) * L));
  PeriodicSeries<Rational> p{L, kappa, std::vector<Rational>(L)};
  for (Int r = 0; r < L; ++r) {
    const Int k = r + t * L;
    p.coeffs[r] = s[k] / int_power(k, kappa - 1);
  }
  if (!(from_periodic(p) == f)) throw NotInRLkappa("series is not of the form sum k^(kappa-1) a(k mod L) x^k");
  return p;
}

// ---- text format ----------------------------------------------------------

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  return s;
}

bool wrapped(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
    if (depth == 0 && i + 1 < s.size()) return false;
  }
  return true;
}

std::string unwrap(std::string s) {
  while (wrapped(s)) s = s.substr(1, s.size() - 2);
  return s;
}

mpz_class parse_digits(const std::string& s, std::size_t& i) {
  const std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw InvalidArgument("expected digits at position " + std::to_string(start) + " in '" + s + "'");
  return mpz_class(s.substr(start, i - start));
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
  const std::string s = unwrap(strip_spaces(text));
  if (s.empty()) throw InvalidArgument("empty polynomial");
  std::map<std::size_t, Rational> terms;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw InvalidArgument("expected '+' or '-' at position " + std::to_string(i) + " in '" + s + "'");
    }
    first = false;
    Rational coeff = 1;
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      mpz_class p = parse_digits(s, i);
      mpz_class q = 1;
      if (i < s.size() && s[i] == '/') {
        ++i;
        q = parse_digits(s, i);
        if (q == 0) throw InvalidArgument("zero denominator in coefficient");
      }
      coeff = Rational(p, q);
      coeff.canonicalize();
      have_coeff = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    std::size_t degree = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const mpz_class e = parse_digits(s, i);
        if (!e.fits_ulong_p() || e > 100000) throw InvalidArgument("exponent too large");
        degree = e.get_ui();
      }
    } else if (!have_coeff) {
      throw InvalidArgument("expected a term at position " + std::to_string(i) + " in '" + s + "'");
    }
    terms[degree] += sign * coeff;
  }
  std::vector<Rational> v(terms.empty() ? 0 : terms.rbegin()->first + 1, 0);
  for (auto& [d, c] : terms) v[d] = c;
  return Polynomial(std::move(v));
}

RationalFunction parse_rational_function(std::string_view text) {
  const std::string s = strip_spaces(text);
  // the top-level division is the '/' followed by '(' at depth 0
  int depth = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && s[i] == '/' && s[i + 1] == '(') {
      return {parse_polynomial(s.substr(0, i)), parse_polynomial(s.substr(i + 1))};
    }
  }
  return {parse_polynomial(s), Polynomial(std::vector<Rational>{1})};
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < p.coeffs().size(); ++d) {
    Rational c = p.coeffs()[d];
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (d == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << "*";
    out << "x";
    if (d > 1) out << "^" << d;
  }
  return out.str();
}

std::string format_rational_function(const RationalFunction& f) {
  return "(" + format_polynomial(f.numerator()) + ") / (" + format_polynomial(f.denominator()) + ")";
}

}  // namespace zolo
