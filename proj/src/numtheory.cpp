#include "zolo/numtheory.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zolo/errors.hpp"

namespace zolo {

namespace {

void require_positive(Int n, const char* what) {
  if (n < 1) throw InvalidArgument(std::string(what) + " must be >= 1, got " + std::to_string(n));
}

Int mul_mod(Int a, Int b, Int mod) {
  return static_cast<Int>((static_cast<__int128>(a) * b) % mod);
}

Int reduce(Int a, Int mod) {
  Int r = a % mod;
  return r < 0 ? r + mod : r;
}

}  // namespace

std::vector<PrimePower> factorize(Int n) {
  require_positive(n, "factorize: n");
  std::vector<PrimePower> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

std::vector<Int> divisors(Int n) {
  require_positive(n, "divisors: n");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Int gcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

Int pow_mod(Int base, Int exp, Int mod) {
  if (mod < 1) throw InvalidArgument("pow_mod: modulus must be >= 1");
  if (exp < 0) throw InvalidArgument("pow_mod: negative exponent");
  Int result = 1 % mod;
  base = reduce(base, mod);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

std::optional<Int> mod_inverse(Int a, Int mod) {
  if (mod == 1) return 0;
  Int old_r = reduce(a, mod), r = mod;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
  }
  if (old_r != 1) return std::nullopt;
  return reduce(old_s, mod);
}

Int mobius(Int n) {
  require_positive(n, "mobius: n");
  Int sign = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

Int euler_phi(Int n) {
  require_positive(n, "euler_phi: n");
  Int phi = 1;
  for (const auto& pp : factorize(n)) phi *= (pp.prime - 1) * (pp.value / pp.prime);
  return phi;
}

Int mult_order(Int n, Int L) {
  require_positive(L, "mult_order: L");
  if (gcd(n, L) != 1) {
    throw OrderUndefined("ord_" + std::to_string(L) + "(" + std::to_string(n) + ") undefined: gcd > 1");
  }
  if (L == 1) return 1;
  Int order = euler_phi(L);
  for (const auto& pp : factorize(order)) {
    while (order % pp.prime == 0 && pow_mod(n, order / pp.prime, L) == 1) order /= pp.prime;
  }
  return order;
}

SimplifiedLevel simplified_level(Int L, Int n) {
  require_positive(L, "simplified_level: L");
  require_positive(n, "simplified_level: n");

  Int stripped = L;
  for (const auto& pp : factorize(L)) {
    if (n % pp.prime == 0) stripped /= pp.value;
  }

  SimplifiedLevel out{L, 0, {L}};
  for (Int g = gcd(out.value, n); g > 1; g = gcd(out.value, n)) {
    out.value /= g;
    ++out.depth;
    out.chain.push_back(out.value);
  }
  if (out.value != stripped) {
    throw InternalFormulaViolation("simplified_level(" + std::to_string(L) + ", " + std::to_string(n) +
                                   "): prime stripping and quotient recursion disagree");
  }
  return out;
}

std::vector<Int> unitary_divisors(Int L) {
  require_positive(L, "unitary_divisors: L");
  std::vector<Int> out;
  for (Int d : divisors(L)) {
    if (gcd(d, L / d) == 1) out.push_back(d);
  }
  return out;
}

std::vector<Int> primes_up_to(Int bound) {
  if (bound < 2) return {};
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  std::vector<Int> primes;
  for (Int p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (Int q = p * p; q <= bound; q += p) composite[q] = true;
  }
  return primes;
}

std::vector<Int> gcd_power_minus_one_table(Int n, Int max_d, Int L) {
  require_positive(L, "gcd_power_minus_one: L");
  if (n < 0) throw InvalidArgument("gcd_power_minus_one: n must be >= 0");
  std::vector<Int> out(static_cast<std::size_t>(std::max<Int>(max_d, 0)) + 1, 0);

  constexpr __int128 kLimit = static_cast<__int128>(1) << 126;
  __int128 power = 1;
  bool small = true;
  mpz_class big;
  mpz_class scratch;
  for (Int d = 1; d <= max_d; ++d) {
    if (small && n != 0 && power > kLimit / n) {
      small = false;
      big = mpz_class(static_cast<unsigned long>(power >> 64));
      big <<= 64;
      big += mpz_class(static_cast<unsigned long>(power & 0xFFFFFFFFFFFFFFFFULL));
    }
    if (small) {
      power *= n;
      __int128 v = power - 1;
      if (v < 0) v = -v;
      out[d] = static_cast<Int>(v == 0 ? L : gcd(static_cast<Int>(v % L), L));
    } else {
      big *= static_cast<unsigned long>(n);
      scratch = big - 1;
      out[d] = static_cast<Int>(mpz_gcd_ui(nullptr, scratch.get_mpz_t(), static_cast<unsigned long>(L)));
    }
  }
  return out;
}

Int gcd_power_minus_one(Int n, Int d, Int L) {
  require_positive(d, "gcd_power_minus_one: d");
  require_positive(L, "gcd_power_minus_one: L");
  if (n < 0) throw InvalidArgument("gcd_power_minus_one: n must be >= 0");
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(d));
  power -= 1;
  return static_cast<Int>(mpz_gcd_ui(nullptr, power.get_mpz_t(), static_cast<unsigned long>(L)));
}

// ---------------------------------------------------------------------------
// Unit group and characters

Int UnitGroupDecomp::group_order() const {
  Int order = 1;
  for (Int o : orders) order *= o;
  return order;
}

Int UnitGroupDecomp::exponent() const {
  Int e = 1;
  for (Int o : orders) e = lcm(e, o);
  return e;
}

bool UnitGroupDecomp::is_unit(Int r) const { return gcd(reduce(r, modulus), modulus) == 1; }

namespace {

// Local generators of (Z/qZ)^* for a prime power q = p^k, with their orders.
std::vector<std::pair<Int, Int>> local_generators(const PrimePower& pp) {
  const Int q = pp.value;
  if (pp.prime == 2) {
    if (pp.exponent == 1) return {};
    if (pp.exponent == 2) return {{3, 2}};
    return {{q - 1, 2}, {5, q / 4}};
  }
  const Int phi = (pp.prime - 1) * (q / pp.prime);
  for (Int g = 2; g < q; ++g) {
    if (g % pp.prime != 0 && mult_order(g, q) == phi) return {{g, phi}};
  }
  throw InternalFormulaViolation("no primitive root modulo " + std::to_string(q));
}

}  // namespace

UnitGroupDecomp unit_group(Int L) {
  require_positive(L, "unit_group: L");
  UnitGroupDecomp group;
  group.modulus = L;
  for (const auto& pp : factorize(L)) {
    const Int q = pp.value;
    const Int cofactor = L / q;
    const Int inv = *mod_inverse(cofactor, q);
    for (auto [g, order] : local_generators(pp)) {
      // x == g (mod q), x == 1 (mod L/q)
      Int t = mul_mod(reduce(g - 1, q), inv, q);
      group.generators.push_back(reduce(1 + cofactor * t, L));
      group.orders.push_back(order);
    }
  }

  group.log.assign(static_cast<std::size_t>(L), {});
  std::vector<bool> seen(static_cast<std::size_t>(L), false);
  const std::size_t rank = group.generators.size();
  std::vector<Int> exps(rank, 0);
  Int count = 0;
  while (true) {
    Int r = 1 % L;
    for (std::size_t i = 0; i < rank; ++i) r = mul_mod(r, pow_mod(group.generators[i], exps[i], L), L);
    if (seen[r]) throw InternalFormulaViolation("unit group decomposition is not a direct product");
    seen[r] = true;
    group.log[r] = exps;
    ++count;
    std::size_t i = 0;
    while (i < rank && ++exps[i] == group.orders[i]) exps[i++] = 0;
    if (i == rank) break;
  }
  if (count != euler_phi(L)) throw InternalFormulaViolation("unit group order mismatch");
  return group;
}

bool Character::vanishes_at(Int k) const { return values[reduce(k, modulus)] < 0; }

Int Character::exponent_at(Int k) const { return values[reduce(k, modulus)]; }

std::complex<double> Character::value(Int k) const {
  Int e = exponent_at(k);
  if (e < 0) return {0.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(order));
}

CharacterTable characters_mod(Int L) {
  CharacterTable table{unit_group(L), {}};
  const auto& group = table.group;
  const Int e = group.exponent();
  const Int count = group.group_order();
  const std::size_t rank = group.generators.size();

  table.characters.reserve(static_cast<std::size_t>(count));
  for (Int index = 0; index < count; ++index) {
    // mixed radix digits, first generator least significant
    std::vector<Int> digits(rank);
    Int rest = index;
    for (std::size_t i = 0; i < rank; ++i) {
      digits[i] = rest % group.orders[i];
      rest /= group.orders[i];
    }
    Character chi;
    chi.modulus = L;
    chi.order = e;
    chi.index = index;
    chi.values.assign(static_cast<std::size_t>(L), -1);
    for (Int r = 0; r < L; ++r) {
      if (!group.is_unit(r)) continue;
      Int exp = 0;
      for (std::size_t i = 0; i < rank; ++i) {
        exp = (exp + group.log[r][i] % e * digits[i] % e * (e / group.orders[i])) % e;
      }
      chi.values[r] = exp;
    }
    table.characters.push_back(std::move(chi));
  }
  return table;
}

}  // namespace zolo
