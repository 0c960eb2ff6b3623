#pragma once

// Elementary number theory on desk-scale integers: factorization by trial
// division, arithmetic functions, multiplicative orders, the simplified
// level L_n, unitary divisors, unit-group decomposition and Dirichlet
// characters in exponent form.

#include <complex>
#include <optional>
#include <cstdint>
#include <utility>
#include <vector>

namespace zolo {

using Int = std::int64_t;

struct PrimePower {
  Int prime;
  int exponent;
  Int value;  // prime^exponent
};

std::vector<PrimePower> factorize(Int n);
std::vector<Int> divisors(Int n);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
Int pow_mod(Int base, Int exp, Int mod);
std::optional<Int> mod_inverse(Int a, Int mod);

Int mobius(Int n);
Int euler_phi(Int n);

/// Least c >= 1 with n^c == 1 (mod L). Throws OrderUndefined when gcd(n, L) > 1.
Int mult_order(Int n, Int L);

struct SimplifiedLevel {
  Int value;               // L_n
  int depth;               // recursion steps x_0 = L -> ... -> x_h = L_n
  std::vector<Int> chain;  // x_0, x_1, ..., x_h
};

/// L_n, the largest divisor of L coprime to n. Computed by prime stripping
/// and by the quotient recursion x_{j+1} = x_j / gcd(x_j, n); the two must agree.
SimplifiedLevel simplified_level(Int L, Int n);

/// Divisors d of L with gcd(d, L/d) = 1, ascending.
std::vector<Int> unitary_divisors(Int L);

std::vector<Int> primes_up_to(Int bound);

/// gcd(n^d - 1, L), evaluating n^d - 1 exactly (128-bit, then GMP).
Int gcd_power_minus_one(Int n, Int d, Int L);

/// gcd(n^d - 1, L) for d = 1..max_d (index 0 unused), built incrementally.
std::vector<Int> gcd_power_minus_one_table(Int n, Int max_d, Int L);

/// (Z/LZ)^* as a direct product of cyclic groups generated by `generators`.
struct UnitGroupDecomp {
  Int modulus = 1;
  std::vector<Int> generators;
  std::vector<Int> orders;
  // Discrete logarithms: log[r] holds exponents of r over the generators,
  // empty when gcd(r, modulus) > 1.
  std::vector<std::vector<Int>> log;

  Int group_order() const;
  Int exponent() const;  // lcm of the orders
  bool is_unit(Int r) const;
};

UnitGroupDecomp unit_group(Int L);

/// Dirichlet character stored as exponents of e^{2 pi i / order}.
/// values[r] == -1 marks a non-unit residue (character value 0).
struct Character {
  Int modulus = 1;
  Int order = 1;  // exponent of the unit group
  Int index = 0;  // mixed-radix label over the generator orders; 0 is principal
  std::vector<Int> values;

  bool vanishes_at(Int k) const;
  Int exponent_at(Int k) const;  // requires !vanishes_at(k)
  std::complex<double> value(Int k) const;
};

struct CharacterTable {
  UnitGroupDecomp group;
  std::vector<Character> characters;
};

CharacterTable characters_mod(Int L);

}  // namespace zolo
