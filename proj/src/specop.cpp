#include "zolo/specop.hpp"

#include <limits>
#include <numbers>
#include <string>

#include "zolo/errors.hpp"

namespace zolo {

namespace {

std::string tuple_str(std::initializer_list<Int> values) {
  std::string s = "(";
  for (Int v : values) s += (s.size() > 1 ? ", " : "") + std::to_string(v);
  return s + ")";
}

void require_positive(Int v, const char* what) {
  if (v < 1) throw InvalidArgument(std::string(what) + " must be >= 1");
}

Int dim_from_census(const CycleCensus& census, Int m) {
  Int dim = 0;
  for (auto [j, b] : census.entries) {
    if (j % m == 0) dim += b;
  }
  return dim;
}

// Numeric nullity of M - lambda I, lambda = scale * e^{2 pi i / m}.
Int shifted_nullity(const OperatorMatrix& op, Int m, double tol) {
  ComplexMatrix a = op.dense();
  const cdouble lambda =
      static_cast<double>(op.scale) * std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(m));
  for (Int k = 0; k < op.L; ++k) a(k, k) -= lambda;
  return static_cast<Int>(nullity(a, tol, std::abs(lambda)));
}

}  // namespace

Int weight_scale(Int n, Int kappa) {
  require_positive(kappa, "kappa");
  __int128 s = 1;
  for (Int i = 1; i < kappa; ++i) {
    s *= n;
    if (s > std::numeric_limits<Int>::max()) throw InvalidArgument("n^(kappa-1) overflows 64 bits");
  }
  return static_cast<Int>(s);
}

OperatorMatrix operator_matrix(Int n, Int L, Int kappa) {
  require_positive(n, "n");
  require_positive(L, "L");
  OperatorMatrix op{n, L, kappa, weight_scale(n, kappa), {}};
  op.column.resize(L);
  for (Int k = 0; k < L; ++k) op.column[k] = static_cast<Int>(static_cast<__int128>(n) * k % L);
  return op;
}

ComplexMatrix OperatorMatrix::dense() const {
  ComplexMatrix m(L, L);
  for (Int k = 0; k < L; ++k) m(k, column[k]) = static_cast<double>(scale);
  return m;
}

std::vector<PeriodicSeries<mpq_class>> KernelReport::basis() const {
  std::vector<PeriodicSeries<mpq_class>> out;
  for (Int leaf : leaves) {
    PeriodicSeries<mpq_class> f{L, kappa, std::vector<mpq_class>(L, 0)};
    f.coeffs[leaf] = 1;
    out.push_back(std::move(f));
  }
  return out;
}

KernelReport kernel(Int n, Int L, Int kappa, bool numeric, double tol) {
  const OperatorMatrix op = operator_matrix(n, L, kappa);
  const ZolotarevGraph g = build(n, L);
  KernelReport report{n, L, kappa, L - L / gcd(n, L), std::nullopt, {}};
  for (Int a = 0; a < L; ++a) {
    if (g.node_class[a] == NodeClass::Leaf) report.leaves.push_back(a);
  }
  if (static_cast<Int>(report.leaves.size()) != report.dim) {
    throw InternalTheoremViolation("kernel dimension differs from the leaf count for " + tuple_str({n, L}));
  }
  if (numeric) {
    report.dim_rank = static_cast<Int>(nullity(op.dense(), tol));
    if (*report.dim_rank != report.dim) {
      throw InternalTheoremViolation("numeric kernel dimension differs from L - L/gcd(n, L) for " +
                                     tuple_str({n, L, kappa}));
    }
  }
  return report;
}

PeriodicSeries<RootOfUnity> EigenBasisFunction::series() const {
  PeriodicSeries<RootOfUnity> f{L, kappa, {}};
  f.coeffs.reserve(L);
  for (Int e : coeff_exponents) f.coeffs.push_back(e < 0 ? RootOfUnity::zero_value(m) : RootOfUnity{m, e, false});
  return f;
}

std::vector<cdouble> EigenBasisFunction::complex_coeffs() const {
  std::vector<cdouble> out;
  out.reserve(L);
  for (Int e : coeff_exponents) {
    out.push_back(e < 0 ? cdouble{}
                        : std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(m)));
  }
  return out;
}

EigenReport eigenbasis(Int n, Int L, Int kappa, Int m, bool numeric, double tol) {
  require_positive(m, "m");
  const OperatorMatrix op = operator_matrix(n, L, kappa);
  const ZolotarevGraph g = build(n, L);
  const CycleCensus census = census_formula(n, L);

  EigenReport report{n, L, simplified_level(L, n).value, kappa, m, dim_from_census(census, m), std::nullopt, {}};

  std::vector<Int> position(L, -1);
  for (const auto& cycle : g.cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) position[cycle[i]] = static_cast<Int>(i);
  }
  for (std::size_t c = 0; c < g.cycles.size(); ++c) {
    const auto& cycle = g.cycles[c];
    const Int j = static_cast<Int>(cycle.size());
    if (j % m != 0) continue;
    EigenBasisFunction f{n, L, kappa, m, cycle.front(), j, std::vector<Int>(L, -1)};
    for (Int i = 0; i < L; ++i) {
      if (g.component_id[i] != static_cast<Int>(c)) continue;
      // walk to the tree root, then around the cycle to its minimum
      const Int d = g.height[i] + (j - position[g.tree_root[i]]) % j;
      f.coeff_exponents[i] = ((-d) % m + m) % m;
    }
    report.basis.push_back(std::move(f));
  }

  if (static_cast<Int>(report.basis.size()) != report.dim_formula) {
    throw InternalTheoremViolation("eigenbasis size differs from sum_j b_{jm} for " + tuple_str({n, L, m}));
  }
  if (numeric) {
    report.dim_rank = shifted_nullity(op, m, tol);
    if (*report.dim_rank != report.dim_formula) {
      throw InternalTheoremViolation("numeric eigenspace dimension differs from sum_j b_{jm} for " +
                                     tuple_str({n, L, kappa, m}));
    }
  }
  return report;
}

bool level_reduction_check(Int n, Int L, Int kappa, Int m, double tol) {
  const Int Ln = simplified_level(L, n).value;
  const EigenReport full = eigenbasis(n, L, kappa, m, false);
  const EigenReport reduced = eigenbasis(n, Ln, kappa, m, false);
  if (full.dim_formula != reduced.dim_formula) return false;

  ComplexMatrix span;
  for (const auto& f : full.basis) span.append_row(f.complex_coeffs());
  const std::size_t base_rank = full.basis.empty() ? 0 : rank(span, tol);
  if (static_cast<Int>(base_rank) != full.dim_formula) return false;

  ComplexMatrix extended = span;
  for (const auto& f : reduced.basis) {
    const auto small = f.complex_coeffs();
    std::vector<cdouble> lifted(L);
    for (Int k = 0; k < L; ++k) lifted[k] = small[k % Ln];
    extended.append_row(lifted);
  }
  const std::size_t extended_rank = extended.rows() == 0 ? 0 : rank(extended, tol);
  return extended_rank == base_rank;
}

Int s_dimension(Int n, Int L, Int kappa) {
  require_positive(kappa, "kappa");
  const Int Ln = simplified_level(L, n).value;
  const CycleCensus census = census_formula(n, L);
  const Int c = mult_order(n, Ln);
  Int total = 0;
  for (Int m : divisors(c)) total += euler_phi(m) * dim_from_census(census, m);
  if (total != Ln || census.weighted_sum() != Ln) {
    throw InternalTheoremViolation("dim S_n(L) differs from L_n for " + tuple_str({n, L}));
  }
  return Ln;
}

DiagonalizabilityReport diagonalizable(Int n, Int L) {
  const ZolotarevGraph g = build(n, L);
  const Int gg = gcd(n, L);
  const Int Ln = simplified_level(L, n).value;
  const CycleCensus census = census_formula(n, L);
  const NodeCounts graph_counts = counts_from_graph(g);

  Int dim_s = 0;
  for (Int m : divisors(mult_order(n, Ln))) dim_s += euler_phi(m) * dim_from_census(census, m);

  DiagonalizabilityReport r{n, L, false, false, false, false, false, false};
  r.dims_fill_space = dim_s + graph_counts.leaves == L;
  r.level_identity = L / gg == Ln;
  r.no_branches = graph_counts.branches == 0;
  r.n_is_root = g.is_root(n % L);
  r.unit_height = gg == 1 || height(g, 1 % L) == 1;
  r.verdict = r.dims_fill_space;
  if (r.level_identity != r.verdict || r.no_branches != r.verdict || r.n_is_root != r.verdict ||
      r.unit_height != r.verdict) {
    throw InternalTheoremViolation("diagonalizability conditions disagree for " + tuple_str({n, L}));
  }
  return r;
}

std::optional<SpectrumWitness> spectrum_search(Int n, Int N, Int kappa, Int bound) {
  require_positive(n, "n");
  require_positive(N, "N");
  const Int scale = weight_scale(n, kappa);
  for (Int L = 1; L <= bound; ++L) {
    if (gcd(n, L) != 1) continue;
    const Int c = mult_order(n, L);
    if (c % N == 0) return SpectrumWitness{L, c / N, c, scale};
  }
  return std::nullopt;
}

ArtinReport artin_scan(Int n, Int bound) {
  require_positive(n, "n");
  ArtinReport report{n, bound, {}, {}, 0, 0.0};
  for (Int p : primes_up_to(bound)) {
    if (p == 2 || n % p == 0) continue;
    const Int j = p - 1;
    Int sum = 0;
    for (Int d : divisors(j)) sum += mobius(j / d) * gcd_power_minus_one(n, d, p);
    if (sum % j != 0) throw InternalFormulaViolation("b_{p-1} is not an integer at p = " + std::to_string(p));
    const bool by_formula = sum / j == 1;
    const Int order = mult_order(n, p);
    const bool by_order = order == j;
    if (by_formula != by_order) {
      throw InternalTheoremViolation("b_{p-1} = 1 disagrees with the primitive-root test at p = " +
                                     std::to_string(p));
    }
    report.rows.push_back({p, by_formula, order});
    if (by_formula) report.primes.push_back(p);
    ++report.scanned;
  }
  if (report.scanned > 0) {
    report.density = static_cast<double>(report.primes.size()) / static_cast<double>(report.scanned);
  }
  return report;
}

bool in_phi_image(Int N) {
  require_positive(N, "N");
  if (N == 1) return true;
  if (N % 2 == 1) return false;
  // phi(x) >= sqrt(x / 2), so any preimage satisfies x <= 2 N^2.
  for (Int x = N + 1; x <= 2 * N * N; ++x) {
    if (euler_phi(x) == N) return true;
  }
  return false;
}

std::optional<PhiImageWitness> phi_image_eigenvalue_check(Int N, Int bound) {
  if (!in_phi_image(N)) throw InvalidArgument(std::to_string(N) + " is not a value of Euler's phi");
  if (N == 1) return PhiImageWitness{1, 1, 1, 1};
  for (Int p : primes_up_to(bound)) {
    if (p % N != 1 % N || p == 2) continue;
    Int primitive = 0;
    for (Int g = 2; g < p; ++g) {
      if (mult_order(g, p) == p - 1) {
        primitive = g;
        break;
      }
    }
    const Int base = pow_mod(primitive, (p - 1) / N, p);
    const Int order = mult_order(base, p);
    if (order != N) throw InternalFormulaViolation("g^((p-1)/N) does not have order N mod " + std::to_string(p));
    return PhiImageWitness{p, primitive, base, order};
  }
  return std::nullopt;
}

}  // namespace zolo
