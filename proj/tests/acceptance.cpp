// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 1 on any failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <queue>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "oracles.hpp"
#include "zolo/errors.hpp"
#include "zolo/ratfun.hpp"
#include "zolo/simult.hpp"
#include "zolo/specop.hpp"
#include "zolo/zgraph.hpp"

using namespace zolo;

namespace {

constexpr double kRankTolerance = 1e-8;
constexpr double kCensusBudgetSeconds = 30.0;
constexpr double kStructureBudgetSeconds = 120.0;
constexpr double kArtinBudgetSeconds = 10.0;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void require(bool ok, const std::string& what) {
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    first_failure = what;
  }
};

std::string pair_tag(Int n, Int L) { return "(" + std::to_string(n) + "," + std::to_string(L) + ")"; }

std::map<Int, Int> as_map(const CycleCensus& c) { return {c.entries.begin(), c.entries.end()}; }

std::vector<Int> distances_to(const ZolotarevGraph& g, Int target) {
  std::vector<std::vector<Int>> pred(g.L);
  for (Int a = 0; a < g.L; ++a) pred[g.succ[a]].push_back(a);
  std::vector<Int> dist(g.L, -1);
  std::queue<Int> q;
  dist[target] = 0;
  q.push(target);
  while (!q.empty()) {
    const Int x = q.front();
    q.pop();
    for (Int p : pred[x]) {
      if (dist[p] < 0) {
        dist[p] = dist[x] + 1;
        q.push(p);
      }
    }
  }
  return dist;
}

Outcome ac1_census() {
  Outcome o;
  Int pairs = 0, coprime = 0;
  for (Int n = 1; n <= 150; ++n) {
    for (Int L = 1; L <= 150; ++L) {
      const auto formula = census_formula(n, L);
      o.require(formula == census_bruteforce(build(n, L)), "formula vs bruteforce at " + pair_tag(n, L));
      if (std::gcd(n, L) == 1) {
        o.require(formula == census_order(n, L), "formula vs order at " + pair_tag(n, L));
        ++coprime;
      }
      ++pairs;
    }
  }
  o.detail = std::to_string(pairs) + " pairs, " + std::to_string(coprime) + " coprime";
  return o;
}

Outcome ac2_fixtures() {
  Outcome o;
  const std::vector<std::tuple<Int, Int, std::map<Int, Int>>> cases = {
      {7, 30, {{1, 6}, {4, 6}}}, {2, 17, {{1, 1}, {8, 2}}}, {2, 20, {{1, 1}, {4, 1}}},
      {5, 6, {{1, 2}, {2, 2}}},  {3, 7, {{1, 1}, {6, 1}}},
  };
  for (const auto& [n, L, want] : cases) {
    o.require(as_map(census_formula(n, L)) == want, "formula " + pair_tag(n, L));
    o.require(as_map(census_bruteforce(build(n, L))) == want, "bruteforce " + pair_tag(n, L));
    if (std::gcd(n, L) == 1) o.require(as_map(census_order(n, L)) == want, "order " + pair_tag(n, L));
  }
  o.detail = std::to_string(cases.size()) + " fixtures";
  return o;
}

Outcome ac3_figures() {
  Outcome o;
  struct Fig {
    Int n, L, roots, leaves, branches, components;
  };
  const std::vector<Fig> figs = {
      {10, 20, 1, 18, 1, 1}, {6, 60, 5, 50, 5, 5},  {2, 4, 1, 2, 1, 1},    {8, 20, 5, 15, 0, 2},
      {12, 20, 5, 15, 0, 2}, {4, 20, 5, 15, 0, 3},  {5, 20, 4, 16, 0, 4},  {15, 20, 4, 16, 0, 3},
      {16, 20, 5, 15, 0, 5}, {2, 20, 5, 10, 5, 2},  {18, 20, 5, 10, 5, 2},
  };
  for (const auto& f : figs) {
    const auto g = build(f.n, f.L);
    const auto c = counts(g);
    o.require(c.roots == f.roots && c.leaves == f.leaves && c.branches == f.branches &&
                  g.component_count() == f.components,
              "counts of Z" + pair_tag(f.n, f.L));
  }
  const auto g60 = build(6, 60);
  std::vector<Int> tree0 = tree_of(g60, 0), fives;
  std::ranges::sort(tree0);
  for (Int a = 0; a < 60; a += 5) fives.push_back(a);
  o.require(tree0 == fives, "Tree(0) of Z(6,60)");

  const auto g8 = build(8, 20), g12 = build(12, 20);
  const auto phi = graph_isomorphism(g8, g12);
  o.require(phi.has_value(), "Z(8,20) ~ Z(12,20)");
  if (phi) {
    for (Int a = 0; a < 20; ++a) {
      o.require(g12.succ[(*phi)[a]] == (*phi)[g8.succ[a]], "isomorphism preserves edges");
      o.require(g8.node_class[a] == g12.node_class[(*phi)[a]], "isomorphism preserves classes");
    }
  }
  o.detail = std::to_string(figs.size()) + " figures";
  return o;
}

Outcome ac4_eigen_dims() {
  Outcome o;
  struct Case {
    Int n, L, m, dim;
  };
  const std::vector<Case> cases = {{5, 6, 2, 2}, {3, 7, 6, 1}, {3, 7, 1, 2}, {3, 7, 4, 0}};
  for (const auto& c : cases) {
    for (Int kappa : {1, 2, 3}) {
      const auto r = eigenbasis(c.n, c.L, kappa, c.m, true, kRankTolerance);
      const std::string tag = "E_" + std::to_string(c.n) + " m=" + std::to_string(c.m) + " L=" +
                              std::to_string(c.L) + " kappa=" + std::to_string(kappa);
      o.require(r.dim_formula == c.dim, tag + " formula");
      o.require(r.dim_rank == c.dim, tag + " nullity");
    }
  }
  o.detail = std::to_string(cases.size() * 3) + " eigenspaces, rank tolerance 1e-8";
  return o;
}

Outcome ac5_structure() {
  Outcome o;
  Int graphs = 0;
  for (Int n = 1; n <= 120; ++n) {
    for (Int L = 1; L <= 120; ++L) {
      const std::string tag = pair_tag(n, L);
      const auto g = build(n, L);
      const auto z = build_algorithm_z(n, L);
      o.require(g.succ == z.succ, "algorithm Z " + tag);

      const Int gg = std::gcd(n, L);
      const auto level = simplified_level(L, n);
      const Int Ln = level.value;
      o.require(Ln == oracle::largest_coprime_divisor(L, n), "L_n " + tag);

      if (gg > 1) {
        for (Int m = 0; m < L; ++m) o.require(classify_arith(n, L, m) == g.node_class[m], "classify " + tag);
      }

      // predecessors of a non-leaf form one class mod L/g of size g
      std::vector<std::vector<Int>> pred(L);
      for (Int a = 0; a < L; ++a) pred[g.succ[a]].push_back(a);
      for (Int k = 0; k < L; ++k) {
        if (pred[k].empty()) continue;
        bool ok = static_cast<Int>(pred[k].size()) == gg;
        for (Int p : pred[k]) ok = ok && (p - pred[k][0]) % (L / gg) == 0;
        o.require(ok, "predecessor congruence " + tag);
      }

      // exactly one root among m + k L_n, 0 <= k < L / L_n
      for (Int m = 0; m < L; ++m) {
        Int hits = 0;
        for (Int k = 0; k < L / Ln; ++k) hits += g.is_root((m + k * Ln) % L);
        o.require(hits == 1, "unique root in translate class " + tag);
      }

      // a == b mod L_n  <=>  d(a, i) == d(b, i) mod j, within i's component
      for (const auto& cycle : g.cycles) {
        const Int j = static_cast<Int>(cycle.size());
        for (Int i : cycle) {
          const auto dist = distances_to(g, i);
          std::map<Int, Int> by_class, by_dist;
          bool ok = true;
          for (Int a = 0; a < L; ++a) {
            if (dist[a] < 0) continue;
            const Int cls = a % Ln, d = dist[a] % j;
            ok = ok && by_class.try_emplace(cls, d).first->second == d;
            ok = ok && by_dist.try_emplace(d, cls).first->second == cls;
          }
          o.require(ok, "distance invariance " + tag);
        }
      }

      // height
      Int h = 0, leaf_h = -1;
      bool homogeneous = true;
      for (Int a = 0; a < L; ++a) {
        h = std::max(h, g.height[a]);
        if (g.node_class[a] == NodeClass::Leaf) {
          if (leaf_h >= 0 && leaf_h != g.height[a]) homogeneous = false;
          leaf_h = std::max(leaf_h, g.height[a]);
        }
      }
      o.require(h == level.depth, "height equals recursion depth " + tag);
      if (leaf_h >= 0) o.require(leaf_h == height(g, 1 % L), "max leaf height " + tag);
      Int gh = 1;
      for (Int t = 0; t < h; ++t) gh *= gg;
      o.require(homogeneous == (Ln * gh == L), "homogeneous height " + tag);

      // subgraph isomorphisms
      for (Int v : divisors(L)) o.require(subgraph_iso_check(n, L, v), "multiples of v " + tag);
      o.require(subgraph_iso_check(n, L, gg), "pruning " + tag);
      o.require(subgraph_iso_check(n, L, L / Ln), "roots " + tag);
      o.require(subgraph_iso_check(n, L, Ln), "mother tree " + tag);
      std::vector<Int> tree0 = tree_of(g, 0);
      std::ranges::sort(tree0);
      bool tree0_ok = static_cast<Int>(tree0.size()) == L / Ln;
      for (Int a : tree0) tree0_ok = tree0_ok && a % Ln == 0;
      o.require(tree0_ok, "Tree(0) is the multiples of L_n " + tag);

      // every tree is isomorphic to Tree(0)
      for (Int r = 0; r < L; ++r) {
        if (g.is_root(r)) o.require(trees_isomorphic(g, 0, r).isomorphic, "tree isomorphism " + tag);
      }
      o.require(component_size_check(g), "component size " + tag);
      ++graphs;
    }
  }
  o.detail = std::to_string(graphs) + " graphs";
  return o;
}

Outcome ac6_kernel() {
  Outcome o;
  Int diag = 0;
  for (Int n = 1; n <= 100; ++n) {
    for (Int L = 1; L <= 100; ++L) {
      const std::string tag = pair_tag(n, L);
      const Int want = L - L / std::gcd(n, L);
      for (Int kappa : {1, 2, 3}) {
        const auto k = kernel(n, L, kappa, true, kRankTolerance);
        o.require(k.dim == want && k.dim_rank == want, "kernel " + tag + " kappa=" + std::to_string(kappa));
      }
      // diagonalizable() throws when the five conditions disagree
      const auto d = diagonalizable(n, L);
      if (d.verdict) {
        const Int Ln = oracle::largest_coprime_divisor(L, n);
        Int s = 0;
        for (Int m : divisors(oracle::order(n, Ln))) s += oracle::phi(m) * eigenbasis(n, L, 1, m, false).dim_formula;
        o.require(s + want == L, "dim S + dim ker " + tag);
        ++diag;
      }
    }
  }
  o.detail = "10000 pairs x 3 weights, " + std::to_string(diag) + " diagonalizable";
  return o;
}

Outcome ac7_dim_s() {
  Outcome o;
  for (Int n = 1; n <= 120; ++n) {
    for (Int L = 1; L <= 120; ++L) {
      const std::string tag = pair_tag(n, L);
      const Int Ln = oracle::largest_coprime_divisor(L, n);
      o.require(s_dimension(n, L, 1 + (n + L) % 3) == Ln, "s_dimension " + tag);
      o.require(counts_from_graph(build(n, L)).roots == Ln, "root count " + tag);
      Int s = 0;
      for (Int m : divisors(oracle::order(n, Ln))) s += oracle::phi(m) * eigenbasis(n, L, 1, m, false).dim_formula;
      o.require(s == Ln, "eigenspace sum " + tag);
      o.require(simplified_level(L, n).value == simplified_level(L, n + L).value, "periodic in n " + tag);
    }
  }
  for (Int n = 1; n <= 60; ++n) {
    for (Int a = 1; a <= 60; ++a) {
      for (Int b = 1; b <= 60; ++b) {
        if (std::gcd(a, b) != 1) continue;
        o.require(simplified_level(a * b, n).value == simplified_level(a, n).value * simplified_level(b, n).value,
                  "multiplicative n=" + std::to_string(n) + " " + pair_tag(a, b));
      }
    }
  }
  o.detail = "14400 pairs, multiplicativity on coprime levels <= 60";
  return o;
}

bool squarefree(Int L) {
  for (Int d = 2; d * d <= L; ++d) {
    if (L % (d * d) == 0) return false;
  }
  return true;
}

Outcome ac8_v() {
  Outcome o;
  for (Int L = 1; L <= 60; ++L) {
    const auto r = v_basis(L, 1 + L % 3, kRankTolerance);
    const std::string tag = "L=" + std::to_string(L);
    o.require(r.dim_product == r.dim_sum && r.dim_sum == r.dim_rank, "three counts " + tag);
    o.require(squarefree(L) == (r.dim_rank == L), "squarefree " + tag);
  }
  o.require(v_basis(12, 1, kRankTolerance).dim_rank == 9, "L=12");
  o.detail = "levels 1..60, rank tolerance 1e-8";
  return o;
}

Outcome ac9_rational() {
  Outcome o;
  const auto weightless = parse_rational_function("(2*x^2 + x^7 + 7*x^11 - x^16) / (1 - 2*x^9 + x^18)");
  o.require(apply_un(weightless, 6).is_zero(), "U_6 of the weightless example");
  const auto kernel_example = from_periodic(PeriodicSeries<mpq_class>{4, 1, {0, 3, 0, 17}});
  o.require(apply_un(kernel_example, 2).is_zero(), "U_2 of [0,3,0,17]");
  const auto fs = fixtures::functions();
  Int laws = 0;
  for (const auto& f : fs) {
    std::vector<RationalFunction> once(7);
    for (Int i = 1; i <= 6; ++i) once[i] = apply_un(f, i);
    for (Int i = 1; i <= 6; ++i) {
      for (Int j = 1; j <= 6; ++j) {
        o.require(apply_un(once[i], j) == apply_un(f, i * j),
                  "U_" + std::to_string(j) + " U_" + std::to_string(i) + " of " + format_rational_function(f));
        ++laws;
      }
    }
  }
  o.detail = std::to_string(fs.size()) + " functions, " + std::to_string(laws) + " compositions";
  return o;
}

Outcome ac10_artin() {
  Outcome o;
  const auto w = spectrum_search(2, 14, 1, 100);
  o.require(w.has_value() && w->L == 29, "spectrum_search(2,14)");
  // artin_scan throws when the cycle-count and order criteria disagree
  const auto r = artin_scan(2, 10000);
  std::vector<Int> want;
  for (Int p = 3; p <= 10000; ++p) {
    if (oracle::is_prime(p) && oracle::order(2, p) == p - 1) want.push_back(p);
  }
  o.require(r.primes == want, "qualifying primes");
  o.detail = std::to_string(r.scanned) + " primes scanned, " + std::to_string(r.primes.size()) + " qualify";
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<Outcome()> run;
  double budget_seconds;  // 0 means unbudgeted
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "census formula, bruteforce and order agree for n, L <= 150", ac1_census, kCensusBudgetSeconds},
      {"AC2", "census fixtures", ac2_fixtures, 0},
      {"AC3", "figure regressions", ac3_figures, 0},
      {"AC4", "eigenspace dimensions and nullities", ac4_eigen_dims, 0},
      {"AC5", "graph structure suites for n, L <= 120", ac5_structure, kStructureBudgetSeconds},
      {"AC6", "kernel and diagonalizability for n, L <= 100", ac6_kernel, 0},
      {"AC7", "dim S = L_n, periodicity and multiplicativity", ac7_dim_s, 0},
      {"AC8", "simultaneous eigenspace V for L <= 60", ac8_v, 0},
      {"AC9", "rational front end", ac9_rational, 0},
      {"AC10", "spectrum witness and Artin scan to 10^4", ac10_artin, kArtinBudgetSeconds},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      o.require(false, "over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget");
    }
    line << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title;
    if (!o.detail.empty()) line << ": " << o.detail;
    char t[32];
    std::snprintf(t, sizeof t, " (%.2f s)", seconds);
    line << t;
    if (!o.pass) line << " -- first failure: " << o.first_failure;
    std::puts(line.str().c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
