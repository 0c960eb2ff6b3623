#include "zolo/zgraph.hpp"

#include <algorithm>
#include <span>
#include <sstream>
#include <string>

#include "zolo/errors.hpp"

namespace zolo {

const char* to_string(NodeClass c) {
  switch (c) {
    case NodeClass::Leaf:
      return "leaf";
    case NodeClass::Root:
      return "root";
    case NodeClass::Branch:
      return "branch";
  }
  return "?";
}

Int ZolotarevGraph::cycle_length_of(Int node) const {
  return static_cast<Int>(cycles[component_id[node]].size());
}

Int CycleCensus::at(Int j) const {
  auto it = entries.find(j);
  return it == entries.end() ? 0 : it->second;
}

Int CycleCensus::weighted_sum() const {
  Int s = 0;
  for (auto [j, b] : entries) s += j * b;
  return s;
}

Int CycleCensus::cycle_count() const {
  Int s = 0;
  for (auto [j, b] : entries) s += b;
  return s;
}

namespace {

std::string pair_str(Int n, Int L) { return "(" + std::to_string(n) + ", " + std::to_string(L) + ")"; }

void validate(Int n, Int L) {
  if (L < 1) throw InvalidArgument("Zolotarev graph needs L >= 1");
  if (n < 1) throw InvalidArgument("Zolotarev graph needs n >= 1");
}

// Fills everything derivable from succ: indegrees, cycles, classes,
// components, heights and tree roots.
void analyze(ZolotarevGraph& g) {
  const Int L = g.L;
  g.indegree.assign(L, 0);
  for (Int a = 0; a < L; ++a) ++g.indegree[g.succ[a]];

  // 0 = unvisited, 1 = on the current walk, 2 = finished
  std::vector<char> state(L, 0);
  std::vector<char> on_cycle(L, 0);
  std::vector<Int> path;
  for (Int s = 0; s < L; ++s) {
    if (state[s] != 0) continue;
    path.clear();
    Int x = s;
    while (state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = g.succ[x];
    }
    if (state[x] == 1) {
      std::vector<Int> cycle(std::find(path.begin(), path.end(), x), path.end());
      for (Int c : cycle) on_cycle[c] = 1;
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      g.cycles.push_back(std::move(cycle));
    }
    for (Int p : path) state[p] = 2;
  }
  std::sort(g.cycles.begin(), g.cycles.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

  g.component_id.assign(L, -1);
  g.height.assign(L, -1);
  g.tree_root.assign(L, -1);
  for (Int c = 0; c < static_cast<Int>(g.cycles.size()); ++c) {
    for (Int r : g.cycles[c]) {
      g.component_id[r] = c;
      g.height[r] = 0;
      g.tree_root[r] = r;
    }
  }
  for (Int s = 0; s < L; ++s) {
    path.clear();
    Int x = s;
    while (g.height[x] < 0) {
      path.push_back(x);
      x = g.succ[x];
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      Int next = g.succ[*it];
      g.height[*it] = g.height[next] + 1;
      g.tree_root[*it] = g.tree_root[next];
      g.component_id[*it] = g.component_id[next];
    }
  }

  g.node_class.assign(L, NodeClass::Branch);
  for (Int a = 0; a < L; ++a) {
    if (g.indegree[a] == 0) {
      g.node_class[a] = NodeClass::Leaf;
    } else if (on_cycle[a]) {
      g.node_class[a] = NodeClass::Root;
    }
  }
}

// Predecessor lists in compressed form.
struct Predecessors {
  std::vector<Int> offset;
  std::vector<Int> list;

  explicit Predecessors(const ZolotarevGraph& g) : offset(g.L + 1, 0), list(g.L) {
    for (Int a = 0; a < g.L; ++a) ++offset[g.succ[a] + 1];
    for (Int a = 0; a < g.L; ++a) offset[a + 1] += offset[a];
    std::vector<Int> fill(offset.begin(), offset.end() - 1);
    for (Int a = 0; a < g.L; ++a) list[fill[g.succ[a]]++] = a;
  }

  std::span<const Int> of(Int node) const {
    return {list.data() + offset[node], static_cast<std::size_t>(offset[node + 1] - offset[node])};
  }
};

// AHU canonical labels of rooted trees. Children of a node are its
// predecessors that are not roots; labels are shared across every tree
// passed through the same instance.
class TreeCanonicalizer {
 public:
  std::vector<Int> label(const ZolotarevGraph& g, const Predecessors& preds) {
    std::vector<Int> order(g.L);
    for (Int a = 0; a < g.L; ++a) order[a] = a;
    std::stable_sort(order.begin(), order.end(), [&](Int a, Int b) { return g.height[a] > g.height[b]; });
    std::vector<Int> labels(g.L, -1);
    std::vector<Int> key;
    for (Int x : order) {
      key.clear();
      for (Int c : preds.of(x)) {
        if (!g.is_root(c)) key.push_back(labels[c]);
      }
      std::sort(key.begin(), key.end());
      auto [it, inserted] = ids_.try_emplace(key, static_cast<Int>(ids_.size()));
      labels[x] = it->second;
    }
    return labels;
  }

 private:
  std::map<std::vector<Int>, Int> ids_;
};

// Extends phi by matching the tree above x1 in g1 onto the tree above x2 in g2.
void match_trees(const ZolotarevGraph& g1, const Predecessors& p1, const std::vector<Int>& lab1,
                 const ZolotarevGraph& g2, const Predecessors& p2, const std::vector<Int>& lab2, Int x1, Int x2,
                 std::vector<Int>& phi) {
  std::vector<std::pair<Int, Int>> stack{{x1, x2}};
  std::vector<Int> c1, c2;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    phi[a] = b;
    c1.clear();
    c2.clear();
    for (Int c : p1.of(a)) {
      if (!g1.is_root(c)) c1.push_back(c);
    }
    for (Int c : p2.of(b)) {
      if (!g2.is_root(c)) c2.push_back(c);
    }
    if (c1.size() != c2.size()) return;
    std::sort(c1.begin(), c1.end(), [&](Int u, Int v) { return lab1[u] < lab1[v]; });
    std::sort(c2.begin(), c2.end(), [&](Int u, Int v) { return lab2[u] < lab2[v]; });
    for (std::size_t i = 0; i < c1.size(); ++i) stack.emplace_back(c1[i], c2[i]);
  }
}

std::size_t least_rotation(const std::vector<Int>& seq) {
  const std::size_t j = seq.size();
  std::size_t best = 0;
  for (std::size_t s = 1; s < j; ++s) {
    for (std::size_t i = 0; i < j; ++i) {
      Int a = seq[(s + i) % j], b = seq[(best + i) % j];
      if (a != b) {
        if (a < b) best = s;
        break;
      }
    }
  }
  return best;
}

}  // namespace

ZolotarevGraph build(Int n, Int L) {
  validate(n, L);
  ZolotarevGraph g;
  g.n = n;
  g.L = L;
  const Int reduced = n % L;
  g.succ.resize(L);
  for (Int a = 0; a < L; ++a) g.succ[a] = static_cast<Int>(static_cast<__int128>(reduced) * a % L);
  analyze(g);
  return g;
}

ZolotarevGraph build_algorithm_z(Int n, Int L) {
  validate(n, L);
  const SimplifiedLevel level = simplified_level(L, n);
  const auto& chain = level.chain;

  // Step 2 base: the permutation Z(n, L_n).
  Int modulus = chain.back();
  std::vector<Int> succ(modulus);
  for (Int a = 0; a < modulus; ++a) succ[a] = static_cast<Int>(static_cast<__int128>(n % modulus) * a % modulus);

  // Step 3: lift Z(n, x_{j+1}) to Z(n, x_j).
  for (int j = level.depth - 1; j >= 0; --j) {
    const Int x = chain[j];
    const Int smaller = chain[j + 1];
    const Int scale = gcd(n, x);
    if (x / scale != smaller) throw InternalFormulaViolation("Algorithm Z: quotient chain is inconsistent");

    std::vector<Int> lifted(x, -1);
    for (Int y = 0; y < smaller; ++y) lifted[scale * y] = scale * succ[y];

    // Preimages of a non-leaf k are c + t * x / scale, t in [0, scale).
    const auto inv = mod_inverse((n / scale) % smaller, smaller);
    if (!inv) throw InternalFormulaViolation("Algorithm Z: n / gcd(n, x) not invertible modulo x / gcd(n, x)");
    for (Int y = 0; y < smaller; ++y) {
      const Int k = scale * y;
      const Int c = static_cast<Int>(static_cast<__int128>(y) * *inv % smaller);
      for (Int t = 0; t < scale; ++t) {
        const Int pre = c + t * smaller;
        if (pre % scale != 0) {
          lifted[pre] = k;
        } else if (lifted[pre] != k) {
          throw InternalFormulaViolation("Algorithm Z: scaled edge disagrees with preimage coset at " +
                                         pair_str(n, x));
        }
      }
    }
    if (std::find(lifted.begin(), lifted.end(), -1) != lifted.end()) {
      throw InternalFormulaViolation("Algorithm Z: node without successor at " + pair_str(n, x));
    }
    succ = std::move(lifted);
    modulus = x;
  }

  ZolotarevGraph g;
  g.n = n;
  g.L = L;
  g.succ = std::move(succ);
  analyze(g);
  return g;
}

NodeClass classify_arith(Int n, Int L, Int m) {
  validate(n, L);
  const Int g = gcd(n, L);
  if (g == 1) return NodeClass::Root;
  m %= L;
  if (m < 0) m += L;
  if (m % g != 0) return NodeClass::Leaf;
  const Int root_step = L / simplified_level(L, n).value;
  return m % root_step == 0 ? NodeClass::Root : NodeClass::Branch;
}

CycleCensus census_bruteforce(const ZolotarevGraph& g) {
  CycleCensus census;
  for (const auto& cycle : g.cycles) ++census.entries[static_cast<Int>(cycle.size())];
  return census;
}

CycleCensus census_formula(Int n, Int L) {
  validate(n, L);
  const std::vector<Int> gcds = gcd_power_minus_one_table(n, L, L);

  std::vector<Int> mu(L + 1, 1);
  for (Int k = 1; k <= L; ++k) mu[k] = mobius(k);

  CycleCensus census;
  for (Int j = 1; j <= L; ++j) {
    Int sum = 0;
    for (Int d = 1; d * d <= j; ++d) {
      if (j % d != 0) continue;
      sum += mu[j / d] * gcds[d];
      if (d * d != j) sum += mu[d] * gcds[j / d];
    }
    if (sum < 0 || sum % j != 0) {
      throw InternalFormulaViolation("b_" + std::to_string(j) + " for " + pair_str(n, L) +
                                     " is not a nonnegative integer: " + std::to_string(sum) + "/" +
                                     std::to_string(j));
    }
    if (sum > 0) census.entries[j] = sum / j;
  }
  return census;
}

CycleCensus census_order(Int n, Int L) {
  validate(n, L);
  if (gcd(n, L) != 1) throw CoprimalityRequired("census_order needs gcd(n, L) = 1, got " + pair_str(n, L));
  std::map<Int, Int> hits;
  for (Int m = 1; m <= L; ++m) ++hits[mult_order(n, L / gcd(L, m))];
  CycleCensus census;
  for (auto [j, count] : hits) {
    if (count % j != 0) throw InternalFormulaViolation("order census count not divisible by cycle length");
    census.entries[j] = count / j;
  }
  return census;
}

NodeCounts counts_from_graph(const ZolotarevGraph& g) {
  NodeCounts c;
  for (NodeClass k : g.node_class) {
    switch (k) {
      case NodeClass::Leaf:
        ++c.leaves;
        break;
      case NodeClass::Root:
        ++c.roots;
        break;
      case NodeClass::Branch:
        ++c.branches;
        break;
    }
  }
  return c;
}

NodeCounts counts(const ZolotarevGraph& g) {
  const Int gg = g.gcd_nL();
  const Int Ln = simplified_level(g.L, g.n).value;
  NodeCounts formula{Ln, g.L - g.L / gg, g.L / gg - Ln};
  if (formula != counts_from_graph(g)) {
    throw InternalTheoremViolation("root/leaf/branch counts disagree with the graph for " + pair_str(g.n, g.L));
  }
  return formula;
}

NodeReport node_report(const ZolotarevGraph& g, Int m) {
  if (m < 0 || m >= g.L) throw InvalidArgument("node out of range");
  return {m, g.node_class[m], g.height[m], g.tree_root[m], g.cycle_length_of(m)};
}

std::optional<Int> distance(const ZolotarevGraph& g, Int a, Int b) {
  if (a < 0 || a >= g.L || b < 0 || b >= g.L) throw InvalidArgument("node out of range");
  Int x = a;
  for (Int k = 0; k <= g.L; ++k) {
    if (x == b) return k;
    x = g.succ[x];
  }
  return std::nullopt;
}

Int height(const ZolotarevGraph& g, Int m) {
  if (m < 0 || m >= g.L) throw InvalidArgument("node out of range");
  return g.height[m];
}

std::vector<Int> tree_of(const ZolotarevGraph& g, Int r) {
  if (r < 0 || r >= g.L) throw InvalidArgument("node out of range");
  if (!g.is_root(r)) throw NotARoot(std::to_string(r) + " is not a root of Z" + pair_str(g.n, g.L));
  std::vector<Int> out;
  for (Int a = 0; a < g.L; ++a) {
    if (g.tree_root[a] == r) out.push_back(a);
  }
  return out;
}

TreeIsomorphism trees_isomorphic(const ZolotarevGraph& g, Int r1, Int r2) {
  for (Int r : {r1, r2}) {
    if (r < 0 || r >= g.L) throw InvalidArgument("node out of range");
    if (!g.is_root(r)) throw NotARoot(std::to_string(r) + " is not a root of Z" + pair_str(g.n, g.L));
  }
  const Predecessors preds(g);
  TreeCanonicalizer canon;
  const std::vector<Int> labels = canon.label(g, preds);

  TreeIsomorphism result;
  if (labels[r1] != labels[r2]) return result;

  std::vector<Int> phi(g.L, -1);
  match_trees(g, preds, labels, g, preds, labels, r1, r2, phi);

  // Certificate check: a bijection between the two trees carrying every
  // non-root edge a -> succ(a) onto an edge.
  const auto t1 = tree_of(g, r1);
  const auto t2 = tree_of(g, r2);
  if (t1.size() != t2.size()) return result;
  std::vector<char> hit(g.L, 0);
  for (Int a : t1) {
    const Int b = phi[a];
    if (b < 0 || g.tree_root[b] != r2 || hit[b]) return result;
    hit[b] = 1;
    if (a != r1 && phi[g.succ[a]] != g.succ[b]) return result;
    result.bijection.emplace_back(a, b);
  }
  result.isomorphic = phi[r1] == r2;
  if (!result.isomorphic) result.bijection.clear();
  return result;
}

bool subgraph_iso_check(Int n, Int L, Int v) {
  validate(n, L);
  if (v < 1 || L % v != 0) throw InvalidArgument(std::to_string(v) + " does not divide " + std::to_string(L));
  const ZolotarevGraph big = build(n, L);
  const ZolotarevGraph small = build(n, L / v);
  for (Int x = 0; x < L; x += v) {
    const Int image = big.succ[x];
    if (image % v != 0) return false;
    if (image / v != small.succ[x / v]) return false;
  }
  return true;
}

bool component_size_check(const ZolotarevGraph& g) {
  const Int step = g.L / simplified_level(g.L, g.n).value;
  std::vector<Int> sizes(g.cycles.size(), 0);
  for (Int c : g.component_id) ++sizes[c];
  for (std::size_t c = 0; c < g.cycles.size(); ++c) {
    if (sizes[c] != static_cast<Int>(g.cycles[c].size()) * step) return false;
  }
  return true;
}

std::optional<std::vector<Int>> graph_isomorphism(const ZolotarevGraph& g1, const ZolotarevGraph& g2) {
  if (g1.L != g2.L || g1.cycles.size() != g2.cycles.size()) return std::nullopt;
  const Predecessors p1(g1), p2(g2);
  TreeCanonicalizer canon;
  const auto lab1 = canon.label(g1, p1);
  const auto lab2 = canon.label(g2, p2);

  auto cycle_code = [](const std::vector<Int>& cycle, const std::vector<Int>& lab) {
    std::vector<Int> seq;
    for (Int r : cycle) seq.push_back(lab[r]);
    const std::size_t shift = least_rotation(seq);
    std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(shift), seq.end());
    return std::pair{seq, shift};
  };

  std::multimap<std::vector<Int>, std::pair<std::size_t, std::size_t>> pool;  // code -> (cycle, shift)
  for (std::size_t c = 0; c < g2.cycles.size(); ++c) {
    auto [code, shift] = cycle_code(g2.cycles[c], lab2);
    pool.emplace(std::move(code), std::pair{c, shift});
  }

  std::vector<Int> phi(g1.L, -1);
  for (const auto& cycle1 : g1.cycles) {
    auto [code, shift1] = cycle_code(cycle1, lab1);
    auto it = pool.find(code);
    if (it == pool.end()) return std::nullopt;
    const auto [c2, shift2] = it->second;
    pool.erase(it);
    const auto& cycle2 = g2.cycles[c2];
    const std::size_t j = cycle1.size();
    for (std::size_t i = 0; i < j; ++i) {
      match_trees(g1, p1, lab1, g2, p2, lab2, cycle1[(shift1 + i) % j], cycle2[(shift2 + i) % j], phi);
    }
  }

  std::vector<char> hit(g1.L, 0);
  for (Int a = 0; a < g1.L; ++a) {
    const Int b = phi[a];
    if (b < 0 || hit[b]) return std::nullopt;
    hit[b] = 1;
  }
  for (Int a = 0; a < g1.L; ++a) {
    if (phi[g1.succ[a]] != g2.succ[phi[a]]) return std::nullopt;
  }
  return phi;
}

std::string to_dot(const ZolotarevGraph& g) {
  std::ostringstream out;
  out << "digraph \"Z(" << g.n << "," << g.L << ")\" {\n";
  out << "  node [shape=circle];\n";
  for (Int a = 0; a < g.L; ++a) {
    out << "  " << a << " [label=\"" << a << "\", class=" << to_string(g.node_class[a]);
    switch (g.node_class[a]) {
      case NodeClass::Root:
        out << ", shape=doublecircle, style=filled, fillcolor=\"#f4a582\"";
        break;
      case NodeClass::Branch:
        out << ", style=filled, fillcolor=\"#92c5de\"";
        break;
      case NodeClass::Leaf:
        break;
    }
    out << "];\n";
  }
  for (Int a = 0; a < g.L; ++a) out << "  " << a << " -> " << g.succ[a] << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace zolo
