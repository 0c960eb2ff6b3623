#pragma once

// Zolotarev graphs Z(n, L): the functional graph a -> n*a mod L on Z/LZ.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zolo/numtheory.hpp"

namespace zolo {

enum class NodeClass { Leaf, Root, Branch };

const char* to_string(NodeClass c);

struct ZolotarevGraph {
  Int n = 1;  // multiplier as given (>= 1)
  Int L = 1;
  std::vector<Int> succ;
  std::vector<Int> indegree;
  std::vector<NodeClass> node_class;
  std::vector<Int> component_id;  // index into cycles
  /// Each cycle starts at its minimum residue and follows succ; cycles are
  /// ordered by that minimum.
  std::vector<std::vector<Int>> cycles;
  std::vector<Int> height;     // distance to the first root reached
  std::vector<Int> tree_root;  // that root

  Int node_count() const { return L; }
  Int gcd_nL() const { return gcd(n, L); }
  Int component_count() const { return static_cast<Int>(cycles.size()); }
  Int cycle_length_of(Int node) const;
  bool is_root(Int node) const { return node_class[node] == NodeClass::Root; }
};

/// b_j for every j with b_j > 0.
struct CycleCensus {
  std::map<Int, Int> entries;

  Int max_j() const { return entries.empty() ? 0 : entries.rbegin()->first; }
  Int at(Int j) const;
  Int weighted_sum() const;  // sum of j * b_j
  Int cycle_count() const;
  friend bool operator==(const CycleCensus&, const CycleCensus&) = default;
};

struct NodeCounts {
  Int roots = 0;
  Int leaves = 0;
  Int branches = 0;
  friend bool operator==(const NodeCounts&, const NodeCounts&) = default;
};

struct NodeReport {
  Int node;
  NodeClass node_class;
  Int height;
  Int tree_root;
  Int cycle_length;
};

ZolotarevGraph build(Int n, Int L);

/// Builds Z(n, L) by lifting the permutation Z(n, L_n) back up the quotient
/// chain x_h = L_n, ..., x_0 = L: scale the smaller graph by gcd(n, x_j) and
/// attach each coset of preimages c + t * x_j / gcd(n, x_j).
ZolotarevGraph build_algorithm_z(Int n, Int L);

/// Node class from arithmetic alone: leaf iff gcd(n, L) does not divide m,
/// root iff L / L_n divides m, branch otherwise.
NodeClass classify_arith(Int n, Int L, Int m);

CycleCensus census_bruteforce(const ZolotarevGraph& g);

/// b_j = (1/j) sum_{d | j} mu(j/d) gcd(n^d - 1, L), for 1 <= j <= L.
CycleCensus census_formula(Int n, Int L);

/// b_j = (1/j) |{1 <= m <= L : ord_{L / gcd(L, m)}(n) = j}|; needs gcd(n, L) = 1.
CycleCensus census_order(Int n, Int L);

NodeCounts counts_from_graph(const ZolotarevGraph& g);

/// Closed-form counts (L_n roots, L - L/g leaves, L/g - L_n branches),
/// asserted against the graph.
NodeCounts counts(const ZolotarevGraph& g);

NodeReport node_report(const ZolotarevGraph& g, Int m);

/// Least k >= 0 with n^k a == b (mod L), or nullopt when b is unreachable.
std::optional<Int> distance(const ZolotarevGraph& g, Int a, Int b);

Int height(const ZolotarevGraph& g, Int m);

/// Tree(r): nodes whose forward path first meets the cycle at r. Includes r.
std::vector<Int> tree_of(const ZolotarevGraph& g, Int r);

struct TreeIsomorphism {
  bool isomorphic = false;
  std::vector<std::pair<Int, Int>> bijection;  // (node of Tree(r1), image in Tree(r2))
};

TreeIsomorphism trees_isomorphic(const ZolotarevGraph& g, Int r1, Int r2);

/// Checks that x -> x / v maps the multiples of v in Z(n, L) onto Z(n, L / v)
/// preserving adjacency.
bool subgraph_iso_check(Int n, Int L, Int v);

/// Every component whose cycle has length j holds exactly j * L / L_n nodes.
bool component_size_check(const ZolotarevGraph& g);

/// Isomorphism of whole functional graphs; returns phi with phi[a] in g2.
std::optional<std::vector<Int>> graph_isomorphism(const ZolotarevGraph& g1, const ZolotarevGraph& g2);

std::string to_dot(const ZolotarevGraph& g);

}  // namespace zolo
