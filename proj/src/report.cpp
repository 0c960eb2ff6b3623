#include "zolo/report.hpp"

#include <sstream>

namespace zolo {

CensusComparison compare_census(Int n, Int L) {
  const ZolotarevGraph g = build(n, L);
  CensusComparison c{n, L, census_formula(n, L), census_bruteforce(g), std::nullopt};
  if (gcd(n, L) == 1) c.order = census_order(n, L);
  return c;
}

Json to_json(const CycleCensus& c) {
  Json j = Json::object();
  for (auto [len, count] : c.entries) j[std::to_string(len)] = count;
  return j;
}

Json to_json(const NodeCounts& c) {
  return Json{{"roots", c.roots}, {"leaves", c.leaves}, {"branches", c.branches}};
}

Json graph_json(const ZolotarevGraph& g) {
  Json j;
  j["n"] = g.n;
  j["L"] = g.L;
  j["L_n"] = simplified_level(g.L, g.n).value;
  j["counts"] = to_json(counts(g));
  j["component_count"] = g.component_count();
  j["census"] = to_json(census_bruteforce(g));
  Int h = 0;
  for (Int x : g.height) h = std::max(h, x);
  j["height"] = h;
  Json components = Json::array();
  std::vector<Int> sizes(g.cycles.size(), 0);
  for (Int c : g.component_id) ++sizes[c];
  for (std::size_t c = 0; c < g.cycles.size(); ++c) {
    components.push_back(Json{{"cycle", g.cycles[c]}, {"size", sizes[c]}});
  }
  j["components"] = components;
  Json nodes = Json::array();
  for (Int a = 0; a < g.L; ++a) {
    nodes.push_back(Json{{"id", a},
                         {"succ", g.succ[a]},
                         {"class", to_string(g.node_class[a])},
                         {"height", g.height[a]},
                         {"tree_root", g.tree_root[a]}});
  }
  j["nodes"] = nodes;
  return j;
}

Json to_json(const CensusComparison& c) {
  Json j;
  j["n"] = c.n;
  j["L"] = c.L;
  j["formula"] = to_json(c.formula);
  j["bruteforce"] = to_json(c.bruteforce);
  j["order"] = c.order ? to_json(*c.order) : Json(nullptr);
  j["agree"] = c.agree();
  return j;
}

Json to_json(const KernelReport& r) {
  Json j;
  j["n"] = r.n;
  j["L"] = r.L;
  j["kappa"] = r.kappa;
  j["dim"] = r.dim;
  j["dim_rank"] = r.dim_rank ? Json(*r.dim_rank) : Json(nullptr);
  j["basis"] = r.leaves;
  return j;
}

Json to_json(const DiagonalizabilityReport& r) {
  Json j;
  j["n"] = r.n;
  j["L"] = r.L;
  j["dims_fill_space"] = r.dims_fill_space;
  j["level_identity"] = r.level_identity;
  j["no_branches"] = r.no_branches;
  j["n_is_root"] = r.n_is_root;
  j["unit_height"] = r.unit_height;
  j["diagonalizable"] = r.verdict;
  return j;
}

Json to_json(const EigenReport& r) {
  Json j;
  j["n"] = r.n;
  j["L"] = r.L;
  j["L_n"] = r.Ln;
  j["kappa"] = r.kappa;
  j["m"] = r.m;
  j["dim_formula"] = r.dim_formula;
  j["dim_rank"] = r.dim_rank ? Json(*r.dim_rank) : Json(nullptr);
  Json basis = Json::array();
  for (const auto& f : r.basis) {
    // exponents e of omega^e, null where the coefficient is 0
    Json coeffs = Json::array();
    for (Int e : f.coeff_exponents) coeffs.push_back(e < 0 ? Json(nullptr) : Json(e));
    basis.push_back(Json{{"root", f.root}, {"cycle_length", f.cycle_length}, {"exponents", coeffs}});
  }
  j["basis"] = basis;
  return j;
}

Json to_json(const SpectrumWitness& w) {
  return Json{{"L", w.L}, {"m", w.m}, {"order", w.order}, {"scale", w.scale}};
}

Json to_json(const ArtinReport& r) {
  Json j;
  j["n"] = r.n;
  j["bound"] = r.bound;
  j["scanned"] = r.scanned;
  j["primes"] = r.primes;
  j["density"] = r.density;
  return j;
}

Json to_json(const VBasisReport& r) {
  Json j;
  j["L"] = r.L;
  j["kappa"] = r.kappa;
  j["moduli"] = r.moduli;
  j["dim_product"] = r.dim_product;
  j["dim_sum"] = r.dim_sum;
  j["dim_rank"] = r.dim_rank;
  Json members = Json::array();
  for (const auto& m : r.members) {
    Json values = Json::array();
    for (Int v : m.chi.values) values.push_back(v < 0 ? Json(nullptr) : Json(v));
    members.push_back(Json{{"M", m.modulus}, {"index", m.index}, {"order", m.chi.order}, {"exponents", values}});
  }
  j["members"] = members;
  return j;
}

Json to_json(const LevelWeightReport& r) {
  Json j;
  j["level"] = r.level;
  j["weight"] = r.weight ? Json(*r.weight) : Json(nullptr);
  Json factors = Json::object();
  for (auto [d, mult] : r.cyclotomic_factors) factors[std::to_string(d)] = mult;
  j["cyclotomic_factors"] = factors;
  j["residual"] = format_polynomial(r.residual);
  return j;
}

Json to_json(const RationalFunction& f) {
  return Json{{"numerator", format_polynomial(f.numerator())},
              {"denominator", format_polynomial(f.denominator())},
              {"text", format_rational_function(f)}};
}

Json series_json(const Series& s) {
  Json j = Json::array();
  for (const auto& c : s) j.push_back(c.get_str());
  return j;
}

std::string census_csv(const CensusComparison& c, bool header) {
  std::ostringstream out;
  if (header) out << "j,formula,bruteforce,order\n";
  Int max_j = std::max(c.formula.max_j(), c.bruteforce.max_j());
  if (c.order) max_j = std::max(max_j, c.order->max_j());
  for (Int j = 1; j <= max_j; ++j) {
    const Int f = c.formula.at(j), b = c.bruteforce.at(j);
    const Int o = c.order ? c.order->at(j) : 0;
    if (f == 0 && b == 0 && o == 0) continue;
    out << j << ',' << f << ',' << b << ',';
    if (c.order) out << o;
    out << '\n';
  }
  return out.str();
}

std::string artin_csv(const ArtinReport& r, bool header) {
  std::ostringstream out;
  if (header) out << "p,qualifies,ord_p_n\n";
  for (const auto& row : r.rows) out << row.p << ',' << (row.qualifies ? 1 : 0) << ',' << row.order << '\n';
  return out.str();
}

}  // namespace zolo
