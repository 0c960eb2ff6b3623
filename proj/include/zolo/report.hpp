#pragma once

// Serialization of reports. Field order is fixed so that output is
// byte-identical across runs.

#include <json.hpp>

#include <optional>
#include <string>

#include "zolo/ratfun.hpp"
#include "zolo/simult.hpp"
#include "zolo/specop.hpp"
#include "zolo/zgraph.hpp"

namespace zolo {

using Json = nlohmann::ordered_json;

struct CensusComparison {
  Int n, L;
  CycleCensus formula;
  CycleCensus bruteforce;
  std::optional<CycleCensus> order;  // only when gcd(n, L) = 1
  bool agree() const { return formula == bruteforce && (!order || *order == formula); }
};

CensusComparison compare_census(Int n, Int L);

Json to_json(const CycleCensus& c);
Json to_json(const NodeCounts& c);
Json graph_json(const ZolotarevGraph& g);
Json to_json(const CensusComparison& c);
Json to_json(const KernelReport& r);
Json to_json(const DiagonalizabilityReport& r);
Json to_json(const EigenReport& r);
Json to_json(const SpectrumWitness& w);
Json to_json(const ArtinReport& r);
Json to_json(const VBasisReport& r);
Json to_json(const LevelWeightReport& r);
Json to_json(const RationalFunction& f);
/// Exact rationals as "p/q" strings.
Json series_json(const Series& s);

std::string census_csv(const CensusComparison& c, bool header = true);
std::string artin_csv(const ArtinReport& r, bool header = true);

}  // namespace zolo
