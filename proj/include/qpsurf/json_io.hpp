#pragma once

// JSON documents for words, band representations, summaries, combed graphs
// and quasipositization results. Malformed documents raise MalformedDocument.

#include "json.hpp"
#include "qpsurf/constructions.hpp"
#include "qpsurf/qpize.hpp"

namespace qpsurf {

using Json = nlohmann::json;

Json to_json(const BraidWord& w);
Json to_json(const BandRepresentation& rep);
Json to_json(const SurfaceSummary& s);
Json to_json(const CombedGraph& g);
Json to_json(const WhiteheadSite& site);
Json to_json(const QuasipositizationResult& r);
Json to_json(const FiberReport& r);

/// Coefficients of the canonical representative, lowest degree first.
Json alexander_json(const Laurent& p);

BraidWord word_from_json(const Json& j);
BandRepresentation rep_from_json(const Json& j);
CombedGraph graph_from_json(const Json& j);

}  // namespace qpsurf
