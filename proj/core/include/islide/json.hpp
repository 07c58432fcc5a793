#pragma once

#include <nlohmann/json.hpp>

#include "islide/graph.hpp"
#include "islide/independence.hpp"
#include "islide/reconfig.hpp"
#include "islide/search.hpp"
#include "islide/seeds.hpp"

namespace islide {

using Json = nlohmann::ordered_json;

/// {"n": 5, "edges": [[0, 1], ...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json vertex_set_to_json(VertexSet s);
VertexSet vertex_set_from_json(const Json& j);

Json independence_to_json(const IndependenceReport& r);

/// {"base", "nodes", "edges": [{"a", "b", "from", "to"}]}
Json slide_graph_to_json(const SlideGraph& sg);
/// Rebuilds from base and nodes; throws Error(Parse) when the stored edges
/// disagree with the rebuilt ones.
SlideGraph slide_graph_from_json(const Json& j);

Json trace_to_json(const ConstructionTrace& t);
ConstructionTrace trace_from_json(const Json& j);

Json verification_to_json(const VerificationReport& r);

Json search_report_to_json(const SearchReport& r);
SearchReport search_report_from_json(const Json& j);

Json table_to_json(const TableReport& t);

}  // namespace islide
