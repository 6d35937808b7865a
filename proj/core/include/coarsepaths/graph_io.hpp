#pragma once

#include <string>
#include <string_view>

#include "coarsepaths/graph.hpp"

namespace coarsepaths {

enum class GraphFormat { Json, Dot };

/// "json" or "dot" (case-sensitive). Throws UnknownFormat otherwise.
GraphFormat parse_graph_format(std::string_view name);

/// JSON: {"vertices":[...],"edges":[[id,u,v],...],"root":...} on one line.
/// DOT: an undirected graph with vertices declared in id order, edge ids as
/// labels, and the root tagged with a `root=true` attribute.
/// Both are byte-exact functions of the graph.
std::string export_graph(const MultiGraph& g, GraphFormat format);

/// Inverse of export_graph. JSON vertices may be strings or integers.
/// Throws ParseError on malformed input plus any build_graph error.
MultiGraph import_graph(std::string_view text, GraphFormat format);

}  // namespace coarsepaths
