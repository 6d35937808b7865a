#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coarsepaths/edge_set.hpp"
#include "coarsepaths/error.hpp"

namespace coarsepaths {

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  VertexId other(VertexId w) const noexcept { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One endpoint's view of an edge.
struct Incidence {
  EdgeId edge;
  VertexId neighbor;
};

/// Input to build_graph. Edge ids may be omitted, in which case they are
/// assigned densely in input order; if given they must be exactly 0..|E|-1.
struct GraphSpec {
  struct EdgeSpec {
    std::optional<EdgeId> id;
    std::string u;
    std::string v;
  };

  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::string root;
};

/// Rooted, connected, undirected multigraph without self-loops. Immutable
/// once built; all accessors are safe for concurrent readers.
class MultiGraph {
 public:
  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  VertexId root() const noexcept { return root_; }

  const std::string& label(VertexId v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Throws VertexMissing for unknown labels.
  VertexId vertex(const std::string& label) const;
  std::optional<VertexId> find_vertex(const std::string& label) const;
  bool contains(VertexId v) const noexcept { return v < labels_.size(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Incident edges of v ordered by edge id.
  const std::vector<Incidence>& incident(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const;

  /// Edges joining a and b, ordered by id.
  std::vector<EdgeId> edges_between(VertexId a, VertexId b) const;

  EdgeSet empty_edge_set() const { return EdgeSet(edges_.size()); }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_ && a.root_ == b.root_;
  }

 private:
  friend MultiGraph build_graph(const GraphSpec& spec);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  VertexId root_ = 0;
};

/// Validates the spec and builds the graph.
/// Errors: DuplicateVertex, VertexMissing, SelfLoop, DuplicateEdgeId,
/// RootMissing, Disconnected.
MultiGraph build_graph(const GraphSpec& spec);

/// Breadth-first edge-count distances from `source` to every vertex.
std::vector<std::size_t> distances_from(const MultiGraph& g, VertexId source);

/// Distances to the nearest member of `sources`.
std::vector<std::size_t> distances_from_set(const MultiGraph& g,
                                            const std::vector<VertexId>& sources);

/// Graph metric. Throws VertexMissing if either vertex is not in g.
std::size_t graph_distance(const MultiGraph& g, VertexId u, VertexId v);

}  // namespace coarsepaths
