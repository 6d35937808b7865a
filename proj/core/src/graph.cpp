#include "coarsepaths/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace coarsepaths {

VertexId MultiGraph::vertex(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw Error(ErrorCode::VertexMissing, "unknown vertex '" + label + "'");
  }
  return it->second;
}

std::optional<VertexId> MultiGraph::find_vertex(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MultiGraph::degree(VertexId v) const {
  if (!contains(v)) {
    throw Error(ErrorCode::VertexMissing, "vertex id " + std::to_string(v) + " out of range");
  }
  return adjacency_[v].size();
}

std::vector<EdgeId> MultiGraph::edges_between(VertexId a, VertexId b) const {
  std::vector<EdgeId> out;
  for (const auto& inc : adjacency_.at(a)) {
    if (inc.neighbor == b) out.push_back(inc.edge);
  }
  return out;
}

MultiGraph build_graph(const GraphSpec& spec) {
  MultiGraph g;
  g.labels_ = spec.vertices;
  g.index_.reserve(spec.vertices.size());
  for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
    if (!g.index_.emplace(spec.vertices[i], static_cast<VertexId>(i)).second) {
      throw Error(ErrorCode::DuplicateVertex, "duplicate vertex '" + spec.vertices[i] + "'");
    }
  }

  auto root = g.index_.find(spec.root);
  if (root == g.index_.end()) {
    throw Error(ErrorCode::RootMissing, "root '" + spec.root + "' is not a vertex");
  }
  g.root_ = root->second;

  const std::size_t m = spec.edges.size();
  const bool explicit_ids = std::any_of(spec.edges.begin(), spec.edges.end(),
                                        [](const auto& e) { return e.id.has_value(); });
  std::vector<std::optional<Edge>> slots(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& es = spec.edges[i];
    EdgeId id = static_cast<EdgeId>(i);
    if (explicit_ids) {
      if (!es.id) {
        throw Error(ErrorCode::ParseError, "edge " + std::to_string(i) + " lacks an id");
      }
      id = *es.id;
      if (id >= m) {
        throw Error(ErrorCode::ParseError, "edge id " + std::to_string(id) +
                                               " outside dense range 0.." + std::to_string(m - 1));
      }
      if (slots[id]) {
        throw Error(ErrorCode::DuplicateEdgeId, "duplicate edge id " + std::to_string(id));
      }
    }
    auto lookup = [&](const std::string& label) {
      auto it = g.index_.find(label);
      if (it == g.index_.end()) {
        throw Error(ErrorCode::VertexMissing,
                    "edge " + std::to_string(id) + " references unknown vertex '" + label + "'");
      }
      return it->second;
    };
    const VertexId u = lookup(es.u);
    const VertexId v = lookup(es.v);
    if (u == v) {
      throw Error(ErrorCode::SelfLoop, "edge " + std::to_string(id) + " is a self-loop at '" +
                                           es.u + "'");
    }
    slots[id] = Edge{id, u, v};
  }

  g.edges_.reserve(m);
  for (auto& s : slots) g.edges_.push_back(*s);

  g.adjacency_.assign(g.labels_.size(), {});
  for (const auto& e : g.edges_) {
    g.adjacency_[e.u].push_back({e.id, e.v});
    g.adjacency_[e.v].push_back({e.id, e.u});
  }

  const auto dist = distances_from(g, g.root_);
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] == std::numeric_limits<std::size_t>::max()) {
      throw Error(ErrorCode::Disconnected,
                  "vertex '" + g.labels_[v] + "' is unreachable from the root");
    }
  }
  return g;
}

std::vector<std::size_t> distances_from_set(const MultiGraph& g,
                                            const std::vector<VertexId>& sources) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.vertex_count(), kInf);
  std::deque<VertexId> queue;
  for (VertexId s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(x)) {
      if (dist[inc.neighbor] == kInf) {
        dist[inc.neighbor] = dist[x] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

std::vector<std::size_t> distances_from(const MultiGraph& g, VertexId source) {
  return distances_from_set(g, {source});
}

std::size_t graph_distance(const MultiGraph& g, VertexId u, VertexId v) {
  if (!g.contains(u) || !g.contains(v)) {
    throw Error(ErrorCode::VertexMissing, "graph_distance: vertex out of range");
  }
  if (u == v) return 0;
  return distances_from(g, u)[v];
}

}  // namespace coarsepaths
