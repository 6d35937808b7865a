#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coarsepaths/coarsepaths.hpp"

namespace fixtures {

namespace cp = coarsepaths;

struct Named {
  std::string name;
  cp::MultiGraph graph;
};

// Ladder edge ids that play the roles e1..e7 of the classic figure:
// e1 = 0, e2 = 1 (top rail), e3 = 3, e4 = 4, e5 = 5 (rungs), e6 = 7, e7 = 8 (bottom rail).
inline constexpr cp::EdgeId e1 = 0, e2 = 1, e3 = 3, e4 = 4, e5 = 5, e6 = 7, e7 = 8;

inline cp::MultiGraph gamma(std::vector<std::int64_t> k, std::size_t l) {
  return cp::gamma_kl(k, l, k.size() - 1);
}

inline cp::SimplePath path(const cp::MultiGraph& g, const std::vector<cp::EdgeId>& edges) {
  return cp::path_from_edge_set(g, cp::EdgeSet::from_ids(g.edge_count(), edges));
}

inline cp::Cycle cycle_with(const std::vector<cp::Cycle>& cycles, const cp::MultiGraph& g,
                            const std::vector<cp::EdgeId>& edges) {
  const auto target = cp::EdgeSet::from_ids(g.edge_count(), edges);
  for (const auto& c : cycles) {
    if (c.edge_set == target) return c;
  }
  throw std::runtime_error("no such cycle");
}

/// Same graph, rooted elsewhere.
inline cp::MultiGraph reroot(const cp::MultiGraph& g, cp::VertexId root) {
  cp::GraphSpec spec;
  spec.vertices = g.labels();
  for (const auto& e : g.edges()) spec.edges.push_back({e.id, g.label(e.u), g.label(e.v)});
  spec.root = g.label(root);
  return cp::build_graph(spec);
}

/// A spread of generated instances, all small enough for exhaustive oracles.
inline std::vector<Named> small_instances() {
  std::vector<Named> out;
  out.push_back({"doubled_path(4)", cp::doubled_path(4)});
  out.push_back({"ladder(3)", cp::ladder(3)});
  out.push_back({"ladder(4)", cp::ladder(4)});
  out.push_back({"gamma(0,1,3)l3", gamma({0, 1, 3}, 3)});
  out.push_back({"gamma(0,2,3)l2", gamma({0, 2, 3}, 2)});
  out.push_back({"gamma(0,1,4)l2", gamma({0, 1, 4}, 2)});
  out.push_back({"theta_chain", cp::theta_chain({{2, 2, 2}, {1, 3, 3}})});
  out.push_back({"fan(2)", cp::fan(2)});
  out.push_back({"hausdorff(3)", cp::hausdorff_graph(3)});
  out.push_back({"cactus(7,1)", cp::random_cactus(7, 1)});
  out.push_back({"cactus(9,5)", cp::random_cactus(9, 5)});
  return out;
}

}  // namespace fixtures
