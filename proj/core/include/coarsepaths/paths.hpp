#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coarsepaths/edge_set.hpp"
#include "coarsepaths/graph.hpp"

namespace coarsepaths {

struct Cycle;

/// A simple path given by its vertex and edge sequences. edges[i] joins
/// vertices[i] and vertices[i+1]. The empty path has one vertex (its source)
/// and no edges.
struct SimplePath {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  EdgeSet edge_set;

  VertexId source() const { return vertices.front(); }
  VertexId target() const { return vertices.back(); }
  std::size_t length() const noexcept { return edges.size(); }

  static SimplePath empty_at(const MultiGraph& g, VertexId v);

  friend bool operator==(const SimplePath& a, const SimplePath& b) {
    return a.vertices == b.vertices && a.edges == b.edges;
  }
};

/// Canonical order: by length, then lexicographically by edge ids.
bool canonical_less(const SimplePath& a, const SimplePath& b);

struct PathCaps {
  std::size_t max_paths = 1'000'000;
};

/// All simple paths from the root ending at one vertex, canonically ordered.
struct PathFiber {
  VertexId endpoint = 0;
  std::vector<SimplePath> paths;
};

/// S(Γ): every simple path starting at the root, the empty path included,
/// in canonical order. Throws OverflowError past caps.max_paths.
std::vector<SimplePath> enumerate_simple_paths(const MultiGraph& g, const PathCaps& caps = {});

/// Every simple path starting at `source` (empty path included), canonical order.
std::vector<SimplePath> enumerate_paths_from(const MultiGraph& g, VertexId source,
                                             const PathCaps& caps = {});

/// P_v(Γ). Prunes branches that can no longer reach v.
PathFiber enumerate_fiber(const MultiGraph& g, VertexId target, const PathCaps& caps = {});

/// All fibers indexed by vertex id.
std::vector<PathFiber> enumerate_fibers(const MultiGraph& g, const PathCaps& caps = {});

/// d(γ,δ) = |γ Δ δ|.
inline std::size_t symm_diff_metric(const SimplePath& a, const SimplePath& b) noexcept {
  return symmetric_difference_size(a.edge_set, b.edge_set);
}

/// Rebuilds the unique simple path from `source` (default: root) whose edge
/// set is `s`. Throws NotAPath when no such path exists.
SimplePath path_from_edge_set(const MultiGraph& g, const EdgeSet& s,
                              std::optional<VertexId> source = std::nullopt);

/// Non-throwing variant of path_from_edge_set.
std::optional<SimplePath> try_path_from_edge_set(const MultiGraph& g, const EdgeSet& s,
                                                 std::optional<VertexId> source = std::nullopt);

/// γ_C: reroutes γ through the other side of C. Throws EmptyIntersection if γ
/// misses C, FlipNotSimple if γ Δ C is not a simple path from γ's source.
SimplePath flip_on_cycle(const MultiGraph& g, const SimplePath& gamma, const Cycle& cycle);

/// A partition of a fiber by index.
struct Partition {
  std::vector<std::vector<std::size_t>> classes;  // each sorted; ordered by first member
  std::vector<std::size_t> class_of;

  bool same_class(std::size_t a, std::size_t b) const { return class_of[a] == class_of[b]; }
};

/// Classes of ~n on a fiber. `cycles` must be the complete cycle list of the
/// graph. Throws NotTransitiveError when ~n is not transitive on the fiber.
Partition equiv_classes(const PathFiber& fiber, std::size_t n, std::span<const Cycle> cycles);

/// Greedily peels whole cycles from `edges`. Returns the peeled cycle indices
/// if `edges` is exhausted, nullopt otherwise. Exact for edge-disjoint cycle
/// families (cactus graphs); informational elsewhere.
std::optional<std::vector<std::size_t>> decompose_into_cycles(const EdgeSet& edges,
                                                              std::span<const Cycle> cycles);

}  // namespace coarsepaths
