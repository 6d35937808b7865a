#include "coarsepaths/paths.hpp"

#include <algorithm>
#include <deque>

#include "coarsepaths/cycles.hpp"

namespace coarsepaths {

namespace {

// Depth-first walk over simple paths from `source`. `visit` is called on every
// path (including the empty one) and returns whether to descend further.
template <typename Visit>
void walk_simple_paths(const MultiGraph& g, VertexId source, Visit&& visit) {
  std::vector<char> on_path(g.vertex_count(), 0);
  SimplePath current = SimplePath::empty_at(g, source);
  on_path[source] = 1;

  auto rec = [&](auto&& self) -> void {
    if (!visit(current)) return;
    const VertexId here = current.target();
    for (const auto& inc : g.incident(here)) {
      if (on_path[inc.neighbor]) continue;
      on_path[inc.neighbor] = 1;
      current.vertices.push_back(inc.neighbor);
      current.edges.push_back(inc.edge);
      current.edge_set.set(inc.edge);
      self(self);
      current.edge_set.reset(inc.edge);
      current.edges.pop_back();
      current.vertices.pop_back();
      on_path[inc.neighbor] = 0;
    }
  };
  rec(rec);
}

// Whether `target` is reachable from `from` without entering blocked vertices.
bool reachable_avoiding(const MultiGraph& g, VertexId from, VertexId target,
                        const std::vector<char>& blocked, std::vector<char>& seen) {
  if (from == target) return true;
  std::fill(seen.begin(), seen.end(), 0);
  std::deque<VertexId> queue{from};
  seen[from] = 1;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(x)) {
      const VertexId y = inc.neighbor;
      if (y == target) return true;
      if (seen[y] || blocked[y]) continue;
      seen[y] = 1;
      queue.push_back(y);
    }
  }
  return false;
}

void sort_canonical(std::vector<SimplePath>& paths) {
  std::sort(paths.begin(), paths.end(), canonical_less);
}

}  // namespace

SimplePath SimplePath::empty_at(const MultiGraph& g, VertexId v) {
  SimplePath p;
  p.vertices.push_back(v);
  p.edge_set = g.empty_edge_set();
  return p;
}

bool canonical_less(const SimplePath& a, const SimplePath& b) {
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  if (a.edges != b.edges) return a.edges < b.edges;
  return a.vertices < b.vertices;
}

std::vector<SimplePath> enumerate_paths_from(const MultiGraph& g, VertexId source,
                                             const PathCaps& caps) {
  if (!g.contains(source)) throw Error(ErrorCode::VertexMissing, "path source out of range");
  std::vector<SimplePath> out;
  walk_simple_paths(g, source, [&](const SimplePath& p) {
    if (out.size() >= caps.max_paths) throw OverflowError("simple path count", caps.max_paths);
    out.push_back(p);
    return true;
  });
  sort_canonical(out);
  return out;
}

std::vector<SimplePath> enumerate_simple_paths(const MultiGraph& g, const PathCaps& caps) {
  return enumerate_paths_from(g, g.root(), caps);
}

PathFiber enumerate_fiber(const MultiGraph& g, VertexId target, const PathCaps& caps) {
  if (!g.contains(target)) throw Error(ErrorCode::VertexMissing, "fiber endpoint out of range");
  PathFiber fiber{target, {}};
  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<char> seen(g.vertex_count(), 0);
  walk_simple_paths(g, g.root(), [&](const SimplePath& p) {
    if (p.target() == target) {
      if (fiber.paths.size() >= caps.max_paths) {
        throw OverflowError("fiber path count", caps.max_paths);
      }
      fiber.paths.push_back(p);
      return false;  // a simple path cannot pass through its own endpoint again
    }
    std::fill(on_path.begin(), on_path.end(), 0);
    for (VertexId v : p.vertices) on_path[v] = 1;
    return reachable_avoiding(g, p.target(), target, on_path, seen);
  });
  sort_canonical(fiber.paths);
  return fiber;
}

std::vector<PathFiber> enumerate_fibers(const MultiGraph& g, const PathCaps& caps) {
  std::vector<PathFiber> fibers(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) fibers[v].endpoint = v;
  for (auto& p : enumerate_simple_paths(g, caps)) {
    fibers[p.target()].paths.push_back(std::move(p));
  }
  return fibers;  // canonical order survives the stable bucketing
}

std::optional<SimplePath> try_path_from_edge_set(const MultiGraph& g, const EdgeSet& s,
                                                 std::optional<VertexId> source) {
  const VertexId start = source.value_or(g.root());
  SimplePath path = SimplePath::empty_at(g, start);
  const std::size_t want = s.count();
  std::vector<char> visited(g.vertex_count(), 0);
  visited[start] = 1;
  while (path.edges.size() < want) {
    const VertexId here = path.target();
    std::optional<Incidence> next;
    for (const auto& inc : g.incident(here)) {
      if (!s.test(inc.edge) || path.edge_set.test(inc.edge)) continue;
      if (next) return std::nullopt;  // branches
      next = inc;
    }
    if (!next || visited[next->neighbor]) return std::nullopt;
    visited[next->neighbor] = 1;
    path.vertices.push_back(next->neighbor);
    path.edges.push_back(next->edge);
    path.edge_set.set(next->edge);
  }
  return path;
}

SimplePath path_from_edge_set(const MultiGraph& g, const EdgeSet& s,
                              std::optional<VertexId> source) {
  auto p = try_path_from_edge_set(g, s, source);
  if (!p) {
    throw Error(ErrorCode::NotAPath, "edge set is not a simple path from the source");
  }
  return std::move(*p);
}

SimplePath flip_on_cycle(const MultiGraph& g, const SimplePath& gamma, const Cycle& cycle) {
  if (!gamma.edge_set.intersects(cycle.edge_set)) {
    throw Error(ErrorCode::EmptyIntersection, "path does not meet the cycle");
  }
  auto flipped = try_path_from_edge_set(g, gamma.edge_set ^ cycle.edge_set, gamma.source());
  if (!flipped) {
    throw Error(ErrorCode::FlipNotSimple, "rerouting through the cycle is not a simple path");
  }
  return std::move(*flipped);
}

Partition equiv_classes(const PathFiber& fiber, std::size_t n, std::span<const Cycle> cycles) {
  const auto& paths = fiber.paths;
  for (const auto& p : paths) {
    if (p.target() != fiber.endpoint) {
      throw Error(ErrorCode::EndpointMismatch, "fiber member ends at the wrong vertex");
    }
  }
  DivergenceTable table(paths, cycles);
  const std::size_t scale[] = {n};
  if (auto bad = find_transitivity_violation(table, scale)) {
    throw NotTransitiveError(n, paths[bad->gamma], paths[bad->delta], paths[bad->epsilon]);
  }

  Partition part;
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  part.class_of.assign(paths.size(), kUnset);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (part.class_of[i] != kUnset) continue;
    const std::size_t id = part.classes.size();
    auto& members = part.classes.emplace_back();
    for (std::size_t j = i; j < paths.size(); ++j) {
      if (part.class_of[j] == kUnset && table.related(i, j, n)) {
        part.class_of[j] = id;
        members.push_back(j);
      }
    }
  }
  return part;
}

std::optional<std::vector<std::size_t>> decompose_into_cycles(const EdgeSet& edges,
                                                              std::span<const Cycle> cycles) {
  EdgeSet rest = edges;
  std::vector<std::size_t> used;
  for (std::size_t i = 0; i < cycles.size() && rest.any(); ++i) {
    if (cycles[i].edge_set.is_subset_of(rest)) {
      rest.subtract(cycles[i].edge_set);
      used.push_back(i);
    }
  }
  if (rest.any()) return std::nullopt;
  return used;
}

}  // namespace coarsepaths
