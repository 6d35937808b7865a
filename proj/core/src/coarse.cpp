#include "coarsepaths/coarse.hpp"

#include <algorithm>
#include <map>

#include "coarsepaths/parallel.hpp"

namespace coarsepaths {

PathSpace PathSpace::build(const MultiGraph& g, const PathCaps& caps) {
  PathSpace space;
  space.graph_ = g;
  space.fibers_ = enumerate_fibers(g, caps);
  const auto depth = distances_from(g, g.root());
  const std::size_t n = g.vertex_count();
  space.basepoint_.assign(n, 0);
  space.height_.resize(n);
  space.offset_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    space.height_[v] = depth[v] + 1;
    const auto& paths = space.fibers_[v].paths;
    const auto& base = paths[0];
    auto& off = space.offset_[v];
    off.reserve(paths.size());
    for (const auto& p : paths) off.push_back(symm_diff_metric(p, base));
    space.total_paths_ += paths.size();
  }
  return space;
}

const SimplePath& PathSpace::path(const PathRef& ref) const {
  if (!contains(ref)) throw Error(ErrorCode::NotMember, "path reference is not in P(Γ)");
  return fibers_[ref.vertex].paths[ref.index];
}

bool PathSpace::contains(const PathRef& ref) const noexcept {
  return ref.vertex < fibers_.size() && ref.index < fibers_[ref.vertex].paths.size();
}

std::size_t coarse_distance(const PathSpace& space, const PathRef& a, const PathRef& b) {
  const auto& pa = space.path(a);
  const auto& pb = space.path(b);
  if (a.vertex == b.vertex) return symm_diff_metric(pa, pb);
  return space.offset(a) + space.offset(b) + space.alpha(a.vertex, b.vertex);
}

namespace {

bool within(std::size_t d, std::size_t r, BallKind kind) {
  return kind == BallKind::Open ? d < r : d <= r;
}

template <typename Visit>
void scan_ball(const PathSpace& space, const PathRef& center, std::size_t r, BallKind kind,
               Visit&& visit) {
  const auto& c = space.path(center);
  const std::size_t off = space.offset(center);
  for (VertexId v = 0; v < space.fibers().size(); ++v) {
    const auto& paths = space.fiber(v).paths;
    if (v == center.vertex) {
      for (std::size_t i = 0; i < paths.size(); ++i) {
        if (within(symm_diff_metric(c, paths[i]), r, kind)) visit(PathRef{v, i});
      }
      continue;
    }
    const std::size_t gap = off + space.alpha(center.vertex, v);
    if (!within(gap, r, kind)) continue;
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (within(gap + space.offset({v, i}), r, kind)) visit(PathRef{v, i});
    }
  }
}

}  // namespace

std::vector<PathRef> ball(const PathSpace& space, const PathRef& center, std::size_t r,
                          BallKind kind) {
  std::vector<PathRef> out;
  scan_ball(space, center, r, kind, [&](const PathRef& ref) { out.push_back(ref); });
  return out;
}

std::size_t ball_size(const PathSpace& space, const PathRef& center, std::size_t r,
                      BallKind kind) {
  std::size_t n = 0;
  scan_ball(space, center, r, kind, [&](const PathRef&) { ++n; });
  return n;
}

CycleIncidenceProfile cycle_incidence_profile(const MultiGraph& g, std::size_t n_max,
                                              const PathCaps& path_caps,
                                              const CycleCaps& cycle_caps) {
  const auto cycles = enumerate_cycles(g, n_max, cycle_caps);
  const auto paths = enumerate_simple_paths(g, path_caps);
  CycleIncidenceProfile profile;
  profile.m.assign(n_max + 1, 0);
  std::vector<std::size_t> by_length(n_max + 1);
  for (const auto& p : paths) {
    std::fill(by_length.begin(), by_length.end(), 0);
    for (const auto& c : cycles) {
      if (p.edge_set.intersects(c.edge_set)) ++by_length[c.length()];
    }
    std::size_t running = 0;
    for (std::size_t n = 0; n <= n_max; ++n) {
      running += by_length[n];
      profile.m[n] = std::max(profile.m[n], running);
    }
  }
  return profile;
}

std::vector<GrowthRow> growth_profile(const PathSpace& space, std::size_t r_max,
                                      unsigned threads) {
  const std::size_t nv = space.fibers().size();
  // within_offset[h][k]: paths in fibers of height h whose basepoint offset is <= k.
  std::size_t max_height = 0;
  for (VertexId v = 0; v < nv; ++v) max_height = std::max(max_height, space.height(v));
  std::vector<std::vector<std::size_t>> by_height(max_height + 1,
                                                  std::vector<std::size_t>(r_max + 1, 0));
  std::vector<std::vector<std::size_t>> own(nv, std::vector<std::size_t>(r_max + 1, 0));
  for (VertexId v = 0; v < nv; ++v) {
    for (std::size_t i = 0; i < space.fiber(v).paths.size(); ++i) {
      const std::size_t off = space.offset({v, i});
      if (off <= r_max) ++own[v][off];
    }
    for (std::size_t k = 1; k <= r_max; ++k) own[v][k] += own[v][k - 1];
    for (std::size_t k = 0; k <= r_max; ++k) by_height[space.height(v)][k] += own[v][k];
  }

  std::vector<std::vector<std::size_t>> best(nv, std::vector<std::size_t>(r_max + 1, 0));
  parallel_for(nv, threads, [&](std::size_t idx) {
    const auto u = static_cast<VertexId>(idx);
    const auto& paths = space.fiber(u).paths;
    const std::size_t hu = space.height(u);
    std::vector<std::size_t> hist(r_max + 1);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      std::fill(hist.begin(), hist.end(), 0);
      for (const auto& q : paths) {
        const std::size_t d = symm_diff_metric(paths[i], q);
        if (d <= r_max) ++hist[d];
      }
      const std::size_t off = space.offset({u, i});
      std::size_t inside = 0;
      for (std::size_t r = 1; r <= r_max; ++r) {
        inside += hist[r - 1];  // in-fiber distances < r
        std::size_t count = inside;
        // Other fibers at height h contribute offsets <= r - 1 - off - hu - h.
        for (std::size_t h = 1; h <= max_height; ++h) {
          const std::size_t gap = off + hu + h;
          if (gap + 1 > r) break;
          const std::size_t k = r - 1 - gap;
          count += by_height[h][k];
          if (h == hu) count -= own[u][k];
        }
        best[idx][r] = std::max(best[idx][r], count);
      }
    }
  });

  std::vector<GrowthRow> rows;
  for (std::size_t r = 1; r <= r_max; ++r) {
    std::size_t m = 0;
    for (const auto& b : best) m = std::max(m, b[r]);
    rows.push_back({r, m});
  }
  return rows;
}

std::string to_string(GrowthTrend trend) {
  switch (trend) {
    case GrowthTrend::UnboundedTrend: return "unbounded trend (finite evidence)";
    case GrowthTrend::Stable: return "stable (finite evidence)";
    case GrowthTrend::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

BoundedGeometryReport bounded_geometry_report(const std::vector<Truncation>& family,
                                              std::size_t n, std::size_t r,
                                              const PathCaps& path_caps,
                                              const CycleCaps& cycle_caps, unsigned threads) {
  BoundedGeometryReport report;
  report.n = n;
  report.r = r;
  for (const auto& member : family) {
    const auto space = PathSpace::build(member.graph, path_caps);
    const auto growth = growth_profile(space, r, threads);
    const auto incidence = cycle_incidence_profile(member.graph, n, path_caps, cycle_caps);
    report.rows.push_back({member.t, space.total_paths(), growth.back().max_ball,
                           incidence.at(n)});
  }
  const auto& rows = report.rows;
  if (rows.size() >= 2) {
    report.strictly_increasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].c_r <= rows[i - 1].c_r) report.strictly_increasing = false;
    }
    std::size_t start = rows.size() - 1;
    while (start > 0 && rows[start - 1].c_r == rows.back().c_r) --start;
    if (start + 1 < rows.size()) report.plateau_from = rows[start].t;
  }
  if (report.strictly_increasing) {
    report.trend = GrowthTrend::UnboundedTrend;
  } else if (report.plateau_from) {
    report.trend = GrowthTrend::Stable;
  }
  return report;
}

std::string HalfInteger::str() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

namespace {

// Directed Hausdorff sup over points of `from`, in half units, given the
// distances `to_dist` from every vertex to the target path.
std::int64_t directed_hausdorff(const MultiGraph& g, const SimplePath& from,
                                const SimplePath& to, const std::vector<std::size_t>& to_dist,
                                HausdorffMode mode) {
  std::int64_t sup = 0;
  for (VertexId w : from.vertices) sup = std::max(sup, 2 * static_cast<std::int64_t>(to_dist[w]));
  if (mode == HausdorffMode::VertexSet) return sup;
  for (EdgeId e : from.edges) {
    if (to.edge_set.test(e)) continue;
    const auto da = static_cast<std::int64_t>(to_dist[g.edge(e).u]);
    const auto db = static_cast<std::int64_t>(to_dist[g.edge(e).v]);
    const std::int64_t far = (da == db) ? da + db + 1 : 2 * std::max(da, db);
    sup = std::max(sup, far);
  }
  return sup;
}

}  // namespace

HalfInteger hausdorff_metric(const MultiGraph& g, const SimplePath& gamma, const SimplePath& delta,
                             HausdorffMode mode) {
  const auto to_delta = distances_from_set(g, delta.vertices);
  const auto to_gamma = distances_from_set(g, gamma.vertices);
  return {std::max(directed_hausdorff(g, gamma, delta, to_delta, mode),
                   directed_hausdorff(g, delta, gamma, to_gamma, mode))};
}

HalfInteger hausdorff_diameter(const MultiGraph& g, const PathFiber& fiber, HausdorffMode mode) {
  const auto& paths = fiber.paths;
  std::vector<std::vector<std::size_t>> fields;
  fields.reserve(paths.size());
  for (const auto& p : paths) fields.push_back(distances_from_set(g, p.vertices));
  std::int64_t best = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      best = std::max({best, directed_hausdorff(g, paths[i], paths[j], fields[j], mode),
                       directed_hausdorff(g, paths[j], paths[i], fields[i], mode)});
    }
  }
  return {best};
}

}  // namespace coarsepaths
