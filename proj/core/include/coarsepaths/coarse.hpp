#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coarsepaths/cycles.hpp"
#include "coarsepaths/graph.hpp"
#include "coarsepaths/paths.hpp"

namespace coarsepaths {

/// Address of a path inside P(Γ): its endpoint's fiber and its canonical index.
struct PathRef {
  VertexId vertex;
  std::size_t index;
  friend auto operator<=>(const PathRef&, const PathRef&) = default;
};

/// The coarse disjoint union P(Γ) of all fibers P_v(Γ).
///
/// Basepoint of P_v: the canonically first path of the fiber, i.e. the
/// lexicographically least shortest path. Offsets between distinct fibers:
/// alpha(u,v) = h(u) + h(v) with h(v) = d(root, v) + 1, which is symmetric,
/// satisfies the triangle inequality, and diverges along any infinite ray.
class PathSpace {
 public:
  static PathSpace build(const MultiGraph& g, const PathCaps& caps = {});

  const MultiGraph& graph() const noexcept { return graph_; }
  const std::vector<PathFiber>& fibers() const noexcept { return fibers_; }
  const PathFiber& fiber(VertexId v) const { return fibers_.at(v); }
  const SimplePath& path(const PathRef& ref) const;
  bool contains(const PathRef& ref) const noexcept;
  std::size_t total_paths() const noexcept { return total_paths_; }

  std::size_t basepoint_index(VertexId v) const { return basepoint_.at(v); }
  const SimplePath& basepoint(VertexId v) const { return fibers_.at(v).paths[basepoint_.at(v)]; }
  std::size_t height(VertexId v) const { return height_.at(v); }
  std::size_t alpha(VertexId u, VertexId v) const {
    return u == v ? 0 : height_.at(u) + height_.at(v);
  }
  /// d(path, basepoint of its fiber).
  std::size_t offset(const PathRef& ref) const { return offset_.at(ref.vertex).at(ref.index); }

 private:
  MultiGraph graph_;
  std::vector<PathFiber> fibers_;
  std::vector<std::size_t> basepoint_;
  std::vector<std::size_t> height_;
  std::vector<std::vector<std::size_t>> offset_;
  std::size_t total_paths_ = 0;
};

/// Same fiber: |γ Δ δ|. Otherwise d(γ,b_u) + d(δ,b_v) + alpha(u,v).
/// Throws NotMember for refs outside P.
std::size_t coarse_distance(const PathSpace& space, const PathRef& a, const PathRef& b);

enum class BallKind { Open, Closed };

/// {δ : d(γ,δ) < r} (open) or <= r (closed), across all fibers, sorted.
std::vector<PathRef> ball(const PathSpace& space, const PathRef& center, std::size_t r,
                          BallKind kind = BallKind::Open);
std::size_t ball_size(const PathSpace& space, const PathRef& center, std::size_t r,
                      BallKind kind = BallKind::Open);

/// m(n) for n = 0..n_max: the largest number of cycles of length <= n met
/// (sharing an edge) by a single path of S(Γ).
struct CycleIncidenceProfile {
  std::vector<std::size_t> m;
  std::size_t at(std::size_t n) const { return m.at(n); }
};

CycleIncidenceProfile cycle_incidence_profile(const MultiGraph& g, std::size_t n_max,
                                              const PathCaps& path_caps = {},
                                              const CycleCaps& cycle_caps = {});

/// Row r: the largest open r-ball in P(Γ).
struct GrowthRow {
  std::size_t r;
  std::size_t max_ball;
};

std::vector<GrowthRow> growth_profile(const PathSpace& space, std::size_t r_max,
                                      unsigned threads = 0);

/// One member of a truncation family, e.g. Γ_{k,l} cut after t blocks.
struct Truncation {
  std::size_t t;
  MultiGraph graph;
};

enum class GrowthTrend { UnboundedTrend, Stable, Inconclusive };
std::string to_string(GrowthTrend trend);

struct BoundedGeometryRow {
  std::size_t t;
  std::size_t paths;
  std::size_t c_r;
  std::size_t m_n;
};

/// Finite evidence only: a growing C_r column suggests unbounded geometry,
/// a plateau suggests bounded geometry. Never a proof.
struct BoundedGeometryReport {
  std::size_t n;
  std::size_t r;
  std::vector<BoundedGeometryRow> rows;
  bool strictly_increasing = false;
  /// First t from which C_r stays constant through the last row (needs at
  /// least two rows in the plateau).
  std::optional<std::size_t> plateau_from;
  GrowthTrend trend = GrowthTrend::Inconclusive;
};

BoundedGeometryReport bounded_geometry_report(const std::vector<Truncation>& family,
                                              std::size_t n, std::size_t r,
                                              const PathCaps& path_caps = {},
                                              const CycleCaps& cycle_caps = {},
                                              unsigned threads = 0);

/// A non-negative multiple of 1/2, stored as its double.
struct HalfInteger {
  std::int64_t twice = 0;
  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
  static HalfInteger whole(std::int64_t v) { return {2 * v}; }
  double value() const { return static_cast<double>(twice) / 2.0; }
  std::string str() const;  // "3/2", "1", "0"
};

enum class HausdorffMode {
  Geometric,  // paths as closed subsets of the metric graph, points on edges included
  VertexSet,  // vertex sets only
};

/// Hausdorff distance between two paths. Points on an edge (a,b) outside
/// the other path sit at distance min(x + D(a), 1 - x + D(b)), D being the
/// graph distance to the other path's vertices, so every value is a multiple
/// of 1/2.
HalfInteger hausdorff_metric(const MultiGraph& g, const SimplePath& gamma, const SimplePath& delta,
                             HausdorffMode mode = HausdorffMode::Geometric);

/// Max pairwise Hausdorff distance across the fiber (0 for singletons).
HalfInteger hausdorff_diameter(const MultiGraph& g, const PathFiber& fiber,
                               HausdorffMode mode = HausdorffMode::Geometric);

}  // namespace coarsepaths
