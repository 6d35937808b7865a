#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coarsepaths/edge_set.hpp"
#include "coarsepaths/error.hpp"
#include "coarsepaths/graph.hpp"
#include "coarsepaths/paths.hpp"

namespace coarsepaths {

/// A simple closed path in canonical form: vertices start at the smallest
/// vertex id and run in the direction whose second vertex is smaller; for
/// 2-cycles the lower edge id comes first. edges[i] joins vertices[i] and
/// vertices[(i+1) % length].
struct Cycle {
  EdgeSet edge_set;
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return edges.size(); }

  friend bool operator==(const Cycle& a, const Cycle& b) {
    return a.vertices == b.vertices && a.edges == b.edges;
  }
};

struct CycleCaps {
  std::size_t max_cycles = 100'000;
};

/// Every simple cycle of length <= max_len (all if unset), each once, sorted
/// by (length, vertices, edges). Parallel edges contribute 2-cycles.
/// Johnson-style blocked-set backtracking on the underlying simple graph,
/// expanded over parallel edge choices. Throws OverflowError past the cap.
std::vector<Cycle> enumerate_cycles(const MultiGraph& g,
                                    std::optional<std::size_t> max_len = std::nullopt,
                                    const CycleCaps& caps = {});

/// Every biconnected block is a single edge or a single cycle.
bool is_cactus(const MultiGraph& g);

/// γ and δ both meet C and their traces on C partition C.
bool diverge_on(const EdgeSet& gamma, const EdgeSet& delta, const EdgeSet& cycle) noexcept;
inline bool diverge_on(const SimplePath& gamma, const SimplePath& delta,
                       const Cycle& cycle) noexcept {
  return diverge_on(gamma.edge_set, delta.edge_set, cycle.edge_set);
}

/// γ ~n δ: equal endpoints and no divergence on any cycle longer than n.
/// Throws EndpointMismatch.
bool equiv_n(const SimplePath& gamma, const SimplePath& delta, std::size_t n,
             std::span<const Cycle> cycles);

/// {0} ∪ {distinct cycle lengths}, ascending. ~n only changes at these n.
std::vector<std::size_t> critical_values(std::span<const Cycle> cycles);

/// For a family of equal-endpoint paths: entry (i,j) is the length of the
/// longest cycle on which paths i and j diverge, 0 if none. Then
/// i ~n j  <=>  at(i,j) <= n.
class DivergenceTable {
 public:
  DivergenceTable(std::span<const SimplePath> paths, std::span<const Cycle> cycles);

  std::size_t size() const noexcept { return size_; }
  std::uint32_t at(std::size_t i, std::size_t j) const noexcept { return table_[i * size_ + j]; }
  bool related(std::size_t i, std::size_t j, std::size_t n) const noexcept {
    return at(i, j) <= n;
  }

 private:
  std::size_t size_;
  std::vector<std::uint32_t> table_;
};

/// γ ~ δ and δ ~ ε but not γ ~ ε at scale n, by index.
struct TransitivityViolation {
  std::size_t n;
  std::size_t gamma;
  std::size_t delta;
  std::size_t epsilon;
};

/// Smallest n in `critical` (ascending) at which ~n fails to be transitive,
/// with the lexicographically first witness triple at that n.
std::optional<TransitivityViolation> find_transitivity_violation(
    const DivergenceTable& table, std::span<const std::size_t> critical);

/// Carries the witness triple of a failed transitivity check.
class NotTransitiveError : public Error {
 public:
  NotTransitiveError(std::size_t n, SimplePath gamma, SimplePath delta, SimplePath epsilon);

  std::size_t n() const noexcept { return n_; }
  const SimplePath& gamma() const noexcept { return gamma_; }
  const SimplePath& delta() const noexcept { return delta_; }
  const SimplePath& epsilon() const noexcept { return epsilon_; }

 private:
  std::size_t n_;
  SimplePath gamma_, delta_, epsilon_;
};

struct Counterexample {
  VertexId u;
  VertexId v;
  std::size_t n;
  SimplePath gamma, delta, epsilon;
  /// Longest divergence cycle for each pair (0 if none).
  std::size_t gamma_delta;
  std::size_t delta_epsilon;
  std::size_t gamma_epsilon;
};

struct ControlledCyclesVerdict {
  bool controlled = true;
  std::optional<Counterexample> counterexample;
  std::vector<std::size_t> critical_n;
  std::size_t vertex_pairs = 0;
  std::size_t paths_examined = 0;
};

struct ControlledCaps {
  std::size_t max_paths = 1'000'000;   // per source vertex
  std::size_t max_cycles = 100'000;
  unsigned threads = 0;                // 0: use default_thread_count()
};

/// Checks transitivity of ~n for every vertex pair and every critical n.
/// The reported counterexample has the smallest n, then the smallest
/// (u, v) pair, then the first triple. Throws OverflowError past caps.
ControlledCyclesVerdict has_controlled_cycles(const MultiGraph& g, const ControlledCaps& caps = {});

/// Two vertices joined by three internally vertex-disjoint paths, arcs
/// sorted by length (ties keep enumeration order).
struct ThetaSubgraph {
  VertexId v1;
  VertexId v2;
  std::array<SimplePath, 3> arcs;

  std::array<std::size_t, 3> lengths() const {
    return {arcs[0].length(), arcs[1].length(), arcs[2].length()};
  }
};

struct ThetaCaps {
  std::size_t max_thetas = 100'000;
  std::size_t max_paths = 1'000'000;  // per source vertex
};

/// All Θ-shaped subgraphs. Throws OverflowError past caps.
std::vector<ThetaSubgraph> theta_subgraphs(const MultiGraph& g, const ThetaCaps& caps = {});

struct ThetaVerdict {
  bool holds = true;
  std::optional<ThetaSubgraph> violation;
  std::size_t thetas_checked = 0;
};

/// Every Θ has its two shorter arcs of equal length. Necessary for
/// controlled cycles; stops at the first violation.
ThetaVerdict theta_length_condition(const MultiGraph& g, const ThetaCaps& caps = {});

}  // namespace coarsepaths
