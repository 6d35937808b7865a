#include "coarsepaths/cycles.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#include <boost/dynamic_bitset.hpp>

#include "coarsepaths/parallel.hpp"

namespace coarsepaths {

namespace {

bool cycle_less(const Cycle& a, const Cycle& b) {
  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
  return std::tie(a.vertices, a.edges) < std::tie(b.vertices, b.edges);
}

// Johnson's circuit search on the underlying simple graph, treating each
// undirected edge as two arcs. Vertex cycles of length >= 3 are expanded
// over every choice of parallel edge.
class CycleSearch {
 public:
  CycleSearch(const MultiGraph& g, std::optional<std::size_t> max_len, std::size_t cap,
              std::vector<Cycle>& out)
      : g_(g), max_len_(max_len), cap_(cap), out_(out) {
    const std::size_t n = g.vertex_count();
    neighbors_.resize(n);
    for (VertexId v = 0; v < n; ++v) {
      for (const auto& inc : g.incident(v)) neighbors_[v].push_back(inc.neighbor);
      auto& nb = neighbors_[v];
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    blocked_.assign(n, 0);
    blocked_by_.assign(n, {});
  }

  void run() {
    for (VertexId s = 0; s < g_.vertex_count(); ++s) {
      start_ = s;
      std::fill(blocked_.begin(), blocked_.end(), 0);
      for (auto& b : blocked_by_) b.clear();
      stack_.assign(1, s);
      circuit(s);
    }
  }

 private:
  bool circuit(VertexId v) {
    bool found = false;
    blocked_[v] = 1;
    for (VertexId w : neighbors_[v]) {
      if (w < start_) continue;
      if (w == start_) {
        // Returning along the arc we left by is not a cycle; counting it as
        // found only unblocks more eagerly, which keeps the search complete.
        if (stack_.size() >= 3) emit();
        found = true;
      } else if (max_len_ && stack_.size() >= *max_len_) {
        found = true;  // depth cut: stay unblocked so longer routes are not lost
      } else if (!blocked_[w]) {
        stack_.push_back(w);
        if (circuit(w)) found = true;
        stack_.pop_back();
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (VertexId w : neighbors_[v]) {
        if (w < start_) continue;
        auto& list = blocked_by_[w];
        if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
      }
    }
    return found;
  }

  void unblock(VertexId u) {
    blocked_[u] = 0;
    auto pending = std::move(blocked_by_[u]);
    blocked_by_[u].clear();
    for (VertexId w : pending) {
      if (blocked_[w]) unblock(w);
    }
  }

  void emit() {
    // Each undirected cycle shows up once per direction; keep the one whose
    // second vertex is smaller.
    if (stack_[1] > stack_.back()) return;
    const std::size_t len = stack_.size();
    std::vector<std::vector<EdgeId>> choices(len);
    for (std::size_t i = 0; i < len; ++i) {
      choices[i] = g_.edges_between(stack_[i], stack_[(i + 1) % len]);
    }
    std::vector<std::size_t> pick(len, 0);
    while (true) {
      if (out_.size() >= cap_) throw OverflowError("cycle count", cap_);
      Cycle c;
      c.vertices = stack_;
      c.edge_set = g_.empty_edge_set();
      for (std::size_t i = 0; i < len; ++i) {
        c.edges.push_back(choices[i][pick[i]]);
        c.edge_set.set(choices[i][pick[i]]);
      }
      out_.push_back(std::move(c));
      std::size_t i = len;
      while (i > 0) {
        --i;
        if (++pick[i] < choices[i].size()) break;
        pick[i] = 0;
        if (i == 0) return;
      }
    }
  }

  const MultiGraph& g_;
  std::optional<std::size_t> max_len_;
  std::size_t cap_;
  std::vector<Cycle>& out_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<char> blocked_;
  std::vector<std::vector<VertexId>> blocked_by_;
  std::vector<VertexId> stack_;
  VertexId start_ = 0;
};

void emit_two_cycles(const MultiGraph& g, std::size_t cap, std::vector<Cycle>& out) {
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> bundles;
  for (const auto& e : g.edges()) {
    bundles[std::minmax(e.u, e.v)].push_back(e.id);
  }
  for (const auto& [ends, ids] : bundles) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        if (out.size() >= cap) throw OverflowError("cycle count", cap);
        Cycle c;
        c.vertices = {ends.first, ends.second};
        c.edges = {ids[i], ids[j]};
        c.edge_set = EdgeSet::from_ids(g.edge_count(), c.edges);
        out.push_back(std::move(c));
      }
    }
  }
}

using VertexBits = boost::dynamic_bitset<>;

// Paths from `source` grouped by target, for targets > source. Groups keep
// canonical order.
std::map<VertexId, std::vector<SimplePath>> paths_to_larger_targets(const MultiGraph& g,
                                                                    VertexId source,
                                                                    std::size_t max_paths) {
  std::map<VertexId, std::vector<SimplePath>> groups;
  for (auto& p : enumerate_paths_from(g, source, {max_paths})) {
    if (p.target() > source) groups[p.target()].push_back(std::move(p));
  }
  return groups;
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const MultiGraph& g, std::optional<std::size_t> max_len,
                                    const CycleCaps& caps) {
  std::vector<Cycle> out;
  if (max_len && *max_len < 2) return out;
  emit_two_cycles(g, caps.max_cycles, out);
  if (!max_len || *max_len >= 3) {
    CycleSearch(g, max_len, caps.max_cycles, out).run();
  }
  std::sort(out.begin(), out.end(), cycle_less);
  return out;
}

bool is_cactus(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::size_t timer = 0;
  bool ok = true;

  auto close_block = [&](EdgeId until) {
    std::set<VertexId> verts;
    std::size_t edges = 0;
    while (true) {
      const EdgeId e = edge_stack.back();
      edge_stack.pop_back();
      ++edges;
      verts.insert(g.edge(e).u);
      verts.insert(g.edge(e).v);
      if (e == until) break;
    }
    if (edges != 1 && edges != verts.size()) ok = false;
  };

  auto dfs = [&](auto&& self, VertexId v, std::optional<EdgeId> via) -> void {
    disc[v] = low[v] = ++timer;
    for (const auto& inc : g.incident(v)) {
      if (via && inc.edge == *via) continue;
      const VertexId w = inc.neighbor;
      if (disc[w] == 0) {
        edge_stack.push_back(inc.edge);
        self(self, w, inc.edge);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) close_block(inc.edge);
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(inc.edge);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  dfs(dfs, g.root(), std::nullopt);
  return ok;
}

bool diverge_on(const EdgeSet& gamma, const EdgeSet& delta, const EdgeSet& cycle) noexcept {
  if (!gamma.intersects(cycle) || !delta.intersects(cycle)) return false;
  // Disjoint traces that cover C  <=>  C ⊆ γ Δ δ.
  const auto& wg = gamma.words();
  const auto& wd = delta.words();
  const auto& wc = cycle.words();
  for (std::size_t i = 0; i < wc.size(); ++i) {
    if (wc[i] & ~(wg[i] ^ wd[i])) return false;
  }
  return true;
}

bool equiv_n(const SimplePath& gamma, const SimplePath& delta, std::size_t n,
             std::span<const Cycle> cycles) {
  const bool same_ends = (gamma.source() == delta.source() && gamma.target() == delta.target()) ||
                         (gamma.source() == delta.target() && gamma.target() == delta.source());
  if (!same_ends) {
    throw Error(ErrorCode::EndpointMismatch, "~n compares paths with equal endpoints only");
  }
  for (const auto& c : cycles) {
    if (c.length() > n && diverge_on(gamma, delta, c)) return false;
  }
  return true;
}

std::vector<std::size_t> critical_values(std::span<const Cycle> cycles) {
  std::set<std::size_t> values{0};
  for (const auto& c : cycles) values.insert(c.length());
  return {values.begin(), values.end()};
}

DivergenceTable::DivergenceTable(std::span<const SimplePath> paths, std::span<const Cycle> cycles)
    : size_(paths.size()), table_(paths.size() * paths.size(), 0) {
  std::vector<std::size_t> order(cycles.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return cycles[a].length() > cycles[b].length();
  });

  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = i + 1; j < size_; ++j) {
      const EdgeSet diff = paths[i].edge_set ^ paths[j].edge_set;
      const std::size_t budget = diff.count();
      std::uint32_t longest = 0;
      for (std::size_t c : order) {
        const auto& cyc = cycles[c];
        if (cyc.length() > budget) continue;
        if (cyc.edge_set.is_subset_of(diff) && paths[i].edge_set.intersects(cyc.edge_set) &&
            paths[j].edge_set.intersects(cyc.edge_set)) {
          longest = static_cast<std::uint32_t>(cyc.length());
          break;
        }
      }
      table_[i * size_ + j] = longest;
      table_[j * size_ + i] = longest;
    }
  }
}

std::optional<TransitivityViolation> find_transitivity_violation(
    const DivergenceTable& table, std::span<const std::size_t> critical) {
  const std::size_t p = table.size();
  if (p < 3) return std::nullopt;
  const std::size_t words = (p + 63) / 64;
  std::vector<std::uint64_t> rows(p * words);
  for (std::size_t n : critical) {
    std::fill(rows.begin(), rows.end(), 0);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        if (table.related(i, j, n)) rows[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
    for (std::size_t i = 0; i < p; ++i) {
      const std::uint64_t* ri = &rows[i * words];
      for (std::size_t j = 0; j < p; ++j) {
        if (j == i || !table.related(i, j, n)) continue;
        const std::uint64_t* rj = &rows[j * words];
        for (std::size_t w = 0; w < words; ++w) {
          const std::uint64_t missing = rj[w] & ~ri[w];
          if (missing) {
            const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(missing));
            return TransitivityViolation{n, i, j, k};
          }
        }
      }
    }
  }
  return std::nullopt;
}

NotTransitiveError::NotTransitiveError(std::size_t n, SimplePath gamma, SimplePath delta,
                                       SimplePath epsilon)
    : Error(ErrorCode::NotTransitive,
            "~" + std::to_string(n) + " is not transitive on this path family"),
      n_(n),
      gamma_(std::move(gamma)),
      delta_(std::move(delta)),
      epsilon_(std::move(epsilon)) {}

ControlledCyclesVerdict has_controlled_cycles(const MultiGraph& g, const ControlledCaps& caps) {
  const auto cycles = enumerate_cycles(g, std::nullopt, {caps.max_cycles});
  ControlledCyclesVerdict verdict;
  verdict.critical_n = critical_values(cycles);

  struct SourceResult {
    std::optional<Counterexample> best;
    std::size_t pairs = 0;
    std::size_t paths = 0;
  };
  std::vector<SourceResult> results(g.vertex_count());

  parallel_for(g.vertex_count(), caps.threads, [&](std::size_t idx) {
    const auto u = static_cast<VertexId>(idx);
    auto& res = results[idx];
    for (const auto& [v, paths] : paths_to_larger_targets(g, u, caps.max_paths)) {
      ++res.pairs;
      res.paths += paths.size();
      DivergenceTable table(paths, cycles);
      auto bad = find_transitivity_violation(table, verdict.critical_n);
      if (!bad || (res.best && res.best->n <= bad->n)) continue;
      res.best = Counterexample{u,
                                v,
                                bad->n,
                                paths[bad->gamma],
                                paths[bad->delta],
                                paths[bad->epsilon],
                                table.at(bad->gamma, bad->delta),
                                table.at(bad->delta, bad->epsilon),
                                table.at(bad->gamma, bad->epsilon)};
    }
  });

  for (auto& res : results) {
    verdict.vertex_pairs += res.pairs;
    verdict.paths_examined += res.paths;
    if (res.best && (!verdict.counterexample || res.best->n < verdict.counterexample->n)) {
      verdict.counterexample = std::move(res.best);
    }
  }
  verdict.controlled = !verdict.counterexample.has_value();
  return verdict;
}

namespace {

// Calls visit(theta) for each Θ-subgraph until it returns false.
template <typename Visit>
void for_each_theta(const MultiGraph& g, const ThetaCaps& caps, Visit&& visit) {
  std::size_t seen = 0;
  for (VertexId v1 = 0; v1 < g.vertex_count(); ++v1) {
    for (auto& [v2, paths] : paths_to_larger_targets(g, v1, caps.max_paths)) {
      const std::size_t p = paths.size();
      if (p < 3) continue;
      std::vector<VertexBits> interior(p, VertexBits(g.vertex_count()));
      for (std::size_t i = 0; i < p; ++i) {
        const auto& vs = paths[i].vertices;
        for (std::size_t k = 1; k + 1 < vs.size(); ++k) interior[i].set(vs[k]);
      }
      for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = a + 1; b < p; ++b) {
          if (interior[a].intersects(interior[b])) continue;
          for (std::size_t c = b + 1; c < p; ++c) {
            if (interior[a].intersects(interior[c]) || interior[b].intersects(interior[c])) {
              continue;
            }
            if (++seen > caps.max_thetas) throw OverflowError("theta count", caps.max_thetas);
            ThetaSubgraph t{v1, v2, {paths[a], paths[b], paths[c]}};
            std::stable_sort(t.arcs.begin(), t.arcs.end(), [](const auto& x, const auto& y) {
              return x.length() < y.length();
            });
            if (!visit(std::move(t))) return;
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<ThetaSubgraph> theta_subgraphs(const MultiGraph& g, const ThetaCaps& caps) {
  std::vector<ThetaSubgraph> out;
  for_each_theta(g, caps, [&](ThetaSubgraph t) {
    out.push_back(std::move(t));
    return true;
  });
  return out;
}

ThetaVerdict theta_length_condition(const MultiGraph& g, const ThetaCaps& caps) {
  ThetaVerdict verdict;
  for_each_theta(g, caps, [&](ThetaSubgraph t) {
    ++verdict.thetas_checked;
    const auto len = t.lengths();
    if (len[0] != len[1]) {
      verdict.holds = false;
      verdict.violation = std::move(t);
      return false;
    }
    return true;
  });
  return verdict;
}

}  // namespace coarsepaths
