#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace cp = coarsepaths;
using namespace fixtures;

namespace {

std::set<oracle::Mask> masks(const std::vector<cp::Cycle>& cycles) {
  std::set<oracle::Mask> out;
  for (const auto& c : cycles) out.insert(oracle::to_mask(c.edges));
  return out;
}

std::vector<std::size_t> lengths(const std::vector<cp::Cycle>& cycles) {
  std::vector<std::size_t> out;
  for (const auto& c : cycles) out.push_back(c.length());
  return out;
}

// the pairwise definition: distinct cycles share at most one vertex
bool cactus_by_definition(const cp::MultiGraph& g) {
  std::vector<std::set<cp::VertexId>> vsets;
  for (auto m : oracle::all_cycles(g)) {
    std::set<cp::VertexId> vs;
    for (const auto& e : g.edges()) {
      if ((m >> e.id) & 1) {
        vs.insert(e.u);
        vs.insert(e.v);
      }
    }
    vsets.push_back(std::move(vs));
  }
  for (std::size_t i = 0; i < vsets.size(); ++i) {
    for (std::size_t j = i + 1; j < vsets.size(); ++j) {
      std::size_t shared = 0;
      for (auto v : vsets[i]) shared += vsets[j].count(v);
      if (shared > 1) return false;
    }
  }
  return true;
}

}  // namespace

TEST(EnumerateCycles, DoubledPath) {
  const auto cycles = cp::enumerate_cycles(cp::doubled_path(5));
  EXPECT_EQ(lengths(cycles), (std::vector<std::size_t>(5, 2)));
}

TEST(EnumerateCycles, LadderFragment) {
  const auto g = cp::ladder(4);
  const auto cycles = cp::enumerate_cycles(g);
  EXPECT_EQ(masks(cycles), oracle::cycles_by_subsets(g));
  const auto found = masks(cycles);
  EXPECT_TRUE(found.count(oracle::to_mask({e1, e4, e6, e3})));
  EXPECT_TRUE(found.count(oracle::to_mask({e2, e5, e7, e4})));
  EXPECT_TRUE(found.count(oracle::to_mask({e1, e2, e5, e7, e6, e3})));
}

TEST(EnumerateCycles, GammaWithGaps) {
  const auto g = gamma({0, 1, 4, 9}, 3);
  const auto cycles = cp::enumerate_cycles(g);
  EXPECT_EQ(lengths(cycles), (std::vector<std::size_t>{2, 2, 2, 6, 6, 6, 10, 10, 10}));
  EXPECT_EQ(masks(cycles), oracle::cycles_by_cycle_space(g));
}

TEST(EnumerateCycles, CanonicalFormAndOrder) {
  for (const auto& [name, g] : small_instances()) {
    const auto cycles = cp::enumerate_cycles(g);
    EXPECT_EQ(masks(cycles), oracle::all_cycles(g)) << name;
    EXPECT_EQ(masks(cycles).size(), cycles.size()) << name;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      const auto& c = cycles[i];
      ASSERT_EQ(c.vertices.size(), c.length());
      ASSERT_EQ(c.edge_set.count(), c.length());
      ASSERT_GE(c.length(), 2u);
      std::set<cp::VertexId> distinct(c.vertices.begin(), c.vertices.end());
      ASSERT_EQ(distinct.size(), c.vertices.size());
      ASSERT_EQ(*distinct.begin(), c.vertices.front());
      if (c.length() > 2) ASSERT_LT(c.vertices[1], c.vertices.back());
      for (std::size_t j = 0; j < c.length(); ++j) {
        const auto& e = g.edge(c.edges[j]);
        const auto a = c.vertices[j], b = c.vertices[(j + 1) % c.length()];
        ASSERT_TRUE((e.u == a && e.v == b) || (e.u == b && e.v == a)) << name;
      }
      if (i > 0) ASSERT_LE(cycles[i - 1].length(), c.length());
    }
    EXPECT_EQ(cp::enumerate_cycles(g), cycles) << name;
  }
}

TEST(EnumerateCycles, LengthBoundAndCap) {
  const auto g = cp::ladder(4);
  EXPECT_EQ(cp::enumerate_cycles(g, 4).size(), 3u);
  EXPECT_EQ(cp::enumerate_cycles(g, 1).size(), 0u);
  try {
    cp::enumerate_cycles(g, std::nullopt, {2});
    FAIL();
  } catch (const cp::OverflowError& e) {
    EXPECT_EQ(e.cap(), 2u);
    EXPECT_EQ(e.code(), cp::ErrorCode::Overflow);
  }
}

TEST(IsCactus, Examples) {
  EXPECT_TRUE(cp::is_cactus(gamma({0, 1, 3, 4}, 2)));
  EXPECT_TRUE(cp::is_cactus(cp::doubled_path(3)));
  EXPECT_FALSE(cp::is_cactus(gamma({0, 1, 3, 4}, 3)));
  EXPECT_TRUE(cp::is_cactus(oracle::from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})));
  EXPECT_FALSE(cp::is_cactus(cp::ladder(3)));
  EXPECT_TRUE(cp::is_cactus(oracle::from_pairs(3, {{0, 1}, {1, 2}})));
}

TEST(IsCactus, MatchesPairwiseDefinition) {
  for (const auto& g : oracle::all_multigraphs(4, 2, 12)) {
    ASSERT_EQ(cp::is_cactus(g), cactus_by_definition(g)) << cp::export_graph(g, cp::GraphFormat::Json);
  }
  for (const auto& g : oracle::random_multigraphs(200, 7, 11, 99)) {
    ASSERT_EQ(cp::is_cactus(g), cactus_by_definition(g)) << cp::export_graph(g, cp::GraphFormat::Json);
  }
}

TEST(DivergeOn, LadderAndTrivialCases) {
  const auto g = cp::ladder(4);
  const auto cycles = cp::enumerate_cycles(g);
  const auto gam = path(g, {e1, e2, e5});
  const auto del = path(g, {e1, e4, e7});
  const auto c = cycle_with(cycles, g, {e2, e5, e7, e4});
  EXPECT_TRUE(cp::diverge_on(gam, del, c));
  EXPECT_TRUE(cp::diverge_on(del, gam, c));
  for (const auto& cyc : cycles) EXPECT_FALSE(cp::diverge_on(gam, gam, cyc));

  const auto d = cp::doubled_path(2);
  const auto two = cp::enumerate_cycles(d);
  EXPECT_TRUE(cp::diverge_on(path(d, {0, 2}), path(d, {1, 2}), two[0]));
  EXPECT_FALSE(cp::diverge_on(path(d, {0, 2}), path(d, {1, 2}), two[1]));
}

TEST(DivergeOn, SymmetryAndSizeBound) {
  for (const auto& [name, g] : small_instances()) {
    const auto cycles = cp::enumerate_cycles(g);
    for (const auto& fiber : cp::enumerate_fibers(g)) {
      for (const auto& a : fiber.paths) {
        for (const auto& b : fiber.paths) {
          for (const auto& c : cycles) {
            const bool div = cp::diverge_on(a, b, c);
            ASSERT_EQ(div, cp::diverge_on(b, a, c));
            if (div) ASSERT_GE(cp::symm_diff_metric(a, b), c.length());
          }
        }
      }
    }
  }
}

TEST(EquivN, LadderTriple) {
  const auto g = cp::ladder(4);
  const auto cycles = cp::enumerate_cycles(g);
  const auto gam = path(g, {e1, e2, e5});
  const auto del = path(g, {e1, e4, e7});
  const auto eps = path(g, {e3, e6, e7});
  EXPECT_TRUE(cp::equiv_n(gam, del, 4, cycles));
  EXPECT_TRUE(cp::equiv_n(del, eps, 4, cycles));
  EXPECT_FALSE(cp::equiv_n(gam, eps, 4, cycles));
  // the long divergence is the outer cycle of the three-column fragment
  const auto long_cycle = oracle::longest_divergence(
      oracle::to_mask(gam.edges), oracle::to_mask(eps.edges), oracle::cycles_by_subsets(g));
  EXPECT_EQ(long_cycle, 6u);
  EXPECT_TRUE(cp::equiv_n(gam, eps, long_cycle, cycles));
  EXPECT_TRUE(cp::equiv_n(gam, eps, 8, cycles));
}

TEST(EquivN, EndpointMismatch) {
  const auto g = cp::ladder(4);
  const auto cycles = cp::enumerate_cycles(g);
  try {
    cp::equiv_n(path(g, {e1}), path(g, {e3}), 2, cycles);
    FAIL();
  } catch (const cp::Error& e) {
    EXPECT_EQ(e.code(), cp::ErrorCode::EndpointMismatch);
  }
}

TEST(EquivN, MatchesDivergenceOracle) {
  for (const auto& [name, g] : small_instances()) {
    const auto cycles = cp::enumerate_cycles(g);
    const auto oracle_cycles = oracle::all_cycles(g);
    for (const auto& fiber : cp::enumerate_fibers(g)) {
      for (const auto& a : fiber.paths) {
        for (const auto& b : fiber.paths) {
          const auto m = oracle::longest_divergence(oracle::to_mask(a.edges),
                                                    oracle::to_mask(b.edges), oracle_cycles);
          for (std::size_t n = 0; n <= 10; ++n) {
            ASSERT_EQ(cp::equiv_n(a, b, n, cycles), m <= n) << name;
          }
        }
      }
    }
  }
}

TEST(CriticalValues, Ladder) {
  const auto cycles = cp::enumerate_cycles(cp::ladder(4));
  EXPECT_EQ(cp::critical_values(cycles), (std::vector<std::size_t>{0, 4, 6, 8}));
}

TEST(ControlledCycles, LadderCounterexample) {
  const auto g = cp::ladder(4);
  const auto verdict = cp::has_controlled_cycles(g);
  ASSERT_FALSE(verdict.controlled);
  ASSERT_TRUE(verdict.counterexample.has_value());
  const auto& ce = *verdict.counterexample;
  const auto cycles = cp::enumerate_cycles(g);
  EXPECT_TRUE(cp::equiv_n(ce.gamma, ce.delta, ce.n, cycles));
  EXPECT_TRUE(cp::equiv_n(ce.delta, ce.epsilon, ce.n, cycles));
  EXPECT_FALSE(cp::equiv_n(ce.gamma, ce.epsilon, ce.n, cycles));
  EXPECT_EQ(ce.n, 4u);
  EXPECT_EQ(ce.gamma_delta, 4u);
  EXPECT_EQ(ce.delta_epsilon, 4u);
  EXPECT_GT(ce.gamma_epsilon, 4u);
}

TEST(ControlledCycles, PositiveFamilies) {
  EXPECT_TRUE(cp::has_controlled_cycles(gamma({0, 1, 3, 4}, 3)).controlled);
  EXPECT_TRUE(cp::has_controlled_cycles(gamma({0, 2, 3, 5}, 4)).controlled);
  EXPECT_TRUE(cp::has_controlled_cycles(cp::theta_chain({{2, 2, 2}, {4, 4, 4}})).controlled);
  EXPECT_TRUE(cp::has_controlled_cycles(cp::fan(3)).controlled);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_TRUE(cp::has_controlled_cycles(cp::random_cactus(10, seed)).controlled);
  }
}

TEST(ControlledCycles, MatchesNaiveTripleCheck) {
  // naive: every source u, every target v, every n up to the longest cycle, every triple
  auto naive = [](const cp::MultiGraph& g) {
    const auto cycles = oracle::all_cycles(g);
    std::size_t longest = 0;
    for (auto c : cycles) longest = std::max<std::size_t>(longest, oracle::popcount(c));
    for (cp::VertexId u = 0; u < g.vertex_count(); ++u) {
      const auto h = reroot(g, u);
      for (cp::VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<oracle::Mask> ps;
        for (const auto& p : oracle::fiber_by_dfs(h, v)) ps.push_back(oracle::to_mask(p));
        for (std::size_t n = 0; n <= longest; ++n) {
          for (auto a : ps) {
            for (auto b : ps) {
              if (oracle::longest_divergence(a, b, cycles) > n) continue;
              for (auto c : ps) {
                if (oracle::longest_divergence(b, c, cycles) <= n &&
                    oracle::longest_divergence(a, c, cycles) > n) {
                  return false;
                }
              }
            }
          }
        }
      }
    }
    return true;
  };
  std::size_t negatives = 0;
  for (const auto& g : oracle::all_multigraphs(4, 2, 8)) {
    const bool expect = naive(g);
    negatives += !expect;
    ASSERT_EQ(cp::has_controlled_cycles(g, {1'000'000, 100'000, 1}).controlled, expect)
        << cp::export_graph(g, cp::GraphFormat::Json);
  }
  EXPECT_GT(negatives, 0u);
}

TEST(ControlledCycles, PathCapOverflow) {
  EXPECT_THROW(cp::has_controlled_cycles(cp::doubled_path(8), {10, 100'000, 1}), cp::OverflowError);
}

TEST(ThetaSubgraphs, ThreeParallelEdges) {
  const auto g = oracle::from_pairs(2, {{0, 1}, {0, 1}, {0, 1}});
  const auto thetas = cp::theta_subgraphs(g);
  ASSERT_EQ(thetas.size(), 1u);
  EXPECT_EQ(thetas[0].lengths(), (std::array<std::size_t, 3>{1, 1, 1}));
  EXPECT_TRUE(cp::theta_length_condition(g).holds);
}

TEST(ThetaSubgraphs, LadderFails) {
  const auto g = cp::ladder(3);
  const auto verdict = cp::theta_length_condition(g);
  ASSERT_FALSE(verdict.holds);
  ASSERT_TRUE(verdict.violation.has_value());
  const auto l = verdict.violation->lengths();
  EXPECT_LT(l[0], l[1]);
  bool rung_vs_around = false;
  for (const auto& t : cp::theta_subgraphs(g)) {
    if (t.lengths() == std::array<std::size_t, 3>{1, 3, 3}) rung_vs_around = true;
  }
  EXPECT_TRUE(rung_vs_around);
}

TEST(ThetaSubgraphs, ArcsAreInternallyDisjoint) {
  for (const auto& [name, g] : small_instances()) {
    for (const auto& t : cp::theta_subgraphs(g)) {
      const auto l = t.lengths();
      ASSERT_LE(l[0], l[1]);
      ASSERT_LE(l[1], l[2]);
      std::multiset<cp::VertexId> interior;
      for (const auto& a : t.arcs) {
        ASSERT_EQ(a.source(), t.v1);
        ASSERT_EQ(a.target(), t.v2);
        interior.insert(a.vertices.begin() + 1, a.vertices.end() - 1);
      }
      std::set<cp::VertexId> distinct(interior.begin(), interior.end());
      ASSERT_EQ(distinct.size(), interior.size()) << name;
    }
  }
}

TEST(ThetaSubgraphs, ControlledImpliesCondition) {
  EXPECT_TRUE(cp::theta_length_condition(cp::theta_chain({{2, 2, 5}, {3, 3}})).holds);
  for (const auto& g : oracle::all_multigraphs(4, 2, 9)) {
    if (cp::has_controlled_cycles(g, {1'000'000, 100'000, 1}).controlled) {
      ASSERT_TRUE(cp::theta_length_condition(g).holds) << cp::export_graph(g, cp::GraphFormat::Json);
    }
  }
}

TEST(Transitivity, TableAgreesWithNaiveSearch) {
  for (const auto& [name, g] : small_instances()) {
    const auto cycles = cp::enumerate_cycles(g);
    const auto critical = cp::critical_values(cycles);
    for (const auto& fiber : cp::enumerate_fibers(g)) {
      const cp::DivergenceTable table(fiber.paths, cycles);
      const auto found = cp::find_transitivity_violation(table, critical);
      bool naive = false;
      for (auto n : critical) {
        for (std::size_t a = 0; a < table.size() && !naive; ++a)
          for (std::size_t b = 0; b < table.size() && !naive; ++b)
            for (std::size_t c = 0; c < table.size() && !naive; ++c)
              naive = table.related(a, b, n) && table.related(b, c, n) && !table.related(a, c, n);
      }
      ASSERT_EQ(found.has_value(), naive) << name;
      if (found) {
        ASSERT_TRUE(table.related(found->gamma, found->delta, found->n));
        ASSERT_TRUE(table.related(found->delta, found->epsilon, found->n));
        ASSERT_FALSE(table.related(found->gamma, found->epsilon, found->n));
      }
    }
  }
}
