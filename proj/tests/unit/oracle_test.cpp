// Sanity checks on the test oracles themselves, against hand counts.

#include <gtest/gtest.h>

#include "oracles.hpp"

TEST(Oracle, CountsOnTinyGraphs) {
  const auto tri = oracle::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_EQ(oracle::cycles_by_subsets(tri).size(), 1u);
  EXPECT_EQ(oracle::root_paths_by_subsets(tri).size(), 5u);  // empty, 2 of length 1, 2 of length 2
  EXPECT_EQ(oracle::root_paths_by_dfs(tri).size(), 5u);

  // K4: 7 cycles (4 triangles, 3 squares)
  const auto k4 = oracle::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(oracle::cycles_by_subsets(k4).size(), 7u);
  EXPECT_EQ(oracle::cycles_by_cycle_space(k4), oracle::cycles_by_subsets(k4));

  const auto triple = oracle::from_pairs(2, {{0, 1}, {0, 1}, {0, 1}});
  EXPECT_EQ(oracle::cycles_by_subsets(triple).size(), 3u);
  EXPECT_EQ(oracle::incidence(triple, 2), 2u);
}

TEST(Oracle, HausdorffOnParallelEdges) {
  const auto g = oracle::from_pairs(2, {{0, 1}, {0, 1}});
  EXPECT_EQ(oracle::hausdorff_twice(g, {0}, {1}), 1);
  EXPECT_EQ(oracle::hausdorff_vertices_twice(g, {0}, {1}), 0);
  EXPECT_EQ(oracle::hausdorff_twice(g, {}, {0}), 2);
}

TEST(Oracle, CorpusSizes) {
  // connected graphs on 3 labelled vertices with simple edges: 4
  EXPECT_EQ(oracle::all_multigraphs(3, 1, 10).size(), 4u);
  for (const auto& g : oracle::random_multigraphs(50, 6, 10, 3)) {
    EXPECT_LE(g.edge_count(), 10u);
  }
}
