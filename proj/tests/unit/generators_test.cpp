#include <functional>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace cp = coarsepaths;
using namespace fixtures;

namespace {

cp::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const cp::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return cp::ErrorCode::Overflow;
}

std::vector<std::size_t> cycle_lengths(const cp::MultiGraph& g) {
  std::vector<std::size_t> out;
  for (const auto& c : cp::enumerate_cycles(g)) out.push_back(c.length());
  return out;
}

}  // namespace

TEST(Generators, KSequences) {
  EXPECT_EQ(cp::k_sequence("linear", 4), (std::vector<std::int64_t>{0, 1, 2, 3}));
  EXPECT_EQ(cp::k_sequence("squares", 4), (std::vector<std::int64_t>{0, 1, 4, 9}));
  EXPECT_EQ(cp::k_sequence("odd", 3), (std::vector<std::int64_t>{1, 3, 5}));
  EXPECT_EQ(code_of([] { cp::k_sequence("primes", 3); }), cp::ErrorCode::BadSpec);
}

TEST(Generators, DoubledPathFromGamma) {
  for (std::size_t t = 1; t <= 6; ++t) {
    const auto g = cp::gamma_kl(cp::k_sequence("linear", t + 1), 2, t);
    EXPECT_EQ(g, cp::doubled_path(t));
    const auto fiber = cp::enumerate_fiber(g, g.vertex("(" + std::to_string(t) + ",0)"));
    EXPECT_EQ(fiber.paths.size(), std::size_t{1} << t);
  }
  // the (1,2,3,...) variant is the same graph after shifting
  EXPECT_EQ(gamma({1, 2, 3, 4}, 2), cp::doubled_path(3));
}

TEST(Generators, ExampleOneFigure) {
  const auto g = gamma({0, 1, 3, 7, 8}, 3);
  for (const char* hub : {"(0,0)", "(1,0)", "(3,0)", "(7,0)", "(8,0)"}) {
    EXPECT_TRUE(g.find_vertex(hub).has_value()) << hub;
  }
  // three strands through the gap-2 block, not four
  EXPECT_TRUE(g.find_vertex("(2,2)").has_value());
  EXPECT_FALSE(g.find_vertex("(2,3)").has_value());
  EXPECT_EQ(g.edge_count(), 3u + 6u + 12u + 3u);
  EXPECT_EQ(g.edges_between(g.vertex("(0,0)"), g.vertex("(1,0)")).size(), 3u);
  EXPECT_EQ(g.label(g.root()), "(0,0)");
}

TEST(Generators, OddVariantIsDiamondChain) {
  const auto g = gamma({1, 3, 5, 7}, 2);
  const auto h = cp::hausdorff_graph(3);
  EXPECT_EQ(g.vertex_count(), h.vertex_count());
  EXPECT_EQ(g.edge_count(), h.edge_count());
  EXPECT_EQ(cycle_lengths(g), cycle_lengths(h));
  EXPECT_EQ(cp::enumerate_simple_paths(g).size(), cp::enumerate_simple_paths(h).size());
}

TEST(Generators, BadSpecs) {
  EXPECT_EQ(code_of([] { gamma({0, 1, 2}, 1); }), cp::ErrorCode::BadSpec);
  EXPECT_EQ(code_of([] { gamma({0, 2, 2}, 2); }), cp::ErrorCode::BadSpec);
  EXPECT_EQ(code_of([] { cp::gamma_kl(std::vector<std::int64_t>{0, 1}, 2, 3); }),
            cp::ErrorCode::BadSpec);
  EXPECT_EQ(code_of([] { cp::gamma_kl(std::vector<std::int64_t>{0, 1}, 2, 0); }),
            cp::ErrorCode::BadSpec);
  EXPECT_EQ(code_of([] { cp::ladder(0); }), cp::ErrorCode::BadSpec);
  EXPECT_EQ(code_of([] { cp::fan(0); }), cp::ErrorCode::BadSpec);
  EXPECT_EQ(code_of([] { cp::hausdorff_graph(0); }), cp::ErrorCode::BadSpec);
  EXPECT_EQ(code_of([] { cp::theta_chain({}); }), cp::ErrorCode::BadSpec);
  EXPECT_EQ(code_of([] { cp::theta_chain({{2}}); }), cp::ErrorCode::BadSpec);
  EXPECT_EQ(code_of([] { cp::theta_chain({{2, 0}}); }), cp::ErrorCode::BadSpec);
  EXPECT_EQ(code_of([] { cp::random_cactus(0, 1); }), cp::ErrorCode::BadSpec);
  EXPECT_EQ(code_of([] { cp::generate({.family = "moebius"}); }), cp::ErrorCode::BadSpec);
}

TEST(Generators, LadderFailsControlledCycles) {
  const auto g = cp::ladder(4);
  EXPECT_EQ(g.vertex_count(), 8u);
  EXPECT_EQ(g.edge_count(), 10u);
  EXPECT_FALSE(cp::has_controlled_cycles(g).controlled);
}

TEST(Generators, ThetaChainWithEqualArcs) {
  const auto g = cp::theta_chain({{3, 3, 3}, {1, 1}, {2, 2, 2, 2}});
  EXPECT_TRUE(cp::has_controlled_cycles(g).controlled);
  EXPECT_TRUE(cp::theta_length_condition(g).holds);
  EXPECT_FALSE(cp::is_cactus(g));
}

TEST(Generators, FanShape) {
  const auto g = cp::fan(3);
  EXPECT_EQ(g.label(g.root()), "o");
  EXPECT_EQ(g.degree(g.root()), 2u);
  // rung i carries 2i edges
  EXPECT_EQ(g.edge_count(), 2u * 3u + (2u + 4u + 6u));
  EXPECT_TRUE(cp::has_controlled_cycles(g).controlled);
}

TEST(Generators, RandomCactusThousandSeeds) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto n = 1 + seed % 14;
    const auto g = cp::random_cactus(n, seed);
    ASSERT_EQ(g.vertex_count(), n);
    ASSERT_TRUE(cp::is_cactus(g)) << seed;
  }
}

TEST(Generators, RandomCactusIsDeterministic) {
  for (std::uint64_t seed : {0u, 17u, 123456u}) {
    EXPECT_EQ(cp::export_graph(cp::random_cactus(12, seed), cp::GraphFormat::Json),
              cp::export_graph(cp::random_cactus(12, seed), cp::GraphFormat::Json));
  }
  EXPECT_NE(cp::export_graph(cp::random_cactus(12, 1), cp::GraphFormat::Json),
            cp::export_graph(cp::random_cactus(12, 2), cp::GraphFormat::Json));
}

TEST(Generators, GammaClassification) {
  for (const char* rule : {"linear", "squares", "odd"}) {
    for (std::size_t t = 1; t <= 4; ++t) {
      const auto k = cp::k_sequence(rule, t + 1);
      EXPECT_TRUE(cp::is_cactus(cp::gamma_kl(k, 2, t))) << rule << t;
      const auto g3 = cp::gamma_kl(k, 3, t);
      EXPECT_FALSE(cp::is_cactus(g3)) << rule << t;
      EXPECT_TRUE(cp::has_controlled_cycles(g3).controlled) << rule << t;
    }
  }
}

TEST(Generators, DiamondChainDiameters) {
  const auto g = cp::hausdorff_graph(5);
  for (const auto& f : cp::enumerate_fibers(g)) {
    EXPECT_LE(cp::hausdorff_diameter(g, f), cp::HalfInteger::whole(3));
  }
}

TEST(Generators, FamilySpecDispatchAndTruncation) {
  cp::FamilySpec spec{.family = "gamma_kl", .k_rule = "squares", .l = 3, .t = 3};
  EXPECT_EQ(cp::generate(spec), gamma({0, 1, 4, 9}, 3));
  EXPECT_EQ(cp::generate(cp::with_truncation(spec, 2)), gamma({0, 1, 4}, 3));
  EXPECT_EQ(cp::generate({.family = "ladder", .columns = 5}), cp::ladder(5));
  EXPECT_EQ(cp::generate(cp::with_truncation({.family = "fan"}, 2)), cp::fan(2));
  EXPECT_EQ(cp::generate({.family = "hausdorff", .t = 2}), cp::hausdorff_graph(2));
  cp::FamilySpec chain{.family = "theta_chain", .arcs = {{2, 2}, {3, 3}}};
  EXPECT_EQ(cp::generate(cp::with_truncation(chain, 1)), cp::theta_chain({{2, 2}}));
  EXPECT_EQ(code_of([&] { cp::with_truncation(chain, 3); }), cp::ErrorCode::BadSpec);
}
