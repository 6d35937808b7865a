#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coarsepaths/graph.hpp"

namespace coarsepaths {

/// First `count` terms of a named hub sequence: "linear" (0,1,2,...),
/// "squares" (0,1,4,9,...), "odd" (1,3,5,...). Throws BadSpec.
std::vector<std::int64_t> k_sequence(std::string_view rule, std::size_t count);

/// Γ_{k,l} cut after t blocks. Consecutive hubs k_i, k_i + 1 are joined by l
/// parallel edges; a gap g >= 2 is bridged by l internally disjoint strands
/// of length g through vertices "(x,j)". Hubs are "(k_i,0)"; the root is the
/// first hub. k is shifted so that it starts at 0, which turns the variants
/// (1,2,3,...) and (1,3,5,...) into the doubled path and the diamond chain.
/// Throws BadSpec unless k is strictly increasing with t+1 terms, l >= 2, t >= 1.
MultiGraph gamma_kl(std::span<const std::int64_t> k, std::size_t l, std::size_t t);

/// Γ_{(0,1,2,...),2} with t blocks: hubs joined by pairs of parallel edges.
MultiGraph doubled_path(std::size_t t);

/// Two rails "(c,top)", "(c,bot)" for c = 1..columns with a rung at every
/// column; root "(1,top)". Edge ids: top rail, then rungs, then bottom rail.
MultiGraph ladder(std::size_t columns);

/// Hubs h0..hB in series; block b joins h_b and h_{b+1} by one arc per entry
/// of blocks[b], each of the given length (>= 1). Root h0.
MultiGraph theta_chain(const std::vector<std::vector<std::size_t>>& blocks);

/// Two rays u_1..u_depth and w_1..w_depth from the root "o"; column i carries
/// a rung of length 2i from w_i to u_i.
MultiGraph fan(std::size_t depth);

/// Chain of t diamonds v0 - {v1+, v1-} - v2 - {v3+, v3-} - v4 ...; root v0.
MultiGraph hausdorff_graph(std::size_t t);

/// Random cactus on n_vertices vertices, grown by hanging bridges and
/// cycles (lengths 2..6, 2 meaning a parallel pair) off existing vertices.
/// Output is a pure function of (n_vertices, seed).
MultiGraph random_cactus(std::size_t n_vertices, std::uint64_t seed);

/// Named family plus parameters; only fields relevant to `family` are used.
struct FamilySpec {
  std::string family;  // gamma_kl, doubled_path, ladder, theta_chain, fan, hausdorff, random_cactus
  std::vector<std::int64_t> k;
  std::string k_rule;  // used when k is empty
  std::size_t l = 2;
  std::size_t t = 3;
  std::size_t columns = 4;
  std::size_t depth = 3;
  std::size_t vertices = 8;
  std::uint64_t seed = 0;
  std::vector<std::vector<std::size_t>> arcs;
};

/// Throws BadSpec for unknown families or bad parameters.
MultiGraph generate(const FamilySpec& spec);

/// Families indexed by a truncation parameter (t, columns, depth, ...).
/// Returns a copy of spec with that parameter set to t.
FamilySpec with_truncation(FamilySpec spec, std::size_t t);

}  // namespace coarsepaths
