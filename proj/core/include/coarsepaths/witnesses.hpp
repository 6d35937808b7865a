#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "coarsepaths/coarse.hpp"
#include "coarsepaths/cycles.hpp"
#include "coarsepaths/paths.hpp"

namespace coarsepaths {

using Rational = boost::rational<std::int64_t>;

/// Indicator vector of the path's edge set over all edge ids.
std::vector<std::uint8_t> hamming_embed(const SimplePath& path, std::size_t edge_count);

/// ρ(a,b) = Σ |a_i − b_i|.
std::size_t hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

/// Witness sets A_γ(n): the ~n class of γ inside its fiber, with support
/// radius S = m(n)·n.
struct PropertyAWitness {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t support_radius = 0;
  std::vector<Partition> fibers;  // by vertex id
};

/// Builds the witness on a controlled-cycles graph. Throws NotTransitiveError
/// (from the first fiber where ~n fails) and OverflowError.
PropertyAWitness property_a_witness(const PathSpace& space, std::size_t n,
                                    const CycleCaps& caps = {});

struct WitnessViolation {
  enum class Kind { ClassMismatch, OutsideSupport };
  Kind kind;
  VertexId vertex;
  std::size_t a;
  std::size_t b;
  std::size_t distance;
};

std::string to_string(WitnessViolation::Kind kind);

struct PropertyAReport {
  std::size_t n = 0;
  std::size_t R = 0;
  std::size_t S = 0;
  bool scale_mismatch = false;  // R > n: outside the construction's range
  std::size_t near_pairs = 0;
  std::size_t containment_checks = 0;
  std::vector<WitnessViolation> violations;

  bool ok() const noexcept { return !scale_mismatch && violations.empty(); }
};

/// For every same-fiber pair at distance <= R the classes must coincide, and
/// every class must sit inside the closed S-ball about each member.
PropertyAReport verify_property_a(const PathSpace& space, const PropertyAWitness& witness,
                                  std::size_t R);

/// ξ(γ) = |A|^{-1/2} · 1_A. Every support weight is the same, so only its
/// square is stored, which keeps everything rational.
struct UnitVector {
  VertexId fiber;
  std::vector<std::size_t> support;  // sorted path indices within the fiber
  Rational weight_sq;

  Rational norm_sq() const { return weight_sq * static_cast<std::int64_t>(support.size()); }
};

/// ξ for every path, indexed [vertex][path index].
std::vector<std::vector<UnitVector>> higson_roe_map(const PropertyAWitness& witness);

/// ‖ξ − η‖². Exact when rational (equal supports give 0, disjoint give 2),
/// otherwise only the floating approximation is set.
struct DifferenceNorm {
  std::optional<Rational> exact;
  double approx;
};

DifferenceNorm difference_norm_sq(const UnitVector& a, const UnitVector& b);

struct HigsonRoeReport {
  std::size_t R = 0;
  std::size_t S = 0;
  std::size_t vectors = 0;
  std::size_t norm_failures = 0;
  std::size_t near_pairs = 0;
  std::size_t nonzero_differences = 0;
  std::size_t support_failures = 0;

  bool ok() const noexcept {
    return norm_failures == 0 && nonzero_differences == 0 && support_failures == 0;
  }
};

HigsonRoeReport verify_higson_roe(const PathSpace& space,
                                  const std::vector<std::vector<UnitVector>>& xi, std::size_t R,
                                  std::size_t S);

/// The cube {0,1}^m mapped into the fiber of γ: bit i of the index says
/// whether γ is rerouted around cycle i.
struct CubeEmbedding {
  SimplePath base;
  std::vector<Cycle> cycles;
  std::size_t n = 0;
  std::vector<SimplePath> images;  // 2^m entries
};

/// Cycles must be pairwise edge-disjoint (CyclesNotDisjoint), each meet γ
/// (EmptyIntersection) and have length <= n (CycleTooLong). Every one of
/// the 2^m reroutings is validated (FlipNotSimple). At most 20 cycles.
CubeEmbedding cube_embedding(const MultiGraph& g, const SimplePath& gamma,
                             std::span<const Cycle> cycles, std::size_t n);

struct CubeBoundsReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t pairs = 0;
  std::size_t lower_violations = 0;  // d < 2ρ
  std::size_t upper_violations = 0;  // d > nρ
  std::size_t lower_tight = 0;       // d == 2ρ
  std::size_t upper_tight = 0;       // d == nρ
  bool injective = true;

  bool ok() const noexcept { return lower_violations == 0 && upper_violations == 0 && injective; }
};

/// Checks 2ρ(x,y) <= d(δ_x, δ_y) <= nρ(x,y) on all pairs of cube points.
CubeBoundsReport verify_cube_bounds(const CubeEmbedding& cube);

}  // namespace coarsepaths
