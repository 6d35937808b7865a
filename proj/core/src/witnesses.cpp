#include "coarsepaths/witnesses.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iterator>
#include <unordered_set>

namespace coarsepaths {

std::vector<std::uint8_t> hamming_embed(const SimplePath& path, std::size_t edge_count) {
  std::vector<std::uint8_t> out(edge_count, 0);
  for (EdgeId e : path.edges) out.at(e) = 1;
  return out;
}

std::size_t hamming_distance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]) ? 1 : 0;
  return d;
}

PropertyAWitness property_a_witness(const PathSpace& space, std::size_t n,
                                    const CycleCaps& caps) {
  const auto& g = space.graph();
  const auto cycles = enumerate_cycles(g, std::nullopt, caps);
  PropertyAWitness w;
  w.n = n;

  // m(n) over all of S(Γ), which is the union of the fibers.
  for (const auto& fiber : space.fibers()) {
    for (const auto& p : fiber.paths) {
      std::size_t met = 0;
      for (const auto& c : cycles) {
        if (c.length() <= n && p.edge_set.intersects(c.edge_set)) ++met;
      }
      w.m = std::max(w.m, met);
    }
  }
  w.support_radius = w.m * n;

  w.fibers.reserve(space.fibers().size());
  for (const auto& fiber : space.fibers()) w.fibers.push_back(equiv_classes(fiber, n, cycles));
  return w;
}

std::string to_string(WitnessViolation::Kind kind) {
  return kind == WitnessViolation::Kind::ClassMismatch ? "class_mismatch" : "outside_support";
}

PropertyAReport verify_property_a(const PathSpace& space, const PropertyAWitness& witness,
                                  std::size_t R) {
  PropertyAReport report;
  report.n = witness.n;
  report.R = R;
  report.S = witness.support_radius;
  if (R > witness.n) {
    report.scale_mismatch = true;
    return report;
  }
  for (VertexId v = 0; v < space.fibers().size(); ++v) {
    const auto& paths = space.fiber(v).paths;
    const auto& part = witness.fibers.at(v);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (std::size_t j = i + 1; j < paths.size(); ++j) {
        const std::size_t d = symm_diff_metric(paths[i], paths[j]);
        if (d <= R) {
          ++report.near_pairs;
          if (!part.same_class(i, j)) {
            report.violations.push_back({WitnessViolation::Kind::ClassMismatch, v, i, j, d});
          }
        }
      }
    }
    for (const auto& members : part.classes) {
      for (std::size_t a : members) {
        for (std::size_t b : members) {
          ++report.containment_checks;
          const std::size_t d = symm_diff_metric(paths[a], paths[b]);
          if (d > witness.support_radius) {
            report.violations.push_back({WitnessViolation::Kind::OutsideSupport, v, a, b, d});
          }
        }
      }
    }
  }
  return report;
}

std::vector<std::vector<UnitVector>> higson_roe_map(const PropertyAWitness& witness) {
  std::vector<std::vector<UnitVector>> xi(witness.fibers.size());
  for (VertexId v = 0; v < witness.fibers.size(); ++v) {
    const auto& part = witness.fibers[v];
    auto& out = xi[v];
    out.reserve(part.class_of.size());
    for (std::size_t i = 0; i < part.class_of.size(); ++i) {
      const auto& members = part.classes[part.class_of[i]];
      out.push_back({v, members, Rational(1, static_cast<std::int64_t>(members.size()))});
    }
  }
  return xi;
}

DifferenceNorm difference_norm_sq(const UnitVector& a, const UnitVector& b) {
  // ‖ξ−η‖² = ‖ξ‖² + ‖η‖² − 2·|A∩B|·w_a·w_b, with w² the stored squares.
  std::size_t common = 0;
  if (a.fiber == b.fiber) {
    std::vector<std::size_t> both;
    std::set_intersection(a.support.begin(), a.support.end(), b.support.begin(), b.support.end(),
                          std::back_inserter(both));
    common = both.size();
  }
  const Rational sum = a.norm_sq() + b.norm_sq();
  const Rational cross_sq = a.weight_sq * b.weight_sq;  // (w_a·w_b)²
  const double approx = boost::rational_cast<double>(sum) -
                        2.0 * static_cast<double>(common) *
                            std::sqrt(boost::rational_cast<double>(cross_sq));
  DifferenceNorm out{std::nullopt, approx};
  if (common == 0) {
    out.exact = sum;
    return out;
  }
  // w_a·w_b is rational iff its square is a square of a rational.
  const auto root_of = [](std::int64_t x) -> std::optional<std::int64_t> {
    const auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(x))));
    for (std::int64_t c = std::max<std::int64_t>(0, r - 1); c <= r + 1; ++c) {
      if (c * c == x) return c;
    }
    return std::nullopt;
  };
  const auto num = root_of(cross_sq.numerator());
  const auto den = root_of(cross_sq.denominator());
  if (num && den) {
    out.exact = sum - Rational(2 * static_cast<std::int64_t>(common)) * Rational(*num, *den);
  }
  return out;
}

HigsonRoeReport verify_higson_roe(const PathSpace& space,
                                  const std::vector<std::vector<UnitVector>>& xi, std::size_t R,
                                  std::size_t S) {
  HigsonRoeReport report;
  report.R = R;
  report.S = S;
  for (VertexId v = 0; v < space.fibers().size(); ++v) {
    const auto& paths = space.fiber(v).paths;
    const auto& vecs = xi.at(v);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      ++report.vectors;
      if (vecs[i].norm_sq() != Rational(1)) ++report.norm_failures;
      for (std::size_t member : vecs[i].support) {
        if (symm_diff_metric(paths[i], paths[member]) > S) ++report.support_failures;
      }
      for (std::size_t j = i + 1; j < paths.size(); ++j) {
        if (symm_diff_metric(paths[i], paths[j]) > R) continue;
        ++report.near_pairs;
        const auto diff = difference_norm_sq(vecs[i], vecs[j]);
        if (!diff.exact || *diff.exact != Rational(0)) ++report.nonzero_differences;
      }
    }
  }
  return report;
}

CubeEmbedding cube_embedding(const MultiGraph& g, const SimplePath& gamma,
                             std::span<const Cycle> cycles, std::size_t n) {
  const std::size_t m = cycles.size();
  if (m > 20) throw Error(ErrorCode::BadSpec, "cube embedding supports at most 20 cycles");
  for (std::size_t i = 0; i < m; ++i) {
    if (cycles[i].length() > n) {
      throw Error(ErrorCode::CycleTooLong, "cycle " + std::to_string(i) + " has length " +
                                               std::to_string(cycles[i].length()) + " > n");
    }
    if (!gamma.edge_set.intersects(cycles[i].edge_set)) {
      throw Error(ErrorCode::EmptyIntersection,
                  "cycle " + std::to_string(i) + " does not meet the base path");
    }
    for (std::size_t j = i + 1; j < m; ++j) {
      if (cycles[i].edge_set.intersects(cycles[j].edge_set)) {
        throw Error(ErrorCode::CyclesNotDisjoint, "cycles " + std::to_string(i) + " and " +
                                                      std::to_string(j) + " share an edge");
      }
    }
  }

  CubeEmbedding cube;
  cube.base = gamma;
  cube.cycles.assign(cycles.begin(), cycles.end());
  cube.n = n;
  const std::size_t points = std::size_t{1} << m;
  cube.images.reserve(points);
  for (std::size_t x = 0; x < points; ++x) {
    EdgeSet s = gamma.edge_set;
    for (std::size_t i = 0; i < m; ++i) {
      if ((x >> i) & 1U) s ^= cycles[i].edge_set;
    }
    auto p = try_path_from_edge_set(g, s, gamma.source());
    if (!p) {
      throw Error(ErrorCode::FlipNotSimple,
                  "cube point " + std::to_string(x) + " is not a simple path");
    }
    cube.images.push_back(std::move(*p));
  }
  return cube;
}

CubeBoundsReport verify_cube_bounds(const CubeEmbedding& cube) {
  CubeBoundsReport report;
  report.m = cube.cycles.size();
  report.n = cube.n;
  const std::size_t points = cube.images.size();
  std::unordered_set<EdgeSet> distinct;
  for (const auto& p : cube.images) distinct.insert(p.edge_set);
  report.injective = distinct.size() == points;
  for (std::size_t x = 0; x < points; ++x) {
    for (std::size_t y = x + 1; y < points; ++y) {
      ++report.pairs;
      const auto rho = static_cast<std::size_t>(std::popcount(x ^ y));
      const std::size_t d = symm_diff_metric(cube.images[x], cube.images[y]);
      if (d < 2 * rho) ++report.lower_violations;
      if (d > cube.n * rho) ++report.upper_violations;
      if (d == 2 * rho) ++report.lower_tight;
      if (d == cube.n * rho) ++report.upper_tight;
    }
  }
  return report;
}

}  // namespace coarsepaths
