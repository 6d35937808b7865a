#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "coarsepaths/coarse.hpp"
#include "coarsepaths/cycles.hpp"
#include "coarsepaths/generators.hpp"
#include "coarsepaths/paths.hpp"
#include "coarsepaths/witnesses.hpp"

namespace coarsepaths {

/// Key order in every report is insertion order, so output is byte-stable.
using Json = nlohmann::ordered_json;

Json path_json(const MultiGraph& g, const SimplePath& p);
Json cycle_json(const MultiGraph& g, const Cycle& c);
Json controlled_json(const MultiGraph& g, const ControlledCyclesVerdict& verdict);
Json theta_json(const MultiGraph& g, const ThetaVerdict& verdict);
Json not_transitive_json(const MultiGraph& g, const NotTransitiveError& err);

/// {n, m, S, fibers:[{v, classes:[[idx...]], violations:[...]}]}
Json witness_json(const MultiGraph& g, const PropertyAWitness& w, const PropertyAReport& report);
Json higson_roe_json(const HigsonRoeReport& report);
Json incidence_json(const CycleIncidenceProfile& profile);
Json growth_json(const std::vector<GrowthRow>& rows);
Json bounded_geometry_json(const BoundedGeometryReport& report);
Json cube_json(const MultiGraph& g, const CubeEmbedding& cube, const CubeBoundsReport& report);

/// CSV tables with a header row; rows in ascending key order.
std::string bounded_geometry_csv(const BoundedGeometryReport& report);
std::string incidence_csv(const CycleIncidenceProfile& profile);

Json family_json(const FamilySpec& spec);
/// Throws BadSpec on missing "family" or mistyped fields.
FamilySpec family_from_json(const nlohmann::json& doc);

}  // namespace coarsepaths
