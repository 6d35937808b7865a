#include "coarsepaths/report.hpp"

#include <sstream>

namespace coarsepaths {

Json path_json(const MultiGraph& g, const SimplePath& p) {
  Json vertices = Json::array();
  for (VertexId v : p.vertices) vertices.push_back(g.label(v));
  return Json{{"edges", p.edges}, {"vertices", std::move(vertices)}};
}

Json cycle_json(const MultiGraph& g, const Cycle& c) {
  Json vertices = Json::array();
  for (VertexId v : c.vertices) vertices.push_back(g.label(v));
  return Json{{"length", c.length()}, {"edges", c.edges}, {"vertices", std::move(vertices)}};
}

Json controlled_json(const MultiGraph& g, const ControlledCyclesVerdict& verdict) {
  Json out;
  out["controlled_cycles"] = verdict.controlled;
  if (verdict.counterexample) {
    const auto& ce = *verdict.counterexample;
    out["counterexample"] = Json{
        {"u", g.label(ce.u)},
        {"v", g.label(ce.v)},
        {"n", ce.n},
        {"gamma", path_json(g, ce.gamma)},
        {"delta", path_json(g, ce.delta)},
        {"epsilon", path_json(g, ce.epsilon)},
        {"longest_divergence", Json{{"gamma_delta", ce.gamma_delta},
                                    {"delta_epsilon", ce.delta_epsilon},
                                    {"gamma_epsilon", ce.gamma_epsilon}}},
    };
  } else {
    out["counterexample"] = nullptr;
  }
  out["critical_n"] = verdict.critical_n;
  out["vertex_pairs"] = verdict.vertex_pairs;
  out["paths_examined"] = verdict.paths_examined;
  return out;
}

Json theta_json(const MultiGraph& g, const ThetaVerdict& verdict) {
  Json out;
  out["holds"] = verdict.holds;
  out["thetas_checked"] = verdict.thetas_checked;
  if (verdict.violation) {
    const auto& t = *verdict.violation;
    Json arcs = Json::array();
    for (const auto& a : t.arcs) arcs.push_back(path_json(g, a));
    out["violation"] = Json{{"v1", g.label(t.v1)},
                            {"v2", g.label(t.v2)},
                            {"lengths", t.lengths()},
                            {"arcs", std::move(arcs)}};
  } else {
    out["violation"] = nullptr;
  }
  return out;
}

Json not_transitive_json(const MultiGraph& g, const NotTransitiveError& err) {
  return Json{{"error", "NotTransitive"},
              {"n", err.n()},
              {"gamma", path_json(g, err.gamma())},
              {"delta", path_json(g, err.delta())},
              {"epsilon", path_json(g, err.epsilon())}};
}

Json witness_json(const MultiGraph& g, const PropertyAWitness& w, const PropertyAReport& report) {
  Json out;
  out["n"] = w.n;
  out["m"] = w.m;
  out["S"] = w.support_radius;
  out["R"] = report.R;
  out["scale_mismatch"] = report.scale_mismatch;
  out["near_pairs"] = report.near_pairs;
  out["containment_checks"] = report.containment_checks;
  out["violation_count"] = report.violations.size();
  Json fibers = Json::array();
  for (VertexId v = 0; v < w.fibers.size(); ++v) {
    Json violations = Json::array();
    for (const auto& viol : report.violations) {
      if (viol.vertex != v) continue;
      violations.push_back(Json{{"kind", to_string(viol.kind)},
                                {"a", viol.a},
                                {"b", viol.b},
                                {"distance", viol.distance}});
    }
    fibers.push_back(Json{{"v", g.label(v)},
                          {"classes", w.fibers[v].classes},
                          {"violations", std::move(violations)}});
  }
  out["fibers"] = std::move(fibers);
  return out;
}

Json higson_roe_json(const HigsonRoeReport& r) {
  return Json{{"R", r.R},
              {"S", r.S},
              {"vectors", r.vectors},
              {"norm_failures", r.norm_failures},
              {"near_pairs", r.near_pairs},
              {"nonzero_differences", r.nonzero_differences},
              {"support_failures", r.support_failures},
              {"ok", r.ok()}};
}

Json incidence_json(const CycleIncidenceProfile& profile) {
  Json rows = Json::array();
  for (std::size_t n = 0; n < profile.m.size(); ++n) {
    rows.push_back(Json{{"n", n}, {"m_n", profile.m[n]}});
  }
  return rows;
}

Json growth_json(const std::vector<GrowthRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(Json{{"r", row.r}, {"C_r", row.max_ball}});
  return out;
}

Json bounded_geometry_json(const BoundedGeometryReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back(Json{{"truncation", row.t},
                        {"paths", row.paths},
                        {"C_r", row.c_r},
                        {"m_n", row.m_n}});
  }
  Json out;
  out["n"] = report.n;
  out["r"] = report.r;
  out["rows"] = std::move(rows);
  out["strictly_increasing"] = report.strictly_increasing;
  out["plateau_from"] = report.plateau_from ? Json(*report.plateau_from) : Json(nullptr);
  out["trend"] = to_string(report.trend);
  return out;
}

Json cube_json(const MultiGraph& g, const CubeEmbedding& cube, const CubeBoundsReport& report) {
  Json cycles = Json::array();
  for (const auto& c : cube.cycles) cycles.push_back(cycle_json(g, c));
  return Json{{"base", path_json(g, cube.base)},
              {"cycles", std::move(cycles)},
              {"m", report.m},
              {"n", report.n},
              {"points", cube.images.size()},
              {"pairs", report.pairs},
              {"injective", report.injective},
              {"lower_violations", report.lower_violations},
              {"upper_violations", report.upper_violations},
              {"lower_tight", report.lower_tight},
              {"upper_tight", report.upper_tight},
              {"ok", report.ok()}};
}

std::string bounded_geometry_csv(const BoundedGeometryReport& report) {
  std::ostringstream out;
  out << "truncation,r,C_r,n,m_n\n";
  for (const auto& row : report.rows) {
    out << row.t << ',' << report.r << ',' << row.c_r << ',' << report.n << ',' << row.m_n
        << '\n';
  }
  return out.str();
}

std::string incidence_csv(const CycleIncidenceProfile& profile) {
  std::ostringstream out;
  out << "n,m_n\n";
  for (std::size_t n = 0; n < profile.m.size(); ++n) out << n << ',' << profile.m[n] << '\n';
  return out.str();
}

Json family_json(const FamilySpec& spec) {
  Json out;
  out["family"] = spec.family;
  const auto& f = spec.family;
  if (f == "gamma_kl") {
    if (!spec.k.empty()) out["k"] = spec.k;
    if (!spec.k_rule.empty()) out["k_rule"] = spec.k_rule;
    out["l"] = spec.l;
    out["t"] = spec.t;
  } else if (f == "doubled_path" || f == "hausdorff") {
    out["t"] = spec.t;
  } else if (f == "ladder") {
    out["columns"] = spec.columns;
  } else if (f == "theta_chain") {
    out["arcs"] = spec.arcs;
  } else if (f == "fan") {
    out["depth"] = spec.depth;
  } else if (f == "random_cactus") {
    out["vertices"] = spec.vertices;
    out["seed"] = spec.seed;
  }
  return out;
}

FamilySpec family_from_json(const nlohmann::json& doc) {
  try {
    FamilySpec spec;
    spec.family = doc.at("family").get<std::string>();
    if (doc.contains("k")) spec.k = doc["k"].get<std::vector<std::int64_t>>();
    if (doc.contains("k_rule")) spec.k_rule = doc["k_rule"].get<std::string>();
    if (doc.contains("l")) spec.l = doc["l"].get<std::size_t>();
    if (doc.contains("t")) spec.t = doc["t"].get<std::size_t>();
    if (doc.contains("columns")) spec.columns = doc["columns"].get<std::size_t>();
    if (doc.contains("depth")) spec.depth = doc["depth"].get<std::size_t>();
    if (doc.contains("vertices")) spec.vertices = doc["vertices"].get<std::size_t>();
    if (doc.contains("seed")) spec.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("arcs")) spec.arcs = doc["arcs"].get<std::vector<std::vector<std::size_t>>>();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::BadSpec, std::string("family spec: ") + e.what());
  }
}

}  // namespace coarsepaths
