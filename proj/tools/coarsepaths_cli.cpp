// coarsepaths: generate graph families, analyse their cycle structure and
// check the path-space metric claims on finite truncations.

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coarsepaths/coarsepaths.hpp"

namespace cp = coarsepaths;
using cp::Json;

namespace {

constexpr std::size_t kDefaultMaxPaths = 1'000'000;
constexpr std::size_t kDefaultMaxCycles = 100'000;
constexpr std::size_t kDefaultMaxRadius = 64;

struct RunConfig {
  std::string command;
  std::string graph_file;
  cp::FamilySpec family;
  std::string k_list;
  std::string arcs;
  std::string format = "json";
  std::string out;
  std::size_t max_paths = kDefaultMaxPaths;
  std::size_t max_cycles = kDefaultMaxCycles;
  std::size_t max_radius = kDefaultMaxRadius;

  // command-specific
  std::string vertex;
  std::string path_a, path_b;
  std::string base_path, cycle_ids;
  std::size_t n = 2;
  std::size_t r = 3;
  std::size_t R = 2;
  std::size_t t_min = 3;
  std::size_t t_max = 8;
  bool n_given = false;
  bool t_given = false;
};

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    T value{};
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || p != item.data() + item.size()) {
      throw cp::Error(cp::ErrorCode::ParseError,
                      std::string("bad integer '") + item + "' in " + what);
    }
    out.push_back(value);
  }
  return out;
}

std::vector<std::vector<std::size_t>> parse_arcs(const std::string& text) {
  std::vector<std::vector<std::size_t>> blocks;
  std::stringstream ss(text);
  std::string block;
  while (std::getline(ss, block, ';')) {
    if (!block.empty()) blocks.push_back(parse_list<std::size_t>(block, "--arcs"));
  }
  return blocks;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cp::Error(cp::ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void finalize_family(RunConfig& cfg) {
  if (!cfg.k_list.empty()) {
    cfg.family.k = parse_list<std::int64_t>(cfg.k_list, "--k");
    // an explicit hub list fixes the truncation unless --t says otherwise
    if (!cfg.t_given && cfg.family.k.size() >= 2) cfg.family.t = cfg.family.k.size() - 1;
  }
  if (!cfg.arcs.empty()) cfg.family.arcs = parse_arcs(cfg.arcs);
}

Json input_json(const RunConfig& cfg) {
  if (!cfg.graph_file.empty()) return Json{{"graph", cfg.graph_file}};
  return Json{{"family", cp::family_json(cfg.family)}};
}

Json config_json(const RunConfig& cfg) {
  Json c;
  c["command"] = cfg.command;
  c["input"] = input_json(cfg);
  c["format"] = cfg.format;
  c["caps"] = Json{{"max_paths", cfg.max_paths},
                   {"max_cycles", cfg.max_cycles},
                   {"max_radius", cfg.max_radius}};
  c["policy"] = Json{{"alpha", "h(u)+h(v), h(v)=d(root,v)+1"},
                     {"basepoint", "canonically first shortest path"},
                     {"balls", "open unless stated"}};
  return c;
}

cp::MultiGraph load_graph(const RunConfig& cfg) {
  if (!cfg.graph_file.empty()) {
    const bool dot = cfg.graph_file.size() > 4 &&
                     cfg.graph_file.compare(cfg.graph_file.size() - 4, 4, ".dot") == 0;
    return cp::import_graph(read_file(cfg.graph_file),
                            dot ? cp::GraphFormat::Dot : cp::GraphFormat::Json);
  }
  return cp::generate(cfg.family);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary);
  if (!out) throw cp::Error(cp::ErrorCode::ParseError, "cannot write '" + cfg.out + "'");
  out << text;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw cp::Error(cp::ErrorCode::UnknownFormat,
                  "format '" + cfg.format + "' not supported by '" + cfg.command + "'");
}

Json report(const RunConfig& cfg, Json result) {
  return Json{{"config", config_json(cfg)}, {"result", std::move(result)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<cp::EdgeId> edge_list(const std::string& text, const char* what) {
  return parse_list<cp::EdgeId>(text, what);
}

cp::SimplePath path_arg(const cp::MultiGraph& g, const std::string& text, const char* what) {
  const auto ids = edge_list(text, what);
  for (auto e : ids) {
    if (e >= g.edge_count()) {
      throw cp::Error(cp::ErrorCode::ParseError,
                      std::string(what) + ": edge id " + std::to_string(e) + " out of range");
    }
  }
  return cp::path_from_edge_set(g, cp::EdgeSet::from_ids(g.edge_count(), ids));
}

// ---------------------------------------------------------------------------

void cmd_generate(const RunConfig& cfg) {
  require_format(cfg, {"json", "dot"});
  const auto g = load_graph(cfg);
  emit(cfg, cp::export_graph(g, cp::parse_graph_format(cfg.format)));
}

void cmd_analyze(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  const auto g = load_graph(cfg);
  const auto cycles = cp::enumerate_cycles(g, std::nullopt, {cfg.max_cycles});
  std::map<std::size_t, std::size_t> census;
  for (const auto& c : cycles) ++census[c.length()];
  const bool cactus = cp::is_cactus(g);
  const auto theta = cp::theta_length_condition(g, {cfg.max_cycles, cfg.max_paths});
  const auto controlled = cp::has_controlled_cycles(g, {cfg.max_paths, cfg.max_cycles, 0});

  if (cfg.format == "text") {
    std::ostringstream out;
    out << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count()
        << "\nroot: " << g.label(g.root()) << "\ncycles: " << cycles.size() << "\n";
    for (const auto& [len, count] : census) out << "  length " << len << ": " << count << "\n";
    out << "cactus: " << (cactus ? "true" : "false") << "\n";
    out << "theta condition: " << (theta.holds ? "holds" : "fails") << "\n";
    out << "controlled cycles: " << (controlled.controlled ? "true" : "false") << "\n";
    if (controlled.counterexample) {
      const auto& ce = *controlled.counterexample;
      out << "counterexample: n=" << ce.n << " between " << g.label(ce.u) << " and "
          << g.label(ce.v) << " (longest divergences " << ce.gamma_delta << ", "
          << ce.delta_epsilon << ", " << ce.gamma_epsilon << ")\n";
    }
    emit(cfg, out.str());
    return;
  }

  Json census_json = Json::array();
  for (const auto& [len, count] : census) {
    census_json.push_back(Json{{"length", len}, {"count", count}});
  }
  Json result;
  result["vertices"] = g.vertex_count();
  result["edges"] = g.edge_count();
  result["cycle_count"] = cycles.size();
  result["cycle_census"] = std::move(census_json);
  result["cactus"] = cactus;
  auto ctrl = cp::controlled_json(g, controlled);
  result["controlled_cycles"] = ctrl["controlled_cycles"];
  result["counterexample"] = ctrl["counterexample"];
  result["critical_n"] = ctrl["critical_n"];
  result["theta_condition"] = cp::theta_json(g, theta);
  emit(cfg, dump(report(cfg, std::move(result))));
}

void cmd_paths(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv", "text"});
  const auto g = load_graph(cfg);
  std::vector<cp::PathFiber> fibers;
  if (!cfg.vertex.empty()) {
    fibers.push_back(cp::enumerate_fiber(g, g.vertex(cfg.vertex), {cfg.max_paths}));
  } else {
    fibers = cp::enumerate_fibers(g, {cfg.max_paths});
  }
  if (cfg.format == "csv" || cfg.format == "text") {
    std::ostringstream out;
    out << "vertex,paths\n";
    for (const auto& f : fibers) out << g.label(f.endpoint) << ',' << f.paths.size() << '\n';
    emit(cfg, out.str());
    return;
  }
  Json list = Json::array();
  std::size_t total = 0;
  for (const auto& f : fibers) {
    Json paths = Json::array();
    for (const auto& p : f.paths) paths.push_back(p.edges);
    total += f.paths.size();
    list.push_back(Json{{"v", g.label(f.endpoint)},
                        {"count", f.paths.size()},
                        {"paths", std::move(paths)}});
  }
  emit(cfg, dump(report(cfg, Json{{"total", total}, {"fibers", std::move(list)}})));
}

void cmd_metric(const RunConfig& cfg) {
  require_format(cfg, {"json", "text"});
  const auto g = load_graph(cfg);
  const auto a = path_arg(g, cfg.path_a, "--a");
  const auto b = path_arg(g, cfg.path_b, "--b");
  const auto d = cp::symm_diff_metric(a, b);
  const auto dh = cp::hausdorff_metric(g, a, b, cp::HausdorffMode::Geometric);
  const auto dv = cp::hausdorff_metric(g, a, b, cp::HausdorffMode::VertexSet);
  if (cfg.format == "text") {
    emit(cfg, "d " + std::to_string(d) + "\nd_H " + dh.str() + "\nd_H_vertices " + dv.str() +
                  "\n");
    return;
  }
  Json result{{"a", cp::path_json(g, a)},
              {"b", cp::path_json(g, b)},
              {"same_endpoint", a.target() == b.target()},
              {"d", d},
              {"d_hausdorff", dh.str()},
              {"d_hausdorff_vertex_set", dv.str()}};
  emit(cfg, dump(report(cfg, std::move(result))));
}

void cmd_profile(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  if (!cfg.graph_file.empty()) {
    throw cp::Error(cp::ErrorCode::BadSpec, "profile needs --family (a truncation family)");
  }
  if (cfg.t_min > cfg.t_max || cfg.t_min < 1) {
    throw cp::Error(cp::ErrorCode::BadSpec, "need 1 <= --t-min <= --t-max");
  }
  if (cfg.r > cfg.max_radius) {
    throw cp::Error(cp::ErrorCode::Overflow, "radius exceeds --max-radius");
  }
  std::vector<cp::Truncation> family;
  for (std::size_t t = cfg.t_min; t <= cfg.t_max; ++t) {
    family.push_back({t, cp::generate(cp::with_truncation(cfg.family, t))});
  }
  const auto bg = cp::bounded_geometry_report(family, cfg.n, cfg.r, {cfg.max_paths},
                                              {cfg.max_cycles});
  if (cfg.format == "csv") {
    emit(cfg, cp::bounded_geometry_csv(bg));
    return;
  }
  auto result = cp::bounded_geometry_json(bg);
  // full tables for the largest truncation
  const auto& last = family.back();
  const auto space = cp::PathSpace::build(last.graph, {cfg.max_paths});
  result["tables_truncation"] = last.t;
  result["growth"] = cp::growth_json(cp::growth_profile(space, cfg.r));
  result["incidence"] = cp::incidence_json(
      cp::cycle_incidence_profile(last.graph, cfg.n, {cfg.max_paths}, {cfg.max_cycles}));
  emit(cfg, dump(report(cfg, std::move(result))));
}

void cmd_witness(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  const auto g = load_graph(cfg);
  const auto space = cp::PathSpace::build(g, {cfg.max_paths});
  Json result;
  try {
    const auto w = cp::property_a_witness(space, cfg.n, {cfg.max_cycles});
    const auto pa = cp::verify_property_a(space, w, cfg.R);
    const auto xi = cp::higson_roe_map(w);
    const auto hr = cp::verify_higson_roe(space, xi, cfg.R, w.support_radius);
    result["status"] = pa.scale_mismatch ? "ScaleMismatch" : (pa.ok() ? "ok" : "violations");
    result["witness"] = cp::witness_json(g, w, pa);
    result["higson_roe"] = cp::higson_roe_json(hr);
    result["not_transitive"] = nullptr;
  } catch (const cp::NotTransitiveError& e) {
    result["status"] = "NotTransitive";
    result["witness"] = nullptr;
    result["higson_roe"] = nullptr;
    result["not_transitive"] = cp::not_transitive_json(g, e);
  }
  emit(cfg, dump(report(cfg, std::move(result))));
}

void cmd_embed(const RunConfig& cfg) {
  require_format(cfg, {"json", "csv"});
  const auto g = load_graph(cfg);
  const auto paths = cp::enumerate_simple_paths(g, {cfg.max_paths});
  if (cfg.format == "csv") {
    std::ostringstream out;
    out << "path";
    for (std::size_t e = 0; e < g.edge_count(); ++e) out << ",e" << e;
    out << '\n';
    for (std::size_t i = 0; i < paths.size(); ++i) {
      out << i;
      for (auto bit : cp::hamming_embed(paths[i], g.edge_count())) out << ',' << int(bit);
      out << '\n';
    }
    emit(cfg, out.str());
    return;
  }
  Json vectors = Json::array();
  for (const auto& p : paths) {
    vectors.push_back(Json{{"v", g.label(p.target())},
                           {"edges", p.edges},
                           {"vector", cp::hamming_embed(p, g.edge_count())}});
  }
  emit(cfg, dump(report(cfg, Json{{"edge_count", g.edge_count()},
                                  {"paths", paths.size()},
                                  {"vectors", std::move(vectors)}})));
}

void cmd_cube(const RunConfig& cfg) {
  require_format(cfg, {"json"});
  const auto g = load_graph(cfg);
  const auto base = path_arg(g, cfg.base_path, "--path");
  const auto all = cp::enumerate_cycles(g, std::nullopt, {cfg.max_cycles});
  std::vector<cp::Cycle> chosen;
  std::size_t longest = 0;
  for (auto id : parse_list<std::size_t>(cfg.cycle_ids, "--cycles")) {
    if (id >= all.size()) {
      throw cp::Error(cp::ErrorCode::ParseError, "cycle index " + std::to_string(id) +
                                                     " out of range (" +
                                                     std::to_string(all.size()) + " cycles)");
    }
    chosen.push_back(all[id]);
    longest = std::max(longest, all[id].length());
  }
  const std::size_t n = cfg.n_given ? cfg.n : longest;
  const auto cube = cp::cube_embedding(g, base, chosen, n);
  const auto bounds = cp::verify_cube_bounds(cube);
  emit(cfg, dump(report(cfg, cp::cube_json(g, cube, bounds))));
}

void add_input_options(CLI::App* sub, RunConfig& cfg) {
  auto* graph = sub->add_option("--graph", cfg.graph_file, "Graph file (.json or .dot)");
  auto* family = sub->add_option("--family", cfg.family.family,
                                 "gamma_kl|doubled_path|ladder|theta_chain|fan|hausdorff|"
                                 "random_cactus");
  graph->excludes(family);
  family->excludes(graph);
  sub->add_option("--k", cfg.k_list, "Hub positions, comma separated");
  sub->add_option("--k-rule", cfg.family.k_rule, "linear|squares|odd");
  sub->add_option("--l", cfg.family.l, "Strands per block (gamma_kl)");
  sub->add_option("--t", cfg.family.t, "Truncation (blocks / diamonds)")
      ->each([&cfg](const std::string&) { cfg.t_given = true; });
  sub->add_option("--columns", cfg.family.columns, "Ladder columns");
  sub->add_option("--depth", cfg.family.depth, "Fan depth");
  sub->add_option("--arcs", cfg.arcs, "Theta chain arcs, e.g. 2,2,2;4,4,4");
  sub->add_option("--vertices", cfg.family.vertices, "Random cactus size");
  sub->add_option("--seed", cfg.family.seed, "Random cactus seed");
  sub->add_option("--format", cfg.format, "json|csv|dot|text");
  sub->add_option("--out", cfg.out, "Output path (default stdout)");
  sub->add_option("--max-paths", cfg.max_paths, "Path enumeration cap")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-cycles", cfg.max_cycles, "Cycle enumeration cap")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-radius", cfg.max_radius, "Largest admissible ball radius")
      ->check(CLI::PositiveNumber);
}

void print_error(const std::string& code, const std::string& message) {
  std::cerr << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coarsepaths: simple-path spaces of rooted multigraphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Entry {
    const char* name;
    const char* help;
    void (*run)(const RunConfig&);
  };
  const Entry entries[] = {
      {"generate", "Emit a family member as JSON or DOT", cmd_generate},
      {"analyze", "Cactus, controlled-cycles and theta verdicts plus a cycle census",
       cmd_analyze},
      {"paths", "List or count the fibers P_v", cmd_paths},
      {"metric", "d and Hausdorff distance between two root paths", cmd_metric},
      {"profile", "Ball growth and cycle incidence across truncations", cmd_profile},
      {"witness", "Property-A witness sets and their verification", cmd_witness},
      {"embed", "Hamming vectors of every root path", cmd_embed},
      {"cube", "Cube embedding around a path and its bilipschitz check", cmd_cube},
  };
  std::map<CLI::App*, void (*)(const RunConfig&)> handlers;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    add_input_options(sub, cfg);
    handlers[sub] = e.run;
    const std::string name = e.name;
    if (name == "paths") sub->add_option("--v", cfg.vertex, "Endpoint label (default: all)");
    if (name == "metric") {
      sub->add_option("--a", cfg.path_a, "First path, edge ids from the root")->required();
      sub->add_option("--b", cfg.path_b, "Second path, edge ids from the root")->required();
    }
    if (name == "profile") {
      sub->add_option("--t-min", cfg.t_min, "First truncation");
      sub->add_option("--t-max", cfg.t_max, "Last truncation");
      sub->add_option("--r", cfg.r, "Ball radius");
      sub->add_option("--n", cfg.n, "Cycle length scale for m(n)");
    }
    if (name == "witness") {
      sub->add_option("--n", cfg.n, "Scale n");
      sub->add_option("--R", cfg.R, "Closeness radius R (<= n)");
    }
    if (name == "cube") {
      sub->add_option("--path", cfg.base_path, "Base path, edge ids")->required();
      sub->add_option("--cycles", cfg.cycle_ids, "Indices into the canonical cycle list")
          ->required();
      sub->add_option("--n", cfg.n, "Upper scale (default: longest chosen cycle)")
          ->each([&cfg](const std::string&) { cfg.n_given = true; });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    for (const auto& [sub, run] : handlers) {
      if (!sub->parsed()) continue;
      cfg.command = sub->get_name();
      if (cfg.graph_file.empty() && cfg.family.family.empty()) {
        throw cp::Error(cp::ErrorCode::BadSpec, "exactly one of --graph or --family is required");
      }
      finalize_family(cfg);
      run(cfg);
    }
  } catch (const cp::Error& e) {
    print_error(std::string(cp::to_string(e.code())), e.what());
    return 2;
  } catch (const std::exception& e) {
    print_error("Internal", e.what());
    return 3;
  }
  return 0;
}
