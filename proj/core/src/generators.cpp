#include "coarsepaths/generators.hpp"

#include <random>

#include "coarsepaths/error.hpp"

namespace coarsepaths {

namespace {

class SpecBuilder {
 public:
  const std::string& add_vertex(std::string label) {
    spec_.vertices.push_back(std::move(label));
    return spec_.vertices.back();
  }
  void add_edge(const std::string& u, const std::string& v) {
    spec_.edges.push_back({std::nullopt, u, v});
  }
  MultiGraph build(std::string root) {
    spec_.root = std::move(root);
    return build_graph(spec_);
  }

 private:
  GraphSpec spec_;
};

std::string pair_label(std::int64_t x, std::int64_t j) {
  return "(" + std::to_string(x) + "," + std::to_string(j) + ")";
}

[[noreturn]] void bad_spec(const std::string& why) { throw Error(ErrorCode::BadSpec, why); }

}  // namespace

std::vector<std::int64_t> k_sequence(std::string_view rule, std::size_t count) {
  std::vector<std::int64_t> k(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto x = static_cast<std::int64_t>(i);
    if (rule == "linear") {
      k[i] = x;
    } else if (rule == "squares") {
      k[i] = x * x;
    } else if (rule == "odd") {
      k[i] = 2 * x + 1;
    } else {
      bad_spec("unknown k rule '" + std::string(rule) + "' (linear, squares, odd)");
    }
  }
  return k;
}

MultiGraph gamma_kl(std::span<const std::int64_t> k, std::size_t l, std::size_t t) {
  if (l < 2) bad_spec("gamma_kl needs l >= 2");
  if (t < 1) bad_spec("gamma_kl needs t >= 1");
  if (k.size() < t + 1) bad_spec("gamma_kl needs t+1 hub positions");
  for (std::size_t i = 1; i <= t; ++i) {
    if (k[i] <= k[i - 1]) bad_spec("hub positions must be strictly increasing");
  }
  const std::int64_t shift = k[0];
  SpecBuilder b;
  std::string hub = b.add_vertex(pair_label(0, 0));
  const std::string root = hub;
  for (std::size_t i = 0; i < t; ++i) {
    const std::int64_t a = k[i] - shift;
    const std::int64_t z = k[i + 1] - shift;
    std::vector<std::vector<std::string>> strands(l);
    for (std::size_t j = 0; j < l && z - a >= 2; ++j) {
      for (std::int64_t x = a + 1; x < z; ++x) {
        strands[j].push_back(b.add_vertex(pair_label(x, static_cast<std::int64_t>(j))));
      }
    }
    const std::string next = b.add_vertex(pair_label(z, 0));
    for (std::size_t j = 0; j < l; ++j) {
      if (z - a == 1) {
        b.add_edge(hub, next);
        continue;
      }
      const auto& s = strands[j];
      b.add_edge(hub, s.front());
      for (std::size_t x = 0; x + 1 < s.size(); ++x) b.add_edge(s[x], s[x + 1]);
      b.add_edge(s.back(), next);
    }
    hub = next;
  }
  return b.build(root);
}

MultiGraph doubled_path(std::size_t t) {
  const auto k = k_sequence("linear", t + 1);
  return gamma_kl(k, 2, t);
}

MultiGraph ladder(std::size_t columns) {
  if (columns < 1) bad_spec("ladder needs at least one column");
  SpecBuilder b;
  std::vector<std::string> top, bot;
  for (std::size_t c = 1; c <= columns; ++c) {
    top.push_back(b.add_vertex("(" + std::to_string(c) + ",top)"));
  }
  for (std::size_t c = 1; c <= columns; ++c) {
    bot.push_back(b.add_vertex("(" + std::to_string(c) + ",bot)"));
  }
  for (std::size_t c = 0; c + 1 < columns; ++c) b.add_edge(top[c], top[c + 1]);
  for (std::size_t c = 0; c < columns; ++c) b.add_edge(top[c], bot[c]);
  for (std::size_t c = 0; c + 1 < columns; ++c) b.add_edge(bot[c], bot[c + 1]);
  return b.build(top.front());
}

MultiGraph theta_chain(const std::vector<std::vector<std::size_t>>& blocks) {
  if (blocks.empty()) bad_spec("theta_chain needs at least one block");
  SpecBuilder b;
  std::string hub = b.add_vertex("h0");
  const std::string root = hub;
  for (std::size_t blk = 0; blk < blocks.size(); ++blk) {
    const auto& arcs = blocks[blk];
    if (arcs.size() < 2) bad_spec("every theta_chain block needs at least two arcs");
    std::vector<std::vector<std::string>> interiors(arcs.size());
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      if (arcs[j] < 1) bad_spec("theta_chain arc lengths must be >= 1");
      for (std::size_t s = 1; s < arcs[j]; ++s) {
        interiors[j].push_back(b.add_vertex("(" + std::to_string(blk) + "," + std::to_string(j) +
                                            "," + std::to_string(s) + ")"));
      }
    }
    const std::string next = b.add_vertex("h" + std::to_string(blk + 1));
    for (const auto& in : interiors) {
      std::string prev = hub;
      for (const auto& v : in) {
        b.add_edge(prev, v);
        prev = v;
      }
      b.add_edge(prev, next);
    }
    hub = next;
  }
  return b.build(root);
}

MultiGraph fan(std::size_t depth) {
  if (depth < 1) bad_spec("fan needs depth >= 1");
  SpecBuilder b;
  const std::string root = b.add_vertex("o");
  std::vector<std::string> up, down;
  std::vector<std::vector<std::string>> rungs(depth);
  for (std::size_t i = 1; i <= depth; ++i) {
    up.push_back(b.add_vertex("u" + std::to_string(i)));
    down.push_back(b.add_vertex("w" + std::to_string(i)));
    const auto span = static_cast<std::int64_t>(i) - 1;
    for (std::int64_t s = -span; s <= span; ++s) {
      rungs[i - 1].push_back(b.add_vertex(pair_label(static_cast<std::int64_t>(i), s)));
    }
  }
  b.add_edge(root, up[0]);
  for (std::size_t i = 0; i + 1 < depth; ++i) b.add_edge(up[i], up[i + 1]);
  b.add_edge(root, down[0]);
  for (std::size_t i = 0; i + 1 < depth; ++i) b.add_edge(down[i], down[i + 1]);
  for (std::size_t i = 0; i < depth; ++i) {
    std::string prev = down[i];
    for (const auto& v : rungs[i]) {
      b.add_edge(prev, v);
      prev = v;
    }
    b.add_edge(prev, up[i]);
  }
  return b.build(root);
}

MultiGraph hausdorff_graph(std::size_t t) {
  if (t < 1) bad_spec("hausdorff_graph needs t >= 1");
  SpecBuilder b;
  std::string hub = b.add_vertex("v0");
  const std::string root = hub;
  for (std::size_t i = 1; i <= t; ++i) {
    const std::string plus = b.add_vertex("v" + std::to_string(2 * i - 1) + "+");
    const std::string minus = b.add_vertex("v" + std::to_string(2 * i - 1) + "-");
    const std::string next = b.add_vertex("v" + std::to_string(2 * i));
    b.add_edge(hub, plus);
    b.add_edge(plus, next);
    b.add_edge(hub, minus);
    b.add_edge(minus, next);
    hub = next;
  }
  return b.build(root);
}

MultiGraph random_cactus(std::size_t n_vertices, std::uint64_t seed) {
  if (n_vertices < 1) bad_spec("random_cactus needs at least one vertex");
  std::mt19937_64 rng(seed);
  SpecBuilder b;
  std::vector<std::string> labels;
  auto fresh = [&] {
    labels.push_back(b.add_vertex("c" + std::to_string(labels.size())));
    return labels.back();
  };
  fresh();
  while (labels.size() < n_vertices) {
    const std::string anchor = labels[rng() % labels.size()];
    const std::size_t remaining = n_vertices - labels.size();
    const std::size_t longest = std::min<std::size_t>(remaining + 1, 6);
    const bool bridge = rng() % 3 == 0;
    if (bridge) {
      b.add_edge(anchor, fresh());
      continue;
    }
    const std::size_t len = 2 + rng() % (longest - 1);
    if (len == 2) {
      const std::string v = fresh();
      b.add_edge(anchor, v);
      b.add_edge(anchor, v);
      continue;
    }
    std::string prev = anchor;
    for (std::size_t s = 1; s < len; ++s) {
      const std::string v = fresh();
      b.add_edge(prev, v);
      prev = v;
    }
    b.add_edge(prev, anchor);
  }
  return b.build(labels.front());
}

MultiGraph generate(const FamilySpec& spec) {
  const auto& f = spec.family;
  if (f == "gamma_kl") {
    auto k = spec.k;
    if (k.empty()) {
      if (spec.k_rule.empty()) bad_spec("gamma_kl needs k or k_rule");
      k = k_sequence(spec.k_rule, spec.t + 1);
    }
    return gamma_kl(k, spec.l, spec.t);
  }
  if (f == "doubled_path") return doubled_path(spec.t);
  if (f == "ladder") return ladder(spec.columns);
  if (f == "theta_chain") return theta_chain(spec.arcs);
  if (f == "fan") return fan(spec.depth);
  if (f == "hausdorff") return hausdorff_graph(spec.t);
  if (f == "random_cactus") return random_cactus(spec.vertices, spec.seed);
  bad_spec("unknown family '" + f + "'");
}

FamilySpec with_truncation(FamilySpec spec, std::size_t t) {
  const auto& f = spec.family;
  if (f == "ladder") {
    spec.columns = t;
  } else if (f == "fan") {
    spec.depth = t;
  } else if (f == "random_cactus") {
    spec.vertices = t;
  } else if (f == "theta_chain") {
    if (spec.arcs.empty()) bad_spec("theta_chain needs arcs to truncate");
    if (t > spec.arcs.size()) bad_spec("theta_chain truncation exceeds the block list");
    spec.arcs.resize(t);
  } else {
    if (f == "gamma_kl" && !spec.k.empty() && spec.k.size() < t + 1) {
      bad_spec("explicit k list too short for truncation " + std::to_string(t));
    }
    spec.t = t;
  }
  return spec;
}

}  // namespace coarsepaths
