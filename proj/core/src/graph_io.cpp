#include "coarsepaths/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include <json.hpp>

namespace coarsepaths {

namespace {

using nlohmann::ordered_json;

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string json_label(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw Error(ErrorCode::ParseError, "vertex labels must be strings or integers");
}

MultiGraph import_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") ||
      !doc.contains("root")) {
    throw Error(ErrorCode::ParseError, "graph JSON needs 'vertices', 'edges' and 'root'");
  }
  if (!doc["vertices"].is_array() || !doc["edges"].is_array()) {
    throw Error(ErrorCode::ParseError, "'vertices' and 'edges' must be arrays");
  }
  GraphSpec spec;
  for (const auto& v : doc["vertices"]) spec.vertices.push_back(json_label(v));
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned()) {
      throw Error(ErrorCode::ParseError, "each edge must be [id, u, v] with a non-negative id");
    }
    spec.edges.push_back({e[0].get<EdgeId>(), json_label(e[1]), json_label(e[2])});
  }
  spec.root = json_label(doc["root"]);
  return build_graph(spec);
}

// Minimal reader for the dialect written by export_graph.
class DotReader {
 public:
  explicit DotReader(std::string_view text) : text_(text) {}

  MultiGraph read() {
    expect_word("graph");
    skip_ws();
    if (peek() != '{') read_token();  // optional graph name
    expect_char('{');
    GraphSpec spec;
    bool have_root = false;
    while (true) {
      skip_ws();
      if (peek() == '}') {
        ++pos_;
        break;
      }
      if (at_end()) fail("unterminated graph body");
      std::string first = read_token();
      skip_ws();
      if (text_.substr(pos_, 2) == "--") {
        pos_ += 2;
        std::string second = read_token();
        auto attrs = read_attrs();
        auto it = attrs.find("label");
        if (it == attrs.end()) fail("edge without label id");
        EdgeId id = 0;
        const auto& s = it->second;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), id);
        if (ec != std::errc() || p != s.data() + s.size()) fail("edge label is not an id");
        spec.edges.push_back({id, first, second});
      } else {
        auto attrs = read_attrs();
        if (first == "node" || first == "edge" || first == "graph") continue;
        spec.vertices.push_back(first);
        if (attrs.count("root") && attrs["root"] == "true") {
          spec.root = first;
          have_root = true;
        }
      }
      skip_ws();
      if (peek() == ';') ++pos_;
    }
    if (!have_root) fail("no vertex carries root=true");
    return build_graph(spec);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "DOT: " + why + " at offset " + std::to_string(pos_));
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (text_.substr(pos_, 2) == "//") {
        while (!at_end() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string read_token() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    std::string out;
    if (text_[pos_] == '"') {
      ++pos_;
      while (!at_end() && text_[pos_] != '"') {
        if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
        out.push_back(text_[pos_++]);
      }
      if (at_end()) fail("unterminated string");
      ++pos_;
      return out;
    }
    while (!at_end()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
        if (c == '-' && text_.substr(pos_, 2) == "--") break;
        out.push_back(c);
        ++pos_;
      } else {
        break;
      }
    }
    if (out.empty()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return out;
  }

  std::map<std::string, std::string> read_attrs() {
    std::map<std::string, std::string> attrs;
    skip_ws();
    if (peek() != '[') return attrs;
    ++pos_;
    while (true) {
      skip_ws();
      if (peek() == ']') {
        ++pos_;
        return attrs;
      }
      std::string key = read_token();
      expect_char('=');
      attrs[key] = read_token();
      skip_ws();
      if (peek() == ',' || peek() == ';') ++pos_;
    }
  }

  void expect_char(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(const std::string& w) {
    if (read_token() != w) fail("expected '" + w + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "json") return GraphFormat::Json;
  if (name == "dot") return GraphFormat::Dot;
  throw Error(ErrorCode::UnknownFormat, "unknown graph format '" + std::string(name) + "'");
}

std::string export_graph(const MultiGraph& g, GraphFormat format) {
  if (format == GraphFormat::Json) {
    ordered_json doc;
    doc["vertices"] = g.labels();
    ordered_json edges = ordered_json::array();
    for (const auto& e : g.edges()) {
      edges.push_back(ordered_json::array({e.id, g.label(e.u), g.label(e.v)}));
    }
    doc["edges"] = std::move(edges);
    doc["root"] = g.label(g.root());
    return doc.dump() + "\n";
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << dot_quote(g.label(v));
    if (v == g.root()) out << " [root=true, shape=doublecircle]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << dot_quote(g.label(e.u)) << " -- " << dot_quote(g.label(e.v))
        << " [label=\"" << e.id << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

MultiGraph import_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Json) return import_json(text);
  return DotReader(text).read();
}

}  // namespace coarsepaths
