#include "kappa1/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kappa1/error.hpp"
#include "kappa1/kneser.hpp"

namespace kappa1 {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& message) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + message);
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(const std::string& token, std::size_t line_no, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    parse_fail(line_no, std::string("expected ") + what + ", got '" + token + "'");
  return value;
}

// Labels recover (n, k) when they are exactly the k-subsets of [1, n] in
// lexicographic order, which is equivalent to label i unranking to vertex i.
std::optional<KneserParams> recover_params(const std::vector<LabelSet>& labels) {
  if (labels.empty() || labels.front().labels.empty()) return std::nullopt;
  const int k = static_cast<int>(labels.front().size());
  int n = 0;
  for (const auto& l : labels) {
    if (static_cast<int>(l.size()) != k) return std::nullopt;
    n = std::max(n, l.max_label());
  }
  if (binomial(n, k) != labels.size()) return std::nullopt;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!(labels[i] == unrank_subset(i, n, k))) return std::nullopt;
  return KneserParams{n, k};
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool header_seen = false;
  std::vector<Edge> edges;
  std::set<Edge> seen_edges;
  std::vector<LabelSet> labels;
  std::vector<bool> labeled;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "graph") {
      if (header_seen) parse_fail(line_no, "second 'graph' header");
      if (tokens.size() != 3) parse_fail(line_no, "expected 'graph <V> <E>'");
      vertex_count = parse_uint(tokens[1], line_no, "vertex count");
      edge_count = parse_uint(tokens[2], line_no, "edge count");
      labels.assign(vertex_count, {});
      labeled.assign(vertex_count, false);
      header_seen = true;
    } else if (tokens[0] == "e") {
      if (!header_seen) parse_fail(line_no, "'e' before 'graph' header");
      if (tokens.size() != 3) parse_fail(line_no, "expected 'e <u> <v>'");
      std::uint64_t u = parse_uint(tokens[1], line_no, "vertex id");
      std::uint64_t v = parse_uint(tokens[2], line_no, "vertex id");
      if (u >= vertex_count || v >= vertex_count)
        parse_fail(line_no, "vertex id out of range [0, " + std::to_string(vertex_count) + ")");
      if (u == v) parse_fail(line_no, "self-loop at vertex " + std::to_string(u));
      if (u > v) parse_fail(line_no, "edge endpoints must satisfy u < v");
      if (seen_edges.count(Edge(static_cast<Vertex>(u), static_cast<Vertex>(v))))
        parse_fail(line_no,
                   "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      seen_edges.insert(Edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else if (tokens[0] == "l") {
      if (!header_seen) parse_fail(line_no, "'l' before 'graph' header");
      if (tokens.size() != 3) parse_fail(line_no, "expected 'l <v> <l1,l2,..>'");
      std::uint64_t v = parse_uint(tokens[1], line_no, "vertex id");
      if (v >= vertex_count)
        parse_fail(line_no, "vertex id out of range [0, " + std::to_string(vertex_count) + ")");
      if (labeled[v]) parse_fail(line_no, "second label line for vertex " + std::to_string(v));
      LabelSet set;
      std::stringstream ss(tokens[2]);
      std::string item;
      while (std::getline(ss, item, ','))
        set.labels.push_back(static_cast<int>(parse_uint(item, line_no, "label")));
      if (set.labels.empty()) parse_fail(line_no, "empty label list");
      if (!set.valid(set.max_label()))
        parse_fail(line_no, "labels must be strictly increasing and positive");
      labels[v] = std::move(set);
      labeled[v] = true;
    } else {
      parse_fail(line_no, "unknown directive '" + tokens[0] + "'");
    }
  }

  if (!header_seen) fail(ErrorCode::ParseError, "missing 'graph <V> <E>' header");
  if (edges.size() != edge_count)
    fail(ErrorCode::ParseError, "header announces " + std::to_string(edge_count) +
                                    " edges, found " + std::to_string(edges.size()));

  std::size_t labeled_count = 0;
  for (bool b : labeled) labeled_count += b;
  if (labeled_count != 0 && labeled_count != vertex_count)
    fail(ErrorCode::ParseError, "labels must cover every vertex or none; got " +
                                    std::to_string(labeled_count) + " of " +
                                    std::to_string(vertex_count));
  if (labeled_count == 0)
    return Graph(vertex_count, edges);
  auto params = recover_params(labels);
  return Graph(vertex_count, edges, std::move(labels), params);
}

std::string serialize_graph(const Graph& g) {
  std::string out = "graph " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  if (g.has_labels()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      out += "l " + std::to_string(v) + " ";
      const auto& labels = g.label(v).labels;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(labels[i]);
      }
      out += '\n';
    }
  }
  for (const auto& [u, v] : g.edges())
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string export_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out += "  v" + std::to_string(v);
    if (g.has_labels()) out += " [label=\"" + to_string(g.label(v)) + "\"]";
    out += ";\n";
  }
  for (const auto& [u, v] : g.edges())
    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(ErrorCode::IoError, "read failure on '" + path + "'");
  return parse_graph(buffer.str());
}

void save_text_file(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) fail(ErrorCode::IoError, "write failure on '" + path + "'");
}

void save_graph_file(const Graph& g, const std::string& path) {
  save_text_file(serialize_graph(g), path);
}

}  // namespace kappa1
