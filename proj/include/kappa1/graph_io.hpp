#pragma once

#include <string>
#include <string_view>

#include "kappa1/graph.hpp"

namespace kappa1 {

// Text format:
//   graph <V> <E>
//   e <u> <v>        0 <= u < v < V
//   l <v> <l1,l2,..> optional; labels either cover every vertex or none
//   # comment
// Errors carry the offending line number. When the labels form the complete
// family of k-subsets of [1, max label] in lexicographic vertex order, the
// parsed graph recovers its Kneser (n, k) parameters.
Graph parse_graph(std::string_view text);

// Canonical form: header, label lines ascending, edge lines ascending.
// parse(serialize(g)) == g.
std::string serialize_graph(const Graph& g);

// DOT export; Kneser vertices are named by their label sets.
std::string export_dot(const Graph& g);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);
void save_text_file(const std::string& text, const std::string& path);

}  // namespace kappa1
