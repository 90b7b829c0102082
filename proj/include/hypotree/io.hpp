#pragma once

#include <string>

#include "hypotree/tree.hpp"

namespace hypotree {

/// Edge-list text: one edge per line ("u v"), '#' comments and blank lines
/// ignored, optional "n=<count>" header (required only for the 1-vertex tree).
/// Vertex count defaults to 1 + max index.
Tree parse_edge_list(const std::string& text);

/// Canonical form: "n=" header first when needed, then edges as (min,max)
/// pairs in lexicographic order. parse(serialize(t)) == t.
std::string serialize_edge_list(const Tree& t);

/// Graphviz "graph { ... }" document.
std::string to_dot(const Tree& t);

} // namespace hypotree
