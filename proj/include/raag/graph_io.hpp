#pragma once

#include <string>
#include <string_view>

#include "raag/graph.hpp"

namespace raag {

// {"vertices": [...], "edges": [[a, b], ...]}; names may be strings or
// integers. Without "vertices", vertices appear in order of first use.
Graph parse_graph_json(std::string_view text);

// One edge "a b" per line, isolated vertices on a "vertices: a b c" line,
// '#' starts a comment.
Graph parse_graph_text(std::string_view text);

// Picks the format from the first non-blank character ('{' means JSON).
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

std::string graph_to_json(const Graph& g);

}  // namespace raag
