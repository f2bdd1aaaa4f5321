#pragma once
// Interchange formats: graph6 (bit-exact, strict), a plain "n m" + "u v"
// edgelist, and a DOT subset for rendering.

#include <string>
#include <string_view>
#include <vector>

#include "lgpoly/graph.hpp"

namespace lgpoly {

// Standard graph6: order prefix (single char up to 62, '~'-extended above),
// then the upper-triangle adjacency bits in column order, 6 per character,
// each offset by 63.  parse rejects bad characters, truncation, trailing
// garbage and nonzero padding (malformed_g6); syntactically valid lines whose
// order exceeds the library bound raise too_large.
std::string write_graph6(const Graph& g);
Graph parse_graph6(std::string_view line);

// First line "n m", then m lines "u v".  Any violation (including indices out
// of range, loops, duplicates, wrong counts) is malformed_edgelist.
Graph parse_edgelist(const std::string& text);
std::string write_edgelist(const Graph& g);

// Render-ready undirected DOT.  labels, when nonempty, must have one entry
// per vertex (bad_argument otherwise).
std::string write_dot(const Graph& g, const std::vector<std::string>& labels = {});

// Display form for line-graph vertices named by their origin edge: "uv" when
// both endpoints are single digits, "u-v" otherwise.
std::vector<std::string> edge_labels(const std::vector<Edge>& origin);

}  // namespace lgpoly
