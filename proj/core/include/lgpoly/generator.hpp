#pragma once
// Isomorph-free enumeration: cubic 3-polytopes up to a vertex bound, the
// decorated roots they induce up to an edge budget, the 3-polytopal line
// graphs of those roots, and an independent brute-force enumeration of ALL
// small connected graphs for cross-validation.
//
// Every function returns canonical forms sorted by canonical code, so output
// is byte-stable regardless of the thread count.

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "lgpoly/graph.hpp"

namespace lgpoly {

struct EnumerationReport {
  std::string op;
  int bound = 0;
  std::map<int, std::size_t> counts;  // by vertex count or edge count
  std::vector<std::string> codes;     // canonical codes, sorted
  std::chrono::milliseconds elapsed{0};
  std::size_t total() const;
};
EnumerationReport make_report(std::string op, int bound,
                              const std::vector<Graph>& graphs, bool by_edges,
                              std::chrono::milliseconds elapsed);

// Vertex guard for cubic enumeration; default 14, overridable through the
// LGPOLY_MAX_CUBIC_VERTICES environment variable (accepted range 4..64).
int cubic_vertex_guard();

// All connected 3-regular graphs on exactly n vertices, one per isomorphism
// class.  prefilter, when set, is applied to each labeled candidate before
// the (more expensive) canonical dedup.
std::vector<Graph> enumerate_cubic_graphs(
    int n, const std::function<bool(const Graph&)>& prefilter = {});

// All cubic 3-polytopes with 4..max_vertices vertices (bound_exceeded above
// the guard; bad_argument unless max_vertices is an even integer >= 4).
std::vector<Graph> enumerate_cubic_polytopes(int max_vertices);

// Subdivide each listed base edge once, then attach a pendant to each listed
// host (base labels).  Errors propagate from the underlying transforms.
Graph decorate(const Graph& base, const std::vector<Edge>& sub_edges,
               const std::vector<int>& pendant_hosts);

// Every root with at most max_edges edges: decorated cubic 3-polytopes plus
// the exceptional catalog.  Guard: max_edges <= 24 (bound_exceeded), and the
// cubic vertex guard applies to the bases the budget admits.
std::vector<Graph> enumerate_roots(int max_edges, int threads = 1);

// Line graphs of enumerate_roots(max_root_edges); each is checked to be a
// 3-polytope (logic_error on violation, which would falsify the theory).
std::vector<Graph> enumerate_polytopal_line_graphs(int max_root_edges,
                                                   int threads = 1);

// ALL connected simple graphs with 1..max_edges edges and at most
// max_vertices vertices, by extend-one-edge search with per-level canonical
// dedup.  Guard: max_edges <= 24 and max_vertices <= 10.
std::vector<Graph> enumerate_connected_graphs(int max_edges, int max_vertices,
                                              int threads = 1);

// Ground truth for the characterization: filter the exhaustive corpus by
// directly building each line graph.  Guard: max_edges <= 9.
std::vector<Graph> exhaustive_oracle(int max_edges, int threads = 1);

}  // namespace lgpoly
