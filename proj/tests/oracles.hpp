#pragma once
// Independent reference implementations used only by tests.  Deliberately
// brute-force and structurally unrelated to the library's algorithms, so a
// shared bug cannot hide.

#include <random>

#include "lgpoly/graph.hpp"

namespace lgpoly::oracles {

// Exact vertex connectivity by unit-capacity max-flow over the vertex-split
// digraph (min over all non-adjacent ordered pairs); n-1 for complete graphs,
// 0 for disconnected or trivial graphs.
int exact_vertex_connectivity(const Graph& g);

// Planarity by exhaustive search for a K5 or K3,3 subdivision (branch-vertex
// subsets plus internally disjoint connecting paths).  Exponential; intended
// for graphs with at most ~8 vertices.
bool has_k5_subdivision(const Graph& g);
bool has_k33_subdivision(const Graph& g);
bool independent_planarity(const Graph& g);

// Hand-written adjacency for the named solids (no reliance on families.cpp).
Graph named_tetrahedron();
Graph named_octahedron();
Graph named_cube();
Graph named_prism();

// Random connected graph: spanning tree plus extra distinct non-edges.
Graph random_connected_graph(std::mt19937& rng, int n, int extra_edges);

}  // namespace lgpoly::oracles
