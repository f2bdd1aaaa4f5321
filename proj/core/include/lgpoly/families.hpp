#pragma once
// Small parameterized graph families used by tests, benchmarks and the
// exceptional-root catalog.

#include "lgpoly/graph.hpp"

namespace lgpoly {

Graph complete_graph(int n);
Graph cycle_graph(int n);        // n >= 3
Graph path_graph(int n);         // n vertices, n-1 edges
Graph star_graph(int leaves);    // K_{1,leaves}, center 0
Graph complete_bipartite(int a, int b);  // part A = 0..a-1
Graph circular_ladder(int k);    // prism over a k-gon; k=3 prism, k=4 cube
Graph wheel_graph(int rim);      // hub 0 plus a cycle on 1..rim

}  // namespace lgpoly
