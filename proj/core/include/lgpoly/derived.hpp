#pragma once
// Line, medial and radial constructions plus root recovery via Krausz
// edge-clique partitions.  Line-graph and medial vertices are indexed by the
// same sorted edge list of the source graph, so medial(E) is literally a
// spanning subgraph of line_graph(G).

#include <optional>
#include <vector>

#include "lgpoly/graph.hpp"
#include "lgpoly/planarity.hpp"

namespace lgpoly {

struct LabeledLineGraph {
  Graph graph;
  std::vector<Edge> origin;  // origin[i] = source edge for line vertex i
};

// Precondition: g connected with at least one edge (no_edges).
LabeledLineGraph line_graph(const Graph& g);

// Vertices = edges of the embedded graph; adjacent iff consecutive on some
// face.  Precondition: connected, >= 2 edges (too_small).
Graph medial_graph(const Embedding& e);

// Vertex-face incidence graph: vertices 0..n-1 are the original vertices,
// n..n+F-1 the faces.  Precondition: embedded graph is a 3-polytope.
Graph radial_graph(const Embedding& e);

// One Krausz partition: cliques partition E(P), every vertex in <= 2 cliques.
// The reconstructed root has one vertex per clique plus one private vertex per
// deficient P-vertex; root edges correspond 1:1 to vertices of P and
// L(root) == P under that correspondence (checked on construction).
struct KrauszPartition {
  std::vector<std::vector<int>> cliques;  // vertex lists, sorted
  Graph root;
  std::vector<Edge> vertex_to_root_edge;  // per P-vertex
};

struct RootRecovery {
  std::vector<KrauszPartition> candidates;  // 1, or 2 for the K3 ambiguity
  bool ambiguous = false;
};

// nullopt when P is not a line graph.  Precondition: P connected (component_error),
// nonempty (empty_graph).  Deterministic: cliques seeded at a maximum-degree
// vertex, candidates tried largest-first, ties broken lexicographically.
std::optional<RootRecovery> root_graph(const Graph& p);

}  // namespace lgpoly
