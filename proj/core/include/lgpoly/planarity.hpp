#pragma once
// Planarity with witnesses in both directions: a combinatorial embedding
// (rotation system + face walks, checked against Euler's formula) when planar,
// a K5/K3,3 subdivision when not.  Faces feed the medial/radial/dual
// constructions and the two primed transforms.

#include <variant>
#include <vector>

#include "lgpoly/graph.hpp"

namespace lgpoly {

struct Face {
  // closed walk: darts (walk[i] -> walk[i+1]), cyclic.  Walks visit each dart
  // once; bridges appear twice in the same walk (once per direction).
  std::vector<int> walk;
  bool contains_vertex(int v) const;
  bool has_boundary_edge(int u, int v) const;
  std::vector<int> vertex_set() const;  // sorted, deduplicated
};

struct Embedding {
  Graph graph;
  std::vector<std::vector<int>> rotation;  // cyclic neighbor order per vertex
  std::vector<Face> faces;
};

struct SubdivisionWitness {
  enum class Kind { k5, k33 };
  Kind kind;
  std::vector<int> branch_vertices;        // 5 or 6
  std::vector<std::vector<int>> paths;     // branch..branch vertex sequences
};

using PlanarityResult = std::variant<Embedding, SubdivisionWitness>;

// Precondition: g connected (component_error).  The embedding's faces satisfy
// V - E + F = 2 and cover every dart exactly once; the witness is validated
// structurally before being returned.
PlanarityResult check_planarity(const Graph& g);

bool is_planar(const Graph& g);

// True iff order >= 4, planar, and 3-connected.
bool is_3polytope(const Graph& g);

// Checks that the witness really is a K5/K3,3 subdivision inside g.
bool verify_witness(const Graph& g, const SubdivisionWitness& w);

// Whitney's criterion instance: for a 2-connected planar graph, every pair of
// faces meets in the empty set, one vertex, or one shared boundary edge iff
// the graph is 3-connected.  Precondition: embedding of a 2-connected graph.
bool region_pair_criterion(const Embedding& e);

// Face adjacency graph.  Precondition: the embedded graph is a 3-polytope
// (not_polytopal otherwise), which makes the dual simple.
Graph dual_graph(const Embedding& e);

// Rebuild faces from a rotation system (exposed for tests).
std::vector<Face> trace_faces(const Graph& g, const std::vector<std::vector<int>>& rotation);

}  // namespace lgpoly
