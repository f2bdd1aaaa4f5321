#pragma once
// Root-side decorations (edge subdivision, pendant attachment), their
// line-graph-side counterparts (degree-4 vertex split, facial-triangle vertex
// insertion), the two-stage reduction that strips decorations back off, and
// the frozen catalog of the seven exceptional roots.

#include <array>
#include <optional>
#include <vector>

#include "lgpoly/graph.hpp"

namespace lgpoly {

// Subdivide edge xy; both endpoints must have degree 3 (degree_violation).
// The new vertex gets label order().
Graph t1_subdivide(const Graph& g, Edge xy);

// Attach a new degree-1 neighbor to u; u must have degree 3 (degree_violation).
Graph t2_pendant(const Graph& g, int u);

// Split site for a degree-4 vertex v: N(v) = {a,b} + {c,d} with ab and cd
// edges, and the triangles vab, vcd bounding faces.
struct T1Site {
  int vertex;
  std::array<int, 2> pair_a;
  std::array<int, 2> pair_b;
};

// Replace v by adjacent v1 (joined to pair_a) and v2 (joined to pair_b).
// v1 takes v's label slot semantics: result has order()+1 vertices where v is
// removed and v1, v2 are the two highest labels.  pattern_mismatch when the
// site is not valid (including non-planar input: the face requirement cannot
// hold without an embedding).
Graph t1_prime(const Graph& g, const T1Site& site);
std::vector<T1Site> find_t1_sites(const Graph& g);

// Insert a new vertex joined to exactly {p,q,r}; the triple must induce a
// triangle (not_a_triangle) that bounds a face of the computed embedding when
// the graph is planar (not_a_face).
Graph t2_prime(const Graph& g, std::array<int, 3> triangle);
std::vector<std::array<int, 3>> find_t2_sites(const Graph& g);  // facial triangles

struct PendantRecord {
  int host;  // neighbor of the deleted leaf, original labels
  int leaf;
};
struct StripResult {
  Graph g1;
  std::vector<int> g1_to_original;
  std::vector<PendantRecord> pendants;
};
// Delete every degree-1 vertex simultaneously.
StripResult strip_pendants(const Graph& g);

struct SmoothRecord {
  int vertex;  // suppressed vertex and its neighbors, labels of the input graph
  int n1, n2;
};
struct SmoothResult {
  Graph g2;
  std::vector<int> g2_to_input;
  std::vector<SmoothRecord> smoothed;  // in suppression order
};
// Suppress degree-2 vertices that do not lie on a triangle, ascending label
// order, re-evaluating eligibility after each suppression.
SmoothResult smooth_degree2(const Graph& g);

struct ReductionTrace {
  Graph original;
  std::vector<PendantRecord> pendants;
  Graph g1;
  std::vector<int> g1_to_original;
  std::optional<int> exceptional_index;  // 1..7 when the input is a J graph;
                                         // smoothing is skipped (g2 = g1)
  std::vector<SmoothRecord> smoothed;    // g1 labels
  Graph g2;
  std::vector<int> g2_to_g1;
  // Invert the trace: re-insert suppressed vertices into g2, then re-attach
  // pendants, reproducing the input exactly (original labels).
  Graph reconstruct() const;
};
// Preconditions: connected, max degree <= 4, min degree >= 1 (precondition).
// The exception catalog is consulted before smoothing.
ReductionTrace reduce(const Graph& g);

// J1..J7: K_{1,4}; diamond with 0/1/2 pendants; K_{2,3} with 0/1/2 pendants.
const std::array<Graph, 7>& exceptional_roots();
std::optional<int> match_exceptional(const Graph& g);  // 1-based index

}  // namespace lgpoly
