#pragma once
// Both directions of the characterization: decide from the root side whether
// L(G) is a 3-polytope (with a structured certificate), and from the polytope
// side whether P is a 3-polytopal line graph (recovering the root and its
// decomposition).

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lgpoly/graph.hpp"

namespace lgpoly {

enum class RejectionReason {
  NotConnected,
  MaxDegreeExceeded,
  AdjacentDeg2,
  BadPendant,
  Deg4NotSeparating,
  BaseNotCubicPolytope,
  IllegalDecoration,
  NotLineGraph,
  NotPolytope,
};
const char* rejection_reason_name(RejectionReason r);

// G is one of the seven sporadic roots (1-based catalog index).
struct Exceptional {
  int index;
};

// G is a cubic 3-polytope with each listed edge subdivided once and a pendant
// attached to each listed host.  Rebuild order: subdivide the edges of base in
// the listed order (new vertices take labels base.order(), base.order()+1, ...)
// then attach pendants; hosts are base labels, which subdivision preserves.
struct Decorated {
  Graph base;
  std::vector<Edge> subdivided_edges;  // base labels, lexicographic
  std::vector<int> pendant_hosts;      // base labels, ascending
};
Graph rebuild(const Decorated& d);

struct Rejected {
  RejectionReason reason;
  std::vector<int> witness;  // offending vertices, input labels (may be empty)
  std::string detail;
};

struct Certificate {
  std::variant<Exceptional, Decorated, Rejected> result;
  bool accepted() const { return !std::holds_alternative<Rejected>(result); }
};

// The three degree rules every non-sporadic root satisfies:
//   (a) no two adjacent degree-2 vertices,
//   (b) every degree-1 vertex is attached to a degree-4 vertex,
//   (c) every degree-4 vertex has exactly one degree-1 neighbor
// with the proviso that the 4-star (whose line graph is the tetrahedron)
// violates (c) yet is accepted; star_exemption reports that case.
struct DegreeRuleReport {
  bool no_adjacent_deg2 = true;
  std::optional<Edge> adjacent_deg2_pair;
  bool leaf_on_deg4 = true;
  std::optional<int> bad_leaf;
  bool deg4_one_leaf = true;
  std::optional<int> bad_deg4;
  bool star_exemption = false;
  bool all_ok() const { return no_adjacent_deg2 && leaf_on_deg4 && deg4_one_leaf; }
};
DegreeRuleReport degree_rule_report(const Graph& g);

// Root side.  Total: disconnected, empty, or otherwise out-of-scope inputs
// come back Rejected, never thrown.  Purely structural -- never builds L(G).
Certificate classify_root(const Graph& g);

// Polytope side: accept iff P is a 3-polytopal line graph.  root is present
// when the clique-partition search ran and succeeded, i.e. P was a 3-polytope
// and a line graph (the NotPolytope / NotLineGraph rejections carry nullopt).
struct PolytopeClassification {
  Certificate certificate;
  std::optional<Graph> root;
};
PolytopeClassification classify_polytope(const Graph& p);

// Ground truth by brute force: literally builds L(G) and tests it.  Kept
// disjoint from classify_root so equivalence tests mean something.
bool oracle_root_check(const Graph& g);  // pre: >= 1 edge (no_edges)

}  // namespace lgpoly
