#pragma once
// Simple undirected graphs on dense labels 0..n-1, capped at 64 vertices so a
// neighborhood fits in one machine word.  Everything downstream (planarity,
// line graphs, the classifier) works on this type; values are immutable after
// construction.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgpoly {

enum class errc {
  loop_edge,
  duplicate_edge,
  bad_index,
  bad_argument,
  missing_edge,
  empty_graph,
  too_large,
  component_error,
  precondition,
  not_polytopal,
  too_small,
  no_edges,
  degree_violation,
  pattern_mismatch,
  not_a_triangle,
  not_a_face,
  multi_edge_risk,
  bound_exceeded,
  malformed_g6,
  malformed_edgelist,
};

const char* errc_name(errc c);

class GraphError : public std::runtime_error {
 public:
  GraphError(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

using Edge = std::pair<int, int>;  // stored with first < second

class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int order);
  // Validates: indices in range, no loops, no duplicates.
  Graph(int order, const std::vector<Edge>& edges);

  int order() const { return order_; }
  int size() const { return size_; }
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  std::uint64_t neighbor_mask(int v) const;
  std::vector<int> neighbors(int v) const;       // ascending
  std::vector<Edge> edges() const;               // (u,v) with u<v, lexicographic
  int max_degree() const;                        // empty_graph on order 0
  int min_degree() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;
  int order_ = 0;
  int size_ = 0;
  std::vector<std::uint64_t> adj_;
};

bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);  // each sorted
// True iff order >= k+1 and no removal of < k vertices disconnects g.
// Exhaustive over removal subsets; k in 1..4.
bool connectivity_at_least(const Graph& g, int k);

struct VertexDeletion {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for removed vertices
  std::vector<int> new_to_old;
};
VertexDeletion induced_delete(const Graph& g, const std::vector<int>& remove);
Graph delete_edges(const Graph& g, const std::vector<Edge>& remove);

// Canonical labeling by backtracking over the equitable-partition refinement
// tree, minimizing the upper-triangle adjacency bit string.  code equality is
// isomorphism.
struct CanonicalForm {
  Graph graph;                // canonically relabeled copy
  std::vector<int> relabel;   // relabel[old] = new
  std::string code;           // order byte + packed triangle bits
};
CanonicalForm canonical_form(const Graph& g);
std::string canonical_code(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace lgpoly
