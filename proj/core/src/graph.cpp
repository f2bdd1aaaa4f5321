#include "lgpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace lgpoly {

const char* errc_name(errc c) {
  switch (c) {
    case errc::loop_edge: return "loop edge";
    case errc::duplicate_edge: return "duplicate edge";
    case errc::bad_index: return "bad index";
    case errc::bad_argument: return "bad argument";
    case errc::missing_edge: return "missing edge";
    case errc::empty_graph: return "empty graph";
    case errc::too_large: return "too large";
    case errc::component_error: return "component error";
    case errc::precondition: return "precondition";
    case errc::not_polytopal: return "not polytopal";
    case errc::too_small: return "too small";
    case errc::no_edges: return "no edges";
    case errc::degree_violation: return "degree violation";
    case errc::pattern_mismatch: return "pattern mismatch";
    case errc::not_a_triangle: return "not a triangle";
    case errc::not_a_face: return "not a face";
    case errc::multi_edge_risk: return "multi-edge risk";
    case errc::bound_exceeded: return "bound exceeded";
    case errc::malformed_g6: return "malformed graph6";
    case errc::malformed_edgelist: return "malformed edge list";
  }
  return "unknown";
}

Graph::Graph(int order) : order_(order) {
  if (order < 0) throw GraphError(errc::bad_argument, "negative order");
  if (order > kMaxOrder)
    throw GraphError(errc::too_large, "order " + std::to_string(order) + " exceeds " +
                                          std::to_string(kMaxOrder));
  adj_.assign(order, 0);
}

Graph::Graph(int order, const std::vector<Edge>& edges) : Graph(order) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError(errc::loop_edge, "loop at " + std::to_string(u));
    if (has_edge(u, v))
      throw GraphError(errc::duplicate_edge,
                       std::to_string(u) + "-" + std::to_string(v));
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
    ++size_;
  }
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_)
    throw GraphError(errc::bad_index, "vertex " + std::to_string(v) + " of " +
                                          std::to_string(order_));
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

std::uint64_t Graph::neighbor_mask(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<int> Graph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (std::uint64_t m = adj_[v]; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (int u = 0; u + 1 < order_; ++u) {
    // neighbors above u only; u+1 may be 64, where << would be undefined
    std::uint64_t above = u + 1 < 64 ? adj_[u] & (~std::uint64_t{0} << (u + 1)) : 0;
    for (std::uint64_t m = above; m; m &= m - 1) out.emplace_back(u, std::countr_zero(m));
  }
  return out;
}

int Graph::max_degree() const {
  if (order_ == 0) throw GraphError(errc::empty_graph, "max_degree");
  int d = 0;
  for (int v = 0; v < order_; ++v) d = std::max(d, std::popcount(adj_[v]));
  return d;
}

int Graph::min_degree() const {
  if (order_ == 0) throw GraphError(errc::empty_graph, "min_degree");
  int d = kMaxOrder;
  for (int v = 0; v < order_; ++v) d = std::min(d, std::popcount(adj_[v]));
  return d;
}

namespace {

// BFS over the vertices selected by `allowed`; true iff they form one component.
bool connected_within(const Graph& g, std::uint64_t allowed) {
  if (!allowed) return true;
  std::uint64_t visited = allowed & -allowed;  // lowest allowed vertex
  std::uint64_t frontier = visited;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m; m &= m - 1)
      next |= g.neighbor_mask(std::countr_zero(m));
    frontier = next & allowed & ~visited;
    visited |= frontier;
  }
  return visited == allowed;
}

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

bool is_connected(const Graph& g) {
  return connected_within(g, full_mask(g.order()));
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::uint64_t left = full_mask(g.order());
  while (left) {
    std::uint64_t visited = left & -left;
    std::uint64_t frontier = visited;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1)
        next |= g.neighbor_mask(std::countr_zero(m));
      frontier = next & left & ~visited;
      visited |= frontier;
    }
    std::vector<int> comp;
    for (std::uint64_t m = visited; m; m &= m - 1) comp.push_back(std::countr_zero(m));
    out.push_back(std::move(comp));
    left &= ~visited;
  }
  return out;
}

bool connectivity_at_least(const Graph& g, int k) {
  if (k < 1 || k > 4) throw GraphError(errc::bad_argument, "k must be 1..4");
  const int n = g.order();
  if (n < k + 1) return false;
  const std::uint64_t all = full_mask(n);
  if (!connected_within(g, all)) return false;
  if (k == 1) return true;
  for (int a = 0; a < n; ++a) {
    std::uint64_t ma = all & ~(std::uint64_t{1} << a);
    if (!connected_within(g, ma)) return false;
    if (k == 2) continue;
    for (int b = a + 1; b < n; ++b) {
      std::uint64_t mb = ma & ~(std::uint64_t{1} << b);
      if (!connected_within(g, mb)) return false;
      if (k == 3) continue;
      for (int c = b + 1; c < n; ++c)
        if (!connected_within(g, mb & ~(std::uint64_t{1} << c))) return false;
    }
  }
  return true;
}

VertexDeletion induced_delete(const Graph& g, const std::vector<int>& remove) {
  std::uint64_t rm = 0;
  for (int v : remove) {
    if (v < 0 || v >= g.order())
      throw GraphError(errc::bad_index, "delete vertex " + std::to_string(v));
    rm |= std::uint64_t{1} << v;
  }
  VertexDeletion out;
  out.old_to_new.assign(g.order(), -1);
  for (int v = 0; v < g.order(); ++v)
    if (!((rm >> v) & 1)) {
      out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (out.old_to_new[u] >= 0 && out.old_to_new[v] >= 0)
      edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
  out.graph = Graph(static_cast<int>(out.new_to_old.size()), edges);
  return out;
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& remove) {
  auto edges = g.edges();
  for (auto [u, v] : remove) {
    if (u > v) std::swap(u, v);
    auto it = std::find(edges.begin(), edges.end(), Edge{u, v});
    if (it == edges.end())
      throw GraphError(errc::missing_edge,
                       std::to_string(u) + "-" + std::to_string(v));
    edges.erase(it);
  }
  return Graph(g.order(), edges);
}

// ---- canonical labeling ----------------------------------------------------
//
// Classic individualize-and-refine search.  An ordered partition is refined to
// equitability (cells split by neighbor counts into every cell, sub-cells
// ordered by signature, so the ordering depends only on the graph up to
// isomorphism).  The first non-singleton cell is branched on; each leaf is a
// complete labeling and the minimum upper-triangle bit string wins.  Cells
// whose vertices are pairwise interchangeable (same outside neighborhood,
// complete or empty inside) are fixed without branching: any order yields the
// same matrix.

namespace {

using Cells = std::vector<std::vector<int>>;

void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  std::vector<int> cell_of(g.order());
  while (changed) {
    changed = false;
    for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci)
      for (int v : cells[ci]) cell_of[v] = ci;
    Cells next;
    next.reserve(cells.size());
    for (auto& cell : cells) {
      if (cell.size() <= 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> split;
      for (int v : cell) {
        std::vector<int> sig(cells.size(), 0);
        for (std::uint64_t m = g.neighbor_mask(v); m; m &= m - 1)
          ++sig[cell_of[std::countr_zero(m)]];
        split[sig].push_back(v);
      }
      if (split.size() > 1) changed = true;
      for (auto& [sig, vs] : split) next.push_back(vs);
    }
    cells = std::move(next);
  }
}

// True when every permutation of `cell` yields the same adjacency matrix:
// identical neighborhoods outside the cell, and the cell induces a complete
// or an empty subgraph.
bool interchangeable(const Graph& g, const std::vector<int>& cell) {
  std::uint64_t cm = 0;
  for (int v : cell) cm |= std::uint64_t{1} << v;
  std::uint64_t out0 = g.neighbor_mask(cell[0]) & ~cm;
  int in0 = std::popcount(g.neighbor_mask(cell[0]) & cm);
  if (in0 != 0 && in0 != static_cast<int>(cell.size()) - 1) return false;
  for (std::size_t i = 1; i < cell.size(); ++i) {
    std::uint64_t nb = g.neighbor_mask(cell[i]);
    if ((nb & ~cm) != out0) return false;
    if (std::popcount(nb & cm) != in0) return false;
  }
  return true;
}

struct CanonSearch {
  const Graph& g;
  int n;
  std::string best;              // packed triangle bits, empty = none yet
  std::vector<int> best_perm;    // perm[new] = old
  long leaves = 0;
  static constexpr long kLeafCap = 20'000'000;

  std::string serialize(const std::vector<int>& perm) const {
    const int bits = n * (n - 1) / 2;
    std::string s((bits + 7) / 8, '\0');
    int idx = 0;
    for (int i = 0; i < n; ++i) {
      std::uint64_t row = g.neighbor_mask(perm[i]);
      for (int j = i + 1; j < n; ++j, ++idx)
        if ((row >> perm[j]) & 1) s[idx >> 3] |= char(0x80 >> (idx & 7));
    }
    return s;
  }

  void leaf(const Cells& cells) {
    if (++leaves > kLeafCap)
      throw GraphError(errc::bound_exceeded, "canonical search too large");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = cells[i][0];
    std::string s = serialize(perm);
    if (best.empty() || s < best) {
      best = std::move(s);
      best_perm = std::move(perm);
    }
  }

  void search(Cells cells) {
    int target = -1;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
      if (cells[i].size() > 1) {
        if (interchangeable(g, cells[i])) {
          // fix in place as singletons; no branching needed
          Cells fixed;
          fixed.reserve(cells.size() + cells[i].size());
          for (int j = 0; j < static_cast<int>(cells.size()); ++j) {
            if (j == i)
              for (int v : cells[j]) fixed.push_back({v});
            else
              fixed.push_back(cells[j]);
          }
          refine(g, fixed);
          search(std::move(fixed));
          return;
        }
        target = i;
        break;
      }
    if (target < 0) {
      leaf(cells);
      return;
    }
    for (int v : cells[target]) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (int j = 0; j < static_cast<int>(cells.size()); ++j) {
        if (j == target) {
          child.push_back({v});
          std::vector<int> rest;
          for (int w : cells[target])
            if (w != v) rest.push_back(w);
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[j]);
        }
      }
      refine(g, child);
      search(std::move(child));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  CanonicalForm out;
  if (n == 0) {
    out.graph = g;
    out.code = std::string(1, '\0');
    return out;
  }
  // initial partition: cells by degree, ascending
  std::map<int, std::vector<int>> by_deg;
  for (int v = 0; v < n; ++v) by_deg[g.degree(v)].push_back(v);
  Cells cells;
  for (auto& [d, vs] : by_deg) cells.push_back(vs);
  refine(g, cells);

  CanonSearch s{g, n, {}, {}};
  s.search(std::move(cells));

  out.relabel.assign(n, -1);
  for (int i = 0; i < n; ++i) out.relabel[s.best_perm[i]] = i;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    int a = out.relabel[u], b = out.relabel[v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  out.graph = Graph(n, edges);
  out.code = std::string(1, static_cast<char>(n)) + s.best;
  return out;
}

std::string canonical_code(const Graph& g) { return canonical_form(g).code; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace lgpoly
