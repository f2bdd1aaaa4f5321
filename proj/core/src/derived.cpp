#include "lgpoly/derived.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace lgpoly {

LabeledLineGraph line_graph(const Graph& g) {
  if (!is_connected(g)) throw GraphError(errc::component_error, "line_graph");
  if (g.size() == 0) throw GraphError(errc::no_edges, "line_graph");
  auto es = g.edges();
  const int m = static_cast<int>(es.size());
  std::vector<Edge> ledges;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) ledges.emplace_back(i, j);
    }
  return {Graph(m, ledges), std::move(es)};
}

Graph medial_graph(const Embedding& e) {
  const Graph& g = e.graph;
  if (g.size() < 2) throw GraphError(errc::too_small, "medial needs >= 2 edges");
  auto es = g.edges();
  std::map<Edge, int> index;
  for (int i = 0; i < static_cast<int>(es.size()); ++i) index[es[i]] = i;
  auto edge_at = [&](int a, int b) {
    return index.at({std::min(a, b), std::max(a, b)});
  };
  std::set<Edge> medges;
  for (const auto& f : e.faces) {
    const int k = static_cast<int>(f.walk.size());
    for (int i = 0; i < k; ++i) {
      int e1 = edge_at(f.walk[i], f.walk[(i + 1) % k]);
      int e2 = edge_at(f.walk[(i + 1) % k], f.walk[(i + 2) % k]);
      if (e1 != e2) medges.insert({std::min(e1, e2), std::max(e1, e2)});
    }
  }
  return Graph(static_cast<int>(es.size()),
               std::vector<Edge>(medges.begin(), medges.end()));
}

Graph radial_graph(const Embedding& e) {
  if (!is_3polytope(e.graph))
    throw GraphError(errc::not_polytopal, "radial_graph needs a 3-polytope");
  const int n = e.graph.order();
  std::set<Edge> redges;
  for (int f = 0; f < static_cast<int>(e.faces.size()); ++f)
    for (int v : e.faces[f].vertex_set()) redges.insert({v, n + f});
  return Graph(n + static_cast<int>(e.faces.size()),
               std::vector<Edge>(redges.begin(), redges.end()));
}

// ---- Krausz partition search ------------------------------------------------

namespace {

struct KrauszSearch {
  const Graph& p;
  std::vector<Edge> edges;
  std::map<Edge, int> eindex;
  std::vector<int> assigned;                // edge -> clique id or -1
  std::vector<std::vector<int>> cliques_at; // per vertex, clique ids
  std::vector<std::vector<int>> cliques;    // vertex lists

  explicit KrauszSearch(const Graph& g) : p(g), edges(g.edges()) {
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) eindex[edges[i]] = i;
    assigned.assign(edges.size(), -1);
    cliques_at.resize(g.order());
  }

  int edge_id(int a, int b) const {
    return eindex.at({std::min(a, b), std::max(a, b)});
  }

  bool vertex_saturated_ok() const {
    // a vertex with two cliques may not have uncovered incident edges
    for (int v = 0; v < p.order(); ++v) {
      if (cliques_at[v].size() < 2) continue;
      for (int w : p.neighbors(v))
        if (assigned[edge_id(v, w)] < 0) return false;
    }
    return true;
  }

  // first uncovered edge at a maximum-degree vertex (ties: smallest labels)
  bool pick_seed(Edge& out) const {
    int best_v = -1;
    for (int v = 0; v < p.order(); ++v) {
      bool open = false;
      for (int w : p.neighbors(v))
        if (assigned[edge_id(v, w)] < 0) open = true;
      if (!open) continue;
      if (best_v < 0 || p.degree(v) > p.degree(best_v)) best_v = v;
    }
    if (best_v < 0) return false;
    for (int w : p.neighbors(best_v))
      if (assigned[edge_id(best_v, w)] < 0) {
        out = {best_v, w};
        return true;
      }
    return false;
  }

  // candidate cliques containing uv: {u,v} + any subset of common neighbors
  // forming a clique with all internal edges unassigned and vertex budgets free
  std::vector<std::vector<int>> candidates(int u, int v) const {
    std::vector<int> common;
    std::uint64_t cm = p.neighbor_mask(u) & p.neighbor_mask(v);
    for (std::uint64_t m = cm; m; m &= m - 1) {
      int w = std::countr_zero(m);
      if (cliques_at[w].size() < 2) common.push_back(w);
    }
    std::vector<std::vector<int>> out;
    const int nc = static_cast<int>(common.size());
    for (int mask = 0; mask < (1 << nc); ++mask) {
      std::vector<int> c{u, v};
      for (int i = 0; i < nc; ++i)
        if ((mask >> i) & 1) c.push_back(common[i]);
      bool ok = true;
      for (std::size_t i = 0; i < c.size() && ok; ++i)
        for (std::size_t j = i + 1; j < c.size() && ok; ++j)
          if (!p.has_edge(c[i], c[j]) || assigned[edge_id(c[i], c[j])] >= 0) ok = false;
      if (!ok) continue;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();  // largest first
      return a < b;
    });
    return out;
  }

  void place(const std::vector<int>& c) {
    int id = static_cast<int>(cliques.size());
    cliques.push_back(c);
    for (std::size_t i = 0; i < c.size(); ++i) {
      cliques_at[c[i]].push_back(id);
      for (std::size_t j = i + 1; j < c.size(); ++j)
        assigned[edge_id(c[i], c[j])] = id;
    }
  }

  void unplace() {
    const auto& c = cliques.back();
    for (std::size_t i = 0; i < c.size(); ++i) {
      cliques_at[c[i]].pop_back();
      for (std::size_t j = i + 1; j < c.size(); ++j)
        assigned[edge_id(c[i], c[j])] = -1;
    }
    cliques.pop_back();
  }

  bool solve() {
    Edge seed;
    if (!pick_seed(seed)) return true;  // everything covered
    for (const auto& c : candidates(seed.first, seed.second)) {
      place(c);
      if (vertex_saturated_ok() && solve()) return true;
      unplace();
    }
    return false;
  }
};

KrauszPartition build_partition(const Graph& p, const std::vector<std::vector<int>>& cliques) {
  KrauszPartition out;
  out.cliques = cliques;
  std::vector<std::vector<int>> slots(p.order());
  for (int id = 0; id < static_cast<int>(cliques.size()); ++id)
    for (int v : cliques[id]) slots[v].push_back(id);
  int next = static_cast<int>(cliques.size());
  std::vector<Edge> redges;
  out.vertex_to_root_edge.resize(p.order());
  for (int v = 0; v < p.order(); ++v) {
    auto s = slots[v];
    while (s.size() < 2) s.push_back(next++);  // private vertices
    Edge e{std::min(s[0], s[1]), std::max(s[0], s[1])};
    out.vertex_to_root_edge[v] = e;
    redges.push_back(e);
  }
  std::sort(redges.begin(), redges.end());
  out.root = Graph(next, redges);
  // verify L(root) == P under the natural bijection
  for (int x = 0; x < p.order(); ++x)
    for (int y = x + 1; y < p.order(); ++y) {
      auto [a, b] = out.vertex_to_root_edge[x];
      auto [c, d] = out.vertex_to_root_edge[y];
      bool share = a == c || a == d || b == c || b == d;
      if (share != p.has_edge(x, y))
        throw std::logic_error("Krausz partition does not reproduce the input");
    }
  return out;
}

bool is_triangle_graph(const Graph& p) {
  return p.order() == 3 && p.size() == 3;
}

}  // namespace

std::optional<RootRecovery> root_graph(const Graph& p) {
  if (p.order() == 0) throw GraphError(errc::empty_graph, "root_graph");
  if (!is_connected(p)) throw GraphError(errc::component_error, "root_graph");
  RootRecovery rec;
  if (p.order() == 1) {
    // L(K2) = K1: no cliques, the vertex gets two private ends
    rec.candidates.push_back(build_partition(p, {}));
    return rec;
  }
  if (is_triangle_graph(p)) {
    // Whitney's exception: one triangle clique (root K_{1,3}) or three edge
    // cliques (root K3)
    rec.candidates.push_back(build_partition(p, {{0, 1, 2}}));
    rec.candidates.push_back(build_partition(p, {{0, 1}, {0, 2}, {1, 2}}));
    rec.ambiguous = true;
    return rec;
  }
  KrauszSearch search(p);
  if (!search.solve()) return std::nullopt;
  rec.candidates.push_back(build_partition(p, search.cliques));
  return rec;
}

}  // namespace lgpoly
