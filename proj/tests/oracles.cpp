#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

namespace lgpoly::oracles {
namespace {

using u64 = std::uint64_t;

// Max number of internally vertex-disjoint s-t paths, via unit-capacity
// max-flow on the split digraph (v_in -> v_out).  BFS augmentation; graphs
// here are tiny.
int disjoint_paths(const Graph& g, int s, int t) {
  const int n = g.order();
  const int N = 2 * n;
  auto in = [](int v) { return 2 * v; };
  auto out = [](int v) { return 2 * v + 1; };
  std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
  for (int v = 0; v < n; ++v) cap[in(v)][out(v)] = 1;
  cap[in(s)][out(s)] = n;
  cap[in(t)][out(t)] = n;
  for (auto [u, v] : g.edges()) {
    cap[out(u)][in(v)] = n;
    cap[out(v)][in(u)] = n;
  }
  int flow = 0;
  for (;;) {
    std::vector<int> prev(N, -1);
    prev[out(s)] = out(s);
    std::deque<int> queue{out(s)};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y = 0; y < N; ++y)
        if (prev[y] < 0 && cap[x][y] > 0) {
          prev[y] = x;
          queue.push_back(y);
        }
    }
    if (prev[in(t)] < 0) break;
    for (int y = in(t); y != out(s); y = prev[y]) {
      --cap[prev[y]][y];
      ++cap[y][prev[y]];
    }
    ++flow;
  }
  return flow;
}

// Try to realize every pair in `pairs` as internally disjoint paths whose
// interiors avoid `used` (which initially holds all branch vertices) and each
// other.  Exhaustive DFS over simple paths, one pair at a time.
bool route(const Graph& g, const std::vector<Edge>& pairs, std::size_t idx, u64 used) {
  if (idx == pairs.size()) return true;
  const int s = pairs[idx].first;
  const int t = pairs[idx].second;
  std::function<bool(int, u64)> dfs = [&](int cur, u64 interior) -> bool {
    if (g.has_edge(cur, t) && route(g, pairs, idx + 1, used | interior)) return true;
    u64 free = g.neighbor_mask(cur) & ~(used | interior);
    while (free != 0) {
      int w = std::countr_zero(free);
      free &= free - 1;
      if (dfs(w, interior | (u64{1} << w))) return true;
    }
    return false;
  };
  return dfs(s, 0);
}

bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k > n) return false;
  for (;;) {
    if (fn(pick)) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

int exact_vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  int best = n - 1;
  bool has_nonadjacent_pair = false;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      has_nonadjacent_pair = true;
      best = std::min(best, disjoint_paths(g, u, v));
    }
  return has_nonadjacent_pair ? best : n - 1;
}

bool has_k5_subdivision(const Graph& g) {
  const int n = g.order();
  return for_each_subset(n, 5, [&](const std::vector<int>& b) {
    u64 used = 0;
    for (int v : b) {
      if (g.degree(v) < 4) return false;
      used |= u64{1} << v;
    }
    std::vector<Edge> pairs;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) pairs.push_back({b[i], b[j]});
    return route(g, pairs, 0, used);
  });
}

bool has_k33_subdivision(const Graph& g) {
  const int n = g.order();
  return for_each_subset(n, 6, [&](const std::vector<int>& b) {
    u64 used = 0;
    for (int v : b) {
      if (g.degree(v) < 3) return false;
      used |= u64{1} << v;
    }
    // Bipartitions of the six branch vertices; fix b[0] on the left side.
    return for_each_subset(5, 2, [&](const std::vector<int>& rest) {
      int left[3] = {b[0], b[rest[0] + 1], b[rest[1] + 1]};
      std::vector<Edge> pairs;
      for (int l : left)
        for (int i = 0; i < 6; ++i) {
          int v = b[i];
          if (v != left[0] && v != left[1] && v != left[2]) pairs.push_back({l, v});
        }
      return route(g, pairs, 0, used);
    });
  });
}

bool independent_planarity(const Graph& g) {
  return !has_k5_subdivision(g) && !has_k33_subdivision(g);
}

Graph named_tetrahedron() {
  return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph named_octahedron() {
  // Vertex i sits opposite i+3; every other pair is an edge.
  std::vector<Edge> e;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v - u != 3) e.push_back({u, v});
  return Graph(6, e);
}

Graph named_cube() {
  return Graph(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3},      // bottom square
                   {4, 5}, {5, 6}, {6, 7}, {4, 7},      // top square
                   {0, 4}, {1, 5}, {2, 6}, {3, 7}});    // verticals
}

Graph named_prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph random_connected_graph(std::mt19937& rng, int n, int extra_edges) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng() % static_cast<unsigned>(v));
    edges.push_back({u, v});
  }
  Graph tree(n, edges);
  std::vector<Edge> spare;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!tree.has_edge(u, v)) spare.push_back({u, v});
  std::shuffle(spare.begin(), spare.end(), rng);
  int take = std::min<int>(extra_edges, static_cast<int>(spare.size()));
  edges.insert(edges.end(), spare.begin(), spare.begin() + take);
  return Graph(n, edges);
}

}  // namespace lgpoly::oracles
