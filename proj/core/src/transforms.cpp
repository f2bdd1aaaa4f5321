#include "lgpoly/transforms.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <set>
#include <string>

#include "lgpoly/families.hpp"
#include "lgpoly/planarity.hpp"

namespace lgpoly {

Graph t1_subdivide(const Graph& g, Edge xy) {
  auto [x, y] = xy;
  if (!g.has_edge(x, y))
    throw GraphError(errc::missing_edge, std::to_string(x) + "-" + std::to_string(y));
  if (g.degree(x) != 3 || g.degree(y) != 3)
    throw GraphError(errc::degree_violation, "subdivision endpoints must have degree 3");
  const int z = g.order();
  auto edges = g.edges();
  std::erase(edges, Edge{std::min(x, y), std::max(x, y)});
  edges.emplace_back(x, z);
  edges.emplace_back(y, z);
  return Graph(g.order() + 1, edges);
}

Graph t2_pendant(const Graph& g, int u) {
  if (u < 0 || u >= g.order()) throw GraphError(errc::bad_index, "t2_pendant");
  if (g.degree(u) != 3)
    throw GraphError(errc::degree_violation, "pendant host must have degree 3");
  auto edges = g.edges();
  edges.emplace_back(u, g.order());
  return Graph(g.order() + 1, edges);
}

namespace {

bool facial_triangle(const Embedding& e, int a, int b, int c) {
  std::vector<int> want{a, b, c};
  std::sort(want.begin(), want.end());
  for (const auto& f : e.faces)
    if (f.walk.size() == 3 && f.vertex_set() == want) return true;
  return false;
}

}  // namespace

Graph t1_prime(const Graph& g, const T1Site& site) {
  const int v = site.vertex;
  if (v < 0 || v >= g.order()) throw GraphError(errc::bad_index, "t1_prime");
  auto [a, b] = site.pair_a;
  auto [c, d] = site.pair_b;
  std::set<int> nb{a, b, c, d};
  auto nv = g.neighbors(v);
  if (g.degree(v) != 4 || nb.size() != 4 ||
      !std::equal(nb.begin(), nb.end(), nv.begin(), nv.end()))
    throw GraphError(errc::pattern_mismatch, "split site must cover a degree-4 neighborhood");
  if (!g.has_edge(a, b) || !g.has_edge(c, d))
    throw GraphError(errc::pattern_mismatch, "split pairs must be edges");
  auto planarity = check_planarity(g);
  auto* emb = std::get_if<Embedding>(&planarity);
  if (!emb)
    throw GraphError(errc::pattern_mismatch, "no embedding: split triangles cannot bound faces");
  if (!facial_triangle(*emb, v, a, b) || !facial_triangle(*emb, v, c, d))
    throw GraphError(errc::pattern_mismatch, "split triangles must bound faces");

  auto del = induced_delete(g, {v});
  auto edges = del.graph.edges();
  const int v1 = del.graph.order(), v2 = v1 + 1;
  edges.emplace_back(del.old_to_new[a], v1);
  edges.emplace_back(del.old_to_new[b], v1);
  edges.emplace_back(del.old_to_new[c], v2);
  edges.emplace_back(del.old_to_new[d], v2);
  edges.emplace_back(v1, v2);
  return Graph(v2 + 1, edges);
}

std::vector<T1Site> find_t1_sites(const Graph& g) {
  std::vector<T1Site> out;
  auto planarity = check_planarity(g);
  auto* emb = std::get_if<Embedding>(&planarity);
  if (!emb) return out;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 4) continue;
    auto nb = g.neighbors(v);
    const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (auto [i, j, k, l] : pairings) {
      int a = nb[i], b = nb[j], c = nb[k], d = nb[l];
      if (!g.has_edge(a, b) || !g.has_edge(c, d)) continue;
      if (!facial_triangle(*emb, v, a, b) || !facial_triangle(*emb, v, c, d)) continue;
      out.push_back({v, {a, b}, {c, d}});
    }
  }
  return out;
}

Graph t2_prime(const Graph& g, std::array<int, 3> triangle) {
  auto [p, q, r] = triangle;
  for (int v : triangle)
    if (v < 0 || v >= g.order()) throw GraphError(errc::bad_index, "t2_prime");
  if (p == q || p == r || q == r || !g.has_edge(p, q) || !g.has_edge(p, r) ||
      !g.has_edge(q, r))
    throw GraphError(errc::not_a_triangle, "vertex insertion needs a triangle");
  auto planarity = check_planarity(g);
  if (auto* emb = std::get_if<Embedding>(&planarity);
      emb && !facial_triangle(*emb, p, q, r))
    throw GraphError(errc::not_a_face, "triangle does not bound a face");
  auto edges = g.edges();
  const int z = g.order();
  edges.emplace_back(p, z);
  edges.emplace_back(q, z);
  edges.emplace_back(r, z);
  return Graph(z + 1, edges);
}

std::vector<std::array<int, 3>> find_t2_sites(const Graph& g) {
  std::set<std::array<int, 3>> out;
  auto planarity = check_planarity(g);
  if (auto* emb = std::get_if<Embedding>(&planarity)) {
    for (const auto& f : emb->faces)
      if (f.walk.size() == 3) {
        auto vs = f.vertex_set();
        out.insert({vs[0], vs[1], vs[2]});
      }
  }
  return {out.begin(), out.end()};
}

StripResult strip_pendants(const Graph& g) {
  StripResult out;
  std::vector<int> leaves;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) {
      leaves.push_back(v);
      out.pendants.push_back({g.neighbors(v)[0], v});
    }
  auto del = induced_delete(g, leaves);
  out.g1 = std::move(del.graph);
  out.g1_to_original = std::move(del.new_to_old);
  return out;
}

SmoothResult smooth_degree2(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);
  std::vector<char> active(n, 1);
  SmoothResult out;

  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (!active[v] || std::popcount(adj[v]) != 2) continue;
      int n1 = std::countr_zero(adj[v]);
      int n2 = std::countr_zero(adj[v] & (adj[v] - 1));
      if ((adj[n1] >> n2) & 1) continue;  // on a triangle; keep
      // suppress: the replacement edge cannot be parallel since n1,n2 are
      // non-adjacent here
      assert(!((adj[n1] >> n2) & 1));
      active[v] = 0;
      adj[n1] &= ~(std::uint64_t{1} << v);
      adj[n2] &= ~(std::uint64_t{1} << v);
      adj[v] = 0;
      adj[n1] |= std::uint64_t{1} << n2;
      adj[n2] |= std::uint64_t{1} << n1;
      out.smoothed.push_back({v, n1, n2});
      changed = true;
    }
  }

  std::vector<int> old_to_new(n, -1);
  for (int v = 0; v < n; ++v)
    if (active[v]) {
      old_to_new[v] = static_cast<int>(out.g2_to_input.size());
      out.g2_to_input.push_back(v);
    }
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    if (!active[v]) continue;
    std::uint64_t above = v + 1 < 64 ? adj[v] & (~std::uint64_t{0} << (v + 1)) : 0;
    for (std::uint64_t m = above; m; m &= m - 1)
      edges.emplace_back(old_to_new[v], old_to_new[std::countr_zero(m)]);
  }
  out.g2 = Graph(static_cast<int>(out.g2_to_input.size()), edges);
  return out;
}

ReductionTrace reduce(const Graph& g) {
  if (g.order() == 0 || !is_connected(g))
    throw GraphError(errc::precondition, "reduce needs a connected nonempty graph");
  if (g.max_degree() > 4)
    throw GraphError(errc::precondition, "reduce needs max degree <= 4");
  if (g.min_degree() < 1)
    throw GraphError(errc::precondition, "reduce needs min degree >= 1");
  if (g.order() == 2)
    throw GraphError(errc::precondition,
                     "adjacent pendant vertices: stripping would delete the hosts");

  ReductionTrace t;
  t.original = g;
  t.exceptional_index = match_exceptional(g);

  auto strip = strip_pendants(g);
  t.pendants = std::move(strip.pendants);
  t.g1 = std::move(strip.g1);
  t.g1_to_original = std::move(strip.g1_to_original);

  if (t.exceptional_index) {
    // exception catalog hit: no smoothing
    t.g2 = t.g1;
    t.g2_to_g1.resize(t.g1.order());
    for (int v = 0; v < t.g1.order(); ++v) t.g2_to_g1[v] = v;
    return t;
  }

  auto smooth = smooth_degree2(t.g1);
  t.smoothed = std::move(smooth.smoothed);
  t.g2 = std::move(smooth.g2);
  t.g2_to_g1 = std::move(smooth.g2_to_input);
  return t;
}

Graph ReductionTrace::reconstruct() const {
  std::set<Edge> edges;
  auto norm = [](int a, int b) { return Edge{std::min(a, b), std::max(a, b)}; };
  for (auto [a, b] : g2.edges())
    edges.insert(norm(g1_to_original[g2_to_g1[a]], g1_to_original[g2_to_g1[b]]));
  for (auto it = smoothed.rbegin(); it != smoothed.rend(); ++it) {
    int v = g1_to_original[it->vertex];
    int a = g1_to_original[it->n1], b = g1_to_original[it->n2];
    edges.erase(norm(a, b));
    edges.insert(norm(v, a));
    edges.insert(norm(v, b));
  }
  for (auto [host, leaf] : pendants) edges.insert(norm(host, leaf));
  return Graph(original.order(), {edges.begin(), edges.end()});
}

const std::array<Graph, 7>& exceptional_roots() {
  static const std::array<Graph, 7> roots = [] {
    std::vector<Edge> diamond{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    std::vector<Edge> k23{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
    auto with = [](std::vector<Edge> base, std::vector<Edge> extra, int n) {
      base.insert(base.end(), extra.begin(), extra.end());
      return Graph(n, base);
    };
    return std::array<Graph, 7>{
        star_graph(4),                               // J1
        Graph(4, diamond),                           // J2
        with(diamond, {{0, 4}}, 5),                  // J3
        with(diamond, {{0, 4}, {1, 5}}, 6),          // J4
        Graph(5, k23),                               // J5
        with(k23, {{0, 5}}, 6),                      // J6
        with(k23, {{0, 5}, {1, 6}}, 7),              // J7
    };
  }();
  return roots;
}

std::optional<int> match_exceptional(const Graph& g) {
  static const std::array<std::string, 7> codes = [] {
    std::array<std::string, 7> c;
    for (int i = 0; i < 7; ++i) c[i] = canonical_code(exceptional_roots()[i]);
    return c;
  }();
  if (g.order() < 4 || g.order() > 7) return std::nullopt;
  auto code = canonical_code(g);
  for (int i = 0; i < 7; ++i)
    if (codes[i] == code) return i + 1;
  return std::nullopt;
}

}  // namespace lgpoly
