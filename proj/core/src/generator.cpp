#include "lgpoly/generator.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "lgpoly/classifier.hpp"
#include "lgpoly/derived.hpp"
#include "lgpoly/planarity.hpp"
#include "lgpoly/transforms.hpp"

namespace lgpoly {

std::size_t EnumerationReport::total() const {
  std::size_t t = 0;
  for (auto& [k, v] : counts) t += v;
  return t;
}

EnumerationReport make_report(std::string op, int bound,
                              const std::vector<Graph>& graphs, bool by_edges,
                              std::chrono::milliseconds elapsed) {
  EnumerationReport r{std::move(op), bound, {}, {}, elapsed};
  for (const auto& g : graphs) {
    ++r.counts[by_edges ? g.size() : g.order()];
    r.codes.push_back(canonical_code(g));
  }
  std::sort(r.codes.begin(), r.codes.end());
  return r;
}

int cubic_vertex_guard() {
  if (const char* s = std::getenv("LGPOLY_MAX_CUBIC_VERTICES")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end && *end == '\0' && v >= 4 && v <= 64) return static_cast<int>(v);
  }
  return 14;
}

namespace {

// Run fn(item, local_map) over all items on `threads` workers; merging the
// per-worker maps keeps the result identical to a serial run.
template <typename Item, typename Fn>
std::map<std::string, Graph> parallel_collect(const std::vector<Item>& items,
                                              int threads, Fn fn) {
  threads = std::max(1, threads);
  if (threads == 1 || items.size() < 2) {
    std::map<std::string, Graph> out;
    for (const auto& it : items) fn(it, out);
    return out;
  }
  threads = std::min<int>(threads, static_cast<int>(items.size()));
  std::vector<std::map<std::string, Graph>> local(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < items.size(); i += threads)
        fn(items[i], local[t]);
    });
  for (auto& th : pool) th.join();
  std::map<std::string, Graph> out;
  for (auto& m : local) out.merge(m);
  return out;
}

std::vector<Graph> sorted_values(const std::map<std::string, Graph>& m) {
  std::vector<Graph> out;
  out.reserve(m.size());
  for (auto& [code, g] : m) out.push_back(g);
  return out;
}

// Backtracking over labeled cubic graphs in discovery order: the smallest
// incomplete vertex is completed first, its new neighbors take increasing
// labels, and fresh vertices are used consecutively.  Every isomorphism class
// is hit (relabel any graph by its own discovery order) and each labeled
// graph at most once, so canonical dedup of the leaves is exact.
struct CubicGen {
  int n;
  const std::function<bool(const Graph&)>& keep;
  std::map<std::string, Graph>& out;
  std::vector<std::uint64_t> adj;
  std::vector<int> deg;
  std::vector<Edge> edges;
  int used = 1;

  CubicGen(int n, const std::function<bool(const Graph&)>& keep,
           std::map<std::string, Graph>& out)
      : n(n), keep(keep), out(out), adj(n, 0), deg(n, 0) {}

  void add(int v, int w) {
    adj[v] |= std::uint64_t{1} << w;
    adj[w] |= std::uint64_t{1} << v;
    ++deg[v], ++deg[w];
    edges.emplace_back(v, w);
  }
  void remove(int v, int w) {
    adj[v] &= ~(std::uint64_t{1} << w);
    adj[w] &= ~(std::uint64_t{1} << v);
    --deg[v], --deg[w];
    edges.pop_back();
  }

  void step() {
    int v = 0;
    while (v < used && deg[v] == 3) ++v;
    if (v == used) {
      if (used == n) {
        Graph g(n, edges);
        if (keep && !keep(g)) return;
        auto cf = canonical_form(g);
        out.emplace(cf.code, cf.graph);
      }
      return;  // discovered part complete but undiscovered vertices remain
    }
    extend(v, v);
  }

  void extend(int v, int last) {
    for (int w = last + 1; w < used; ++w) {
      if (deg[w] == 3 || ((adj[v] >> w) & 1)) continue;
      add(v, w);
      deg[v] == 3 ? step() : extend(v, w);
      remove(v, w);
    }
    if (used < n) {
      int w = used++;
      add(v, w);
      deg[v] == 3 ? step() : extend(v, w);
      remove(v, w);
      --used;
    }
  }
};

bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

template <typename Fn>
void for_each_subset_upto(int n, int max_size, Fn fn) {
  std::vector<int> c;
  fn(c);
  for (int k = 1; k <= std::min(n, max_size); ++k) {
    c.resize(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    do fn(c);
    while (next_combination(c, n));
  }
}

}  // namespace

std::vector<Graph> enumerate_cubic_graphs(
    int n, const std::function<bool(const Graph&)>& prefilter) {
  if (n < 4 || n % 2) return {};
  std::map<std::string, Graph> out;
  CubicGen gen(n, prefilter, out);
  gen.step();
  return sorted_values(out);
}

std::vector<Graph> enumerate_cubic_polytopes(int max_vertices) {
  if (max_vertices < 4 || max_vertices % 2)
    throw GraphError(errc::bad_argument,
                     "cubic enumeration needs an even vertex bound >= 4");
  if (max_vertices > cubic_vertex_guard())
    throw GraphError(errc::bound_exceeded,
                     "vertex bound " + std::to_string(max_vertices) +
                         " exceeds the cubic guard " +
                         std::to_string(cubic_vertex_guard()));
  std::vector<Graph> out;
  std::function<bool(const Graph&)> keep = [](const Graph& g) {
    return is_3polytope(g);
  };
  for (int n = 4; n <= max_vertices; n += 2)
    for (auto& g : enumerate_cubic_graphs(n, keep)) out.push_back(g);
  return out;
}

Graph decorate(const Graph& base, const std::vector<Edge>& sub_edges,
               const std::vector<int>& pendant_hosts) {
  Graph g = base;
  for (Edge e : sub_edges) g = t1_subdivide(g, e);
  for (int h : pendant_hosts) g = t2_pendant(g, h);
  return g;
}

std::vector<Graph> enumerate_roots(int max_edges, int threads) {
  if (max_edges > 24)
    throw GraphError(errc::bound_exceeded, "edge bound exceeds 24");

  int n_max = 2 * max_edges / 3;  // 3n/2 <= max_edges, rounded down to even
  n_max -= n_max % 2;
  std::vector<Graph> bases;
  if (n_max >= 4) bases = enumerate_cubic_polytopes(n_max);

  auto all = parallel_collect(
      bases, threads, [&](const Graph& base, std::map<std::string, Graph>& out) {
        auto base_edges = base.edges();
        int budget = max_edges - base.size();
        for_each_subset_upto(
            base.size(), budget, [&](const std::vector<int>& ei) {
              std::vector<Edge> subs;
              for (int i : ei) subs.push_back(base_edges[i]);
              for_each_subset_upto(
                  base.order(), budget - static_cast<int>(subs.size()),
                  [&](const std::vector<int>& hosts) {
                    auto cf = canonical_form(decorate(base, subs, hosts));
                    out.emplace(cf.code, cf.graph);
                  });
            });
      });
  for (const auto& j : exceptional_roots())
    if (j.size() <= max_edges) {
      auto cf = canonical_form(j);
      all.emplace(cf.code, cf.graph);
    }
  return sorted_values(all);
}

std::vector<Graph> enumerate_polytopal_line_graphs(int max_root_edges,
                                                   int threads) {
  auto roots = enumerate_roots(max_root_edges, threads);
  auto all = parallel_collect(
      roots, threads, [](const Graph& r, std::map<std::string, Graph>& out) {
        auto cf = canonical_form(line_graph(r).graph);
        out.emplace(cf.code, cf.graph);
      });
  for (auto& [code, g] : all)
    if (!is_3polytope(g))
      throw std::logic_error(
          "enumerated root whose line graph is not a 3-polytope");
  return sorted_values(all);
}

std::vector<Graph> enumerate_connected_graphs(int max_edges, int max_vertices,
                                              int threads) {
  if (max_edges > 24 || max_vertices > 10)
    throw GraphError(errc::bound_exceeded,
                     "exhaustive search is limited to 24 edges / 10 vertices");
  std::vector<Graph> out;
  if (max_edges < 1 || max_vertices < 2) return out;

  std::vector<Graph> level{Graph(2, {{0, 1}})};
  out.push_back(level[0]);
  for (int m = 2; m <= max_edges; ++m) {
    auto next = parallel_collect(
        level, threads, [&](const Graph& g, std::map<std::string, Graph>& acc) {
          auto grow = [&](int extra_vertex, Edge e) {
            auto edges = g.edges();
            edges.push_back(e);
            auto cf = canonical_form(Graph(g.order() + extra_vertex, edges));
            acc.emplace(cf.code, cf.graph);
          };
          for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
              if (!g.has_edge(u, v)) grow(0, {u, v});
          if (g.order() < max_vertices)
            for (int u = 0; u < g.order(); ++u) grow(1, {u, g.order()});
        });
    level = sorted_values(next);
    out.insert(out.end(), level.begin(), level.end());
  }
  auto by_code = [](const Graph& a, const Graph& b) {
    return canonical_code(a) < canonical_code(b);
  };
  std::sort(out.begin(), out.end(), by_code);
  return out;
}

std::vector<Graph> exhaustive_oracle(int max_edges, int threads) {
  if (max_edges > 9)
    throw GraphError(errc::bound_exceeded, "oracle is limited to 9 edges");
  auto corpus = enumerate_connected_graphs(max_edges, max_edges + 1, threads);

  threads = std::max(1, threads);
  std::vector<char> accept(corpus.size(), 0);
  auto worker = [&](int t) {
    for (std::size_t i = t; i < corpus.size(); i += threads)
      accept[i] = oracle_root_check(corpus[i]);
  };
  if (threads == 1 || corpus.size() < 2) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  std::vector<Graph> out;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (accept[i]) out.push_back(corpus[i]);
  return out;
}

}  // namespace lgpoly
