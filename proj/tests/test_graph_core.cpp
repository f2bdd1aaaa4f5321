#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "doctest.h"
#include "lgpoly/families.hpp"
#include "lgpoly/graph.hpp"
#include "oracles.hpp"

using namespace lgpoly;

namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GraphError& e) {
    return e.code();
  }
  REQUIRE(false);
  return errc::bad_argument;
}

Graph shuffled_copy(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) {
    int a = perm[u], b = perm[v];
    e.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.order(), e);
}

}  // namespace

TEST_CASE("construction validates its input") {
  CHECK(code_of([] { Graph(3, {{1, 1}}); }) == errc::loop_edge);
  CHECK(code_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == errc::duplicate_edge);
  CHECK(code_of([] { Graph(3, {{0, 3}}); }) == errc::bad_index);
  CHECK(code_of([] { Graph(3, {{-1, 2}}); }) == errc::bad_index);
  CHECK(code_of([] { Graph(-1); }) == errc::bad_argument);
  CHECK(code_of([] { Graph(65); }) == errc::too_large);
  CHECK_NOTHROW(Graph(64));
  CHECK_NOTHROW(Graph(0));
}

TEST_CASE("accessors: degrees, neighbors, edges") {
  Graph g(5, {{0, 2}, {0, 1}, {2, 4}, {1, 2}});
  CHECK(g.order() == 5);
  CHECK(g.size() == 4);
  CHECK(g.degree(2) == 3);
  CHECK(g.degree(3) == 0);
  CHECK(g.neighbors(2) == std::vector<int>{0, 1, 4});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 4}});
  CHECK(g.has_edge(4, 2));
  CHECK(!g.has_edge(3, 4));
  CHECK(g.max_degree() == 3);
  CHECK(g.min_degree() == 0);
  CHECK(code_of([] { Graph(0).max_degree(); }) == errc::empty_graph);
}

TEST_CASE("connectivity basics") {
  CHECK(is_connected(path_graph(6)));
  CHECK(is_connected(Graph(1)));
  CHECK(is_connected(Graph(0)));
  CHECK(!is_connected(Graph(2)));
  Graph two(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(!is_connected(two));
  auto comp = components(two);
  REQUIRE(comp.size() == 2);
  CHECK(comp[0] == std::vector<int>{0, 1});
  CHECK(comp[1] == std::vector<int>{2, 3, 4});
  CHECK(components(Graph(0)).empty());
}

TEST_CASE("connectivity_at_least agrees with the max-flow oracle") {
  std::vector<Graph> corpus = {
      complete_graph(5),   complete_graph(4),  cycle_graph(6),
      path_graph(5),       star_graph(4),      complete_bipartite(3, 3),
      complete_bipartite(2, 3), wheel_graph(5), circular_ladder(4),
      oracles::named_octahedron(), oracles::named_cube(), Graph(2), Graph(1),
      Graph(4, {{0, 1}, {2, 3}})};
  std::mt19937 rng(17);
  for (int i = 0; i < 40; ++i)
    corpus.push_back(oracles::random_connected_graph(rng, 4 + int(rng() % 5), int(rng() % 7)));
  for (const auto& g : corpus) {
    int kappa = oracles::exact_vertex_connectivity(g);
    for (int k = 1; k <= 4; ++k) {
      CAPTURE(g.order());
      CAPTURE(k);
      CHECK(connectivity_at_least(g, k) == (kappa >= k));
    }
  }
  CHECK(code_of([] { connectivity_at_least(complete_graph(3), 5); }) == errc::bad_argument);
  CHECK(code_of([] { connectivity_at_least(complete_graph(3), 0); }) == errc::bad_argument);
}

TEST_CASE("induced_delete relabels and maps back") {
  Graph g = wheel_graph(4);  // hub 0, rim 1..4
  auto del = induced_delete(g, {0});
  CHECK(del.graph.order() == 4);
  CHECK(del.graph.size() == 4);  // the rim cycle
  CHECK(del.old_to_new[0] == -1);
  for (int v = 1; v <= 4; ++v) CHECK(del.new_to_old[del.old_to_new[v]] == v);
  CHECK(are_isomorphic(del.graph, cycle_graph(4)));
  auto none = induced_delete(g, {});
  CHECK(none.graph == g);
  CHECK(code_of([&] { induced_delete(g, {9}); }) == errc::bad_index);
}

TEST_CASE("delete_edges") {
  Graph g = complete_graph(4);
  Graph h = delete_edges(g, {{0, 1}, {3, 2}});
  CHECK(h.size() == 4);
  CHECK(!h.has_edge(0, 1));
  CHECK(!h.has_edge(2, 3));
  CHECK(are_isomorphic(h, cycle_graph(4)));
  // a loop can never be present, so it reads as a missing edge
  CHECK(code_of([&] { delete_edges(g, {{0, 0}}); }) == errc::missing_edge);
  CHECK(code_of([&] { delete_edges(cycle_graph(4), {{0, 2}}); }) == errc::missing_edge);
}

TEST_CASE("canonical form is a complete isomorphism invariant") {
  std::mt19937 rng(23);
  std::vector<Graph> pool = {complete_graph(6),       cycle_graph(9),
                             star_graph(5),           complete_bipartite(3, 4),
                             wheel_graph(6),          circular_ladder(5),
                             oracles::named_cube(),   oracles::named_octahedron(),
                             path_graph(7),           Graph(5, {{0, 1}, {2, 3}})};
  for (int i = 0; i < 25; ++i)
    pool.push_back(oracles::random_connected_graph(rng, 5 + int(rng() % 6), int(rng() % 10)));

  for (const auto& g : pool) {
    auto cf = canonical_form(g);
    // relabel really maps g onto cf.graph
    CHECK(cf.graph.order() == g.order());
    CHECK(cf.graph.size() == g.size());
    for (auto [u, v] : g.edges()) CHECK(cf.graph.has_edge(cf.relabel[u], cf.relabel[v]));
    // idempotent: canonical form of the canonical graph is itself
    CHECK(canonical_code(cf.graph) == cf.code);
    // invariant under relabeling
    for (int r = 0; r < 4; ++r) {
      Graph s = shuffled_copy(g, rng);
      CHECK(canonical_code(s) == cf.code);
      CHECK(are_isomorphic(s, g));
    }
  }

  // distinct classes get distinct codes
  CHECK(canonical_code(cycle_graph(6)) != canonical_code(circular_ladder(3)));
  CHECK(canonical_code(star_graph(3)) != canonical_code(path_graph(4)));
  // same degree sequence, different graphs: C6 vs 2 triangles... use connected pair
  Graph c6 = cycle_graph(6);
  Graph two_tri(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(canonical_code(c6) != canonical_code(two_tri));
  CHECK(!are_isomorphic(c6, two_tri));
}

TEST_CASE("isomorphism rejects quickly on size mismatch") {
  CHECK(!are_isomorphic(complete_graph(4), complete_graph(5)));
  CHECK(!are_isomorphic(cycle_graph(5), path_graph(5)));
  CHECK(are_isomorphic(Graph(0), Graph(0)));
  CHECK(are_isomorphic(Graph(1), Graph(1)));
}

TEST_CASE("canonical form handles the order cap") {
  // cycle on 64 vertices: largest representable order
  Graph big = cycle_graph(64);
  auto cf = canonical_form(big);
  CHECK(cf.graph.size() == 64);
  std::mt19937 rng(5);
  CHECK(canonical_code(shuffled_copy(big, rng)) == cf.code);
}
