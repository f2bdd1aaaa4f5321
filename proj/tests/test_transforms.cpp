#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "lgpoly/derived.hpp"
#include "lgpoly/families.hpp"
#include "lgpoly/generator.hpp"
#include "lgpoly/transforms.hpp"
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

Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

}  // namespace

TEST_CASE("edge subdivision") {
  Graph k4 = complete_graph(4);
  Graph s = t1_subdivide(k4, {0, 1});
  CHECK(s.order() == 5);
  CHECK(s.size() == 7);
  CHECK(!s.has_edge(0, 1));
  CHECK(s.has_edge(0, 4));
  CHECK(s.has_edge(1, 4));
  CHECK(s.degree(4) == 2);
  CHECK(code_of([&] { t1_subdivide(k4, {0, 4}); }) == errc::bad_index);
  CHECK(code_of([&] { t1_subdivide(cycle_graph(4), {0, 1}); }) == errc::degree_violation);
  CHECK(code_of([&] { t1_subdivide(k4, {0, 0}); }) == errc::missing_edge);
  CHECK(code_of([&] { t1_subdivide(s, {0, 4}); }) == errc::degree_violation);  // deg 2 endpoint
}

TEST_CASE("pendant attachment") {
  Graph k4 = complete_graph(4);
  Graph p = t2_pendant(k4, 2);
  CHECK(p.order() == 5);
  CHECK(p.degree(2) == 4);
  CHECK(p.degree(4) == 1);
  CHECK(p.has_edge(2, 4));
  CHECK(code_of([&] { t2_pendant(p, 2); }) == errc::degree_violation);  // now degree 4
  CHECK(code_of([&] { t2_pendant(k4, 7); }) == errc::bad_index);
  CHECK(code_of([] { t2_pendant(cycle_graph(5), 0); }) == errc::degree_violation);
}

TEST_CASE("vertex split commutes with the line graph on K4") {
  Graph k4 = complete_graph(4);
  auto l = line_graph(k4);
  // pick the line-graph vertex for root edge (0,1) and split it along the
  // edges meeting at 0 vs at 1
  int v01 = -1;
  for (int i = 0; i < l.graph.order(); ++i)
    if (l.origin[i] == Edge{0, 1}) v01 = i;
  REQUIRE(v01 >= 0);
  std::array<int, 2> at0{}, at1{};
  int i0 = 0, i1 = 0;
  for (int i = 0; i < l.graph.order(); ++i) {
    if (i == v01) continue;
    auto [a, b] = l.origin[i];
    if (a == 0 || b == 0) at0[i0++] = i;
    if (a == 1 || b == 1) at1[i1++] = i;
  }
  REQUIRE(i0 == 2);
  REQUIRE(i1 == 2);
  Graph split = t1_prime(l.graph, {v01, at0, at1});
  CHECK(are_isomorphic(split, line_graph(t1_subdivide(k4, {0, 1})).graph));
}

TEST_CASE("vertex split rejects bad sites") {
  Graph oct = oracles::named_octahedron();
  // degree check: splitting needs a degree-4 vertex
  CHECK(code_of([] { t1_prime(complete_graph(4), {0, {1, 2}, {3, 3}}); }) ==
        errc::pattern_mismatch);
  // pairs must partition the neighborhood
  CHECK(code_of([&] { t1_prime(oct, {0, {1, 2}, {1, 4}}); }) == errc::pattern_mismatch);
  // pairs must span edges: 0's neighbors are 1,2,4,5 and the antipodal pairs
  // {1,4}, {2,5} are non-edges
  CHECK(code_of([&] { t1_prime(oct, {0, {1, 4}, {2, 5}}); }) == errc::pattern_mismatch);
  // non-planar input cannot satisfy the facial requirement
  Graph k5 = complete_graph(5);
  CHECK(code_of([&] { t1_prime(k5, {0, {1, 2}, {3, 4}}); }) == errc::pattern_mismatch);
}

TEST_CASE("site enumeration on the octahedron") {
  auto sites = find_t1_sites(oracles::named_octahedron());
  // each vertex: neighborhood is a 4-cycle, two of three pairings use edges
  CHECK(sites.size() == 12);
  for (const auto& s : sites) {
    Graph split = t1_prime(oracles::named_octahedron(), s);
    CHECK(split.order() == 7);
    CHECK(is_3polytope(split));
  }
  CHECK(find_t1_sites(complete_graph(4)).empty());  // no degree-4 vertex
}

TEST_CASE("triangle insertion commutes with the line graph on K4") {
  Graph k4 = complete_graph(4);
  auto l = line_graph(k4);
  // the three edges at root vertex 2 form a facial triangle of L(K4)
  std::array<int, 3> tri{};
  int k = 0;
  for (int i = 0; i < l.graph.order(); ++i) {
    auto [a, b] = l.origin[i];
    if (a == 2 || b == 2) tri[k++] = i;
  }
  REQUIRE(k == 3);
  Graph ins = t2_prime(l.graph, tri);
  CHECK(are_isomorphic(ins, line_graph(t2_pendant(k4, 2)).graph));
}

TEST_CASE("triangle insertion validates the triple") {
  CHECK(code_of([] { t2_prime(cycle_graph(4), {0, 1, 2}); }) == errc::not_a_triangle);
  CHECK(code_of([] { t2_prime(complete_graph(4), {0, 1, 1}); }) == errc::not_a_triangle);
  // non-facial triangle: the equator of the triangular bipyramid
  Graph bipyramid(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(code_of([&] { t2_prime(bipyramid, {2, 3, 4}); }) == errc::not_a_face);
  Graph side = t2_prime(bipyramid, {0, 2, 3});
  CHECK(side.order() == 6);
  CHECK(side.degree(5) == 3);
  // non-planar graphs skip the face requirement
  Graph k6ish = t2_prime(complete_graph(5), {0, 1, 2});
  CHECK(k6ish.order() == 6);
}

TEST_CASE("facial triangle enumeration") {
  Graph bipyramid(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {2, 4}});
  auto sites = find_t2_sites(bipyramid);
  CHECK(sites.size() == 6);  // equator {2,3,4} is not a face
  for (auto t : sites) CHECK((t[0] != 2 || t[1] != 3 || t[2] != 4));
  CHECK(find_t2_sites(complete_graph(4)).size() == 4);
  CHECK(find_t2_sites(oracles::named_cube()).empty());
  CHECK(find_t2_sites(oracles::named_octahedron()).size() == 8);
}

TEST_CASE("pendant stripping is simultaneous") {
  // star: all leaves go at once, leaving the bare center
  auto res = strip_pendants(star_graph(4));
  CHECK(res.g1.order() == 1);
  CHECK(res.pendants.size() == 4);
  for (const auto& p : res.pendants) CHECK(p.host == 0);
  // path P3: both endpoints are leaves; simultaneous, not cascading
  auto p3 = strip_pendants(path_graph(3));
  CHECK(p3.g1.order() == 1);
  CHECK(p3.g1_to_original == std::vector<int>{1});
  // no leaves: identity
  auto c4 = strip_pendants(cycle_graph(4));
  CHECK(c4.g1 == cycle_graph(4));
  CHECK(c4.pendants.empty());
}

TEST_CASE("degree-2 smoothing skips triangles and records suppressions") {
  // C6 smooths all the way down to a triangle
  auto c6 = smooth_degree2(cycle_graph(6));
  CHECK(are_isomorphic(c6.g2, complete_graph(3)));
  CHECK(c6.smoothed.size() == 3);

  // K_{2,3}: first suppression creates the diamond, whose remaining degree-2
  // vertices sit on triangles and must survive
  auto k23 = smooth_degree2(complete_bipartite(2, 3));
  CHECK(are_isomorphic(k23.g2, diamond()));
  REQUIRE(k23.smoothed.size() == 1);
  CHECK(k23.smoothed[0].vertex == 2);
  CHECK(k23.smoothed[0].n1 == 0);
  CHECK(k23.smoothed[0].n2 == 1);

  // triangle with a subdivided edge: the degree-2 vertex is NOT on a triangle
  Graph tri_sub = t1_subdivide(complete_graph(4), {0, 1});
  auto sm = smooth_degree2(tri_sub);
  CHECK(are_isomorphic(sm.g2, complete_graph(4)));

  // diamond: both degree-2 vertices sit on triangles, nothing to do
  auto th = smooth_degree2(diamond());
  CHECK(th.g2 == diamond());
  CHECK(th.smoothed.empty());
}

TEST_CASE("exceptional catalog") {
  const auto& js = exceptional_roots();
  REQUIRE(js.size() == 7);
  CHECK(are_isomorphic(js[0], star_graph(4)));
  CHECK(are_isomorphic(js[1], diamond()));
  CHECK(are_isomorphic(js[4], complete_bipartite(2, 3)));
  int expected_order[7] = {5, 4, 5, 6, 5, 6, 7};
  for (int i = 0; i < 7; ++i) {
    CHECK(js[i].order() == expected_order[i]);
    CHECK(match_exceptional(js[i]) == i + 1);
    // relabeled copies match too
    std::mt19937 rng(100 + i);
    std::vector<int> perm(js[i].order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> e;
    for (auto [u, v] : js[i].edges())
      e.push_back({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
    CHECK(match_exceptional(Graph(js[i].order(), e)) == i + 1);
  }
  // line graphs of all seven are 3-polytopes
  for (const auto& j : js) CHECK(is_3polytope(line_graph(j).graph));
  // near misses
  CHECK(!match_exceptional(complete_graph(4)).has_value());
  CHECK(!match_exceptional(star_graph(3)).has_value());
  CHECK(!match_exceptional(cycle_graph(5)).has_value());
  CHECK(!match_exceptional(complete_bipartite(2, 4)).has_value());
}

TEST_CASE("reduce: decorated K4 comes back out") {
  Graph g = complete_graph(4);
  g = t1_subdivide(g, {0, 1});
  g = t1_subdivide(g, {2, 3});
  g = t2_pendant(g, 0);
  g = t2_pendant(g, 2);
  auto tr = reduce(g);
  CHECK(!tr.exceptional_index.has_value());
  CHECK(tr.pendants.size() == 2);
  CHECK(tr.smoothed.size() == 2);
  CHECK(are_isomorphic(tr.g2, complete_graph(4)));
  CHECK(tr.reconstruct() == g);
}

TEST_CASE("reduce: exceptional inputs skip smoothing") {
  // K_{2,3} would cascade into the diamond if smoothing ran; the catalog
  // must intercept it first
  auto tr = reduce(complete_bipartite(2, 3));
  REQUIRE(tr.exceptional_index.has_value());
  CHECK(*tr.exceptional_index == 5);
  CHECK(tr.g2 == tr.g1);
  CHECK(tr.smoothed.empty());
  CHECK(tr.reconstruct() == complete_bipartite(2, 3));

  // the catalog is keyed on the input itself: J7 reports its own index,
  // pendants still come off in the trace
  Graph j7 = exceptional_roots()[6];
  auto tr7 = reduce(j7);
  CHECK(tr7.pendants.size() == 2);
  REQUIRE(tr7.exceptional_index.has_value());
  CHECK(*tr7.exceptional_index == 7);
  CHECK(tr7.reconstruct() == j7);
}

TEST_CASE("reduce preconditions") {
  CHECK(code_of([] { reduce(Graph(4, {{0, 1}, {2, 3}})); }) == errc::precondition);
  CHECK(code_of([] { reduce(star_graph(5)); }) == errc::precondition);   // degree 5
  CHECK(code_of([] { reduce(Graph(0)); }) == errc::precondition);
  CHECK(code_of([] { reduce(Graph(1)); }) == errc::precondition);        // isolated vertex
  CHECK(code_of([] { reduce(path_graph(2)); }) == errc::precondition);   // strips to nothing
}

TEST_CASE("reconstruct is exact on random decorations") {
  std::mt19937 rng(53);
  auto bases = enumerate_cubic_polytopes(10);
  for (int trial = 0; trial < 60; ++trial) {
    Graph base = bases[rng() % bases.size()];
    Graph g = base;
    const int base_n = g.order();
    // subdivide a few edges (each at most once: endpoints must keep degree 3)
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    int subs = static_cast<int>(rng() % 4);
    for (int i = 0; i < static_cast<int>(edges.size()) && subs > 0; ++i) {
      auto [u, v] = edges[i];
      if (g.degree(u) == 3 && g.degree(v) == 3) {
        g = t1_subdivide(g, {u, v});
        --subs;
      }
    }
    // attach pendants to a few degree-3 vertices
    int pends = static_cast<int>(rng() % 3);
    for (int v = 0; v < base_n && pends > 0; ++v)
      if (g.degree(v) == 3 && (rng() & 1)) {
        g = t2_pendant(g, v);
        --pends;
      }
    auto tr = reduce(g);
    CHECK(tr.reconstruct() == g);
    CHECK(!tr.exceptional_index.has_value());
    CHECK(are_isomorphic(tr.g2, base));
  }
}

TEST_CASE("reduce leaves already-cubic graphs alone") {
  for (const auto& g : enumerate_cubic_polytopes(8)) {
    auto tr = reduce(g);
    CHECK(tr.g2 == g);
    CHECK(tr.pendants.empty());
    CHECK(tr.smoothed.empty());
    CHECK(tr.reconstruct() == g);
  }
}
