#include "lgpoly/classifier.hpp"

#include <algorithm>
#include <set>

#include "lgpoly/derived.hpp"
#include "lgpoly/planarity.hpp"
#include "lgpoly/transforms.hpp"

namespace lgpoly {

const char* rejection_reason_name(RejectionReason r) {
  switch (r) {
    case RejectionReason::NotConnected: return "NotConnected";
    case RejectionReason::MaxDegreeExceeded: return "MaxDegreeExceeded";
    case RejectionReason::AdjacentDeg2: return "AdjacentDeg2";
    case RejectionReason::BadPendant: return "BadPendant";
    case RejectionReason::Deg4NotSeparating: return "Deg4NotSeparating";
    case RejectionReason::BaseNotCubicPolytope: return "BaseNotCubicPolytope";
    case RejectionReason::IllegalDecoration: return "IllegalDecoration";
    case RejectionReason::NotLineGraph: return "NotLineGraph";
    case RejectionReason::NotPolytope: return "NotPolytope";
  }
  return "?";
}

Graph rebuild(const Decorated& d) {
  Graph g = d.base;
  for (Edge e : d.subdivided_edges) g = t1_subdivide(g, e);
  for (int h : d.pendant_hosts) g = t2_pendant(g, h);
  return g;
}

DegreeRuleReport degree_rule_report(const Graph& g) {
  DegreeRuleReport r;
  for (auto [u, v] : g.edges())
    if (g.degree(u) == 2 && g.degree(v) == 2) {
      r.no_adjacent_deg2 = false;
      if (!r.adjacent_deg2_pair) r.adjacent_deg2_pair = Edge{u, v};
    }
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) != 4) {
      r.leaf_on_deg4 = false;
      if (!r.bad_leaf) r.bad_leaf = v;
    }
    if (g.degree(v) == 4) {
      int leaves = 0;
      for (int w : g.neighbors(v)) leaves += g.degree(w) == 1;
      if (leaves != 1) {
        r.deg4_one_leaf = false;
        if (!r.bad_deg4) r.bad_deg4 = v;
      }
    }
  }
  if (!r.deg4_one_leaf && match_exceptional(g) == 1) r.star_exemption = true;
  return r;
}

namespace {

Certificate rejected(RejectionReason reason, std::vector<int> witness,
                     std::string detail) {
  return {Rejected{reason, std::move(witness), std::move(detail)}};
}

}  // namespace

Certificate classify_root(const Graph& g) {
  if (g.order() == 0)
    return rejected(RejectionReason::NotConnected, {}, "empty graph");
  if (g.order() == 1)
    return rejected(RejectionReason::NotConnected, {0}, "isolated vertex");
  auto comps = components(g);
  if (comps.size() != 1) {
    auto smallest = *std::min_element(
        comps.begin(), comps.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return rejected(RejectionReason::NotConnected, smallest,
                    std::to_string(comps.size()) + " components");
  }

  if (auto j = match_exceptional(g)) return {Exceptional{*j}};

  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 4)
      return rejected(RejectionReason::MaxDegreeExceeded, {v},
                      "degree " + std::to_string(g.degree(v)));
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 4 && is_connected(induced_delete(g, {v}).graph))
      return rejected(RejectionReason::Deg4NotSeparating, {v},
                      "degree-4 vertex is not a cut vertex");

  auto rules = degree_rule_report(g);
  if (!rules.no_adjacent_deg2) {
    auto [u, v] = *rules.adjacent_deg2_pair;
    return rejected(RejectionReason::AdjacentDeg2, {u, v},
                    "adjacent degree-2 vertices");
  }
  if (!rules.leaf_on_deg4)
    return rejected(RejectionReason::BadPendant, {*rules.bad_leaf},
                    "degree-1 vertex not attached to a degree-4 vertex");
  if (!rules.deg4_one_leaf)
    return rejected(RejectionReason::BadPendant, {*rules.bad_deg4},
                    "degree-4 vertex without exactly one degree-1 neighbor");

  auto trace = reduce(g);
  const Graph& base = trace.g2;
  for (int v = 0; v < base.order(); ++v)
    if (base.degree(v) != 3)
      return rejected(RejectionReason::BaseNotCubicPolytope,
                      {trace.g1_to_original[trace.g2_to_g1[v]]},
                      "reduced graph is not cubic");
  if (!is_3polytope(base))
    return rejected(RejectionReason::BaseNotCubicPolytope, {},
                    "reduced graph is cubic but not planar and 3-connected");

  // map original -> g1 -> g2 to express the decorations in base labels
  std::vector<int> g1_pos(g.order(), -1), g2_pos(trace.g1.order(), -1);
  for (int v = 0; v < trace.g1.order(); ++v) g1_pos[trace.g1_to_original[v]] = v;
  for (int v = 0; v < base.order(); ++v) g2_pos[trace.g2_to_g1[v]] = v;

  Decorated dec{base, {}, {}};
  std::set<Edge> seen;
  for (const auto& rec : trace.smoothed) {
    int a = g2_pos[rec.n1], b = g2_pos[rec.n2];
    if (a < 0 || b < 0 || !seen.insert({std::min(a, b), std::max(a, b)}).second)
      return rejected(RejectionReason::IllegalDecoration,
                      {trace.g1_to_original[rec.vertex]},
                      "subdivision vertex without a unique base edge");
    dec.subdivided_edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::set<int> hosts;
  for (const auto& p : trace.pendants) {
    int h1 = g1_pos[p.host];
    int h = h1 < 0 ? -1 : g2_pos[h1];
    if (h < 0 || !hosts.insert(h).second)
      return rejected(RejectionReason::IllegalDecoration, {p.host},
                      "pendant host does not survive as a base vertex");
    dec.pendant_hosts.push_back(h);
  }
  std::sort(dec.subdivided_edges.begin(), dec.subdivided_edges.end());
  std::sort(dec.pendant_hosts.begin(), dec.pendant_hosts.end());
  return {std::move(dec)};
}

PolytopeClassification classify_polytope(const Graph& p) {
  if (!is_3polytope(p))
    return {rejected(RejectionReason::NotPolytope, {},
                     "input is not planar and 3-connected on >= 4 vertices"),
            std::nullopt};
  auto recovery = root_graph(p);
  if (!recovery)
    return {rejected(RejectionReason::NotLineGraph, {},
                     "no clique partition realizes the input as a line graph"),
            std::nullopt};
  PolytopeClassification out{Certificate{}, std::nullopt};
  for (const auto& cand : recovery->candidates) {
    out.certificate = classify_root(cand.root);
    out.root = cand.root;
    if (out.certificate.accepted()) break;
  }
  return out;
}

bool oracle_root_check(const Graph& g) {
  if (g.size() == 0) throw GraphError(errc::no_edges, "oracle_root_check");
  return is_3polytope(line_graph(g).graph);
}

}  // namespace lgpoly
