// Command-line surface: derivations (linegraph/medial/radial/dual/root),
// predicates (check), the characterization in both directions (classify),
// enumeration (generate) and self-verification (verify).
//
// Exit codes: 0 success/accepted, 1 rejection verdict, 2 malformed or
// unsuitable input, 3 size-guard violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lgpoly/classifier.hpp"
#include "lgpoly/derived.hpp"
#include "lgpoly/generator.hpp"
#include "lgpoly/io.hpp"
#include "lgpoly/planarity.hpp"
#include "lgpoly/transforms.hpp"

using nlohmann::json;
using namespace lgpoly;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw GraphError(errc::bad_argument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph(const std::string& path, const std::string& format) {
  std::string text = slurp(path);
  if (format == "edgelist") return parse_edgelist(text);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) return parse_graph6(line);
  }
  throw GraphError(errc::malformed_g6, "no graph line in input");
}

void emit(const Graph& g, const std::string& out_format,
          const std::vector<std::string>& labels = {}) {
  if (out_format == "dot")
    std::cout << write_dot(g, labels);
  else
    std::cout << write_graph6(g) << "\n";
}

int vertex_connectivity_class(const Graph& g) {
  int k = 0;
  while (k < 4 && connectivity_at_least(g, k + 1)) ++k;
  return k;
}

json certificate_json(const Certificate& c) {
  json j;
  if (auto* e = std::get_if<Exceptional>(&c.result)) {
    j["verdict"] = "Exceptional";
    j["exception_index"] = e->index;
  } else if (auto* d = std::get_if<Decorated>(&c.result)) {
    j["verdict"] = "Decorated";
    j["base_g6"] = write_graph6(d->base);
    auto& subs = j["subdivided_edges"] = json::array();
    for (auto [u, v] : d->subdivided_edges) subs.push_back({u, v});
    j["pendant_hosts"] = d->pendant_hosts;
  } else {
    auto& r = std::get<Rejected>(c.result);
    j["verdict"] = "Rejected";
    j["reason"] = rejection_reason_name(r.reason);
    j["witness"] = r.witness;
    j["detail"] = r.detail;
  }
  return j;
}

void print_certificate_text(const Certificate& c) {
  if (auto* e = std::get_if<Exceptional>(&c.result)) {
    std::cout << "Exceptional index=" << e->index << "\n";
  } else if (auto* d = std::get_if<Decorated>(&c.result)) {
    std::cout << "Decorated base=" << write_graph6(d->base)
              << " subdivided_edges=[";
    for (std::size_t i = 0; i < d->subdivided_edges.size(); ++i)
      std::cout << (i ? "," : "") << d->subdivided_edges[i].first << "-"
                << d->subdivided_edges[i].second;
    std::cout << "] pendant_hosts=[";
    for (std::size_t i = 0; i < d->pendant_hosts.size(); ++i)
      std::cout << (i ? "," : "") << d->pendant_hosts[i];
    std::cout << "]\n";
  } else {
    auto& r = std::get<Rejected>(c.result);
    std::cout << "Rejected reason=" << rejection_reason_name(r.reason)
              << " witness=[";
    for (std::size_t i = 0; i < r.witness.size(); ++i)
      std::cout << (i ? "," : "") << r.witness[i];
    std::cout << "] detail=\"" << r.detail << "\"\n";
  }
}

int run_derivation(const std::string& op, const Graph& g,
                   const std::string& out_format, bool certificate) {
  if (op == "linegraph") {
    auto lg = line_graph(g);
    emit(lg.graph, out_format,
         out_format == "dot" ? edge_labels(lg.origin) : std::vector<std::string>{});
    return 0;
  }
  if (op == "medial" || op == "radial" || op == "dual") {
    auto result = check_planarity(g);
    auto* embp = std::get_if<Embedding>(&result);
    if (!embp) {
      std::cerr << "input is not planar\n";
      return 1;
    }
    if (op == "medial") {
      emit(medial_graph(*embp), out_format,
           out_format == "dot" ? edge_labels(g.edges()) : std::vector<std::string>{});
      return 0;
    }
    Graph out = op == "radial" ? radial_graph(*embp) : dual_graph(*embp);
    std::vector<std::string> labels;
    if (out_format == "dot") {
      if (op == "radial")
        for (int v = 0; v < out.order(); ++v)
          labels.push_back(v < g.order() ? "v" + std::to_string(v)
                                         : "f" + std::to_string(v - g.order()));
      else
        for (int v = 0; v < out.order(); ++v)
          labels.push_back("f" + std::to_string(v));
    }
    emit(out, out_format, labels);
    return 0;
  }
  // root
  auto rec = root_graph(g);
  if (!rec) {
    std::cerr << "NotLineGraph: no clique partition exists\n";
    return 1;
  }
  if (!certificate) {
    emit(rec->candidates[0].root, out_format);
    return 0;
  }
  std::cout << "candidates " << rec->candidates.size() << " ambiguous "
            << (rec->ambiguous ? 1 : 0) << "\n";
  for (std::size_t k = 0; k < rec->candidates.size(); ++k) {
    const auto& part = rec->candidates[k];
    std::cout << "root " << write_graph6(part.root) << "\n";
    for (const auto& q : part.cliques) {
      std::cout << "clique";
      for (int v : q) std::cout << " " << v;
      std::cout << "\n";
    }
    for (std::size_t v = 0; v < part.vertex_to_root_edge.size(); ++v)
      std::cout << "vertex " << v << " = edge "
                << part.vertex_to_root_edge[v].first << "-"
                << part.vertex_to_root_edge[v].second << "\n";
  }
  return 0;
}

int run_check(const Graph& g) {
  bool planar = is_planar(g);
  bool poly = is_3polytope(g);
  std::cout << (poly ? "POLYTOPE" : planar ? "PLANAR_ONLY" : "NOT_PLANAR")
            << " connectivity" << (vertex_connectivity_class(g) == 4 ? ">=" : "=")
            << vertex_connectivity_class(g) << "\n";
  return poly ? 0 : 1;
}

int run_classify(const Graph& g, const std::string& side, bool as_json) {
  Certificate cert;
  std::optional<Graph> root;
  if (side == "polytope") {
    auto pc = classify_polytope(g);
    cert = pc.certificate;
    root = pc.root;
  } else {
    cert = classify_root(g);
  }
  if (as_json) {
    json j = certificate_json(cert);
    if (root) j["root_g6"] = write_graph6(*root);
    std::cout << j.dump() << "\n";
  } else {
    if (root) std::cout << "root " << write_graph6(*root) << "\n";
    print_certificate_text(cert);
  }
  return cert.accepted() ? 0 : 1;
}

int run_generate(int max_edges, const std::string& mode, bool counts_only,
                 int threads) {
  std::vector<Graph> out;
  bool by_edges = true;
  if (mode == "bases") {
    int n_max = 2 * max_edges / 3;
    n_max -= n_max % 2;
    if (n_max < 4) n_max = 4;
    out = enumerate_cubic_polytopes(n_max);
    by_edges = false;
  } else if (mode == "polytopes") {
    out = enumerate_polytopal_line_graphs(max_edges, threads);
    by_edges = false;
  } else {
    out = enumerate_roots(max_edges, threads);
  }
  if (counts_only) {
    auto rep = make_report(mode, max_edges, out, by_edges,
                           std::chrono::milliseconds{0});
    for (auto [size, count] : rep.counts)
      std::cout << (by_edges ? "edges " : "vertices ") << size << " " << count
                << "\n";
    std::cout << "total " << rep.total() << "\n";
    return 0;
  }
  for (const auto& g : out) std::cout << write_graph6(g) << "\n";
  return 0;
}

bool commutation_suite(int max_base_vertices, std::ostream& log) {
  bool ok = true;
  for (const auto& base : enumerate_cubic_polytopes(max_base_vertices)) {
    auto lg = line_graph(base);
    std::vector<std::vector<int>> at(base.order());
    for (std::size_t i = 0; i < lg.origin.size(); ++i) {
      at[lg.origin[i].first].push_back(static_cast<int>(i));
      at[lg.origin[i].second].push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < lg.origin.size(); ++i) {
      auto [x, y] = lg.origin[i];
      auto others = [&](int end) {
        std::array<int, 2> o{};
        int k = 0;
        for (int j : at[end])
          if (j != static_cast<int>(i)) o[k++] = j;
        return o;
      };
      T1Site site{static_cast<int>(i), others(x), others(y)};
      Graph left = line_graph(t1_subdivide(base, {x, y})).graph;
      Graph right = t1_prime(lg.graph, site);
      if (!are_isomorphic(left, right)) {
        log << "FAIL edge-subdivision commutation on " << write_graph6(base)
            << " edge " << x << "-" << y << "\n";
        ok = false;
      }
    }
    for (int u = 0; u < base.order(); ++u) {
      Graph left = line_graph(t2_pendant(base, u)).graph;
      Graph right =
          t2_prime(lg.graph, {at[u][0], at[u][1], at[u][2]});
      if (!are_isomorphic(left, right)) {
        log << "FAIL pendant commutation on " << write_graph6(base)
            << " vertex " << u << "\n";
        ok = false;
      }
    }
  }
  return ok;
}

int run_verify(int max_edges, int threads) {
  bool all = true;

  auto corpus = enumerate_connected_graphs(max_edges, max_edges + 1, threads);
  std::size_t accepted = 0, mismatches = 0;
  for (const auto& g : corpus) {
    bool oracle = oracle_root_check(g);
    if (oracle != classify_root(g).accepted()) ++mismatches;
    accepted += oracle;
  }
  std::cout << (mismatches ? "FAIL" : "PASS") << " classifier-vs-oracle on "
            << corpus.size() << " connected graphs (<=" << max_edges
            << " edges), " << accepted << " accepted, " << mismatches
            << " disagreements\n";
  all = all && !mismatches;

  auto roots = enumerate_roots(max_edges, threads);
  auto oracle_set = exhaustive_oracle(max_edges, threads);
  bool same = roots.size() == oracle_set.size();
  for (std::size_t i = 0; same && i < roots.size(); ++i)
    same = roots[i] == oracle_set[i] ||
           canonical_code(roots[i]) == canonical_code(oracle_set[i]);
  std::cout << (same ? "PASS" : "FAIL") << " generator completeness: "
            << roots.size() << " generated vs " << oracle_set.size()
            << " oracle-accepted roots\n";
  all = all && same;

  bool comm = commutation_suite(10, std::cout);
  std::cout << (comm ? "PASS" : "FAIL")
            << " commutation of both decorations with the line-graph map "
               "(cubic bases <= 10 vertices)\n";
  all = all && comm;

  return all ? 0 : 1;
}

int dispatch(int argc, char** argv) {
  CLI::App app{
      "3-polytopal line graphs: construction, recognition, enumeration"};
  app.require_subcommand(1);

  std::string input = "-", format = "g6", out_format = "g6";
  bool certificate = false;
  auto add_io = [&](CLI::App* cmd, bool with_out = true) {
    cmd->add_option("input", input, "input file, - for stdin");
    cmd->add_option("--format", format, "input format: g6 | edgelist")
        ->check(CLI::IsMember({"g6", "edgelist"}));
    if (with_out)
      cmd->add_option("--out-format", out_format, "output format: g6 | dot")
          ->check(CLI::IsMember({"g6", "dot"}));
  };

  for (const char* name : {"linegraph", "medial", "radial", "dual", "root"}) {
    std::string what = name == std::string("linegraph") ? "line" : name;
    auto* cmd = app.add_subcommand(
        name, name == std::string("root")
                  ? "recover a root graph whose line graph is the input"
                  : "derive the " + what + " graph");
    add_io(cmd);
    if (name == std::string("root"))
      cmd->add_flag("--certificate", certificate,
                    "print the clique-partition certificate");
  }

  auto* check = app.add_subcommand(
      "check", "report POLYTOPE / PLANAR_ONLY / NOT_PLANAR plus connectivity");
  add_io(check, false);

  std::string side = "root";
  bool as_json = false;
  auto* classify =
      app.add_subcommand("classify", "decide membership in the characterized "
                                     "class, with certificate");
  add_io(classify, false);
  classify->add_option("--side", side, "root | polytope")
      ->check(CLI::IsMember({"root", "polytope"}));
  classify->add_flag("--json", as_json, "emit the certificate as JSON");

  int max_edges = 9, threads = 1;
  bool bases_only = false, roots_mode = false, polytopes = false, counts = false;
  auto* generate = app.add_subcommand("generate", "enumerate the class");
  generate->add_option("--max-root-edges", max_edges, "root edge budget")
      ->required();
  auto* m1 = generate->add_flag("--bases-only", bases_only,
                                "emit the undecorated cubic 3-polytopes");
  auto* m2 = generate->add_flag("--roots", roots_mode, "emit roots (default)");
  auto* m3 = generate->add_flag("--polytopes", polytopes,
                                "emit the 3-polytopal line graphs");
  m1->excludes(m2, m3);
  m2->excludes(m3);
  generate->add_flag("--counts", counts, "print the per-size table only");
  generate->add_option("--threads", threads, "worker threads");

  int verify_edges = 9;
  auto* verify = app.add_subcommand("verify", "run the built-in equivalence "
                                              "and commutation suites");
  verify->add_option("--max-edges", verify_edges, "corpus edge bound");
  verify->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  if (name == "check") return run_check(read_graph(input, format));
  if (name == "classify")
    return run_classify(read_graph(input, format), side, as_json);
  if (name == "generate")
    return run_generate(max_edges, bases_only ? "bases"
                                   : polytopes ? "polytopes"
                                               : "roots",
                        counts, threads);
  if (name == "verify") return run_verify(verify_edges, threads);
  return run_derivation(name, read_graph(input, format), out_format,
                        certificate);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::too_large:
      case errc::bound_exceeded:
        return 3;
      case errc::not_polytopal:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
