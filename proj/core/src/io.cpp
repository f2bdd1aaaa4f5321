#include "lgpoly/io.hpp"

#include <sstream>

namespace lgpoly {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw GraphError(errc::malformed_g6, what);
}

}  // namespace

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = group << 1 | g.has_edge(i, j);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

Graph parse_graph6(std::string_view line) {
  require(!line.empty(), "empty line");
  for (char c : line) require(c >= 63 && c <= 126, "character out of range");

  std::size_t pos = 0;
  long n;
  if (line[0] != '~') {
    n = line[pos++] - 63;
  } else {
    require(line.size() >= 4, "truncated order prefix");
    if (line[1] == '~') throw GraphError(errc::too_large, "order beyond 258047");
    n = 0;
    for (pos = 1; pos < 4; ++pos) n = n << 6 | (line[pos] - 63);
    require(n >= 63, "non-minimal extended order prefix");
  }
  if (n > Graph::kMaxOrder)
    throw GraphError(errc::too_large, "order " + std::to_string(n));

  long bits = n * (n - 1) / 2;
  require(static_cast<long>(line.size() - pos) == (bits + 5) / 6,
          line.size() - pos < static_cast<std::size_t>((bits + 5) / 6)
              ? "truncated bit vector"
              : "trailing garbage");
  std::vector<Edge> edges;
  long at = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++at)
      if ((line[pos + at / 6] - 63) >> (5 - at % 6) & 1) edges.emplace_back(i, j);
  for (long pad = bits; pad < (bits + 5) / 6 * 6; ++pad)
    require(!((line[pos + pad / 6] - 63) >> (5 - pad % 6) & 1),
            "nonzero padding");
  return Graph(static_cast<int>(n), edges);
}

Graph parse_edgelist(const std::string& text) {
  std::istringstream in(text);
  auto fail = [](const char* what) -> int {
    throw GraphError(errc::malformed_edgelist, what);
  };
  long n, m;
  if (!(in >> n >> m)) fail("missing \"n m\" header");
  if (n < 0 || n > Graph::kMaxOrder || m < 0) fail("header out of range");
  std::vector<Edge> edges;
  for (long k = 0; k < m; ++k) {
    long u, v;
    if (!(in >> u >> v)) fail("fewer edge lines than the header declares");
    if (u < 0 || u >= n || v < 0 || v >= n) fail("endpoint out of range");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) fail("trailing tokens after the declared edges");
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    throw GraphError(errc::malformed_edgelist, e.what());
  }
}

std::string write_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string write_dot(const Graph& g, const std::vector<std::string>& labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != g.order())
    throw GraphError(errc::bad_argument, "one label per vertex");
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (!labels.empty()) out << " [label=\"" << labels[v] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<std::string> edge_labels(const std::vector<Edge>& origin) {
  std::vector<std::string> out;
  out.reserve(origin.size());
  for (auto [u, v] : origin)
    out.push_back(u < 10 && v < 10
                      ? std::to_string(u) + std::to_string(v)
                      : std::to_string(u) + "-" + std::to_string(v));
  return out;
}

}  // namespace lgpoly
