#include "lgpoly/families.hpp"

namespace lgpoly {

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError(errc::bad_argument, "cycle needs >= 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

Graph circular_ladder(int k) {
  if (k < 3) throw GraphError(errc::bad_argument, "circular ladder needs k >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    int j = (i + 1) % k;
    e.emplace_back(std::min(i, j), std::max(i, j));              // outer
    e.emplace_back(std::min(k + i, k + j), std::max(k + i, k + j));  // inner
    e.emplace_back(i, k + i);                                    // rung
  }
  return Graph(2 * k, e);
}

Graph wheel_graph(int rim) {
  if (rim < 3) throw GraphError(errc::bad_argument, "wheel needs rim >= 3");
  std::vector<Edge> e;
  for (int i = 1; i <= rim; ++i) {
    e.emplace_back(0, i);
    int j = i == rim ? 1 : i + 1;
    e.emplace_back(std::min(i, j), std::max(i, j));
  }
  return Graph(rim + 1, e);
}

}  // namespace lgpoly
