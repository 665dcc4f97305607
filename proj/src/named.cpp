#include "kbe/named.hpp"

namespace kbe {
namespace named {

Graph empty_graph(int n) {
  if (n < 0) throw GraphError("empty_graph: n must be nonnegative");
  return Graph::from_edge_list(n, std::span<const std::pair<int, int>>{});
}

Graph complete(int n) {
  if (n < 0) throw GraphError("complete: n must be nonnegative");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(int p, int q) {
  if (p < 0 || q < 0) throw GraphError("complete_bipartite: sides must be nonnegative");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < q; ++v) edges.emplace_back(u, p + v);
  return Graph::from_edge_list(p + q, edges);
}

Graph path(int k) {
  if (k < 0) throw GraphError("path: k must be nonnegative");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edge_list(k, edges);
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle: need n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edge_list(n, edges);
}

Graph star(int leaves) {
  if (leaves < 0) throw GraphError("star: leaf count must be nonnegative");
  return complete_bipartite(1, leaves);
}

Graph necklace(int n, int m) {
  if (n < 3 || m < 1) throw GraphError("necklace: need n >= 3 and m >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(n + i, 0);
    edges.emplace_back(n + i, 1);
    for (int j = i + 1; j < m; ++j) edges.emplace_back(n + i, n + j);
  }
  return Graph::from_edge_list(n + m, edges);
}

Graph cycle_with_tail(int n, int k) {
  if (n < 3 || k < 0) throw GraphError("cycle_with_tail: need n >= 3 and k >= 0");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  for (int i = 0; i < k; ++i) edges.emplace_back(i == 0 ? 0 : n + i - 1, n + i);
  return Graph::from_edge_list(n + k, edges);
}

Graph net() {
  return Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

Graph paw() {
  return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
}

Graph chair() {
  return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}});
}

Graph diamond() {
  return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Graph complement_c7() { return complement(cycle(7)); }

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < 5; ++v) {
    edges.emplace_back(v, (v + 1) % 5);          // outer 5-cycle
    edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    edges.emplace_back(v, 5 + v);                // spokes
  }
  return Graph::from_edge_list(10, edges);
}

}  // namespace named

Graph build_named(std::string_view name, std::span<const int> params) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw GraphError("named graph \"" + std::string(name) + "\" takes " +
                       std::to_string(k) + " parameter(s)");
  };
  if (name == "empty") { want(1); return named::empty_graph(params[0]); }
  if (name == "complete" || name == "k") { want(1); return named::complete(params[0]); }
  if (name == "complete_bipartite" || name == "kpq") {
    want(2);
    return named::complete_bipartite(params[0], params[1]);
  }
  if (name == "path") { want(1); return named::path(params[0]); }
  if (name == "cycle") { want(1); return named::cycle(params[0]); }
  if (name == "star") { want(1); return named::star(params[0]); }
  if (name == "necklace") { want(2); return named::necklace(params[0], params[1]); }
  if (name == "cycle_with_tail") {
    want(2);
    return named::cycle_with_tail(params[0], params[1]);
  }
  if (name == "net") { want(0); return named::net(); }
  if (name == "paw") { want(0); return named::paw(); }
  if (name == "chair") { want(0); return named::chair(); }
  if (name == "diamond") { want(0); return named::diamond(); }
  if (name == "complement_c7") { want(0); return named::complement_c7(); }
  if (name == "petersen") { want(0); return named::petersen(); }
  throw GraphError("unknown named graph \"" + std::string(name) + "\"");
}

std::vector<std::string> named_graph_catalog() {
  return {"empty N",          "complete N",  "complete_bipartite P Q",
          "path K",           "cycle N",     "star LEAVES",
          "necklace N M",     "cycle_with_tail N K",
          "net",              "paw",         "chair",
          "diamond",          "complement_c7", "petersen"};
}

}  // namespace kbe
