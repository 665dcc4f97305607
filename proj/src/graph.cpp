#include "kbe/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace kbe {

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw GraphError("vertex count must be nonnegative");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphError("edge endpoint out of range: (" + std::to_string(u) +
                       "," + std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.adj_[static_cast<size_t>(u)].push_back(v);
    g.adj_[static_cast<size_t>(v)].push_back(u);
  }
  long long m = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    m += static_cast<long long>(nb.size());
  }
  g.m_ = m / 2;
  return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw GraphError("vertex id out of range: " + std::to_string(v));
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<size_t>(v)];
}

std::vector<int> Graph::closed_neighborhood(int v) const {
  check_vertex(v);
  std::vector<int> out = adj_[static_cast<size_t>(v)];
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[static_cast<size_t>(v)].size());
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adj_[static_cast<size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::min_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) {
    int dv = static_cast<int>(adj_[static_cast<size_t>(v)].size());
    if (v == 0 || dv < d) d = dv;
  }
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v)
    d = std::max(d, static_cast<int>(adj_[static_cast<size_t>(v)].size()));
  return d;
}

AdjacencyBits::AdjacencyBits(const Graph& g)
    : n_(g.vertex_count()),
      stride_(static_cast<size_t>((g.vertex_count() + 63) / 64)) {
  words_.assign(static_cast<size_t>(n_) * stride_, 0);
  for (int u = 0; u < n_; ++u)
    for (int v : g.neighbors(u))
      words_[static_cast<size_t>(u) * stride_ + (v >> 6)] |= uint64_t{1} << (v & 63);
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw GraphError("induced subgraph: duplicate vertex");
  std::vector<int> old_to_new(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.vertex_count())
      throw GraphError("induced subgraph: vertex out of range");
    old_to_new[static_cast<size_t>(sorted[i])] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u : sorted)
    for (int v : g.neighbors(u))
      if (u < v && old_to_new[static_cast<size_t>(v)] >= 0)
        edges.emplace_back(old_to_new[static_cast<size_t>(u)],
                           old_to_new[static_cast<size_t>(v)]);
  InducedSubgraph out;
  out.graph = Graph::from_edge_list(static_cast<int>(sorted.size()), edges);
  out.vertex_map = std::move(sorted);
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::vector<int> members;
    std::deque<int> queue{s};
    comp[static_cast<size_t>(s)] = id;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      members.push_back(v);
      for (int w : g.neighbors(v))
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = id;
          queue.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

std::optional<int> girth(const Graph& g) {
  // Shortest cycle through each edge: remove the edge, BFS between its
  // endpoints. A shortest cycle is always induced.
  int best = -1;
  for (const Edge& e : g.edges()) {
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
    std::deque<int> queue{e.u};
    dist[static_cast<size_t>(e.u)] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (v == e.v) break;
      if (best >= 0 && dist[static_cast<size_t>(v)] + 1 >= best) continue;
      for (int w : g.neighbors(v)) {
        if (v == e.u && w == e.v) continue;
        if (v == e.v && w == e.u) continue;
        if (dist[static_cast<size_t>(w)] < 0) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
          queue.push_back(w);
        }
      }
    }
    int d = dist[static_cast<size_t>(e.v)];
    if (d >= 0 && (best < 0 || d + 1 < best)) best = d + 1;
  }
  if (best < 0) return std::nullopt;
  return best;
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : a.edges()) edges.emplace_back(e.u, e.v);
  int shift = a.vertex_count();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph::from_edge_list(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace kbe
