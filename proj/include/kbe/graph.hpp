#ifndef KBE_GRAPH_HPP
#define KBE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kbe {

/// Undirected edge with endpoints stored as u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge& a, const Edge& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.v <=> b.v;
  }
};

/// Invalid construction input (self-loop, out-of-range id, bad format).
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was asked to exceed a configured resource cap.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, long long limit)
      : std::runtime_error(what), limit_(limit) {}
  long long limit() const { return limit_; }

 private:
  long long limit_;
};

/// Immutable simple graph on vertices 0..n-1 with sorted adjacency lists.
/// Invariants enforced on construction: no loops, symmetric adjacency,
/// all ids in range.
class Graph {
 public:
  Graph() = default;  // the empty graph on 0 vertices

  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }

  const std::vector<int>& neighbors(int v) const;
  std::vector<int> closed_neighborhood(int v) const;
  int degree(int v) const;
  bool adjacent(int u, int v) const;

  /// All edges, sorted by (u, v).
  std::vector<Edge> edges() const;

  int min_degree() const;  // 0 for the empty graph
  int max_degree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> adj_;
};

/// Row-per-vertex bit matrix for O(1) adjacency tests inside hot loops.
class AdjacencyBits {
 public:
  explicit AdjacencyBits(const Graph& g);
  bool test(int u, int v) const {
    return (words_[static_cast<size_t>(u) * stride_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  int size() const { return n_; }

 private:
  int n_ = 0;
  size_t stride_ = 0;
  std::vector<uint64_t> words_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map;  // new id -> original id, sorted ascending
};

/// Subgraph induced by `vertices` (need not be sorted; duplicates rejected).
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Vertex sets of the connected components, each sorted, ordered by smallest
/// member. The empty graph has no components.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// True when there is a path between every pair of vertices. The empty graph
/// counts as connected.
bool is_connected(const Graph& g);

/// Length of a shortest cycle, or nullopt when the graph is acyclic.
std::optional<int> girth(const Graph& g);

/// Complement graph on the same vertex set.
Graph complement(const Graph& g);

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace kbe

#endif
