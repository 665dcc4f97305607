#ifndef KBE_OPERATORS_HPP
#define KBE_OPERATORS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kbe/bicliques.hpp"
#include "kbe/graph.hpp"

namespace kbe {

/// Edge-biclique graph: one vertex per biclique of the input, adjacency iff
/// the two bicliques share at least one edge (not merely a vertex). Vertex i
/// corresponds to bicliques[i]; the set is in canonical sorted order.
struct EdgeBicliqueGraph {
  Graph graph;
  BicliqueSet bicliques;
};

EdgeBicliqueGraph edge_biclique_graph(const Graph& g,
                                      long long cap = kDefaultBicliqueCap);

/// Line graph: vertex i corresponds to source_edges[i] (sorted edge order).
struct LineGraphResult {
  Graph graph;
  std::vector<Edge> source_edges;
};

LineGraphResult line_graph(const Graph& g);

/// Certificate that a graph is the burgeon expansion of `host`: `blocks[v]`
/// lists the clique replacing host vertex v (block sizes equal host degrees),
/// `matching` holds the cross edges, one per host edge, at most one between
/// any two blocks. Every vertex has exactly one neighbor outside its block.
struct BurgeonWitness {
  Graph host;
  std::vector<std::vector<int>> blocks;
  std::vector<std::pair<int, int>> matching;
};

/// Expansion result; vertex ids are grouped by block in host-vertex order,
/// and within a block ordered by the host neighbor they attach toward.
struct BurgeonGraph {
  Graph graph;
  BurgeonWitness witness;
};

/// Replace every vertex v by a clique of d(v) vertices; cross edges form a
/// perfect matching mirroring the host's edges. Rejects graphs with isolated
/// vertices (their block would be empty).
BurgeonGraph burgeon_graph(const Graph& g);

/// Search for a host H with B(H) equal to g. Returns nullopt when g is not a
/// burgeon graph.
std::optional<BurgeonWitness> recognize_burgeon(const Graph& g);

/// Re-validate a witness against g from scratch (trust anchor for reports).
bool verify_burgeon_witness(const Graph& g, const BurgeonWitness& w);

/// Budget violation during iteration, carrying the step reached.
class IterationBudgetError : public BudgetError {
 public:
  IterationBudgetError(const std::string& what, long long limit, int step)
      : BudgetError(what, limit), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

/// Apply the edge-biclique operator `steps` times. Throws
/// IterationBudgetError when an iterate would exceed the vertex budget or its
/// biclique enumeration exceeds the cap.
Graph iterate_kbe(const Graph& g, int steps, int max_vertices = 5000,
                  long long max_bicliques = kDefaultBicliqueCap);

/// Both sides of the burgeon identity: the edge-biclique graph of the
/// burgeon expansion vs the burgeon expansion of the line graph.
struct BurgeonIdentityCheck {
  bool holds = false;
  Graph lhs;  // KB_e(B(g))
  Graph rhs;  // B(L(g))
};

/// Requires at least 3 vertices and no isolated vertices; the 2-vertex case
/// is degenerate (L(K2) is a single vertex, which has no burgeon expansion)
/// and is rejected.
BurgeonIdentityCheck verify_burgeon_identity(const Graph& g);

}  // namespace kbe

#endif
