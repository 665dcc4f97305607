#ifndef KBE_BICLIQUES_HPP
#define KBE_BICLIQUES_HPP

#include <span>
#include <vector>

#include "kbe/graph.hpp"

namespace kbe {

/// Maximal induced complete bipartite subgraph, stored as a canonical
/// bipartition: the lexicographically smaller side first.
struct Biclique {
  std::vector<int> left;
  std::vector<int> right;

  Biclique() = default;
  Biclique(std::vector<int> u, std::vector<int> w);

  /// Sorted union of both sides.
  std::vector<int> vertex_set() const;
  /// All cross pairs, sorted; these are edges of the host graph.
  std::vector<Edge> edge_set() const;
  bool contains_edge(const Edge& e) const;

  friend bool operator==(const Biclique&, const Biclique&) = default;
  friend auto operator<=>(const Biclique& a, const Biclique& b) {
    if (auto c = a.left <=> b.left; c != 0) return c;
    return a.right <=> b.right;
  }
};

/// Deduplicated, sorted by (left, right). Two bicliques never share the same
/// vertex set: an induced complete bipartite subgraph is connected, so its
/// bipartition is unique.
using BicliqueSet = std::vector<Biclique>;

inline constexpr long long kDefaultBicliqueCap = 1'000'000;

/// Biclique invariants minus maximality: both sides nonempty and disjoint,
/// cross-complete, no edge inside a side. False on any violation.
bool is_induced_complete_bipartite(const Graph& g, std::span<const int> u,
                                   std::span<const int> w);

/// True iff (u, w) is an induced complete bipartite subgraph and no single
/// vertex outside can be added to either side.
bool is_maximal_biclique(const Graph& g, std::span<const int> u,
                         std::span<const int> w);

/// All bicliques, via edge-seeded branch-and-extend. Throws BudgetError when
/// more than `cap` bicliques exist (the count can be exponential) or when the
/// internal search exceeds its work budget.
BicliqueSet enumerate_bicliques(const Graph& g, long long cap = kDefaultBicliqueCap);

/// Independent brute force for n <= 16: scan every vertex subset, keep the
/// connected complete bipartite ones, filter by single-vertex maximality.
BicliqueSet enumerate_bicliques_oracle(const Graph& g);

}  // namespace kbe

#endif
