#ifndef KBE_CANONICAL_HPP
#define KBE_CANONICAL_HPP

#include <compare>
#include <string>

#include "kbe/graph.hpp"

namespace kbe {

/// Total-order key: two graphs have equal keys iff they are isomorphic.
/// Relabeling vertices never changes the key.
struct CanonicalForm {
  std::string bytes;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr int kCanonicalSizeBound = 64;

/// Canonical labeling by equitable-partition refinement with backtracking
/// over individualizations, minimizing the relabeled adjacency bit string
/// per connected component. Throws BudgetError when the graph exceeds
/// `max_vertices`.
CanonicalForm canonical_form(const Graph& g, int max_vertices = kCanonicalSizeBound);

/// Isomorphism test without a size bound: canonical forms for small graphs,
/// paired individualization-refinement search otherwise.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace kbe

#endif
