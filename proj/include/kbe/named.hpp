#ifndef KBE_NAMED_HPP
#define KBE_NAMED_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kbe/graph.hpp"

namespace kbe {
namespace named {

Graph empty_graph(int n);           // n isolated vertices
Graph complete(int n);              // K_n
Graph complete_bipartite(int p, int q);  // sides 0..p-1 and p..p+q-1
Graph path(int k);                  // 0-1-...-(k-1)
Graph cycle(int n);                 // 0-1-...-(n-1)-0, n >= 3
Graph star(int leaves);             // center 0, leaves 1..leaves

/// Induced cycle 0..n-1 plus a clique n..n+m-1 whose vertices attach to both
/// endpoints of the cycle edge (0, 1) and nothing else. n >= 3, m >= 1.
Graph necklace(int n, int m);

/// Cycle 0..n-1 with a pendant path of k extra vertices hanging off vertex 0:
/// 0-n-(n+1)-...-(n+k-1).
Graph cycle_with_tail(int n, int k);

Graph net();             // triangle 0,1,2 with pendants 3,4,5
Graph paw();             // triangle 0,1,2 with pendant 3 on 0
Graph chair();           // path 0-1-2-3 with pendant 4 on 1
Graph diamond();         // K4 minus the edge (2,3)
Graph complement_c7();   // complement of the 7-cycle
Graph petersen();

}  // namespace named

/// Name-string dispatch for the CLI: e.g. ("necklace", {5, 1}).
/// Throws GraphError for unknown names or invalid parameters.
Graph build_named(std::string_view name, std::span<const int> params);

/// Names accepted by build_named, with parameter counts, for usage text.
std::vector<std::string> named_graph_catalog();

}  // namespace kbe

#endif
