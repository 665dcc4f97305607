#ifndef KBE_GRAPH_IO_HPP
#define KBE_GRAPH_IO_HPP

#include <span>
#include <string>
#include <string_view>

#include "kbe/graph.hpp"

namespace kbe {

/// Decode a graph6 string (6-bit upper-triangle encoding, offset 63).
/// Throws GraphError on malformed input.
Graph parse_graph6(std::string_view text);

/// Encode as graph6. Round-trips: to_graph6(parse_graph6(s)) == s for every
/// valid string.
std::string to_graph6(const Graph& g);

/// Plain text format: a header line "n <count>" followed by one "u v" line
/// per edge.
Graph parse_edge_list_text(std::string_view text);
std::string to_edge_list_text(const Graph& g);

/// Graphviz export. `labels`, when nonempty, must have one entry per vertex.
std::string to_dot(const Graph& g, std::span<const std::string> labels = {});

/// Heuristic front end for the CLI: edge-list when the input starts with an
/// "n <count>" header, graph6 otherwise.
Graph parse_auto(std::string_view text);

}  // namespace kbe

#endif
