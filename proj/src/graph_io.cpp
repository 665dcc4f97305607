#include "kbe/graph_io.hpp"

#include <cctype>
#include <sstream>

namespace kbe {

namespace {

constexpr int kOffset = 63;     // printable range starts at '?'
constexpr int kMaxByte = 126;   // '~'

void strip_trailing_ws(std::string_view& s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' '))
    s.remove_suffix(1);
}

int take_byte(std::string_view& s) {
  if (s.empty()) throw GraphError("graph6: truncated input");
  unsigned char c = static_cast<unsigned char>(s.front());
  s.remove_prefix(1);
  if (c < kOffset || c > kMaxByte)
    throw GraphError("graph6: byte out of printable range");
  return c - kOffset;
}

long long decode_size(std::string_view& s) {
  if (s.empty()) throw GraphError("graph6: empty input");
  if (s.front() != '~') return take_byte(s);
  s.remove_prefix(1);
  if (!s.empty() && s.front() == '~') {
    s.remove_prefix(1);
    long long n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | take_byte(s);
    return n;
  }
  long long n = 0;
  for (int i = 0; i < 3; ++i) n = (n << 6) | take_byte(s);
  return n;
}

void encode_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  } else {
    out.push_back('~');
    out.push_back('~');
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::string_view s = text;
  strip_trailing_ws(s);
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  long long n64 = decode_size(s);
  if (n64 > (1 << 20)) throw GraphError("graph6: vertex count too large");
  int n = static_cast<int>(n64);
  std::vector<std::pair<int, int>> edges;
  int bits = 0, value = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (bits == 0) {
        value = take_byte(s);
        bits = 6;
      }
      --bits;
      if ((value >> bits) & 1) edges.emplace_back(u, v);
    }
  }
  if (!s.empty()) throw GraphError("graph6: trailing bytes");
  return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
  std::string out;
  int n = g.vertex_count();
  encode_size(out, n);
  int bits = 0, value = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      value = (value << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(value + kOffset));
        bits = 0;
        value = 0;
      }
    }
  }
  if (bits > 0)
    out.push_back(static_cast<char>((value << (6 - bits)) + kOffset));
  return out;
}

Graph parse_edge_list_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  long long n = -1;
  if (!(in >> tag) || tag != "n" || !(in >> n) || n < 0)
    throw GraphError("edge list: expected header \"n <count>\"");
  std::vector<std::pair<int, int>> edges;
  long long u, v;
  while (in >> u) {
    if (!(in >> v)) throw GraphError("edge list: dangling endpoint");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!in.eof() && in.fail()) {
    in.clear();
    std::string rest;
    in >> rest;
    if (!rest.empty()) throw GraphError("edge list: unexpected token \"" + rest + "\"");
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

std::string to_dot(const Graph& g, std::span<const std::string> labels) {
  std::ostringstream out;
  out << "graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (!labels.empty()) out << " [label=\"" << labels[static_cast<size_t>(v)] << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

Graph parse_auto(std::string_view text) {
  size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i + 1 < text.size() && text[i] == 'n' &&
      std::isspace(static_cast<unsigned char>(text[i + 1])))
    return parse_edge_list_text(text);
  return parse_graph6(text);
}

}  // namespace kbe
