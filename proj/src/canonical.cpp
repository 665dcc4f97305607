#include "kbe/canonical.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>

namespace kbe {

namespace {

using Cells = std::vector<std::vector<int>>;

// ---------------------------------------------------------------------------
// Single-component canonical labeling (component size <= 64, one word per row)

struct ComponentCanon {
  const std::vector<uint64_t>& rows;
  int n;
  std::vector<uint64_t> best;
  bool have_best = false;
  // Orbit pruning at the top branching node only: automorphisms discovered
  // from equal-key leaves are global, so they justify skipping candidates
  // there but nowhere deeper.
  std::vector<int> orbit;
  int top_depth = -1;

  explicit ComponentCanon(const std::vector<uint64_t>& r)
      : rows(r), n(static_cast<int>(r.size())), orbit(r.size()) {
    std::iota(orbit.begin(), orbit.end(), 0);
  }

  int find(int v) { return orbit[v] == v ? v : orbit[v] = find(orbit[v]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) orbit[std::max(a, b)] = std::min(a, b);
  }

  void refine(Cells& cells) const {
    std::deque<std::vector<int>> work(cells.begin(), cells.end());
    while (!work.empty()) {
      std::vector<int> splitter = std::move(work.front());
      work.pop_front();
      uint64_t smask = 0;
      for (int v : splitter) smask |= uint64_t{1} << v;
      Cells next;
      next.reserve(cells.size());
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::vector<std::pair<int, int>> keyed;  // (count in splitter, vertex)
        keyed.reserve(cell.size());
        for (int v : cell)
          keyed.emplace_back(std::popcount(rows[static_cast<size_t>(v)] & smask), v);
        std::sort(keyed.begin(), keyed.end());
        size_t i = 0;
        bool split = keyed.front().first != keyed.back().first;
        while (i < keyed.size()) {
          size_t j = i;
          while (j < keyed.size() && keyed[j].first == keyed[i].first) ++j;
          std::vector<int> sub;
          sub.reserve(j - i);
          for (size_t k = i; k < j; ++k) sub.push_back(keyed[k].second);
          if (split) work.push_back(sub);
          next.push_back(std::move(sub));
          i = j;
        }
      }
      cells = std::move(next);
    }
  }

  std::vector<uint64_t> leaf_key(const Cells& cells) const {
    std::vector<int> label(static_cast<size_t>(n));  // position -> vertex
    std::vector<int> inv(static_cast<size_t>(n));    // vertex -> position
    int pos = 0;
    for (const auto& cell : cells) {
      label[static_cast<size_t>(pos)] = cell[0];
      inv[static_cast<size_t>(cell[0])] = pos;
      ++pos;
    }
    std::vector<uint64_t> key(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      uint64_t bits = rows[static_cast<size_t>(label[static_cast<size_t>(i)])];
      while (bits) {
        int b = std::countr_zero(bits);
        bits &= bits - 1;
        key[static_cast<size_t>(i)] |= uint64_t{1} << inv[static_cast<size_t>(b)];
      }
    }
    return key;
  }

  void record_automorphism(const Cells& leaf) {
    // The permutation sending the best leaf's labeling to this one fixes the
    // key, hence is an automorphism. Only its orbits matter.
    // best_label was not kept; instead unite vertices occupying the same
    // position across the two leaves relative to the stored best leaf.
    if (best_label.empty()) return;
    int pos = 0;
    for (const auto& cell : leaf) unite(best_label[static_cast<size_t>(pos++)], cell[0]);
  }

  std::vector<int> best_label;

  void search(const Cells& cells, int depth) {
    int target = -1;
    for (size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = static_cast<int>(i);
        break;
      }
    if (target < 0) {
      auto key = leaf_key(cells);
      if (!have_best || key < best) {
        best = std::move(key);
        have_best = true;
        best_label.clear();
        for (const auto& cell : cells) best_label.push_back(cell[0]);
      } else if (key == best) {
        record_automorphism(cells);
      }
      return;
    }
    if (top_depth < 0) top_depth = depth;
    std::vector<int> tried;
    for (int v : cells[static_cast<size_t>(target)]) {
      if (depth == top_depth) {
        bool skip = false;
        for (int u : tried)
          if (find(u) == find(v)) {
            skip = true;
            break;
          }
        if (skip) continue;
        tried.push_back(v);
      }
      Cells child;
      child.reserve(cells.size() + 1);
      for (size_t i = 0; i < cells.size(); ++i) {
        if (static_cast<int>(i) == target) {
          child.push_back({v});
          std::vector<int> rest;
          for (int w : cells[i])
            if (w != v) rest.push_back(w);
          child.push_back(std::move(rest));
        } else {
          child.push_back(cells[i]);
        }
      }
      refine(child);
      search(child, depth + 1);
    }
  }
};

std::string canonical_component_key(const Graph& comp) {
  int n = comp.vertex_count();
  std::string key;
  key.push_back(static_cast<char>(n));
  if (n <= 1) return key;
  long long m = comp.edge_count();
  std::vector<uint64_t> rows(static_cast<size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v : comp.neighbors(u)) rows[static_cast<size_t>(u)] |= uint64_t{1} << v;

  std::vector<uint64_t> canon;
  if (m == static_cast<long long>(n) * (n - 1) / 2) {
    canon = rows;  // complete: every labeling gives the same key
  } else {
    ComponentCanon cc(rows);
    Cells cells{std::vector<int>(static_cast<size_t>(n))};
    std::iota(cells[0].begin(), cells[0].end(), 0);
    cc.refine(cells);
    cc.search(cells, 0);
    canon = std::move(cc.best);
  }
  // Pack the upper triangle of the canonical adjacency matrix.
  int bits = 0, value = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      value = (value << 1) | static_cast<int>((canon[static_cast<size_t>(i)] >> j) & 1);
      if (++bits == 8) {
        key.push_back(static_cast<char>(value));
        bits = 0;
        value = 0;
      }
    }
  if (bits > 0) key.push_back(static_cast<char>(value << (8 - bits)));
  return key;
}

// ---------------------------------------------------------------------------
// Unbounded paired isomorphism search

struct PairedIso {
  const Graph& g;
  const Graph& h;

  bool joint_refine(Cells& cg, Cells& ch) const {
    std::deque<std::pair<std::vector<int>, std::vector<int>>> work;
    for (size_t i = 0; i < cg.size(); ++i) work.emplace_back(cg[i], ch[i]);
    std::vector<char> in_g(static_cast<size_t>(g.vertex_count()));
    std::vector<char> in_h(static_cast<size_t>(h.vertex_count()));
    while (!work.empty()) {
      auto [sg, sh] = std::move(work.front());
      work.pop_front();
      for (int v : sg) in_g[static_cast<size_t>(v)] = 1;
      for (int v : sh) in_h[static_cast<size_t>(v)] = 1;
      Cells next_g, next_h;
      bool ok = true;
      for (size_t ci = 0; ci < cg.size() && ok; ++ci) {
        if (cg[ci].size() != ch[ci].size()) {
          ok = false;
          break;
        }
        if (cg[ci].size() == 1) {
          next_g.push_back(cg[ci]);
          next_h.push_back(ch[ci]);
          continue;
        }
        std::map<int, std::vector<int>> by_g, by_h;
        for (int v : cg[ci]) {
          int c = 0;
          for (int w : g.neighbors(v)) c += in_g[static_cast<size_t>(w)];
          by_g[c].push_back(v);
        }
        for (int v : ch[ci]) {
          int c = 0;
          for (int w : h.neighbors(v)) c += in_h[static_cast<size_t>(w)];
          by_h[c].push_back(v);
        }
        if (by_g.size() != by_h.size()) {
          ok = false;
          break;
        }
        auto ig = by_g.begin();
        auto ih = by_h.begin();
        bool split = by_g.size() > 1;
        for (; ig != by_g.end(); ++ig, ++ih) {
          if (ig->first != ih->first || ig->second.size() != ih->second.size()) {
            ok = false;
            break;
          }
          if (split) work.emplace_back(ig->second, ih->second);
          next_g.push_back(ig->second);
          next_h.push_back(ih->second);
        }
      }
      for (int v : sg) in_g[static_cast<size_t>(v)] = 0;
      for (int v : sh) in_h[static_cast<size_t>(v)] = 0;
      if (!ok) return false;
      cg = std::move(next_g);
      ch = std::move(next_h);
    }
    return true;
  }

  bool leaf_check(const Cells& cg, const Cells& ch) const {
    std::vector<int> map(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < cg.size(); ++i)
      map[static_cast<size_t>(cg[i][0])] = ch[i][0];
    for (const Edge& e : g.edges())
      if (!h.adjacent(map[static_cast<size_t>(e.u)], map[static_cast<size_t>(e.v)]))
        return false;
    return true;  // equal edge counts make one direction sufficient
  }

  bool match(Cells cg, Cells ch) const {
    if (!joint_refine(cg, ch)) return false;
    int target = -1;
    for (size_t i = 0; i < cg.size(); ++i)
      if (cg[i].size() > 1) {
        target = static_cast<int>(i);
        break;
      }
    if (target < 0) return leaf_check(cg, ch);
    int u = cg[static_cast<size_t>(target)][0];
    for (int v : ch[static_cast<size_t>(target)]) {
      Cells gg, hh;
      for (size_t i = 0; i < cg.size(); ++i) {
        if (static_cast<int>(i) == target) {
          gg.push_back({u});
          hh.push_back({v});
          std::vector<int> rg, rh;
          for (int w : cg[i])
            if (w != u) rg.push_back(w);
          for (int w : ch[i])
            if (w != v) rh.push_back(w);
          gg.push_back(std::move(rg));
          hh.push_back(std::move(rh));
        } else {
          gg.push_back(cg[i]);
          hh.push_back(ch[i]);
        }
      }
      if (match(std::move(gg), std::move(hh))) return true;
    }
    return false;
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw BudgetError("canonical form: graph exceeds size bound", max_vertices);
  std::vector<std::string> keys;
  for (const auto& members : connected_components(g))
    keys.push_back(canonical_component_key(induced_subgraph(g, members).graph));
  std::sort(keys.begin(), keys.end());
  CanonicalForm out;
  long long n = g.vertex_count(), m = g.edge_count();
  for (int shift = 24; shift >= 0; shift -= 8)
    out.bytes.push_back(static_cast<char>((n >> shift) & 0xff));
  for (int shift = 24; shift >= 0; shift -= 8)
    out.bytes.push_back(static_cast<char>((m >> shift) & 0xff));
  for (const auto& k : keys) out.bytes += k;
  return out;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return false;
  if (g.vertex_count() == 0) return true;
  {
    std::vector<int> dg, dh;
    for (int v = 0; v < g.vertex_count(); ++v) dg.push_back(g.degree(v));
    for (int v = 0; v < h.vertex_count(); ++v) dh.push_back(h.degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
  }
  if (g.vertex_count() <= kCanonicalSizeBound)
    return canonical_form(g) == canonical_form(h);
  PairedIso iso{g, h};
  std::vector<int> all_g(static_cast<size_t>(g.vertex_count()));
  std::vector<int> all_h(static_cast<size_t>(h.vertex_count()));
  std::iota(all_g.begin(), all_g.end(), 0);
  std::iota(all_h.begin(), all_h.end(), 0);
  return iso.match({all_g}, {all_h});
}

}  // namespace kbe
