#include "kbe/bicliques.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <deque>
#include <unordered_set>

namespace kbe {

Biclique::Biclique(std::vector<int> u, std::vector<int> w)
    : left(std::move(u)), right(std::move(w)) {
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  if (right < left) std::swap(left, right);
}

std::vector<int> Biclique::vertex_set() const {
  std::vector<int> out;
  out.reserve(left.size() + right.size());
  std::merge(left.begin(), left.end(), right.begin(), right.end(),
             std::back_inserter(out));
  return out;
}

std::vector<Edge> Biclique::edge_set() const {
  std::vector<Edge> out;
  out.reserve(left.size() * right.size());
  for (int u : left)
    for (int w : right) out.emplace_back(u, w);
  std::sort(out.begin(), out.end());
  return out;
}

bool Biclique::contains_edge(const Edge& e) const {
  auto in = [](const std::vector<int>& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
  };
  return (in(left, e.u) && in(right, e.v)) || (in(left, e.v) && in(right, e.u));
}

bool is_induced_complete_bipartite(const Graph& g, std::span<const int> u,
                                   std::span<const int> w) {
  if (u.empty() || w.empty()) return false;
  std::vector<int> su(u.begin(), u.end()), sw(w.begin(), w.end());
  std::sort(su.begin(), su.end());
  std::sort(sw.begin(), sw.end());
  if (std::adjacent_find(su.begin(), su.end()) != su.end()) return false;
  if (std::adjacent_find(sw.begin(), sw.end()) != sw.end()) return false;
  for (int x : su)
    if (x < 0 || x >= g.vertex_count()) return false;
  for (int x : sw)
    if (x < 0 || x >= g.vertex_count()) return false;
  std::vector<int> inter;
  std::set_intersection(su.begin(), su.end(), sw.begin(), sw.end(),
                        std::back_inserter(inter));
  if (!inter.empty()) return false;
  for (size_t i = 0; i < su.size(); ++i)
    for (size_t j = i + 1; j < su.size(); ++j)
      if (g.adjacent(su[i], su[j])) return false;
  for (size_t i = 0; i < sw.size(); ++i)
    for (size_t j = i + 1; j < sw.size(); ++j)
      if (g.adjacent(sw[i], sw[j])) return false;
  for (int a : su)
    for (int b : sw)
      if (!g.adjacent(a, b)) return false;
  return true;
}

namespace {

bool addable_to(const Graph& g, int x, std::span<const int> same_side,
                std::span<const int> other_side) {
  for (int y : same_side)
    if (x == y || g.adjacent(x, y)) return false;
  for (int y : other_side)
    if (x == y || !g.adjacent(x, y)) return false;
  return true;
}

}  // namespace

bool is_maximal_biclique(const Graph& g, std::span<const int> u,
                         std::span<const int> w) {
  if (!is_induced_complete_bipartite(g, u, w)) return false;
  for (int x = 0; x < g.vertex_count(); ++x) {
    bool inside = std::find(u.begin(), u.end(), x) != u.end() ||
                  std::find(w.begin(), w.end(), x) != w.end();
    if (inside) continue;
    if (addable_to(g, x, u, w) || addable_to(g, x, w, u)) return false;
  }
  return true;
}

namespace {

// Edge-seeded enumeration. From each edge (u, v) the search grows every
// maximal biclique with u and v on opposite sides; u,v adjacent means every
// biclique containing both has them on opposite sides, and every biclique
// contains some edge, so all bicliques are reached. Candidates that conflict
// with nobody get added without branching; genuine conflicts branch three
// ways (left / right / excluded). Excluded vertices that are still addable
// at a leaf mark it non-maximal.
class Enumerator {
 public:
  Enumerator(const Graph& g, long long cap)
      : g_(g), adj_(g), cap_(cap), node_budget_(std::max<long long>(10'000'000, 64 * cap)) {}

  BicliqueSet run() {
    for (const Edge& e : g_.edges()) {
      std::vector<int> cand;
      for (int x = 0; x < g_.vertex_count(); ++x) {
        if (x == e.u || x == e.v) continue;
        bool au = adj_.test(x, e.v) && !adj_.test(x, e.u);
        bool aw = adj_.test(x, e.u) && !adj_.test(x, e.v);
        if (au || aw) cand.push_back(x);
      }
      extend({e.u}, {e.v}, std::move(cand), {});
    }
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  bool addable(int x, const std::vector<int>& same, const std::vector<int>& other) const {
    for (int y : same)
      if (adj_.test(x, y)) return false;
    for (int y : other)
      if (!adj_.test(x, y)) return false;
    return true;
  }

  void extend(std::vector<int> u, std::vector<int> w, std::vector<int> cand,
              std::vector<int> excluded) {
    if (++nodes_ > node_budget_)
      throw BudgetError("biclique enumeration: work budget exceeded", node_budget_);

    std::vector<int> live;
    std::vector<char> au, aw;
    for (;;) {
      live.clear();
      au.clear();
      aw.clear();
      for (int x : cand) {
        bool a = addable(x, u, w);
        bool b = addable(x, w, u);
        if (a || b) {
          live.push_back(x);
          au.push_back(a);
          aw.push_back(b);
        }
      }
      // Forced moves: a one-sided candidate no other candidate can ever block
      // belongs to every maximal extension in this subtree.
      int forced = -1;
      for (size_t i = 0; i < live.size() && forced < 0; ++i) {
        if (au[i] == aw[i]) continue;
        bool inert = true;
        for (size_t j = 0; j < live.size() && inert; ++j) {
          if (i == j) continue;
          bool adj = adj_.test(live[i], live[j]);
          if (au[i]) {
            if ((au[j] && adj) || (aw[j] && !adj)) inert = false;
          } else {
            if ((aw[j] && adj) || (au[j] && !adj)) inert = false;
          }
        }
        if (inert) forced = static_cast<int>(i);
      }
      if (forced < 0) break;
      int x = live[static_cast<size_t>(forced)];
      auto& side = au[static_cast<size_t>(forced)] ? u : w;
      side.insert(std::lower_bound(side.begin(), side.end(), x), x);
      cand = live;
      cand.erase(std::find(cand.begin(), cand.end(), x));
    }

    if (live.empty()) {
      for (int x : excluded)
        if (addable(x, u, w) || addable(x, w, u)) return;  // not maximal here
      emit(u, w);
      return;
    }

    // Branch on the first live candidate.
    int x = live[0];
    std::vector<int> rest(live.begin() + 1, live.end());
    if (au[0]) {
      auto u2 = u;
      u2.insert(std::lower_bound(u2.begin(), u2.end(), x), x);
      extend(std::move(u2), w, rest, excluded);
    }
    if (aw[0]) {
      auto w2 = w;
      w2.insert(std::lower_bound(w2.begin(), w2.end(), x), x);
      extend(u, std::move(w2), rest, excluded);
    }
    excluded.push_back(x);
    extend(std::move(u), std::move(w), std::move(rest), std::move(excluded));
  }

  void emit(const std::vector<int>& u, const std::vector<int>& w) {
    // Belt over the excluded-set argument: re-check maximality globally.
    for (int x = 0; x < g_.vertex_count(); ++x) {
      if (std::binary_search(u.begin(), u.end(), x) ||
          std::binary_search(w.begin(), w.end(), x))
        continue;
      if (addable(x, u, w) || addable(x, w, u)) return;
    }
    Biclique b(u, w);
    std::string key;
    for (int v : b.vertex_set())
      key.append(reinterpret_cast<const char*>(&v), sizeof v);
    if (!seen_.insert(std::move(key)).second) return;
    out_.push_back(std::move(b));
    if (static_cast<long long>(out_.size()) > cap_)
      throw BudgetError("biclique count cap exceeded", cap_);
  }

  const Graph& g_;
  AdjacencyBits adj_;
  long long cap_;
  long long node_budget_;
  long long nodes_ = 0;
  std::unordered_set<std::string> seen_;
  BicliqueSet out_;
};

}  // namespace

BicliqueSet enumerate_bicliques(const Graph& g, long long cap) {
  if (cap <= 0) throw BudgetError("biclique cap must be positive", cap);
  Enumerator e(g, cap);
  return e.run();
}

BicliqueSet enumerate_bicliques_oracle(const Graph& g) {
  int n = g.vertex_count();
  if (n > 16) throw BudgetError("biclique oracle: n exceeds bound", 16);
  BicliqueSet out;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (mask & (uint32_t{1} << v)) members.push_back(v);
    // connected + properly 2-colorable, by BFS from the first member
    std::vector<int> color(static_cast<size_t>(n), -1);
    std::deque<int> queue{members[0]};
    color[static_cast<size_t>(members[0])] = 0;
    int reached = 0;
    bool proper = true;
    long long inner_edges = 0;
    while (!queue.empty() && proper) {
      int v = queue.front();
      queue.pop_front();
      ++reached;
      for (int x : g.neighbors(v)) {
        if (!(mask & (uint32_t{1} << x))) continue;
        if (v < x) ++inner_edges;
        if (color[static_cast<size_t>(x)] < 0) {
          color[static_cast<size_t>(x)] = 1 - color[static_cast<size_t>(v)];
          queue.push_back(x);
        } else if (color[static_cast<size_t>(x)] == color[static_cast<size_t>(v)]) {
          proper = false;
          break;
        }
      }
    }
    if (!proper || reached != static_cast<int>(members.size())) continue;
    std::vector<int> side0, side1;
    for (int v : members)
      (color[static_cast<size_t>(v)] == 0 ? side0 : side1).push_back(v);
    if (side0.empty() || side1.empty()) continue;
    if (inner_edges != static_cast<long long>(side0.size()) *
                           static_cast<long long>(side1.size()))
      continue;
    bool maximal = true;
    for (int x = 0; x < n && maximal; ++x) {
      if (mask & (uint32_t{1} << x)) continue;
      if (addable_to(g, x, side0, side1) || addable_to(g, x, side1, side0))
        maximal = false;
    }
    if (maximal) out.emplace_back(side0, side1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace kbe
