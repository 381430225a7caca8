#pragma once

#include <array>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "oddcore/graph.hpp"

namespace oddcore {

constexpr int kUnreachable = -1;

// Shortest walk lengths (edge counts) of each parity from a fixed source,
// i.e. BFS distances in the bipartite double cover. Walk lengths, not simple
// path lengths: these are pruning bounds only.
struct ParityReachability {
  int source = 0;
  // dist[v][p]: shortest walk of parity p (0 = even edge count) to v, or
  // kUnreachable.
  std::vector<std::array<int, 2>> dist;

  int even_walk(int v) const { return dist[v][0]; }
  int odd_walk(int v) const { return dist[v][1]; }
};

namespace detail {

// Double-cover BFS from (source, 0) restricted to vertices with mask != 0
// (empty mask = whole graph). Optionally records parent states for walk
// recovery: parent[v][p] = {prev_vertex, prev_parity} or {-1, -1}.
inline std::vector<std::array<int, 2>> double_cover_bfs(
    const Graph& g, const std::vector<int>& sources,
    const std::vector<char>& mask,
    std::vector<std::array<std::array<int, 2>, 2>>* parents = nullptr) {
  const int n = g.vertex_count();
  std::vector<std::array<int, 2>> dist(
      n, {kUnreachable, kUnreachable});
  if (parents) parents->assign(n, {{{-1, -1}, {-1, -1}}});
  std::queue<std::pair<int, int>> q;
  for (int s : sources) {
    if (!mask.empty() && !mask[s]) continue;
    if (dist[s][0] == 0) continue;
    dist[s][0] = 0;
    q.emplace(s, 0);
  }
  while (!q.empty()) {
    auto [u, p] = q.front();
    q.pop();
    int np = p ^ 1;
    for (int v : g.neighbors(u)) {
      if (!mask.empty() && !mask[v]) continue;
      if (dist[v][np] != kUnreachable) continue;
      dist[v][np] = dist[u][p] + 1;
      if (parents) (*parents)[v][np] = {u, p};
      q.emplace(v, np);
    }
  }
  return dist;
}

}  // namespace detail

inline ParityReachability parity_bfs(const Graph& g, int source) {
  if (source < 0 || source >= g.vertex_count())
    throw std::invalid_argument("parity_bfs: source out of range");
  ParityReachability r;
  r.source = source;
  r.dist = detail::double_cover_bfs(g, {source}, {});
  return r;
}

// Simple path as a vertex sequence; order = vertex count. "Even path" means
// even order, which is odd edge count.
struct PathWitness {
  std::vector<int> vertices;

  int order() const { return static_cast<int>(vertices.size()); }
  bool even_order() const { return order() % 2 == 0; }
};

struct OddCycleWitness {
  std::vector<int> cycle; // cyclically adjacent, all distinct, odd size

  int length() const { return static_cast<int>(cycle.size()); }
};

namespace detail {

inline void validate_shortest_odd_cycle(const Graph& g,
                                        const std::vector<int>& c) {
  const int L = static_cast<int>(c.size());
  if (L < 3 || L % 2 == 0)
    throw std::logic_error("odd cycle witness has bad length");
  std::vector<char> seen(g.vertex_count(), 0);
  for (int i = 0; i < L; ++i) {
    if (seen[c[i]]) throw std::logic_error("odd cycle witness repeats a vertex");
    seen[c[i]] = 1;
    if (!g.has_edge(c[i], c[(i + 1) % L]))
      throw std::logic_error("odd cycle witness not a cycle");
  }
  // A shortest odd cycle has no chord.
  for (int i = 0; i < L; ++i)
    for (int j = i + 2; j < L; ++j) {
      if (i == 0 && j == L - 1) continue;
      if (g.has_edge(c[i], c[j]))
        throw std::logic_error("shortest odd cycle witness has a chord");
    }
}

}  // namespace detail

// Minimum-length odd cycle, or nullopt for bipartite graphs. The minimum odd
// closed walk through any vertex is found via double-cover distances; the
// global minimum is necessarily a simple (and chordless) cycle.
inline std::optional<OddCycleWitness> shortest_odd_cycle(const Graph& g) {
  const int n = g.vertex_count();
  // Triangle fast path: common neighbor of an edge's endpoints.
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      int w = g.first_common_neighbor(u, v);
      if (w != -1) {
        std::vector<int> tri{u, v, w};
        std::sort(tri.begin(), tri.end());
        OddCycleWitness c{tri};
        detail::validate_shortest_odd_cycle(g, c.cycle);
        return c;
      }
    }
  int best = std::numeric_limits<int>::max();
  int best_v = -1;
  for (int v = 0; v < n; ++v) {
    // Capped BFS: walks at least `best` long cannot improve.
    std::vector<std::array<int, 2>> dist(n, {kUnreachable, kUnreachable});
    std::queue<std::pair<int, int>> q;
    dist[v][0] = 0;
    q.emplace(v, 0);
    while (!q.empty()) {
      auto [u, p] = q.front();
      q.pop();
      if (dist[u][p] + 1 >= best) continue;
      int np = p ^ 1;
      for (int w : g.neighbors(u)) {
        if (dist[w][np] != kUnreachable) continue;
        dist[w][np] = dist[u][p] + 1;
        q.emplace(w, np);
      }
    }
    if (dist[v][1] != kUnreachable && dist[v][1] < best) {
      best = dist[v][1];
      best_v = v;
    }
  }
  if (best_v == -1) return std::nullopt;
  std::vector<std::array<std::array<int, 2>, 2>> par;
  auto dist = detail::double_cover_bfs(g, {best_v}, {}, &par);
  std::vector<int> walk;
  int u = best_v, p = 1;
  while (!(u == best_v && p == 0)) {
    walk.push_back(u);
    auto [pu, pp] = par[u][p];
    u = pu;
    p = pp;
  }
  walk.push_back(best_v);
  // walk lists best_v twice (start and end of the closed walk); drop one.
  walk.pop_back();
  OddCycleWitness c{walk};
  detail::validate_shortest_odd_cycle(g, c.cycle);
  return c;
}

// Simple cycle with exactly `length` edges, or nullopt (exact). Works block
// by block (a cycle lives in one block), skips bipartite blocks for odd
// lengths, and prunes the backtracking with double-cover distances back to
// the anchor vertex.
inline std::optional<std::vector<int>> has_cycle_of_length(const Graph& g,
                                                           int length) {
  if (length < 3 || length > std::max(g.vertex_count(), 3))
    throw std::invalid_argument("cycle length out of range [3, n]");
  if (length > g.vertex_count()) return std::nullopt;
  BlockCutTree tree = biconnected_components(g);
  for (const auto& block : tree.blocks) {
    if (static_cast<int>(block.size()) < length) continue;
    Subgraph sub = induced_subgraph(g, block);
    const Graph& h = sub.graph;
    const int bn = h.vertex_count();
    if (length % 2 == 1 && is_bipartite(h).bipartite()) continue;
    for (int anchor = 0; anchor < bn; ++anchor) {
      auto dist = detail::double_cover_bfs(h, {anchor}, {});
      std::vector<int> path{anchor};
      std::vector<char> used(bn, 0);
      used[anchor] = 1;
      // Iterative DFS over simple paths whose non-anchor vertices all exceed
      // the anchor (each cycle is found from its minimum vertex).
      std::vector<std::size_t> next{0};
      while (!path.empty()) {
        int v = path.back();
        int j = static_cast<int>(path.size());
        if (j == length) {
          if (h.has_edge(v, anchor)) return sub.to_parent_ids(path);
          used[v] = 0;
          path.pop_back();
          next.pop_back();
          continue;
        }
        const auto& nb = h.neighbors(v);
        bool advanced = false;
        while (next.back() < nb.size()) {
          int w = nb[next.back()++];
          if (w <= anchor || used[w]) continue;
          // After the v-w edge, j edges are used; the closing walk from w
          // back to the anchor must have exactly length - j edges.
          int need = length - j;
          int d = dist[w][need & 1];
          if (d == kUnreachable || d > need) continue;
          path.push_back(w);
          used[w] = 1;
          next.push_back(0);
          advanced = true;
          break;
        }
        if (!advanced && path.back() == v) {
          used[v] = 0;
          path.pop_back();
          next.pop_back();
        }
      }
    }
  }
  return std::nullopt;
}

// Simple path inside G[S] from x to y with the requested order parity and
// order <= max_order, or nullopt (exact for the induced subgraph). Branching
// prefers neighbors closest to the target in the masked double cover.
inline std::optional<PathWitness> bounded_parity_simple_path(
    const Graph& g, const std::vector<int>& s_vertices, int x, int y,
    bool want_even_order, int max_order) {
  const int n = g.vertex_count();
  std::vector<char> mask(n, 0);
  for (int v : s_vertices) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("bounded_parity_simple_path: S out of range");
    mask[v] = 1;
  }
  if (x < 0 || x >= n || y < 0 || y >= n || !mask[x] || !mask[y])
    throw std::invalid_argument(
        "bounded_parity_simple_path: endpoint not in S");
  if (max_order < 1) return std::nullopt;
  if (x == y) {
    if (!want_even_order) return PathWitness{{x}};
    return std::nullopt;
  }
  // Order parity -> edge parity: even order <=> odd edge count.
  const int want_edge_parity = want_even_order ? 1 : 0;
  const int max_edges = max_order - 1;
  auto dist = detail::double_cover_bfs(g, {y}, mask);
  if (dist[x][want_edge_parity] == kUnreachable ||
      dist[x][want_edge_parity] > max_edges)
    return std::nullopt;
  std::vector<int> path{x};
  std::vector<char> used(n, 0);
  used[x] = 1;
  std::vector<std::vector<int>> options{{}};
  std::vector<std::size_t> optpos{0};
  auto expand = [&](int v, int edges_used) {
    // Children sorted by distance-to-target at the parity still needed,
    // ties by vertex index.
    std::vector<std::pair<int, int>> cand;
    int rem = max_edges - edges_used - 1;
    int need_par = (want_edge_parity ^ ((edges_used + 1) & 1));
    for (int w : g.neighbors(v)) {
      if (!mask[w] || used[w]) continue;
      if (w == y) {
        if (edges_used + 1 <= max_edges &&
            ((edges_used + 1) & 1) == want_edge_parity) {
          cand.emplace_back(-1, w); // immediate hit, sorts first
        }
        continue;
      }
      int d = dist[w][need_par];
      if (d == kUnreachable || d > rem) continue;
      cand.emplace_back(d, w);
    }
    std::sort(cand.begin(), cand.end());
    std::vector<int> out;
    out.reserve(cand.size());
    for (auto& [d, w] : cand) out.push_back(w);
    return out;
  };
  options[0] = expand(x, 0);
  while (!path.empty()) {
    if (optpos.back() < options.back().size()) {
      int w = options.back()[optpos.back()++];
      if (w == y) {
        path.push_back(y);
        return PathWitness{path};
      }
      path.push_back(w);
      used[w] = 1;
      options.push_back(expand(w, static_cast<int>(path.size()) - 1));
      optpos.push_back(0);
    } else {
      used[path.back()] = 0;
      path.pop_back();
      options.pop_back();
      optpos.pop_back();
    }
  }
  return std::nullopt;
}

inline std::vector<int> all_vertices(const Graph& g) {
  std::vector<int> v(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) v[i] = i;
  return v;
}

}  // namespace oddcore
