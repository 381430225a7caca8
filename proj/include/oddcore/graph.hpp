#pragma once

#include <algorithm>
#include <cstdint>
#include <bit>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddcore {

// Undirected simple graph on vertices 0..n-1. Neighbor sets are kept twice:
// as sorted index lists for iteration and as packed bit rows so neighbor-set
// intersections run a word at a time.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n)
      : n_(n),
        words_((n + 63) / 64),
        bits_(static_cast<std::size_t>(n) * words_, 0),
        adj_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
  }

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }
  int words_per_row() const { return words_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) &
           1ULL;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    set_bit(u, v);
    set_bit(v, u);
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++m_;
  }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  // Raw bit row for vertex v; words_per_row() words.
  const std::uint64_t* row(int v) const {
    check_vertex(v);
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

  int common_neighbor_count(int u, int v) const {
    const std::uint64_t* a = row(u);
    const std::uint64_t* b = row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
    return c;
  }

  // Lowest-index common neighbor, or -1.
  int first_common_neighbor(int u, int v) const {
    const std::uint64_t* a = row(u);
    const std::uint64_t* b = row(v);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t x = a[w] & b[w];
      if (x) return w * 64 + std::countr_zero(x);
    }
    return -1;
  }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range [0," + std::to_string(n_) +
                                  ")");
  }
  void set_bit(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL
                                                              << (v & 63);
  }
  static void insert_sorted(std::vector<int>& xs, int v) {
    xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
  }

  int n_ = 0;
  int words_ = 0;
  long long m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<int>> adj_;
};

// Induced subgraph together with the map back to parent-graph vertex ids.
// to_parent[local] = parent id; locals are assigned in ascending parent order.
struct Subgraph {
  Graph graph;
  std::vector<int> to_parent;

  std::vector<int> to_parent_ids(const std::vector<int>& local) const {
    std::vector<int> out;
    out.reserve(local.size());
    for (int v : local) out.push_back(to_parent.at(v));
    return out;
  }
};

inline Subgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  Subgraph sub{Graph(static_cast<int>(vertices.size())), vertices};
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int w : g.neighbors(vertices[i])) {
      if (local[w] > static_cast<int>(i)) sub.graph.add_edge(static_cast<int>(i), local[w]);
    }
  }
  return sub;
}

// Either a proper two-coloring (values 1/2 per vertex) or an odd closed walk
// certifying non-bipartiteness. The walk is a vertex sequence w0..w_{L-1}
// with consecutive vertices adjacent, w_{L-1} adjacent to w0, and L odd.
struct BipartitenessWitness {
  std::vector<int> coloring;        // empty iff non-bipartite
  std::vector<int> odd_closed_walk; // empty iff bipartite

  bool bipartite() const { return odd_closed_walk.empty(); }
};

inline BipartitenessWitness is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, 0), parent(n, -1), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (color[s] != 0) continue;
    color[s] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (color[v] == 0) {
          color[v] = 3 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push(v);
        } else if (color[v] == color[u]) {
          // Same-color edge inside one BFS tree: root->u, the edge uv, and
          // v->root close an odd walk (depths of u and v have equal parity).
          std::vector<int> walk;
          for (int x = u; x != -1; x = parent[x]) walk.push_back(x);
          std::reverse(walk.begin(), walk.end()); // root .. u
          std::vector<int> vpath;                 // v .. child-of-root
          for (int x = v; x != s; x = parent[x]) vpath.push_back(x);
          walk.insert(walk.end(), vpath.begin(), vpath.end());
          return BipartitenessWitness{{}, walk};
        }
      }
    }
  }
  return BipartitenessWitness{color, {}};
}

// Blocks (biconnected components) as vertex sets, the cut vertices, and for
// each block the cut vertices it contains. Isolated vertices become singleton
// blocks; every edge lies in exactly one block.
struct BlockCutTree {
  std::vector<std::vector<int>> blocks;
  std::vector<int> cut_vertices;           // sorted
  std::vector<std::vector<int>> block_cuts; // per block, sorted

  bool is_cut_vertex(int v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
  }
};

inline BlockCutTree biconnected_components(const Graph& g) {
  const int n = g.vertex_count();
  BlockCutTree t;
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<char> cut(n, 0);
  std::vector<std::pair<int, int>> estack;
  int timer = 0;

  struct Frame {
    int v;
    std::size_t next;
  };

  auto pop_block = [&](int u, int v) {
    std::vector<int> verts;
    while (!estack.empty()) {
      auto [a, b] = estack.back();
      estack.pop_back();
      verts.push_back(a);
      verts.push_back(b);
      if (a == u && b == v) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    t.blocks.push_back(std::move(verts));
  };

  for (int s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    if (g.degree(s) == 0) {
      disc[s] = timer++;
      t.blocks.push_back({s});
      continue;
    }
    int root_children = 0;
    std::vector<Frame> stack{{s, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      int v = f.v;
      const auto& nb = g.neighbors(v);
      if (f.next < nb.size()) {
        int w = nb[f.next++];
        if (disc[w] == -1) {
          estack.emplace_back(v, w);
          disc[w] = low[w] = timer++;
          parent[w] = v;
          if (v == s) ++root_children;
          stack.push_back({w, 0});
        } else if (w != parent[v] && disc[w] < disc[v]) {
          estack.emplace_back(v, w);
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        stack.pop_back();
        if (!stack.empty()) {
          int u = stack.back().v;
          low[u] = std::min(low[u], low[v]);
          if (low[v] >= disc[u]) {
            if (u != s || root_children > 1) cut[u] = 1;
            pop_block(u, v);
          }
        }
      }
    }
    // Every root child satisfies low[w] >= disc[root], so all edges of this
    // component were popped into blocks above.
    if (!estack.empty()) throw std::logic_error("block decomposition left edges");
  }
  for (int v = 0; v < n; ++v)
    if (cut[v]) t.cut_vertices.push_back(v);
  t.block_cuts.resize(t.blocks.size());
  for (std::size_t b = 0; b < t.blocks.size(); ++b)
    for (int v : t.blocks[b])
      if (cut[v]) t.block_cuts[b].push_back(v);
  return t;
}

// Maximal induced subgraph with minimum degree >= num/den; repeatedly removes
// the lowest-index vertex of degree < num/den. Degrees compare against the
// rational threshold by cross-multiplication, so degree == num/den exactly is
// kept.
inline Subgraph min_degree_peel(const Graph& g, long long num, long long den) {
  if (den <= 0 || num < 0)
    throw std::invalid_argument("threshold must be a nonnegative rational");
  const int n = g.vertex_count();
  std::vector<long long> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<char> alive(n, 1);
  auto below = [&](int v) { return deg[v] * den < num; };
  std::priority_queue<int, std::vector<int>, std::greater<int>> pq;
  for (int v = 0; v < n; ++v)
    if (below(v)) pq.push(v);
  while (!pq.empty()) {
    int v = pq.top();
    pq.pop();
    if (!alive[v] || !below(v)) continue;
    alive[v] = 0;
    for (int w : g.neighbors(v)) {
      if (!alive[w]) continue;
      --deg[w];
      if (below(w)) pq.push(w);
    }
  }
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (alive[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

// Peel at threshold m/n. With m >= 1 the result is guaranteed nonempty; an
// empty result here is an implementation bug, not a valid outcome.
inline Subgraph min_degree_peel_density(const Graph& g) {
  Subgraph s = min_degree_peel(g, g.edge_count(),
                               std::max(1, g.vertex_count()));
  if (g.edge_count() >= 1 && s.graph.vertex_count() == 0)
    throw std::logic_error("density peel emptied a graph with m >= 1");
  return s;
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace oddcore
