#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddcore/decompose.hpp"
#include "oddcore/graph.hpp"

namespace oddcore {

inline Graph make_complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative part size");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

// Complete r-partite graph on n vertices with part sizes differing by at
// most one; the first n mod r parts get the extra vertex.
inline Graph make_turan(int r, int n) {
  if (r < 1 || n < 0) throw std::invalid_argument("make_turan: r >= 1, n >= 0");
  std::vector<int> part(n);
  int q = n / r, rem = n % r, v = 0;
  for (int p = 0; p < r; ++p) {
    int size = q + (p < rem ? 1 : 0);
    for (int i = 0; i < size; ++i) part[v++] = p;
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (part[u] != part[w]) g.add_edge(u, w);
  return g;
}

// A complete balanced bipartite graph on n-r+1 vertices and a K_r sharing
// exactly one vertex. The shared vertex sits on the larger bipartite side
// (vertex 0); clique extras occupy the top r-1 indices.
inline Graph make_tstar(int r, int n) {
  if (r < 1 || r > n || n - r + 1 < 2)
    throw std::invalid_argument("make_tstar: need 1 <= r <= n, n-r+1 >= 2");
  int bip = n - r + 1;
  int a = (bip + 1) / 2; // larger side, holds the shared vertex 0
  int b = bip - a;
  Graph g(n);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  // clique on {0} + top r-1 vertices
  std::vector<int> clique{0};
  for (int v = bip; v < n; ++v) clique.push_back(v);
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      g.add_edge(clique[i], clique[j]);
  return g;
}

// Blowup of the 5-cycle: each cycle vertex becomes an independent set,
// complete joins along the five cycle edges.
inline Graph make_blowup_c5(const std::vector<int>& sizes) {
  if (sizes.size() != 5) throw std::invalid_argument("need 5 part sizes");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("part sizes must be positive");
  int n = 0;
  std::vector<int> start(6, 0);
  for (int i = 0; i < 5; ++i) {
    start[i] = n;
    n += sizes[i];
  }
  start[5] = n;
  Graph g(n);
  for (int i = 0; i < 5; ++i) {
    int j = (i + 1) % 5;
    for (int u = start[i]; u < start[i + 1]; ++u)
      for (int v = start[j]; v < start[j] + sizes[j]; ++v)
        if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
  }
  return g;
}

// Deterministic G(n, p): mt19937_64 seeded as given, pairs visited in
// lexicographic order, an edge kept when the next 53-bit uniform draw is
// below p. The draw order is part of the contract so runs replay exactly.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  Graph g(n);
  std::mt19937_64 rng(seed);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) g.add_edge(u, v);
    }
  return g;
}

// Deterministic G(n, m): rejection-sample distinct pairs with mt19937_64.
inline Graph random_graph_gnm(int n, int m, std::uint64_t seed) {
  long long maxm = static_cast<long long>(n) * (n - 1) / 2;
  if (m < 0 || m > maxm) throw std::invalid_argument("bad edge count");
  Graph g(n);
  std::mt19937_64 rng(seed);
  while (g.edge_count() < m) {
    int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % n);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
  }
  return g;
}

// Triangle-free non-bipartite generator: a 5-cycle plus random edges added
// only when they close no triangle.
inline Graph random_triangle_free_nonbipartite(int n, int extra_tries,
                                               std::uint64_t seed) {
  if (n < 5) throw std::invalid_argument("need n >= 5");
  Graph g(n);
  for (int i = 0; i < 5; ++i) {
    int j = (i + 1) % 5;
    g.add_edge(i, j);
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < extra_tries; ++t) {
    int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % n);
    if (u == v || g.has_edge(u, v)) continue;
    if (g.first_common_neighbor(u, v) != -1) continue;
    g.add_edge(u, v);
  }
  return g;
}

enum class AnchorPolicy { kDistinctBaseVertices, kChain };

struct PlantedInstance {
  Graph graph;
  SuspensionDecomposition ground_truth;
};

// Complete bipartite base with complete-graph suspensions attached either at
// distinct base vertices or chained suspension-on-suspension. The returned
// ground truth folds bipartite suspensions whose anchor lies in the base
// (a K_2 hanging off the base extends the bipartition), since any faithful
// decomposition absorbs them into the base.
inline PlantedInstance make_planted(int base_a, int base_b,
                                    const std::vector<int>& suspension_sizes,
                                    AnchorPolicy policy, std::uint64_t seed) {
  if (base_a < 1 || base_b < 1)
    throw std::invalid_argument("make_planted: base sides >= 1");
  for (int s : suspension_sizes)
    if (s < 2) throw std::invalid_argument("make_planted: suspension size >= 2");
  int n = base_a + base_b;
  for (int s : suspension_sizes) n += s - 1;
  Graph g(n);
  for (int u = 0; u < base_a; ++u)
    for (int v = base_a; v < base_a + base_b; ++v) g.add_edge(u, v);
  std::mt19937_64 rng(seed);
  std::vector<int> base_anchor_pool;
  for (int v = 0; v < base_a + base_b; ++v) base_anchor_pool.push_back(v);
  // base coloring; grows as bipartite suspensions fold in
  std::vector<int> color(n, 0);
  for (int v = 0; v < base_a; ++v) color[v] = 1;
  for (int v = base_a; v < base_a + base_b; ++v) color[v] = 2;
  std::vector<Suspension> kept;
  int next = base_a + base_b;
  std::vector<int> prev_new_vertices; // for the chain policy
  int prev_anchor = -1;
  for (int s : suspension_sizes) {
    int anchor;
    if (policy == AnchorPolicy::kDistinctBaseVertices || kept.empty()) {
      if (policy == AnchorPolicy::kDistinctBaseVertices &&
          base_anchor_pool.empty())
        throw std::invalid_argument("make_planted: anchors exhausted");
      if (policy == AnchorPolicy::kDistinctBaseVertices) {
        std::size_t i = rng() % base_anchor_pool.size();
        anchor = base_anchor_pool[i];
        base_anchor_pool.erase(base_anchor_pool.begin() + i);
      } else if (!prev_new_vertices.empty()) {
        anchor = prev_new_vertices[rng() % prev_new_vertices.size()];
      } else {
        anchor = static_cast<int>(rng() % (base_a + base_b));
      }
    } else {
      anchor = prev_new_vertices.empty()
                   ? prev_anchor
                   : prev_new_vertices[rng() % prev_new_vertices.size()];
    }
    std::vector<int> verts{anchor};
    std::vector<int> fresh;
    for (int i = 0; i < s - 1; ++i) {
      verts.push_back(next);
      fresh.push_back(next);
      ++next;
    }
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        g.add_edge(verts[i], verts[j]);
    Suspension sp;
    sp.vertices = verts;
    std::sort(sp.vertices.begin(), sp.vertices.end());
    sp.anchor = anchor;
    sp.shared = true;
    if (s == 2 && color[anchor] != 0) {
      // Bipartite suspension anchored in the (current) base: fold it in.
      color[fresh[0]] = 3 - color[anchor];
    } else {
      kept.push_back(std::move(sp));
    }
    prev_new_vertices = fresh;
    prev_anchor = anchor;
  }
  SuspensionDecomposition gt;
  for (int v = 0; v < n; ++v) {
    if (color[v] == 1) gt.side1.push_back(v);
    if (color[v] == 2) gt.side2.push_back(v);
  }
  gt.suspensions = kept;
  gt.outside_count = n - static_cast<int>(gt.side1.size() + gt.side2.size());
  gt.d2_upper = gt.outside_count;
  gt.gamma2_upper = 0;
  for (const auto& sp : gt.suspensions) {
    Subgraph sub = induced_subgraph(g, sp.vertices);
    auto [cut, coloring] = maxcut_exact(sub.graph);
    gt.gamma2_upper += sub.graph.edge_count() - cut;
  }
  gt.equality = false; // relative to the verifier's r; planted runs use r-1 > outside
  return PlantedInstance{std::move(g), std::move(gt)};
}

}  // namespace oddcore
