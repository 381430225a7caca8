#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "oddcore/graph.hpp"
#include "oddcore/parity.hpp"

namespace oddcore {

// Exact bipartization result. For vertex deletion (d2) the witness is
// `vertices`; for edge deletion (gamma2) it is `edges`. residue_coloring is a
// proper two-coloring (1/2) of the graph after deletion; deleted vertices
// carry 0.
struct SolverResult {
  long long value = 0;
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> residue_coloring;
};

namespace detail {

inline std::vector<int> residue_coloring_after_vertex_deletion(
    const Graph& g, const std::vector<int>& deleted) {
  std::vector<int> keep;
  std::vector<char> gone(g.vertex_count(), 0);
  for (int v : deleted) gone[v] = 1;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!gone[v]) keep.push_back(v);
  Subgraph sub = induced_subgraph(g, keep);
  auto w = is_bipartite(sub.graph);
  if (!w.bipartite())
    throw std::logic_error("vertex witness does not bipartize");
  std::vector<int> color(g.vertex_count(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) color[keep[i]] = w.coloring[i];
  return color;
}

// Branch and bound for the odd cycle transversal value. Branches on the
// vertices of a shortest odd cycle; lower-bounds with a greedy packing of
// vertex-disjoint odd cycles. Returns the optimum restricted to < `cap`,
// or nullopt if every transversal has size >= cap.
inline std::optional<int> oct_value_bounded(const Graph& g,
                                            std::vector<int> alive_set,
                                            int cap) {
  if (cap <= 0) {
    Subgraph sub = induced_subgraph(g, alive_set);
    return is_bipartite(sub.graph).bipartite() ? std::optional<int>(0)
                                               : std::nullopt;
  }
  Subgraph sub = induced_subgraph(g, alive_set);
  auto cyc = shortest_odd_cycle(sub.graph);
  if (!cyc) return 0;
  // Greedy vertex-disjoint odd-cycle packing: each packed cycle forces one
  // distinct transversal vertex.
  {
    int packed = 0;
    Graph cur = sub.graph;
    while (true) {
      auto c = shortest_odd_cycle(cur);
      if (!c) break;
      ++packed;
      if (packed >= cap) return std::nullopt;
      std::vector<char> drop(cur.vertex_count(), 0);
      for (int v : c->cycle) drop[v] = 1;
      std::vector<int> next;
      for (int v = 0; v < cur.vertex_count(); ++v)
        if (!drop[v]) next.push_back(v);
      Subgraph s2 = induced_subgraph(cur, next);
      cur = s2.graph;
    }
  }
  int best = cap; // exclusive bound
  std::vector<int> cycle_global = sub.to_parent_ids(cyc->cycle);
  bool found = false;
  for (int v : cycle_global) {
    std::vector<int> next;
    next.reserve(alive_set.size() - 1);
    for (int u : alive_set)
      if (u != v) next.push_back(u);
    auto r = oct_value_bounded(g, next, best - 1);
    if (r) {
      found = true;
      best = *r + 1;
      if (best == 1) break;
    }
  }
  if (!found) return std::nullopt;
  return best;
}

}  // namespace detail

// Minimum odd cycle transversal. With a budget, nullopt means d2 > budget,
// exactly. The witness is the lexicographically smallest optimum transversal.
inline std::optional<SolverResult> oct_exact(
    const Graph& g, std::optional<int> budget = std::nullopt) {
  const int n = g.vertex_count();
  int cap = budget ? *budget + 1 : n + 1;
  auto value = detail::oct_value_bounded(g, all_vertices(g), cap);
  if (!value) return std::nullopt;
  // Lexicographically smallest witness: take a vertex iff the remaining
  // budget still suffices without it being skipped.
  SolverResult res;
  res.value = *value;
  std::vector<int> alive = all_vertices(g);
  int remaining = static_cast<int>(*value);
  for (int v = 0; v < n && remaining > 0; ++v) {
    std::vector<int> without;
    for (int u : alive)
      if (u != v) without.push_back(u);
    auto r = detail::oct_value_bounded(g, without, remaining);
    if (r && *r <= remaining - 1) {
      res.vertices.push_back(v);
      alive = without;
      --remaining;
    }
  }
  if (remaining != 0) throw std::logic_error("oct witness reconstruction");
  res.residue_coloring =
      detail::residue_coloring_after_vertex_deletion(g, res.vertices);
  return res;
}

// Oracle: enumerate vertex subsets by increasing size, lexicographic within a
// size; the first bipartizing subset wins. Enforced n <= 14.
inline SolverResult oct_bruteforce(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 14) throw std::invalid_argument("oct_bruteforce: n <= 14 required");
  for (int size = 0; size <= n; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<int> keep;
      std::vector<char> gone(n, 0);
      for (int v : pick) gone[v] = 1;
      for (int v = 0; v < n; ++v)
        if (!gone[v]) keep.push_back(v);
      if (is_bipartite(induced_subgraph(g, keep).graph).bipartite()) {
        SolverResult res;
        res.value = size;
        res.vertices = pick;
        res.residue_coloring =
            detail::residue_coloring_after_vertex_deletion(g, pick);
        return res;
      }
      // next combination
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("oct_bruteforce: deleting everything must bipartize");
}

// Maximum cut by exhaustive Gray-code enumeration with incremental updates;
// vertex 0 is fixed on side 1. Enforced n <= 26.
inline std::pair<long long, std::vector<int>> maxcut_exact(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 26) throw std::invalid_argument("maxcut_exact: n <= 26 required");
  if (n == 0) return {0, {}};
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::uint32_t side = 0; // bit set = side 2
  long long cut = 0, best = 0;
  std::uint32_t best_side = 0;
  const std::uint64_t steps = n >= 1 ? (1ULL << (n - 1)) : 1;
  for (std::uint64_t i = 1; i < steps; ++i) {
    int v = std::countr_zero(i) + 1;
    long long in_s = std::popcount(adj[v] & side);
    long long out_s = g.degree(v) - in_s;
    // flipping v: same-side edges become crossing and vice versa
    bool v_in_s = (side >> v) & 1;
    long long same = v_in_s ? in_s : out_s;
    long long cross = v_in_s ? out_s : in_s;
    cut += same - cross;
    side ^= 1u << v;
    if (cut > best) {
      best = cut;
      best_side = side;
    }
  }
  std::vector<int> part(n);
  for (int v = 0; v < n; ++v) part[v] = ((best_side >> v) & 1) ? 2 : 1;
  return {best, part};
}

// gamma2 = m - maxcut; witness = the non-crossing edges of an optimum cut.
inline SolverResult edge_bipartization(const Graph& g) {
  auto [cut, part] = maxcut_exact(g);
  SolverResult res;
  res.value = g.edge_count() - cut;
  for (auto [u, v] : g.edges())
    if (part[u] == part[v]) res.edges.emplace_back(u, v);
  res.residue_coloring = part;
  if (static_cast<long long>(res.edges.size()) != res.value)
    throw std::logic_error("edge witness size mismatch");
  return res;
}

// Oracle: enumerate edge subsets by increasing size. Enforced m <= 20.
inline SolverResult edge_bipartization_bruteforce(const Graph& g) {
  if (g.edge_count() > 20)
    throw std::invalid_argument("edge_bipartization_bruteforce: m <= 20");
  auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  for (int size = 0; size <= m; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      Graph h(g.vertex_count());
      std::vector<char> gone(m, 0);
      for (int e : pick) gone[e] = 1;
      for (int e = 0; e < m; ++e)
        if (!gone[e]) h.add_edge(edges[e].first, edges[e].second);
      auto w = is_bipartite(h);
      if (w.bipartite()) {
        SolverResult res;
        res.value = size;
        for (int e : pick) res.edges.push_back(edges[e]);
        res.residue_coloring = w.coloring;
        return res;
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("deleting all edges must bipartize");
}

}  // namespace oddcore
