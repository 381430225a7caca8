#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "oddcore/families.hpp"
#include "oddcore/graph.hpp"
#include "oddcore/parity.hpp"

namespace oddcore {
namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);       // outer pentagon
    g.add_edge(5 + i, 5 + (i + 2) % 5); // inner pentagram
    g.add_edge(i, 5 + i);             // spokes
  }
  return g;
}

TEST(ParityBfs, EvenCycle) {
  ParityReachability r = parity_bfs(cycle(6), 0);
  EXPECT_EQ(r.odd_walk(3), 3);
  EXPECT_EQ(r.even_walk(3), kUnreachable);
  EXPECT_EQ(r.even_walk(0), 0);
  EXPECT_EQ(r.odd_walk(0), kUnreachable);
}

TEST(ParityBfs, OddCycle) {
  ParityReachability r = parity_bfs(cycle(5), 0);
  EXPECT_EQ(r.odd_walk(1), 1);
  EXPECT_EQ(r.even_walk(1), 4);
}

TEST(ParityBfs, IsolatedTarget) {
  Graph g(3);
  g.add_edge(0, 1);
  ParityReachability r = parity_bfs(g, 0);
  EXPECT_EQ(r.even_walk(2), kUnreachable);
  EXPECT_EQ(r.odd_walk(2), kUnreachable);
}

// Walk-expansion oracle: reach[l][v] = "a walk of exactly l edges ends at v".
std::vector<std::array<int, 2>> oracle_walk_parities(const Graph& g, int src) {
  int n = g.vertex_count();
  std::vector<std::array<int, 2>> best(n, {kUnreachable, kUnreachable});
  std::vector<char> cur(n, 0);
  cur[src] = 1;
  best[src][0] = 0;
  for (int l = 1; l <= 2 * n; ++l) {
    std::vector<char> nxt(n, 0);
    for (int v = 0; v < n; ++v)
      if (cur[v])
        for (int w : g.neighbors(v)) nxt[w] = 1;
    for (int v = 0; v < n; ++v)
      if (nxt[v] && best[v][l & 1] == kUnreachable) best[v][l & 1] = l;
    cur = nxt;
  }
  return best;
}

TEST(ParityBfs, MatchesWalkExpansionOracle) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    int n = 2 + static_cast<int>(seed % 7);
    Graph g = random_graph(n, 0.35, 0x11ULL * seed + 3);
    int src = static_cast<int>(seed) % n;
    ParityReachability r = parity_bfs(g, src);
    auto oracle = oracle_walk_parities(g, src);
    for (int v = 0; v < n; ++v) {
      EXPECT_EQ(r.dist[v][0], oracle[v][0]) << seed << " v" << v;
      EXPECT_EQ(r.dist[v][1], oracle[v][1]) << seed << " v" << v;
    }
  }
}

TEST(ShortestOddCycle, KnownGraphs) {
  auto c = shortest_odd_cycle(cycle(5));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->length(), 5);

  EXPECT_FALSE(shortest_odd_cycle(make_complete_bipartite(4, 4)).has_value());

  auto p = shortest_odd_cycle(petersen());
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->length(), 5);

  Graph tri = make_tstar(3, 20);
  auto t = shortest_odd_cycle(tri);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->length(), 3);
}

// Brute-force shortest odd cycle length by enumerating all vertex subsets in
// all cyclic orders (adequate for n <= 8).
int oracle_shortest_odd_cycle(const Graph& g) {
  int n = g.vertex_count();
  int best = -1;
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  for (int len = 3; len <= n; len += 2) {
    std::vector<int> idx(len);
    std::vector<char> used(n, 0);
    std::vector<int> cyc;
    auto rec = [&](auto&& self, int depth) -> bool {
      if (depth == len)
        return g.has_edge(cyc.back(), cyc.front());
      for (int v = (depth == 0 ? 0 : 0); v < n; ++v) {
        if (used[v]) continue;
        if (depth == 0) {
          // anchor at the minimum vertex of the cycle
        } else {
          if (v < cyc.front()) continue;
          if (!g.has_edge(cyc.back(), v)) continue;
        }
        used[v] = 1;
        cyc.push_back(v);
        if (self(self, depth + 1)) return true;
        cyc.pop_back();
        used[v] = 0;
      }
      return false;
    };
    if (rec(rec, 0)) return len;
  }
  return best;
}

TEST(ShortestOddCycle, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    int n = 4 + static_cast<int>(seed % 5);
    Graph g = random_graph(n, 0.3, 0x77ULL + seed);
    auto c = shortest_odd_cycle(g);
    int oracle = oracle_shortest_odd_cycle(g);
    if (oracle < 0) {
      EXPECT_FALSE(c.has_value()) << seed;
    } else {
      ASSERT_TRUE(c.has_value()) << seed;
      EXPECT_EQ(c->length(), oracle) << seed;
    }
  }
}

TEST(CycleOfLength, KnownGraphs) {
  Graph c7 = cycle(7);
  auto w = has_cycle_of_length(c7, 7);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->size(), 7u);

  EXPECT_FALSE(has_cycle_of_length(make_complete_bipartite(5, 5), 7));
  EXPECT_FALSE(has_cycle_of_length(make_tstar(3, 100), 9));

  // dense graphs contain every small cycle length
  Graph k6(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v) k6.add_edge(u, v);
  for (int len = 3; len <= 6; ++len)
    EXPECT_TRUE(has_cycle_of_length(k6, len)) << len;

  Graph k33 = make_complete_bipartite(3, 3);
  EXPECT_TRUE(has_cycle_of_length(k33, 4));
  EXPECT_FALSE(has_cycle_of_length(k33, 5));
  EXPECT_TRUE(has_cycle_of_length(k33, 6));
}

// Brute-force exact-length cycle finder.
bool oracle_has_cycle(const Graph& g, int len) {
  int n = g.vertex_count();
  std::vector<char> used(n, 0);
  std::vector<int> cyc;
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == len) return g.has_edge(cyc.back(), cyc.front());
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (!cyc.empty() && (v < cyc.front() || !g.has_edge(cyc.back(), v)))
        continue;
      used[v] = 1;
      cyc.push_back(v);
      if (self(self, depth + 1)) return true;
      cyc.pop_back();
      used[v] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

TEST(CycleOfLength, MatchesBruteForceIncludingScaledTStar) {
  Graph t = make_tstar(3, 12);
  for (int len = 3; len <= 12; ++len)
    EXPECT_EQ(has_cycle_of_length(t, len).has_value(), oracle_has_cycle(t, len))
        << len;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    int n = 4 + static_cast<int>(seed % 5);
    Graph g = random_graph(n, 0.4, 0x99ULL + seed);
    for (int len = 3; len <= n; ++len)
      EXPECT_EQ(has_cycle_of_length(g, len).has_value(),
                oracle_has_cycle(g, len))
          << seed << " len " << len;
  }
}

TEST(CycleOfLength, WitnessIsValid) {
  Graph g = random_graph(12, 0.4, 5);
  for (int len = 3; len <= 12; ++len) {
    auto w = has_cycle_of_length(g, len);
    if (!w) continue;
    ASSERT_EQ(static_cast<int>(w->size()), len);
    std::vector<int> sorted = *w;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_TRUE(std::adjacent_find(sorted.begin(), sorted.end()) ==
                sorted.end());
    for (int i = 0; i < len; ++i)
      EXPECT_TRUE(g.has_edge((*w)[i], (*w)[(i + 1) % len]));
  }
}

TEST(BoundedParityPath, KnownCases) {
  Graph k3 = cycle(3);
  auto all3 = all_vertices(k3);
  auto p = bounded_parity_simple_path(k3, all3, 0, 1, true, 4);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->order(), 2);

  Graph c5 = cycle(5);
  auto all5 = all_vertices(c5);
  auto podd = bounded_parity_simple_path(c5, all5, 0, 1, false, 5);
  ASSERT_TRUE(podd.has_value());
  EXPECT_EQ(podd->order(), 5);
  EXPECT_FALSE(bounded_parity_simple_path(c5, all5, 0, 1, false, 4));
}

TEST(BoundedParityPath, RespectsVertexMask) {
  Graph c5 = cycle(5);
  std::vector<int> s{0, 1, 2}; // a path; only even-order route is 0-1 or 1-2
  auto p = bounded_parity_simple_path(c5, s, 0, 2, true, 6);
  EXPECT_FALSE(p.has_value()); // 0..2 inside {0,1,2} has order 3 only
  auto q = bounded_parity_simple_path(c5, s, 0, 2, false, 6);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(q->vertices, (std::vector<int>{0, 1, 2}));
}

bool oracle_path(const Graph& g, const std::vector<int>& s, int x, int y,
                 bool even, int max_order) {
  std::vector<char> in_s(g.vertex_count(), 0), used(g.vertex_count(), 0);
  for (int v : s) in_s[v] = 1;
  std::vector<int> path{x};
  used[x] = 1;
  bool found = false;
  auto rec = [&](auto&& self, int u) -> void {
    if (found) return;
    if (u == y && (path.size() % 2 == 0) == even) {
      found = true;
      return;
    }
    if (static_cast<int>(path.size()) >= max_order) return;
    for (int w : g.neighbors(u)) {
      if (!in_s[w] || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  rec(rec, x);
  return found;
}

TEST(BoundedParityPath, MatchesExhaustiveOracle) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    int n = 5 + static_cast<int>(seed % 5);
    Graph g = random_graph(n, 0.3, 0xabcULL + seed);
    std::mt19937_64 rng(seed);
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (rng() % 4) s.push_back(v);
    if (s.size() < 2) continue;
    int x = s[rng() % s.size()], y = s[rng() % s.size()];
    if (x == y) continue;
    for (bool even : {false, true})
      for (int mo = 2; mo <= n; ++mo) {
        auto p = bounded_parity_simple_path(g, s, x, y, even, mo);
        EXPECT_EQ(p.has_value(), oracle_path(g, s, x, y, even, mo))
            << seed << " even=" << even << " mo=" << mo;
        if (p) {
          EXPECT_EQ(p->vertices.front(), x);
          EXPECT_EQ(p->vertices.back(), y);
          EXPECT_EQ(p->even_order(), even);
          EXPECT_LE(p->order(), mo);
          for (std::size_t i = 0; i + 1 < p->vertices.size(); ++i)
            EXPECT_TRUE(g.has_edge(p->vertices[i], p->vertices[i + 1]));
        }
      }
  }
}

}  // namespace
}  // namespace oddcore
