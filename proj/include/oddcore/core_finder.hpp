#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include "oddcore/graph.hpp"
#include "oddcore/parity.hpp"

namespace oddcore {

// A strong-2k-core certificate: for every pair of core vertices, a simple
// path of even order and one of odd order inside G[S], each of order <= 2k.
// A weak certificate (strong == false) stores only the even-order witnesses.
struct CoreCertificate {
  struct PairPaths {
    int x = 0, y = 0;
    std::vector<int> even_path;
    std::vector<int> odd_path; // empty in weak certificates
  };
  std::vector<int> vertices; // sorted
  int k = 0;
  bool strong = true;
  std::vector<PairPaths> witnesses;
};

struct CorePairFailure {
  int x = 0, y = 0;
  bool even_missing = false;
  bool odd_missing = false;
};

using CoreCheck = std::variant<CoreCertificate, CorePairFailure>;

// Checks the core definition pair by pair (lexicographic order, so a failure
// is the lexicographically first failing pair).
inline CoreCheck verify_core(const Graph& g, std::vector<int> s, int k,
                             bool strong) {
  if (s.empty()) throw std::invalid_argument("verify_core: empty vertex set");
  if (k < 1) throw std::invalid_argument("verify_core: need 2k >= 2");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  CoreCertificate cert;
  cert.vertices = s;
  cert.k = k;
  cert.strong = strong;
  const int max_order = 2 * k;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      auto even = bounded_parity_simple_path(g, s, s[i], s[j], true, max_order);
      std::optional<PathWitness> odd;
      if (strong)
        odd = bounded_parity_simple_path(g, s, s[i], s[j], false, max_order);
      if (!even || (strong && !odd))
        return CorePairFailure{s[i], s[j], !even, strong && !odd};
      CoreCertificate::PairPaths p;
      p.x = s[i];
      p.y = s[j];
      p.even_path = even->vertices;
      if (strong) p.odd_path = odd->vertices;
      cert.witnesses.push_back(std::move(p));
    }
  }
  return cert;
}

// One applicable greedy extension of a strong core: a path P outside S of
// order <= 2k - |S| whose endpoints are adjacent to distinct core vertices
// (rule "distinct", any parity, single vertex allowed), or an even-order
// path whose endpoints are both adjacent to one core vertex (rule "same").
struct CoreExtension {
  std::vector<int> path;
  char rule = 'b'; // 'b' = distinct anchors, 'a' = shared anchor, even path
};

namespace detail {

// Enumerates simple paths of exact order t inside G - S that start and end in
// the boundary (vertices with a core neighbor), invoking check(u_path) on
// each; stops at the first accepted path. `dist_for` maps a start vertex to
// the parity-distance table used to prune toward valid terminal vertices for
// that start, so searches that cannot reach a compatible endpoint die at
// depth one instead of walking the whole graph.
template <typename Check, typename DistFor>
std::optional<std::vector<int>> search_outside_paths(
    const Graph& g, const std::vector<char>& in_core,
    const std::vector<char>& boundary, DistFor&& dist_for, int t,
    Check check) {
  const int n = g.vertex_count();
  std::vector<char> used(n, 0);
  for (int start = 0; start < n; ++start) {
    if (in_core[start] || !boundary[start]) continue;
    const std::vector<std::array<int, 2>>& dist_to_boundary = dist_for(start);
    std::vector<int> path{start};
    used[start] = 1;
    std::vector<std::size_t> next{0};
    while (!path.empty()) {
      int v = path.back();
      int j = static_cast<int>(path.size());
      if (j == t) {
        if (boundary[v] && check(path)) return path;
        used[v] = 0;
        path.pop_back();
        next.pop_back();
        continue;
      }
      const auto& nb = g.neighbors(v);
      bool advanced = false;
      while (next.back() < nb.size()) {
        int w = nb[next.back()++];
        if (in_core[w] || used[w]) continue;
        int rem = t - j - 1; // edges from w to the final boundary vertex
        int d = dist_to_boundary[w][rem & 1];
        if (d == kUnreachable || d > rem) continue;
        path.push_back(w);
        used[w] = 1;
        next.push_back(0);
        advanced = true;
        break;
      }
      if (!advanced && static_cast<int>(path.size()) == j) {
        used[v] = 0;
        path.pop_back();
        next.pop_back();
      }
    }
  }
  return std::nullopt;
}

// Answers "does the graph contain a simple x-y path with the given edge
// parity?" in time proportional to the block-cut tree, without enumerating
// paths. A simple path crosses each block on the tree path between its
// endpoints exactly once; inside a bipartite block the traversal parity is
// fixed by the 2-coloring, and inside a non-bipartite 2-connected block both
// parities are realizable, which makes the overall parity ambiguous.
class SimplePathParityOracle {
 public:
  explicit SimplePathParityOracle(const Graph& g) : n_(g.vertex_count()) {
    BlockCutTree bct = biconnected_components(g);
    const int nb = static_cast<int>(bct.blocks.size());
    const int nc = static_cast<int>(bct.cut_vertices.size());
    cut_vertices_ = bct.cut_vertices;
    cut_index_.assign(n_, -1);
    for (int i = 0; i < nc; ++i) cut_index_[bct.cut_vertices[i]] = i;
    home_block_.assign(n_, -1);
    adj_.assign(nb + nc, {});
    block_parity_free_.assign(nb, false);
    block_color_.assign(nb, {});
    for (int b = 0; b < nb; ++b) {
      for (int v : bct.blocks[b])
        if (cut_index_[v] < 0) home_block_[v] = b;
      for (int c : bct.block_cuts[b]) {
        adj_[b].push_back(nb + cut_index_[c]);
        adj_[nb + cut_index_[c]].push_back(b);
      }
      Subgraph sub = induced_subgraph(g, bct.blocks[b]);
      BipartitenessWitness w = is_bipartite(sub.graph);
      if (!w.odd_closed_walk.empty()) {
        block_parity_free_[b] = true;
      } else {
        auto& colors = block_color_[b];
        for (std::size_t i = 0; i < bct.blocks[b].size(); ++i)
          colors.emplace_back(bct.blocks[b][i], w.coloring[i]);
        std::sort(colors.begin(), colors.end());
      }
    }
    nb_ = nb;
  }

  // Returns which edge parities (bit 0 = even, bit 1 = odd) some simple x-y
  // path realizes; 0 when x and y are disconnected. Requires x != y.
  int feasible_parities(int x, int y) const {
    if (home_block_[x] == home_block_[y] && home_block_[x] >= 0)
      return block_parities(home_block_[x], x, y);
    // BFS over the block-cut tree between the endpoint nodes.
    int src = node_of(x), dst = node_of(y);
    if (src < 0 || dst < 0) return 0; // isolated endpoint
    std::vector<int> prev(adj_.size(), -2);
    std::vector<int> queue{src};
    prev[src] = -1;
    for (std::size_t qi = 0; qi < queue.size() && prev[dst] == -2; ++qi)
      for (int w : adj_[queue[qi]])
        if (prev[w] == -2) {
          prev[w] = queue[qi];
          queue.push_back(w);
        }
    if (prev[dst] == -2) return 0;
    std::vector<int> path;
    for (int v = dst; v != -1; v = prev[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    // Fold the traversal parity block by block; entry/exit vertices are the
    // adjacent cut vertices on the tree path, or the endpoints themselves.
    int parity = 0;
    bool ambiguous = false;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i] >= nb_) continue; // cut-vertex node
      int b = path[i];
      int enter = i == 0 ? x : cut_vertex_of(path[i - 1]);
      int exit = i + 1 == path.size() ? y : cut_vertex_of(path[i + 1]);
      int p = block_parities(b, enter, exit);
      if (p == 3)
        ambiguous = true;
      else if (p == 2)
        parity ^= 1;
    }
    return ambiguous ? 3 : (1 << parity);
  }

 private:
  int node_of(int v) const {
    return cut_index_[v] >= 0 ? nb_ + cut_index_[v] : home_block_[v];
  }
  int cut_vertex_of(int node) const { return cut_vertices_[node - nb_]; }
  int color_in_block(int b, int v) const {
    const auto& colors = block_color_[b];
    auto it = std::lower_bound(colors.begin(), colors.end(),
                               std::make_pair(v, -1));
    return it->second;
  }
  int block_parities(int b, int u, int v) const {
    if (block_parity_free_[b]) return 3;
    return color_in_block(b, u) != color_in_block(b, v) ? 2 : 1;
  }

  int n_ = 0, nb_ = 0;
  std::vector<int> cut_vertices_;
  std::vector<int> cut_index_, home_block_;
  std::vector<std::vector<int>> adj_;
  std::vector<bool> block_parity_free_;
  std::vector<std::vector<std::pair<int, int>>> block_color_;
};

}  // namespace detail

// First applicable extension in the fixed search order: single outside
// vertices with two distinct core neighbors, then distinct-anchor paths by
// increasing order, then shared-anchor even paths by increasing order.
inline std::optional<CoreExtension> find_core_extension(
    const Graph& g, const std::vector<int>& s, int k) {
  const int n = g.vertex_count();
  const int limit = 2 * k - static_cast<int>(s.size());
  if (limit < 1) return std::nullopt;
  std::vector<char> in_core(n, 0);
  for (int v : s) in_core[v] = 1;
  auto core_neighbors = [&](int v) {
    std::vector<int> out;
    for (int x : s)
      if (g.has_edge(v, x)) out.push_back(x);
    return out;
  };
  std::vector<char> boundary(n, 0);
  std::vector<int> boundary_list;
  int anchored_cores = 0;
  std::vector<char> core_has_outside(n, 0);
  for (int v = 0; v < n; ++v) {
    if (in_core[v]) continue;
    auto cn = core_neighbors(v);
    if (!cn.empty()) {
      boundary[v] = 1;
      boundary_list.push_back(v);
      for (int x : cn)
        if (!core_has_outside[x]) {
          core_has_outside[x] = 1;
          ++anchored_cores;
        }
    }
  }
  if (boundary_list.empty()) return std::nullopt;
  // Rule "distinct" with a single vertex.
  if (anchored_cores >= 1) {
    for (int v : boundary_list) {
      if (core_neighbors(v).size() >= 2) return CoreExtension{{v}, 'b'};
    }
  }
  std::vector<char> outside_mask(n, 0);
  for (int v = 0; v < n; ++v) outside_mask[v] = !in_core[v];
  auto dist_to_boundary =
      detail::double_cover_bfs(g, boundary_list, outside_mask);
  // Rule "distinct" with longer paths, by increasing order. Needs two core
  // vertices with outside neighbors. A start anchored at a single core vertex
  // c must end at a vertex anchored elsewhere, so its pruning table is the
  // parity BFS from the boundary minus the c-only vertices.
  if (anchored_cores >= 2) {
    std::vector<std::vector<std::array<int, 2>>> dist_not(s.size());
    std::vector<int> core_index(n, -1);
    for (std::size_t i = 0; i < s.size(); ++i) core_index[s[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<int> terms;
      for (int v : boundary_list) {
        auto cn = core_neighbors(v);
        if (cn.size() != 1 || cn.front() != s[i]) terms.push_back(v);
      }
      if (!terms.empty())
        dist_not[i] = detail::double_cover_bfs(g, terms, outside_mask);
      else
        dist_not[i].assign(n, {kUnreachable, kUnreachable});
    }
    auto dist_for = [&](int start) -> const std::vector<std::array<int, 2>>& {
      auto cn = core_neighbors(start);
      if (cn.size() >= 2) return dist_to_boundary;
      return dist_not[core_index[cn.front()]];
    };
    for (int t = 2; t <= limit; ++t) {
      auto hit = detail::search_outside_paths(
          g, in_core, boundary, dist_for, t,
          [&](const std::vector<int>& path) {
            auto cu = core_neighbors(path.front());
            auto cv = core_neighbors(path.back());
            if (cu.size() > 1 || cv.size() > 1) return true;
            return cu.front() != cv.front();
          });
      if (hit) return CoreExtension{*hit, 'b'};
    }
  }
  // Rule "same anchor", even order only.
  for (int t = 2; t <= limit; t += 2) {
    auto hit = detail::search_outside_paths(
        g, in_core, boundary,
        [&](int) -> const std::vector<std::array<int, 2>>& {
          return dist_to_boundary;
        },
        t,
        [&](const std::vector<int>& path) {
          int u = path.front(), v = path.back();
          for (int x : s)
            if (g.has_edge(u, x) && g.has_edge(v, x)) return true;
          return false;
        });
    if (hit) return CoreExtension{*hit, 'a'};
  }
  return std::nullopt;
}

// Grows a strong-2k-core from an odd-cycle seed of length <= 2k-1 by applying
// extensions until none fits; every intermediate set is re-verified.
inline CoreCertificate grow_strong_core(const Graph& g,
                                        const std::vector<int>& seed_cycle,
                                        int k) {
  const int len = static_cast<int>(seed_cycle.size());
  if (len < 3 || len % 2 == 0 || len > 2 * k - 1)
    throw std::invalid_argument(
        "grow_strong_core: seed must be an odd cycle of length <= 2k-1");
  for (int i = 0; i < len; ++i)
    if (!g.has_edge(seed_cycle[i], seed_cycle[(i + 1) % len]))
      throw std::invalid_argument("grow_strong_core: seed is not a cycle");
  std::vector<int> s(seed_cycle);
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("grow_strong_core: seed repeats vertices");
  CoreCheck check = verify_core(g, s, k, true);
  if (!std::holds_alternative<CoreCertificate>(check))
    throw std::invalid_argument("grow_strong_core: seed fails verification");
  while (auto ext = find_core_extension(g, s, k)) {
    s.insert(s.end(), ext->path.begin(), ext->path.end());
    std::sort(s.begin(), s.end());
    check = verify_core(g, s, k, true);
    if (!std::holds_alternative<CoreCertificate>(check))
      throw std::logic_error(
          "grow_strong_core: extension broke the core property");
  }
  return std::get<CoreCertificate>(check);
}

// A pair joined by a short even-order path whose common neighborhood off the
// path exceeds 8k.
struct NeighborhoodViolation {
  int x = 0, y = 0;
  std::vector<int> path;
  int common_off_path = 0;
};

// Diagnostic sweep of the common-neighborhood bound: for sampled pairs joined
// by an even-order path of order <= 2k, |(N(x) cap N(y)) \ V(P)| must stay
// <= 8k. Exhaustive over pairs when the budget allows, otherwise seeded
// sampling (mt19937_64).
inline std::vector<NeighborhoodViolation> check_common_neighborhood_bound(
    const Graph& g, int k, long long pair_budget, std::uint64_t seed = 0) {
  if (pair_budget < 1)
    throw std::invalid_argument("check_common_neighborhood_bound: budget >= 1");
  const int n = g.vertex_count();
  std::vector<NeighborhoodViolation> out;
  auto all = all_vertices(g);
  detail::SimplePathParityOracle parity_oracle(g);
  auto check_pair = [&](int x, int y) {
    std::optional<PathWitness> p;
    if (g.has_edge(x, y)) {
      p = PathWitness{{x, y}}; // an edge is an even-order path
    } else {
      // even order = odd edge count; skip the path search outright when no
      // simple path of that parity exists anywhere in the graph
      if (!(parity_oracle.feasible_parities(x, y) & 2)) return;
      p = bounded_parity_simple_path(g, all, x, y, true, 2 * k);
    }
    if (!p) return;
    std::vector<char> on_path(n, 0);
    for (int v : p->vertices) on_path[v] = 1;
    int cnt = 0;
    const std::uint64_t* a = g.row(x);
    const std::uint64_t* b = g.row(y);
    for (int w = 0; w < g.words_per_row(); ++w) {
      std::uint64_t bitsw = a[w] & b[w];
      while (bitsw) {
        int v = w * 64 + std::countr_zero(bitsw);
        bitsw &= bitsw - 1;
        if (!on_path[v]) ++cnt;
      }
    }
    if (cnt > 8 * k)
      out.push_back(NeighborhoodViolation{x, y, p->vertices, cnt});
  };
  long long total_pairs = static_cast<long long>(n) * (n - 1) / 2;
  if (total_pairs <= pair_budget) {
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) check_pair(x, y);
  } else {
    std::mt19937_64 rng(seed);
    for (long long i = 0; i < pair_budget; ++i) {
      int x = static_cast<int>(rng() % n);
      int y = static_cast<int>(rng() % (n - 1));
      if (y >= x) ++y;
      check_pair(std::min(x, y), std::max(x, y));
    }
  }
  return out;
}

}  // namespace oddcore
