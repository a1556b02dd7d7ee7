#pragma once

// Shared helpers and independent oracles for the test suites.  Everything
// here must stay independent of the implementation paths it cross-checks:
// the clique oracle enumerates subsets, the coloring oracle tries raw
// assignments, the girth oracle deletes edges.

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sec/coloring.hpp"
#include "sec/graph.hpp"

namespace sectest {

using namespace sec;

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph::from_edges(n, pairs);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(0, n - 1);
  return Graph::from_edges(n, pairs);
}

inline Graph star_graph(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= k; ++i) pairs.emplace_back(0, i);
  return Graph::from_edges(k + 1, pairs);
}

// simple seeded random graph: n vertices, m edges sampled from all pairs
inline Graph random_graph(int n, int m, std::uint64_t seed) {
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<std::size_t>(m, all.size()));
  return Graph::from_edges(n, all);
}

// ---- oracles ----

// maximum clique by plain subset recursion (no coloring bounds)
inline int brute_max_clique(const Graph& g) {
  const int m = g.edge_count();
  std::vector<std::vector<char>> mat(m, std::vector<char>(m, 0));
  for (EdgeId e = 0; e < m; ++e)
    for (EdgeId f : conflict_pairs(g, e)) mat[e][f] = 1;
  int best = 0;
  std::vector<int> clique;
  auto rec = [&](auto&& self, int next) -> void {
    best = std::max(best, (int)clique.size());
    if ((int)clique.size() + (m - next) <= best) return;
    for (int v = next; v < m; ++v) {
      bool ok = true;
      for (int w : clique)
        if (!mat[v][w]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      clique.push_back(v);
      self(self, v + 1);
      clique.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

// strong colorability by trying every one of kappa^m raw assignments
inline bool naive_strong_colorable(const Graph& g, int kappa) {
  const int m = g.edge_count();
  if (m == 0) return true;
  if (kappa == 0) return false;
  std::vector<std::pair<int, int>> pairs;
  for (EdgeId e = 0; e < m; ++e)
    for (EdgeId f : conflict_pairs(g, e))
      if (f > e) pairs.emplace_back(e, f);
  std::vector<int> a(m, 0);
  while (true) {
    bool ok = true;
    for (const auto& [e, f] : pairs)
      if (a[e] == a[f]) {
        ok = false;
        break;
      }
    if (ok) return true;
    int i = 0;
    while (i < m && ++a[i] == kappa) a[i++] = 0;
    if (i == m) return false;
  }
}

// girth via the dual route: min over edges e=uv of 1 + dist_{G-e}(u, v)
inline Girth girth_oracle(const Graph& g) {
  int best = -1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (EdgeId f : g.incident_edges(x)) {
        if (f == e) continue;
        auto [a, b] = g.edge(f);
        int y = a == x ? b : a;
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    if (dist[v] != -1 && (best == -1 || dist[v] + 1 < best)) best = dist[v] + 1;
  }
  return best == -1 ? Girth::infinite() : Girth::finite(best);
}

inline int count_components(const Graph& g) {
  std::vector<bool> seen(g.vertex_count(), false);
  int count = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    count++;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
    }
  }
  return count;
}

// bridges by deletion and component recount
inline std::vector<EdgeId> bridges_bruteforce(const Graph& g) {
  std::vector<EdgeId> out;
  int base = count_components(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Mutation m = delete_edges(g, {e});
    if (count_components(m.graph) > base) out.push_back(e);
  }
  return out;
}

// ---- exhaustive enumeration of small connected graphs up to isomorphism ----

namespace detail {

// lexicographically minimal upper-triangular adjacency string over all
// vertex orderings, found by backtracking with prefix pruning
inline std::string canonical_string(int n,
                                    const std::vector<std::vector<char>>& adj) {
  std::string best;
  std::vector<int> perm;      // perm[k] = original vertex at position k
  std::vector<bool> used(n, false);
  std::string cur;
  auto rec = [&](auto&& self) -> void {
    int k = static_cast<int>(perm.size());
    if (k == n) {
      if (best.empty() || cur < best) best = cur;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::string bits;
      for (int j = 0; j < k; ++j) bits.push_back(adj[v][perm[j]] ? '1' : '0');
      std::string ext = cur + bits;
      if (!best.empty() && ext > best.substr(0, ext.size())) continue;
      used[v] = true;
      perm.push_back(v);
      std::swap(cur, ext);
      self(self);
      std::swap(cur, ext);
      perm.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return std::to_string(n) + ":" + best;
}

inline std::string canon_of(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
  return canonical_string(n, adj);
}

}  // namespace detail

// all connected graphs with 1..max_edges edges, one per isomorphism class
inline std::vector<Graph> enumerate_connected_graphs(int max_edges) {
  std::vector<Graph> out;
  std::set<std::string> seen;
  std::vector<Graph> frontier;
  Graph k2 = Graph::from_edges(2, {{0, 1}});
  seen.insert(detail::canon_of(k2));
  out.push_back(k2);
  frontier.push_back(k2);
  for (int m = 2; m <= max_edges; ++m) {
    std::vector<Graph> next;
    for (const Graph& g : frontier) {
      std::vector<std::vector<std::pair<int, int>>> children;
      int n = g.vertex_count();
      // add an edge between existing vertices
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!g.has_edge(u, v)) {
            auto pairs = g.edges();
            pairs.emplace_back(u, v);
            children.push_back(pairs);
          }
      // or hang a new leaf
      for (int u = 0; u < n; ++u) {
        auto pairs = g.edges();
        pairs.emplace_back(u, n);
        children.push_back(pairs);
      }
      for (const auto& pairs : children) {
        Graph child = Graph::from_edges(pairs);
        std::string key = detail::canon_of(child);
        if (seen.insert(key).second) {
          out.push_back(child);
          next.push_back(child);
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace sectest
