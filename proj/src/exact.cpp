#include "sec/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace sec {

namespace {

constexpr int kMaxColors = 64;  // candidate sets live in one machine word

struct Searcher {
  const std::vector<std::vector<int>>& conflicts;
  int m, kappa;
  std::uint64_t node_limit;
  bool symmetry_break;

  std::vector<std::uint64_t> cand;
  std::vector<int> assigned;    // -1 while open
  std::vector<int> use_count;   // per color, over the whole assignment
  int open = 0;
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::vector<std::pair<int, std::uint64_t>> trail;  // shared undo stack

  bool assign(int e, int c) {
    assigned[e] = c;
    use_count[c]++;
    open--;
    std::uint64_t bit = 1ULL << c;
    bool alive = true;
    for (int f : conflicts[e]) {
      if (assigned[f] != -1) continue;
      if (cand[f] & bit) {
        trail.emplace_back(f, cand[f]);
        cand[f] &= ~bit;
        if (cand[f] == 0) alive = false;
      }
    }
    return alive;
  }

  void undo(int e, int c, size_t mark) {
    while (trail.size() > mark) {
      cand[trail.back().first] = trail.back().second;
      trail.pop_back();
    }
    assigned[e] = -1;
    use_count[c]--;
    open++;
  }

  // most-constrained-first: fewest candidates, input order on ties
  int pick() const {
    int best = -1, best_width = kMaxColors + 1;
    for (int e = 0; e < m; ++e) {
      if (assigned[e] != -1) continue;
      int w = std::popcount(cand[e]);
      if (w < best_width) {
        best_width = w;
        best = e;
        if (w <= 1) break;
      }
    }
    return best;
  }

  bool dfs() {
    if (open == 0) return true;
    int e = pick();
    std::uint64_t options = cand[e];
    bool tried_fresh = false;
    for (int c = 0; c < kappa; ++c) {
      if (!(options & (1ULL << c))) continue;
      if (symmetry_break && use_count[c] == 0) {
        // colors unused anywhere are interchangeable: try only the lowest
        if (tried_fresh) continue;
        tried_fresh = true;
      }
      if (++nodes > node_limit) {
        aborted = true;
        return false;
      }
      size_t mark = trail.size();
      bool alive = assign(e, c);
      if (alive && dfs()) return true;
      undo(e, c, mark);
      if (aborted) return false;
    }
    return false;
  }
};

}  // namespace

SolveOutcome colorable_with(const Graph& g, int kappa, const EdgeColoring& pre,
                            const SearchConfig& cfg) {
  const int m = g.edge_count();
  if (kappa < 0 || kappa > kMaxColors)
    throw std::invalid_argument("kappa must be within 0.." +
                                std::to_string(kMaxColors));
  if ((int)pre.color.size() != m)
    throw std::invalid_argument("pre-assignment size does not match graph");
  SolveOutcome out;
  if (m == 0) {
    out.status = SolveOutcome::Status::Feasible;
    out.coloring = EdgeColoring{kappa, {}};
    return out;
  }
  std::vector<std::vector<int>> conflicts(m);
  for (EdgeId e = 0; e < m; ++e) conflicts[e] = conflict_pairs(g, e);

  for (EdgeId e = 0; e < m; ++e)
    if (pre.color[e] != -1 && (pre.color[e] < 0 || pre.color[e] >= kappa))
      throw std::invalid_argument("pre-assigned color on edge " +
                                  std::to_string(e) + " is not below kappa");
  // a conflicting pre-assignment is an input error, reported as Infeasible
  for (EdgeId e = 0; e < m; ++e) {
    if (pre.color[e] == -1) continue;
    for (int f : conflicts[e]) {
      if (f > e && pre.color[f] == pre.color[e]) {
        out.status = SolveOutcome::Status::Infeasible;
        out.exhausted = true;
        out.input_conflict = {e, f};
        return out;
      }
    }
  }

  Searcher s{conflicts, m, kappa, cfg.node_limit, cfg.symmetry_break,
             std::vector<std::uint64_t>(m, kappa == kMaxColors
                                               ? ~0ULL
                                               : (1ULL << kappa) - 1),
             std::vector<int>(m, -1), std::vector<int>(kappa, 0)};
  s.open = m;
  bool wiped = false;
  for (EdgeId e = 0; e < m; ++e) {
    if (pre.color[e] == -1) continue;
    s.cand[e] = 1ULL << pre.color[e];
    if (!s.assign(e, pre.color[e])) wiped = true;
  }
  if (wiped) {
    // propagation of the pre-assignment emptied some open edge
    out.status = SolveOutcome::Status::Infeasible;
    out.exhausted = true;
    return out;
  }

  bool found = s.dfs();
  out.nodes = s.nodes;
  if (found) {
    out.status = SolveOutcome::Status::Feasible;
    out.coloring = EdgeColoring{kappa, s.assigned};
  } else if (s.aborted) {
    out.status = SolveOutcome::Status::Aborted;
  } else {
    out.status = SolveOutcome::Status::Infeasible;
    out.exhausted = true;
  }
  return out;
}

namespace {

// Any clique in the conflict graph lower-bounds the index; a greedy one is
// enough to start the ascent.
int greedy_conflict_clique(const Graph& g) {
  const int m = g.edge_count();
  std::vector<std::vector<int>> conflicts(m);
  std::vector<int> order(m), deg(m);
  for (EdgeId e = 0; e < m; ++e) {
    conflicts[e] = conflict_pairs(g, e);
    deg[e] = static_cast<int>(conflicts[e].size());
    order[e] = e;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[a] > deg[b]; });
  int best = 0;
  for (int seed = 0; seed < std::min(m, 8); ++seed) {
    std::vector<int> clique{order[seed]};
    for (int v : order) {
      if (v == order[seed]) continue;
      bool all = true;
      for (int w : clique)
        if (!std::binary_search(conflicts[v].begin(), conflicts[v].end(), w)) {
          all = false;
          break;
        }
      if (all) clique.push_back(v);
    }
    best = std::max(best, (int)clique.size());
  }
  return best;
}

}  // namespace

ChiResult strong_chromatic_index(const Graph& g, const SearchConfig& cfg) {
  ChiResult res;
  if (g.edge_count() == 0) {
    res.status = ChiResult::Status::Exact;
    res.value = 0;
    res.witness = EdgeColoring{0, {}};
    return res;
  }
  int lb = std::max(sigma(g), greedy_conflict_clique(g));
  res.lower = lb;
  res.upper = -1;
  for (int kappa = lb; kappa <= g.edge_count(); ++kappa) {
    SolveOutcome o =
        colorable_with(g, kappa, EdgeColoring::empty(g, kappa), cfg);
    res.nodes += o.nodes;
    if (o.status == SolveOutcome::Status::Feasible) {
      res.status = ChiResult::Status::Exact;
      res.value = kappa;
      res.witness = o.coloring;
      res.upper = kappa;
      return res;
    }
    if (o.status == SolveOutcome::Status::Aborted) {
      res.status = ChiResult::Status::Aborted;
      res.lower = kappa;
      res.value = kappa;
      return res;
    }
    res.lower = kappa + 1;
  }
  // m colors always suffice (every edge its own color), so we cannot get here
  throw std::logic_error("strong_chromatic_index: ascent passed edge count");
}

}  // namespace sec
