#include "sec/extend.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace sec {

PeelResult peel_leaves(const Graph& g) {
  std::vector<VertexId> victims;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) victims.push_back(v);
  Mutation m = delete_vertices(g, victims);
  PeelResult r;
  r.h = std::move(m.graph);
  r.g_to_h = std::move(m.vertex_map);
  r.h_to_g.assign(r.h.vertex_count(), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (r.g_to_h[v] != -1) r.h_to_g[r.g_to_h[v]] = v;
  r.h_edge_to_g.assign(r.h.edge_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (m.edge_map[e] != -1) r.h_edge_to_g[m.edge_map[e]] = e;
  r.leaves_of.assign(r.h.vertex_count(), {});
  for (VertexId leaf : victims) {
    VertexId owner = g.neighbors(leaf)[0];
    if (r.g_to_h[owner] != -1) r.leaves_of[r.g_to_h[owner]].push_back(leaf);
  }
  return r;
}

namespace {

bool is_induced_path(const Graph& g, const std::vector<VertexId>& path) {
  for (size_t i = 0; i < path.size(); ++i)
    for (size_t j = i + 1; j < path.size(); ++j) {
      bool adjacent = g.has_edge(path[i], path[j]);
      if (j == i + 1 && !adjacent) return false;
      if (j > i + 1 && adjacent) return false;
    }
  return true;
}

}  // namespace

std::optional<Thread> find_thread(const Graph& h, int ell) {
  if (ell < 1) throw std::invalid_argument("thread length must be positive");
  const int n = h.vertex_count();
  std::vector<bool> deg2(n, false), visited(n, false);
  for (int v = 0; v < n; ++v) deg2[v] = h.degree(v) == 2;

  std::optional<std::vector<VertexId>> best;
  auto offer = [&](std::vector<VertexId> cand) {
    // interior degrees are 2 by construction; endpoints may be anything
    std::set<VertexId> uniq(cand.begin(), cand.end());
    if ((int)uniq.size() != (int)cand.size()) return;
    if (!is_induced_path(h, cand)) return;
    if (!best || cand < *best) best = std::move(cand);
  };
  auto windows = [&](const std::vector<VertexId>& seq) {
    // seq = anchor, run..., anchor; the window interior must stay inside
    // the run, which pins the window off both anchors
    int len = static_cast<int>(seq.size());
    for (int o = 0; o + ell + 1 < len; ++o)
      offer({seq.begin() + o, seq.begin() + o + ell + 2});
  };

  // path-shaped runs of degree-2 vertices between anchors
  for (int v = 0; v < n; ++v) {
    if (!deg2[v] || visited[v]) continue;
    int run_degree = 0;
    for (int w : h.neighbors(v)) run_degree += deg2[w];
    if (run_degree == 2) continue;  // interior of a run or on a cycle
    std::vector<VertexId> run{v};
    visited[v] = true;
    int prev = -1, cur = v;
    while (true) {
      int next = -1;
      for (int w : h.neighbors(cur))
        if (deg2[w] && w != prev && !visited[w]) next = w;
      if (next == -1) break;
      visited[next] = true;
      run.push_back(next);
      prev = cur;
      cur = next;
    }
    // anchors: the non-run neighbors of the run's two ends
    auto anchors_of = [&](VertexId end, VertexId inside) {
      std::vector<VertexId> out;
      for (int w : h.neighbors(end))
        if (w != inside) out.push_back(w);
      return out;
    };
    VertexId head_inside = run.size() > 1 ? run[1] : -1;
    VertexId tail_inside = run.size() > 1 ? run[run.size() - 2] : -1;
    for (VertexId a : anchors_of(run.front(), head_inside)) {
      for (VertexId b : anchors_of(run.back(), tail_inside)) {
        if (run.size() == 1 && a == b) continue;
        std::vector<VertexId> s;
        s.push_back(a);
        s.insert(s.end(), run.begin(), run.end());
        s.push_back(b);
        windows(s);
        std::reverse(s.begin(), s.end());
        windows(s);
      }
    }
  }
  // leftover degree-2 vertices lie on all-degree-2 cycles
  for (int v = 0; v < n; ++v) {
    if (!deg2[v] || visited[v]) continue;
    std::vector<VertexId> cyc{v};
    visited[v] = true;
    int prev = -1, cur = v;
    while (true) {
      int next = -1;
      for (int w : h.neighbors(cur))
        if (w != prev && deg2[w] && !visited[w]) next = w;
      if (next == -1) break;
      visited[next] = true;
      cyc.push_back(next);
      prev = cur;
      cur = next;
    }
    int k = static_cast<int>(cyc.size());
    if (k < ell + 3) continue;  // endpoints of a full-cycle window collide
    for (int s = 0; s < k; ++s) {
      for (int dir : {1, -1}) {
        std::vector<VertexId> cand;
        for (int i = 0; i < ell + 2; ++i)
          cand.push_back(cyc[((s + dir * i) % k + k) % k]);
        offer(std::move(cand));
      }
    }
  }
  if (!best) return std::nullopt;
  Thread t;
  t.path = std::move(*best);
  return t;
}

std::optional<EdgeColoring> color_via_cut(const Graph& g, EdgeId cut, int kappa,
                                          const RecursiveColorer& recurse) {
  auto [x1, x2] = g.edge(cut);
  if (g.degree(x1) + g.degree(x2) - 1 > kappa)
    throw std::invalid_argument("cut edge weight exceeds kappa");
  // component of x1 in G - cut
  std::vector<bool> side(g.vertex_count(), false);
  {
    std::queue<int> q;
    q.push(x1);
    side[x1] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (EdgeId e : g.incident_edges(v)) {
        if (e == cut) continue;
        auto [a, b] = g.edge(e);
        int w = a == v ? b : a;
        if (!side[w]) {
          side[w] = true;
          q.push(w);
        }
      }
    }
  }
  if (side[x2]) throw std::invalid_argument("edge is not a bridge");

  struct Side {
    Graph graph;
    std::vector<EdgeId> to_g;  // side edge -> g edge
    EdgeId cut_edge = -1;
    VertexId anchor = -1;  // the cut endpoint keeping its star on this side
  };
  auto build_side = [&](VertexId anchor, VertexId other, bool keep) {
    Side s;
    std::vector<int> vmap(g.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (side[v] == keep) vmap[v] = next++;
    vmap[other] = next++;
    std::vector<std::pair<int, int>> pairs;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (e == cut) continue;
      auto [a, b] = g.edge(e);
      if (side[a] == keep && side[b] == keep) {
        s.to_g.push_back(e);
        pairs.emplace_back(vmap[a], vmap[b]);
      }
    }
    s.cut_edge = static_cast<EdgeId>(pairs.size());
    s.to_g.push_back(cut);
    pairs.emplace_back(vmap[anchor], vmap[other]);
    s.graph = Graph::from_edges(next, pairs);
    s.anchor = vmap[anchor];
    return s;
  };
  Side g1 = build_side(x1, x2, true);
  Side g2 = build_side(x2, x1, false);

  auto phi1 = recurse(g1.graph, kappa);
  if (!phi1) return std::nullopt;
  auto phi2 = recurse(g2.graph, kappa);
  if (!phi2) return std::nullopt;

  auto star_colors = [&](const Side& s, const EdgeColoring& phi) {
    std::set<int> out;
    for (EdgeId e : s.graph.incident_edges(s.anchor))
      if (e != s.cut_edge) out.insert(phi.color[e]);
    return out;
  };
  std::set<int> s1 = star_colors(g1, *phi1);
  std::set<int> s2 = star_colors(g2, *phi2);
  int c = phi1->color[g1.cut_edge];

  // permute phi2 so its star avoids s1 and the bridge colors agree
  std::vector<int> perm(kappa, -1);
  std::vector<bool> target_used(kappa, false);
  perm[phi2->color[g2.cut_edge]] = c;
  target_used[c] = true;
  for (int t : s1) target_used[t] = true;
  for (int s : s2) {
    if (perm[s] != -1) continue;  // cannot happen: c not in s2
    int t = 0;
    while (t < kappa && target_used[t]) ++t;
    if (t == kappa) throw std::logic_error("cut merge ran out of colors");
    perm[s] = t;
    target_used[t] = true;
  }
  // finish the bijection; remaining targets exclude s1 only virtually
  std::vector<bool> assigned_target(kappa, false);
  for (int s = 0; s < kappa; ++s)
    if (perm[s] != -1) assigned_target[perm[s]] = true;
  int t = 0;
  for (int s = 0; s < kappa; ++s) {
    if (perm[s] != -1) continue;
    while (assigned_target[t]) ++t;
    perm[s] = t;
    assigned_target[t] = true;
  }
  EdgeColoring phi2p = relabel(*phi2, perm);

  EdgeColoring out = EdgeColoring::empty(g, kappa);
  for (EdgeId e = 0; e < g1.graph.edge_count(); ++e)
    out.color[g1.to_g[e]] = phi1->color[e];
  for (EdgeId e = 0; e < g2.graph.edge_count(); ++e)
    if (e != g2.cut_edge) out.color[g2.to_g[e]] = phi2p.color[e];
  return out;
}

namespace {

bool is_star(const Graph& g) {
  int internal = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) >= 2) internal++;
  return internal <= 1;
}

}  // namespace

EdgeColoring color_tree(const Graph& g, int kappa) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("color_tree needs at least one edge");
  if (g.edge_count() != g.vertex_count() - 1)
    throw std::invalid_argument("not a tree");
  if (kappa < sigma(g))
    throw std::invalid_argument("kappa below sigma of the tree");
  // connectivity follows from m = n-1 plus acyclicity; bridges() on a tree
  // touches every edge, so a quick reachability check is enough
  RecursiveColorer rec = [&rec](const Graph& h,
                                int k) -> std::optional<EdgeColoring> {
    if (is_star(h)) {
      if (h.edge_count() > k) return std::nullopt;  // sigma of a star is m
      EdgeColoring c = EdgeColoring::empty(h, k);
      for (EdgeId e = 0; e < h.edge_count(); ++e) c.color[e] = e;
      return c;
    }
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      auto [u, v] = h.edge(e);
      if (h.degree(u) >= 2 && h.degree(v) >= 2)
        return color_via_cut(h, e, k, rec);
    }
    return std::nullopt;  // unreachable on a non-star tree
  };
  auto out = rec(g, kappa);
  if (!out) throw std::logic_error("tree coloring failed");
  return *out;
}

Decomposition extract(const Graph& g, const std::vector<VertexId>& thread) {
  const int l = static_cast<int>(thread.size()) - 2;
  if (l < 5)
    throw std::invalid_argument("thread too short to decompose (need length >= 5)");
  std::set<VertexId> on_thread(thread.begin(), thread.end());
  if ((int)on_thread.size() != l + 2)
    throw std::invalid_argument("thread repeats a vertex");
  for (int i = 0; i + 1 < (int)thread.size(); ++i)
    if (!g.has_edge(thread[i], thread[i + 1]))
      throw std::invalid_argument("thread vertices not consecutive in the graph");
  if (g.has_edge(thread.front(), thread.back()))
    throw std::invalid_argument("thread endpoints are adjacent (not induced)");
  if (g.degree(thread.front()) < 2 || g.degree(thread.back()) < 2)
    throw std::invalid_argument("thread endpoints must not be leaves");

  std::vector<int> degs;
  std::vector<std::vector<VertexId>> leaves(l);
  for (int i = 1; i <= l; ++i) {
    VertexId x = thread[i];
    for (VertexId w : g.neighbors(x)) {
      if (w == thread[i - 1] || w == thread[i + 1]) continue;
      if (g.degree(w) != 1)
        throw std::invalid_argument(
            "interior thread vertex has a non-leaf neighbor off the path");
      leaves[i - 1].push_back(w);
    }
    degs.push_back(g.degree(x));
  }
  Decomposition d{thread, Caterpillar(degs), {}, {}, {}, {}, {}, {}};
  for (int i = 0; i <= l; ++i)
    d.cat_spine_edges.push_back(*g.find_edge(thread[i], thread[i + 1]));
  d.cat_pendants.resize(l);
  for (int i = 1; i <= l; ++i)
    for (VertexId w : leaves[i - 1])
      d.cat_pendants[i - 1].push_back(*g.find_edge(thread[i], w));

  std::vector<VertexId> victims;
  for (int i = 2; i <= l - 1; ++i)
    for (VertexId w : leaves[i - 1]) victims.push_back(w);
  for (int i = 3; i <= l - 2; ++i) victims.push_back(thread[i]);
  Mutation m = delete_vertices(g, victims);
  d.g_prime = std::move(m.graph);
  d.gp_edge_to_g.assign(d.g_prime.edge_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (m.edge_map[e] != -1) d.gp_edge_to_g[m.edge_map[e]] = e;
  d.gp_vertex_to_g.assign(d.g_prime.vertex_count(), -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (m.vertex_map[v] != -1) d.gp_vertex_to_g[m.vertex_map[v]] = v;

  std::set<EdgeId> overlap;
  for (EdgeId e : g.incident_edges(thread[1])) overlap.insert(e);
  for (EdgeId e : g.incident_edges(thread[l])) overlap.insert(e);
  d.overlap.assign(overlap.begin(), overlap.end());
  // the overlap must be exactly the caterpillar edges surviving in G'
  std::set<EdgeId> surviving;
  for (EdgeId e : d.gp_edge_to_g) surviving.insert(e);
  std::set<EdgeId> cat_edges;
  for (EdgeId e : d.cat_spine_edges) cat_edges.insert(e);
  for (const auto& v : d.cat_pendants) cat_edges.insert(v.begin(), v.end());
  for (EdgeId e : cat_edges) {
    bool in_gp = surviving.count(e) > 0;
    bool in_overlap = overlap.count(e) > 0;
    if (in_gp != in_overlap)
      throw std::logic_error("decomposition overlap mismatch");
  }
  return d;
}

EdgeColoring glue(const Graph& g, const Decomposition& d,
                  const EdgeColoring& phi_gp, const CatColoring& phi_t) {
  const int l = d.cat.length();
  std::map<EdgeId, EdgeId> g_to_gp;
  for (EdgeId e = 0; e < (int)d.gp_edge_to_g.size(); ++e)
    g_to_gp[d.gp_edge_to_g[e]] = e;

  std::vector<int> gp_color = phi_gp.color;  // mutable copy (pendant swaps)
  auto gp_at = [&](EdgeId g_edge) -> int& {
    auto it = g_to_gp.find(g_edge);
    if (it == g_to_gp.end())
      throw std::invalid_argument("boundary edge missing from the reduced graph");
    return gp_color[it->second];
  };

  auto check_end = [&](int spine_pos, const std::vector<EdgeId>& pendants,
                       int t_alpha) {
    if (gp_at(d.cat_spine_edges[spine_pos]) != t_alpha)
      throw std::invalid_argument("end colors disagree on edge " +
                                  std::to_string(d.cat_spine_edges[spine_pos]));
    (void)pendants;
  };
  check_end(0, d.cat_pendants[0], phi_t.spine[0]);
  check_end(l, d.cat_pendants[l - 1], phi_t.spine[l]);

  // star of x at position pos: inner spine edge + pendants (g ids)
  auto reconcile = [&](int pos) {
    int inner_spine_idx = pos == 1 ? 1 : l - 1;
    EdgeId inner = d.cat_spine_edges[inner_spine_idx];
    const auto& pend = d.cat_pendants[pos - 1];
    int want = pos == 1 ? phi_t.spine[1] : phi_t.spine[l - 1];
    std::multiset<int> t_side, gp_side;
    t_side.insert(want);
    gp_side.insert(gp_at(inner));
    for (size_t k = 0; k < pend.size(); ++k) {
      t_side.insert(phi_t.pendant[pos - 1][k]);
      gp_side.insert(gp_at(pend[k]));
    }
    if (t_side != gp_side)
      throw std::invalid_argument(
          "boundary star color sets disagree at spine position " +
          std::to_string(pos));
    if (gp_at(inner) != want) {
      // the far endpoint of the inner spine edge is a leaf of G', so its
      // color may trade places with a pendant's inside phi_gp
      for (EdgeId p : pend) {
        if (gp_at(p) == want) {
          std::swap(gp_at(p), gp_at(inner));
          break;
        }
      }
    }
  };
  reconcile(1);
  if (l >= 2) reconcile(l);

  EdgeColoring out = EdgeColoring::empty(g, phi_gp.kappa);
  // T-only edges take the caterpillar colors; overlap pendants follow G'
  for (int i = 0; i <= l; ++i) out.color[d.cat_spine_edges[i]] = phi_t.spine[i];
  for (int i = 1; i <= l; ++i)
    for (size_t k = 0; k < d.cat_pendants[i - 1].size(); ++k)
      out.color[d.cat_pendants[i - 1][k]] = phi_t.pendant[i - 1][k];
  for (EdgeId e = 0; e < (int)d.gp_edge_to_g.size(); ++e)
    out.color[d.gp_edge_to_g[e]] = gp_color[e];
  return out;
}

std::string ColorResult::fail_line() const {
  return "FAIL step=" + fail_step + " reason=" + reason;
}

int girth_threshold(int sigma) {
  if (sigma < 5) throw std::invalid_argument("girth threshold needs sigma >= 5");
  if (sigma == 5) return 41;
  if (sigma <= 7) return 36;
  return 5 * sigma + 1;
}

namespace {

struct Components {
  std::vector<Graph> graphs;
  std::vector<std::vector<EdgeId>> edge_to_g;
};

Components split_components(const Graph& g) {
  Components out;
  std::vector<int> comp(g.vertex_count(), -1);
  int count = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = count;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (comp[w] == -1) {
          comp[w] = count;
          q.push(w);
        }
    }
    count++;
  }
  std::vector<std::vector<EdgeId>> edges(count);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    edges[comp[g.edge(e).first]].push_back(e);
  for (int c = 0; c < count; ++c) {
    if (edges[c].empty()) continue;
    std::vector<int> vmap(g.vertex_count(), -1);
    int next = 0;
    std::vector<std::pair<int, int>> pairs;
    for (EdgeId e : edges[c]) {
      auto [u, v] = g.edge(e);
      if (vmap[u] == -1) vmap[u] = next++;
      if (vmap[v] == -1) vmap[v] = next++;
      pairs.emplace_back(vmap[u], vmap[v]);
    }
    out.graphs.push_back(Graph::from_edges(next, pairs));
    out.edge_to_g.push_back(edges[c]);
  }
  return out;
}

bool in_cat_envelope(const Caterpillar& t) {
  int sg = t.sigma();
  return sg >= 5 && t.length() >= ell_min(sg) && sg >= t.max_degree() + 2;
}

struct Driver {
  int kappa;
  SearchConfig cfg;
  ColorResult failure;

  std::optional<EdgeColoring> fail(const std::string& step,
                                   const std::string& reason) {
    failure.ok = false;
    failure.fail_step = step;
    failure.reason = reason;
    return std::nullopt;
  }

  std::optional<EdgeColoring> color(const Graph& g) {
    if (g.edge_count() == 0) return EdgeColoring::empty(g, kappa);
    Components comps = split_components(g);
    if (comps.graphs.size() > 1 ||
        comps.graphs[0].vertex_count() != g.vertex_count()) {
      EdgeColoring out = EdgeColoring::empty(g, kappa);
      for (size_t c = 0; c < comps.graphs.size(); ++c) {
        auto sub = color_connected(comps.graphs[c]);
        if (!sub) return std::nullopt;
        for (EdgeId e = 0; e < (int)comps.edge_to_g[c].size(); ++e)
          out.color[comps.edge_to_g[c][e]] = sub->color[e];
      }
      return out;
    }
    return color_connected(g);
  }

  std::optional<EdgeColoring> color_connected(const Graph& g) {
    const int n = g.vertex_count(), m = g.edge_count();
    if (m == n - 1) return color_tree(g, kappa);
    if (m <= kExactFallbackEdges) {
      SolveOutcome o = colorable_with(g, kappa, EdgeColoring::empty(g, kappa), cfg);
      if (o.feasible()) return o.coloring;
      if (o.status == SolveOutcome::Status::Aborted)
        return fail("exact", "node limit reached on a small component");
      return fail("exact", "UNSAT kappa=" + std::to_string(kappa) +
                               " nodes=" + std::to_string(o.nodes));
    }
    // a vertex whose neighbors are all leaves but one sits behind a cut edge
    for (VertexId x = 0; x < n; ++x) {
      if (g.degree(x) < 2) continue;
      VertexId non_leaf = -1;
      int non_leaf_count = 0;
      for (VertexId w : g.neighbors(x))
        if (g.degree(w) > 1) {
          non_leaf = w;
          non_leaf_count++;
        }
      if (non_leaf_count == 1) {
        EdgeId e = *g.find_edge(x, non_leaf);
        RecursiveColorer rec = [this](const Graph& h,
                                      int) -> std::optional<EdgeColoring> {
          return color(h);
        };
        return color_via_cut(g, e, kappa, rec);
      }
    }
    return thread_route(g);
  }

  std::optional<EdgeColoring> thread_route(const Graph& g) {
    PeelResult pr = peel_leaves(g);
    for (int v = 0; v < pr.h.vertex_count(); ++v)
      if (pr.h.degree(v) < 2)
        return fail("peel", "peeled graph keeps a degree-" +
                                std::to_string(pr.h.degree(v)) + " vertex");
    std::vector<int> lengths{kappa + 3};
    if (kappa >= 5 && ell_min(kappa) != kappa + 3) lengths.push_back(ell_min(kappa));
    std::optional<Thread> th;
    for (int ell : lengths) {
      th = find_thread(pr.h, ell);
      if (th) break;
    }
    if (!th) {
      std::ostringstream os;
      os << "no thread of length " << lengths.front();
      for (size_t i = 1; i < lengths.size(); ++i) os << " or " << lengths[i];
      os << " (girth=" << girth(g).str() << " sigma=" << sigma(g)
         << " delta=" << g.max_degree() << ")";
      return fail("thread", os.str());
    }
    std::vector<VertexId> thread_g;
    for (VertexId v : th->path) thread_g.push_back(pr.h_to_g[v]);
    Decomposition d = extract(g, thread_g);

    auto phi_gp = color(d.g_prime);
    if (!phi_gp) return std::nullopt;

    // boundary tuple read off the reduced coloring
    std::map<EdgeId, EdgeId> g_to_gp;
    for (EdgeId e = 0; e < (int)d.gp_edge_to_g.size(); ++e)
      g_to_gp[d.gp_edge_to_g[e]] = e;
    auto gp_color_of = [&](EdgeId g_edge) {
      return phi_gp->color[g_to_gp.at(g_edge)];
    };
    const int l = d.cat.length();
    PrePalette p;
    p.palette.resize(kappa);
    for (int i = 0; i < kappa; ++i) p.palette[i] = i;
    p.alpha0 = gp_color_of(d.cat_spine_edges[0]);
    p.alphal = gp_color_of(d.cat_spine_edges[l]);
    auto star_set = [&](int pos, int spine_idx) {
      std::vector<int> s{gp_color_of(d.cat_spine_edges[spine_idx - 1]),
                         gp_color_of(d.cat_spine_edges[spine_idx])};
      for (EdgeId e : d.cat_pendants[pos - 1]) s.push_back(gp_color_of(e));
      std::sort(s.begin(), s.end());
      return s;
    };
    p.c1 = star_set(1, 1);
    p.cl = star_set(l, l);

    int cat_sigma = d.cat.sigma();
    CatSolveResult cat_res;
    if (in_cat_envelope(d.cat)) {
      cat_res = solve_precolored(d.cat, p, cfg);
    } else if (cat_sigma >= 4 && kappa >= cat_sigma + 1 &&
               d.cat.length() >= ell_min(cat_sigma + 1)) {
      cat_res = solve_with_extra_color(d.cat, p, cfg);
    } else {
      cat_res = solve_precolored(d.cat, p, cfg);
    }
    if (!cat_res.feasible())
      return fail("cat", "boundary instance infeasible on " + d.cat.str() +
                             " (UNSAT kappa=" + std::to_string(kappa) +
                             " nodes=" + std::to_string(cat_res.nodes) + ")");

    EdgeColoring glued = glue(g, d, *phi_gp, cat_res.coloring);
    VerifyResult vr = verify(g, glued);
    if (!vr.ok()) return fail("glue", "glued coloring failed verification");
    return glued;
  }
};

}  // namespace

ColorResult color_graph(const Graph& g, int kappa, const SearchConfig& cfg) {
  if (kappa < 0) throw std::invalid_argument("negative kappa");
  if (g.edge_count() > 0 && kappa < sigma(g))
    throw std::invalid_argument("kappa below sigma(G)");
  Driver drv{kappa, cfg, {}};
  auto col = drv.color(g);
  ColorResult res;
  if (!col) {
    res = drv.failure;
    return res;
  }
  VerifyResult vr = verify(g, *col);
  if (!vr.ok()) {
    res.ok = false;
    res.fail_step = "glue";
    res.reason = "final coloring failed verification";
    return res;
  }
  res.ok = true;
  res.coloring = std::move(*col);
  return res;
}

}  // namespace sec
