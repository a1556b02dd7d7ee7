#include "sec/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

namespace sec {

std::string Girth::str() const {
  return length ? std::to_string(*length) : std::string("inf");
}

Graph Graph::from_edges(int vertex_count,
                        const std::vector<std::pair<int, int>>& pairs) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.vertex_count_ = vertex_count;
  g.adjacency_.resize(vertex_count);
  g.incident_.resize(vertex_count);
  std::set<std::pair<int, int>> seen;
  g.edges_.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a == b)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
      throw std::invalid_argument("edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") out of range");
    auto uv = std::minmax(a, b);
    if (!seen.insert(uv).second)
      throw std::invalid_argument("duplicate edge (" + std::to_string(uv.first) +
                                  "," + std::to_string(uv.second) + ")");
    EdgeId id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.emplace_back(uv.first, uv.second);
    g.adjacency_[uv.first].push_back(uv.second);
    g.adjacency_[uv.second].push_back(uv.first);
    g.incident_[uv.first].push_back(id);
    g.incident_[uv.second].push_back(id);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Graph Graph::from_edges(const std::vector<std::pair<int, int>>& pairs) {
  int n = 0;
  for (const auto& [a, b] : pairs) n = std::max(n, std::max(a, b) + 1);
  return from_edges(n, pairs);
}

std::pair<int, int> Graph::edge(EdgeId e) const {
  if (e < 0 || e >= edge_count())
    throw std::invalid_argument("edge id " + std::to_string(e) +
                                " out of range");
  return edges_[e];
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  if (v < 0 || v >= vertex_count_)
    throw std::invalid_argument("vertex id " + std::to_string(v) +
                                " out of range");
  return adjacency_[v];
}

const std::vector<EdgeId>& Graph::incident_edges(VertexId v) const {
  if (v < 0 || v >= vertex_count_)
    throw std::invalid_argument("vertex id " + std::to_string(v) +
                                " out of range");
  return incident_[v];
}

int Graph::degree(VertexId v) const {
  return static_cast<int>(neighbors(v).size());
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nbrs : adjacency_) d = std::max(d, (int)nbrs.size());
  return d;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  return find_edge(u, v).has_value();
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_ || u == v)
    return std::nullopt;
  // scan the smaller star
  VertexId base = incident_[u].size() <= incident_[v].size() ? u : v;
  VertexId other = base == u ? v : u;
  auto uv = std::minmax(base, other);
  for (EdgeId e : incident_[base])
    if (edges_[e] == std::make_pair(uv.first, uv.second)) return e;
  return std::nullopt;
}

int sigma(const Graph& g) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("sigma is undefined on an edgeless graph");
  int best = 0;
  for (const auto& [u, v] : g.edges())
    best = std::max(best, g.degree(u) + g.degree(v) - 1);
  return best;
}

Girth girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge scanned from x closes a walk of
  // length dist[x] + dist[y] + 1 through the root, and the minimum over all
  // roots is the exact girth (for a shortest cycle, start the BFS on it).
  const int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), via(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(via.begin(), via.end(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      if (best != -1 && 2 * dist[x] >= best) break;
      for (EdgeId e : g.incident_edges(x)) {
        if (e == via[x]) continue;
        auto [a, b] = g.edge(e);
        int y = a == x ? b : a;
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          via[y] = e;
          q.push(y);
        } else {
          int cycle = dist[x] + dist[y] + 1;
          if (best == -1 || cycle < best) best = cycle;
        }
      }
    }
  }
  return best == -1 ? Girth::infinite() : Girth::finite(best);
}

namespace {

struct BridgeDfs {
  const Graph& g;
  std::vector<int> num, low;
  std::vector<EdgeId> out;
  int tick = 0;

  explicit BridgeDfs(const Graph& graph)
      : g(graph), num(graph.vertex_count(), -1), low(graph.vertex_count(), 0) {}

  void run(int root) {
    // iterative low-link to survive deep paths
    struct Frame {
      int v;
      EdgeId via;  // edge used to enter v
      size_t next = 0;
    };
    std::vector<Frame> stack;
    num[root] = low[root] = tick++;
    stack.push_back({root, -1});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& inc = g.incident_edges(f.v);
      if (f.next < inc.size()) {
        EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        auto [a, b] = g.edge(e);
        int w = a == f.v ? b : a;
        if (num[w] == -1) {
          num[w] = low[w] = tick++;
          stack.push_back({w, e});
        } else {
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        int v = f.v;
        EdgeId via = f.via;
        stack.pop_back();
        if (!stack.empty()) {
          int parent = stack.back().v;
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] > num[parent]) out.push_back(via);
        }
      }
    }
  }
};

}  // namespace

std::vector<EdgeId> bridges(const Graph& g) {
  BridgeDfs dfs(g);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dfs.num[v] == -1) dfs.run(v);
  std::sort(dfs.out.begin(), dfs.out.end());
  return dfs.out;
}

std::vector<EdgeId> conflict_pairs(const Graph& g, EdgeId e) {
  auto [u, v] = g.edge(e);
  std::set<EdgeId> out;
  auto add_star = [&](VertexId x) {
    for (EdgeId f : g.incident_edges(x)) out.insert(f);
  };
  add_star(u);
  add_star(v);
  for (VertexId w : g.neighbors(u)) add_star(w);
  for (VertexId w : g.neighbors(v)) add_star(w);
  out.erase(e);
  return {out.begin(), out.end()};
}

namespace {

Mutation rebuild(const Graph& g, const std::vector<bool>& keep_vertex,
                 const std::vector<bool>& keep_edge,
                 const std::vector<std::pair<int, int>>& extra_edges,
                 int extra_vertices) {
  Mutation m;
  m.vertex_map.assign(g.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (keep_vertex[v]) m.vertex_map[v] = next++;
  int total_vertices = next + extra_vertices;
  std::vector<std::pair<int, int>> pairs;
  m.edge_map.assign(g.edge_count(), -1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!keep_edge[e]) continue;
    auto [u, v] = g.edge(e);
    m.edge_map[e] = static_cast<EdgeId>(pairs.size());
    pairs.emplace_back(m.vertex_map[u], m.vertex_map[v]);
  }
  // extra edges are expressed directly in new vertex ids
  for (const auto& p : extra_edges) pairs.push_back(p);
  m.graph = Graph::from_edges(total_vertices, pairs);
  return m;
}

}  // namespace

Mutation attach_leaf(const Graph& g, VertexId v) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument("attach_leaf: no vertex " + std::to_string(v));
  std::vector<bool> kv(g.vertex_count(), true), ke(g.edge_count(), true);
  Mutation m = rebuild(g, kv, ke, {{v, g.vertex_count()}}, 1);
  m.new_vertex = g.vertex_count();
  return m;
}

Mutation subdivide_edge(const Graph& g, EdgeId e, int k) {
  if (e < 0 || e >= g.edge_count())
    throw std::invalid_argument("subdivide_edge: no edge " + std::to_string(e));
  if (k < 0) throw std::invalid_argument("subdivide_edge: negative k");
  if (k == 0) {
    std::vector<bool> kv(g.vertex_count(), true), ke(g.edge_count(), true);
    return rebuild(g, kv, ke, {}, 0);
  }
  auto [u, v] = g.edge(e);
  std::vector<bool> kv(g.vertex_count(), true), ke(g.edge_count(), true);
  ke[e] = false;
  std::vector<std::pair<int, int>> extra;
  int first_new = g.vertex_count();
  int prev = u;
  for (int i = 0; i < k; ++i) {
    extra.emplace_back(prev, first_new + i);
    prev = first_new + i;
  }
  extra.emplace_back(prev, v);
  return rebuild(g, kv, ke, extra, k);
}

Mutation delete_vertices(const Graph& g, const std::vector<VertexId>& victims) {
  std::vector<bool> kv(g.vertex_count(), true);
  for (VertexId v : victims) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("delete_vertices: no vertex " +
                                  std::to_string(v));
    kv[v] = false;
  }
  std::vector<bool> ke(g.edge_count(), true);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (!kv[u] || !kv[v]) ke[e] = false;
  }
  return rebuild(g, kv, ke, {}, 0);
}

Mutation delete_edges(const Graph& g, const std::vector<EdgeId>& victims) {
  std::vector<bool> ke(g.edge_count(), true);
  for (EdgeId e : victims) {
    if (e < 0 || e >= g.edge_count())
      throw std::invalid_argument("delete_edges: no edge " + std::to_string(e));
    ke[e] = false;
  }
  std::vector<bool> kv(g.vertex_count(), true);
  return rebuild(g, kv, ke, {}, 0);
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  std::string header;
  if (!next_line(header)) throw std::runtime_error("edge list: empty input");
  std::istringstream hs(header);
  long long n = -1, m = -1;
  if (!(hs >> n >> m) || n < 0 || m < 0)
    throw std::runtime_error("edge list: bad header '" + header + "'");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(m);
  for (long long i = 0; i < m; ++i) {
    std::string row;
    if (!next_line(row))
      throw std::runtime_error("edge list: expected " + std::to_string(m) +
                               " edges, got " + std::to_string(i));
    std::istringstream rs(row);
    long long u, v;
    if (!(rs >> u >> v))
      throw std::runtime_error("edge list: bad edge line '" + row + "'");
    if (!(0 <= u && u < v && v < n))
      throw std::runtime_error("edge list: edge (" + std::to_string(u) + "," +
                               std::to_string(v) + ") violates 0 <= u < v < n");
    pairs.emplace_back((int)u, (int)v);
  }
  return Graph::from_edges((int)n, pairs);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace sec
