#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sec {

using VertexId = int;
using EdgeId = int;

// Length of a shortest cycle; forests carry an explicit infinite marker
// rather than a sentinel integer.
struct Girth {
  std::optional<int> length;

  static Girth infinite() { return Girth{std::nullopt}; }
  static Girth finite(int g) { return Girth{g}; }
  bool is_finite() const { return length.has_value(); }
  // hypothesis checks of the form "girth >= g" hold vacuously for forests
  bool at_least(int g) const { return !length.has_value() || *length >= g; }
  std::string str() const;

  friend bool operator==(const Girth&, const Girth&) = default;
};

// Undirected simple graph over dense vertex ids 0..n-1.  Edges get stable
// ids from insertion order; immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Rejects self-loops and duplicate (unordered) pairs, naming the offender.
  static Graph from_edges(int vertex_count,
                          const std::vector<std::pair<int, int>>& pairs);
  // Vertex count inferred as max endpoint + 1 (0 for an empty list).
  static Graph from_edges(const std::vector<std::pair<int, int>>& pairs);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(EdgeId e) const;
  const std::vector<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const;
  int max_degree() const;
  bool has_edge(VertexId u, VertexId v) const;
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  // sorted ids of edges incident to v
  const std::vector<EdgeId>& incident_edges(VertexId v) const;

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;        // normalized u < v
  std::vector<std::vector<VertexId>> adjacency_;  // sorted per vertex
  std::vector<std::vector<EdgeId>> incident_;     // sorted per vertex
};

// max over edges xy of deg(x)+deg(y)-1; throws std::invalid_argument on an
// edgeless graph (the quantity is undefined there).
int sigma(const Graph& g);

Girth girth(const Graph& g);

// Edges whose removal disconnects their component (low-link DFS), sorted.
std::vector<EdgeId> bridges(const Graph& g);

// All edges f != e at line-graph distance <= 2 from e: sharing an endpoint
// with e, or joined to e by an edge.  Sorted.
std::vector<EdgeId> conflict_pairs(const Graph& g, EdgeId e);

// Mutations return a fresh graph plus id maps (-1 = no longer present).
struct Mutation {
  Graph graph;
  std::vector<EdgeId> edge_map;      // old EdgeId -> new EdgeId
  std::vector<VertexId> vertex_map;  // old VertexId -> new VertexId
  VertexId new_vertex = -1;          // attach_leaf: id of the added leaf
};

Mutation attach_leaf(const Graph& g, VertexId v);
// Replaces edge e by a path through k new vertices (k >= 0; k = 0 is a no-op).
Mutation subdivide_edge(const Graph& g, EdgeId e, int k);
Mutation delete_vertices(const Graph& g, const std::vector<VertexId>& victims);
Mutation delete_edges(const Graph& g, const std::vector<EdgeId>& victims);

// Edge-list text format: "n m" header, then one "u v" pair per line with
// 0 <= u < v < n.  Lines starting with '#' are comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace sec
