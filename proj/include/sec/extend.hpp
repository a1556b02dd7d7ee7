#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sec/caterpillar.hpp"
#include "sec/coloring.hpp"
#include "sec/exact.hpp"
#include "sec/graph.hpp"

namespace sec {

// Induced path x0,...,x_{l+1} whose l interior vertices have degree 2 in
// the host graph.
struct Thread {
  std::vector<VertexId> path;
  int interior_length() const { return static_cast<int>(path.size()) - 2; }
};

struct PeelResult {
  Graph h;                                   // g minus its degree-1 vertices
  std::vector<VertexId> h_to_g;              // h vertex -> g vertex
  std::vector<int> g_to_h;                   // g vertex -> h vertex or -1
  std::vector<EdgeId> h_edge_to_g;           // h edge -> g edge
  std::vector<std::vector<VertexId>> leaves_of;  // per h vertex: g leaf ids
};

// Single-pass removal of degree-1 vertices (not iterated).
PeelResult peel_leaves(const Graph& g);

// Deterministic: among all candidate threads of interior length exactly
// ell, returns the lexicographically smallest vertex path; absence is a
// value, not an error.
std::optional<Thread> find_thread(const Graph& h, int ell);

using RecursiveColorer =
    std::function<std::optional<EdgeColoring>(const Graph&, int)>;

// Colors both sides of a cut edge independently and permutes the second
// side's palette so the colorings agree across the bridge.
std::optional<EdgeColoring> color_via_cut(const Graph& g, EdgeId cut,
                                          int kappa,
                                          const RecursiveColorer& recurse);

// Strong coloring of a tree with kappa >= sigma colors, by splitting at
// internal cut edges down to stars.
EdgeColoring color_tree(const Graph& g, int kappa);

// Split of g along a thread: the caterpillar T induced by the thread
// interior and its neighbors, and the reduced graph G' with the interior
// chunk removed.  E(G) = E(G') + E(T), overlapping exactly on the two
// boundary stars.
struct Decomposition {
  std::vector<VertexId> spine;  // x0..x_{l+1} in g
  Caterpillar cat;
  std::vector<EdgeId> cat_spine_edges;             // g ids, x_i x_{i+1}
  std::vector<std::vector<EdgeId>> cat_pendants;   // g ids per position 1..l
  Graph g_prime;
  std::vector<EdgeId> gp_edge_to_g;
  std::vector<VertexId> gp_vertex_to_g;
  std::vector<EdgeId> overlap;  // E1 union El, sorted g ids
};

Decomposition extract(const Graph& g, const std::vector<VertexId>& thread);

// Reconciles the caterpillar coloring with phi_gp edge-wise on the two
// boundary stars (pendant permutations on both sides) and returns their
// union on g.
EdgeColoring glue(const Graph& g, const Decomposition& d,
                  const EdgeColoring& phi_gp, const CatColoring& phi_t);

struct ColorResult {
  bool ok = false;
  EdgeColoring coloring;
  std::string fail_step;  // peel | thread | cat | glue | exact
  std::string reason;

  std::string fail_line() const;  // "FAIL step=... reason=..."
};

// Driver: components, trees, small graphs to the exact solver, leaf-heavy
// vertices through cut edges, and otherwise thread extraction + caterpillar
// solve + glue, recursing on the reduced graph with the same kappa.
ColorResult color_graph(const Graph& g, int kappa,
                        const SearchConfig& cfg = {});

// Edge count at or below which the driver hands a graph to the exact
// solver outright.
inline constexpr int kExactFallbackEdges = 18;

// Girth above which the driver is guaranteed to succeed with kappa = sigma
// (given sigma >= 5 and sigma >= Delta + 2): 41 for sigma 5, 36 for sigma
// 6..7, 5*sigma+1 beyond.
int girth_threshold(int sigma);

}  // namespace sec
